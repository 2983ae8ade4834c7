use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagpoly_core::rootsys::Family;
use flagpoly_core::stringcones::{Method, DEFAULT_HULL_N_MAX};

#[derive(Parser, Debug)]
#[command(
    name = "flagpoly",
    version,
    about = "String polytopes, Ehrhart polynomials and reflexivity for flag varieties"
)]
pub struct Cli {
    /// Machine-readable JSON on standard output.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct System {
    /// Cartan family: A, B, C, D, E, F or G.
    #[arg(long = "type", value_name = "FAMILY")]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Args, Debug, Clone)]
pub struct Levi {
    /// Comma-separated simple-root labels of the Levi set; "" is the Borel.
    #[arg(long, value_parser = parse_levi)]
    pub levi: Option<Labels>,
}

#[derive(Args, Debug, Clone)]
pub struct Grid {
    /// Comma-separated Cartan families.
    #[arg(long, value_parser = parse_families)]
    pub families: Option<Families>,
    #[arg(long)]
    pub max_rank: Option<usize>,
    /// Largest fundamental-weight coefficient.
    #[arg(long)]
    pub coeff: Option<i64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan matrix, positive roots and ρ.
    Roots {
        #[command(flatten)]
        system: System,
    },
    /// Roots of the unipotent radical and w_I for a Levi set.
    Parabolic {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        levi: Levi,
    },
    /// The anticanonical weight ρ + w_I(ρ).
    Anticanonical {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        levi: Levi,
    },
    /// Dimension of the space of sections by Kostant's formula.
    Dimension {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        levi: Levi,
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        weight: Ints,
    },
    /// Ehrhart polynomial L(n) of the weight.
    Ehrhart {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        levi: Levi,
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        weight: Ints,
        /// Print the expanded polynomial instead of the product form.
        #[arg(long)]
        expand: bool,
    },
    /// Anticanonical test, interior count and Hibi identity for a P-regular weight.
    Classify {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        levi: Levi,
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        weight: Ints,
    },
    /// Builds the string polytope of a reduced word.
    StringPolytope {
        #[command(flatten)]
        system: System,
        /// Comma-separated reduced word for w0 (default: greedy descent).
        #[arg(long, value_parser = parse_ints)]
        word: Option<Ints>,
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        weight: Ints,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        /// Largest dilation tried by the hull method.
        #[arg(long, default_value_t = DEFAULT_HULL_N_MAX)]
        n_max: u32,
        /// Write the polytope JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lattice, interior-point and reflexivity data of a polytope JSON file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        reflexive: bool,
        /// Also count all lattice points.
        #[arg(long)]
        count: bool,
    },
    /// Runs a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Reproduces a named example, or all of them.
    Reproduce {
        #[arg(value_parser = ["gr36", "a6", "b2", "g2-short", "g2-long", "fullflag-ehrhart", "all"])]
        name: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// Root-system lemmas over a grid (default A-G, rank ≤ 4, coefficients ≤ 4).
    Lemmas {
        #[command(flatten)]
        grid: Grid,
    },
    /// Unique interior point ⇔ anticanonical, over a grid (default A-D and G, rank ≤ 4, coefficients ≤ 3).
    MainTheorem {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value_t = Policy::All)]
        policy: Policy,
    },
    /// Lattice-ness of string polytopes against the parity prediction.
    Conjecture {
        #[command(flatten)]
        grid: Grid,
        /// Explicit word such as B2:2,1,2,1 (repeatable); default words otherwise.
        #[arg(long = "word", value_name = "TYPE:WORD")]
        words: Vec<String>,
    },
    /// Crystal, polytope and product-formula counts for one weight, or the default set.
    Crosscheck {
        #[arg(long = "type", value_name = "FAMILY", requires_all = ["rank", "weight"])]
        family: Option<Family>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_parser = parse_ints)]
        word: Option<Ints>,
        #[arg(long, value_parser = parse_ints)]
        weight: Option<Ints>,
        #[arg(long, default_value_t = 2)]
        n_max: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Policy {
    /// Every Levi set with every P-regular weight.
    All,
    /// Every weight with the Levi set of its zeros.
    Support,
}

/// A comma-separated integer list such as `0,0,1`.
#[derive(Clone, Debug)]
pub struct Ints(pub Vec<i64>);

/// A comma-separated list of simple-root labels; empty for none.
#[derive(Clone, Debug)]
pub struct Labels(pub Vec<usize>);

#[derive(Clone, Debug)]
pub struct Families(pub Vec<Family>);

fn parse_ints(s: &str) -> Result<Ints, String> {
    if s.trim().is_empty() {
        return Ok(Ints(vec![]));
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("{t:?} is not an integer")))
        .collect::<Result<_, _>>()
        .map(Ints)
}

fn parse_levi(s: &str) -> Result<Labels, String> {
    parse_ints(s)?
        .0
        .into_iter()
        .map(|x| usize::try_from(x).map_err(|_| format!("{x} is not a simple-root label")))
        .collect::<Result<_, _>>()
        .map(Labels)
}

fn parse_families(s: &str) -> Result<Families, String> {
    s.split(',').map(|t| t.parse::<Family>().map_err(|e| e.to_string())).collect::<Result<_, _>>().map(Families)
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: flagpoly_core::Error| e.to_string())
}
