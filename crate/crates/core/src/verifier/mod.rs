//! Scans, cross-checks and named reproductions assembled into row-based reports.

mod fixtures;
mod lemmas;
mod scans;

use std::fmt::Display;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, RootSystem, Weight};
use crate::stringcones::{ReducedWord, DEFAULT_CRYSTAL_CAP};

pub use fixtures::{reproduce_fixture, FIXTURES};
pub use lemmas::lemma_suite;
pub use scans::{conjecture_predicate, crosscheck_counts, scan_conjecture, scan_main_theorem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureReport {
    pub fixture: String,
    pub rows: Vec<Row>,
}

impl FixtureReport {
    pub fn new(fixture: impl Into<String>) -> Self {
        FixtureReport { fixture: fixture.into(), rows: Vec::new() }
    }

    /// Adds a row that passes when the rendered values coincide.
    pub fn check(&mut self, claim: impl Into<String>, expected: impl Display, computed: impl Display) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let pass = expected == computed;
        self.rows.push(Row { claim: claim.into(), expected, computed, pass });
    }

    pub fn row(&mut self, claim: impl Into<String>, expected: impl Display, computed: impl Display, pass: bool) {
        self.rows.push(Row {
            claim: claim.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        });
    }

    pub fn extend(&mut self, other: FixtureReport) {
        self.rows.extend(other.rows);
    }

    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "fixture": self.fixture,
            "rows": self.rows,
            "pass": self.pass(),
        })
    }
}

/// How parabolics are paired with weights in a scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParabolicPolicy {
    /// Every proper Levi set `I`, with every `P`-regular weight in the grid.
    All,
    /// Every nonzero dominant weight in the grid, with the parabolic of its support.
    LeviOfSupport,
}

/// Reduced words used by the conjecture scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordSource {
    /// Words given per root system as 1-based letters.
    Explicit(Vec<(CartanType, Vec<usize>)>),
    /// `s_1 (s_2 s_1) (s_3 s_2 s_1) ⋯` for type `A`, plus `s_2 s_1 s_2 s_1` for `B_2`.
    Default,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub systems: Vec<CartanType>,
    pub parabolics: ParabolicPolicy,
    /// Largest fundamental-weight coefficient in the weight grid.
    pub coeff_bound: i64,
    pub words: WordSource,
    pub crystal_cap: usize,
}

impl ScanConfig {
    /// All admissible ranks `≤ max_rank` of the given families.
    pub fn grid(families: &[Family], max_rank: usize, coeff_bound: i64) -> Result<ScanConfig> {
        if max_rank == 0 || coeff_bound <= 0 {
            return Err(Error::invalid("scan bounds must be positive"));
        }
        let systems =
            families.iter().flat_map(|&f| (1..=max_rank).filter_map(move |r| CartanType::new(f, r).ok())).collect();
        Ok(ScanConfig {
            systems,
            parabolics: ParabolicPolicy::All,
            coeff_bound,
            words: WordSource::Default,
            crystal_cap: DEFAULT_CRYSTAL_CAP,
        })
    }

    /// Families `A`–`D` and `G` up to rank 4 with coefficients up to 3.
    pub fn default_grid() -> ScanConfig {
        ScanConfig::grid(&[Family::A, Family::B, Family::C, Family::D, Family::G], 4, 3).expect("valid bounds")
    }

    pub fn with_systems(mut self, extra: impl IntoIterator<Item = CartanType>) -> Self {
        for ct in extra {
            if !self.systems.contains(&ct) {
                self.systems.push(ct);
            }
        }
        self
    }

    pub fn root_systems(&self) -> Vec<RootSystem> {
        self.systems.iter().map(|&ct| RootSystem::new(ct)).collect()
    }

    /// Number of `(parabolic, weight)` pairs a Main-Theorem scan visits.
    pub fn estimate(&self) -> u64 {
        let c = self.coeff_bound as u64;
        self.systems.iter().map(|ct| (c + 1).pow(ct.rank() as u32) - 1).sum()
    }

    /// Reduced words for the conjecture scan.
    pub fn words(&self) -> Result<Vec<(RootSystem, ReducedWord)>> {
        match &self.words {
            WordSource::Explicit(list) => list
                .iter()
                .map(|(ct, w)| {
                    let rs = RootSystem::new(*ct);
                    let word = ReducedWord::new(&rs, w.clone())?;
                    Ok((rs, word))
                })
                .collect(),
            WordSource::Default => {
                Ok(self.systems.iter().filter_map(|&ct| default_word(ct).map(|w| (RootSystem::new(ct), w))).collect())
            }
        }
    }
}

/// The shipped default words: `s_1 (s_2 s_1) ⋯ (s_n ⋯ s_1)` in type `A_n`, and
/// `s_2 s_1 s_2 s_1` in `B_2`.
pub fn default_word(ct: CartanType) -> Option<ReducedWord> {
    let rs = RootSystem::new(ct);
    let letters = match (ct.family(), ct.rank()) {
        (Family::A, n) => (1..=n).flat_map(|k| (1..=k).rev()).collect(),
        (Family::B, 2) => vec![2, 1, 2, 1],
        _ => return None,
    };
    Some(ReducedWord::new(&rs, letters).expect("standard word is reduced"))
}

/// Every weight with coefficients in `0..=c` in lexicographic order.
pub(crate) fn weight_grid(rank: usize, c: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=c).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Weight::new).collect()
}

pub(crate) fn fmt_vec<T: Display>(v: &[T]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

pub(crate) fn fmt_levi(levi: &[usize]) -> String {
    format!("{{{}}}", levi.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}
