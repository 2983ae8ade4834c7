use std::fmt::Write as _;

use serde_json::{json, Value};

use flagpoly_core::charformula::{classify_weight, ehrhart_polynomial, kostant_dimension};
use flagpoly_core::polyhedra::Polytope;
use flagpoly_core::rootsys::{CartanType, Family, ParabolicData, RootSystem, Weight};
use flagpoly_core::stringcones::{string_polytope, ReducedWord};
use flagpoly_core::verifier::{
    crosscheck_counts, lemma_suite, reproduce_fixture, scan_conjecture, scan_main_theorem, FixtureReport,
    ParabolicPolicy, ScanConfig, WordSource, FIXTURES,
};
use flagpoly_core::{Error, Result};

use crate::args::{Command, Grid, Ints, Levi, Policy, Suite, System};

/// Result of a command: JSON document, human-readable text and whether a check failed.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Output {
        Output { json, text, failed: false }
    }
}

pub struct Context {
    pub crystal_cap: usize,
}

pub fn run(cmd: Command, ctx: &Context) -> Result<Output> {
    match cmd {
        Command::Roots { system } => roots(&system),
        Command::Parabolic { system, levi } => parabolic(&system, &levi),
        Command::Anticanonical { system, levi } => anticanonical(&system, &levi),
        Command::Dimension { system, levi, weight } => dimension(&system, &levi, weight),
        Command::Ehrhart { system, levi, weight, expand } => ehrhart(&system, &levi, weight, expand),
        Command::Classify { system, levi, weight } => classify(&system, &levi, weight),
        Command::StringPolytope { system, word, weight, method, n_max, out } => {
            let rs = root_system(&system)?;
            let word = reduced_word(&rs, word)?;
            let lam = weight_of(&rs, weight)?;
            let q = string_polytope(&rs, &word, &lam, method, n_max, ctx.crystal_cap)?;
            let poly = q.polytope.to_json();
            if let Some(path) = &out {
                let body = serde_json::to_string_pretty(&poly).expect("serialisable") + "\n";
                std::fs::write(path, body)
                    .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
            }
            let p = &q.polytope;
            let text = format!(
                "string polytope of {} for word {word} at λ={lam}\nmethod {}{}\ndimension {} in R^{}, {} vertices, {} facets, lattice: {}\n",
                rs.cartan_type(),
                q.method,
                q.certificate.map(|n| format!(" (certificate n*={n})")).unwrap_or_default(),
                p.dim_affine(),
                p.dim_ambient(),
                p.vertices().len(),
                p.facets().len(),
                p.is_lattice()
            );
            Ok(Output::ok(
                json!({
                    "type": rs.cartan_type().to_string(),
                    "word": word.letters(),
                    "weight": lam.coeffs(),
                    "method": q.method.to_string(),
                    "certificate": q.certificate,
                    "polytope": poly,
                }),
                text,
            ))
        }
        Command::Analyze { file, reflexive, count } => analyze(&file, reflexive, count),
        Command::Verify { suite } => verify(suite, ctx),
        Command::Reproduce { name } => reproduce(&name, ctx),
    }
}

fn root_system(s: &System) -> Result<RootSystem> {
    Ok(RootSystem::new(CartanType::new(s.family, s.rank)?))
}

fn weight_of(rs: &RootSystem, w: Ints) -> Result<Weight> {
    let lam = Weight::new(w.0);
    rs.check_weight(&lam)?;
    Ok(lam)
}

fn reduced_word(rs: &RootSystem, word: Option<Ints>) -> Result<ReducedWord> {
    match word {
        None => Ok(ReducedWord::default_for(rs)),
        Some(w) => {
            let letters =
                w.0.into_iter()
                    .map(|x| usize::try_from(x).map_err(|_| Error::InvalidInput(format!("bad letter {x}"))))
                    .collect::<Result<Vec<_>>>()?;
            ReducedWord::new(rs, letters)
        }
    }
}

/// The given Levi set, or the zeros of the weight.
fn levi_for(rs: &RootSystem, levi: &Levi, lam: Option<&Weight>) -> Result<ParabolicData> {
    match (&levi.levi, lam) {
        (Some(l), _) => rs.parabolic(&l.0),
        (None, Some(lam)) => rs.parabolic_of(lam),
        (None, None) => rs.parabolic(&[]),
    }
}

fn rows(v: &[Vec<i64>]) -> String {
    v.iter().map(|r| format!("({})", join(r))).collect::<Vec<_>>().join(" ")
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn roots(s: &System) -> Result<Output> {
    let rs = root_system(s)?;
    let pos: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.coeffs().to_vec()).collect();
    let word = rs.longest_element_word();
    let mut text = format!("{}\nCartan matrix:\n", rs.cartan_type());
    for row in rs.cartan_matrix() {
        let _ = writeln!(text, "  {}", row.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "));
    }
    let _ = writeln!(text, "positive roots ({}): {}", pos.len(), rows(&pos));
    let _ = writeln!(text, "rho: {}", rs.rho());
    let _ = writeln!(text, "longest element: {}", join(&word));
    Ok(Output::ok(
        json!({
            "type": rs.cartan_type().to_string(),
            "rank": rs.rank(),
            "cartan_matrix": rs.cartan_matrix(),
            "positive_roots": pos,
            "rho": rs.rho().coeffs(),
            "longest_word": word,
        }),
        text,
    ))
}

fn parabolic(s: &System, levi: &Levi) -> Result<Output> {
    let rs = root_system(s)?;
    let p = levi_for(&rs, levi, None)?;
    let phi: Vec<Vec<i64>> = p.phi_p_plus.iter().map(|r| r.coeffs().to_vec()).collect();
    let lr: Vec<Vec<i64>> = p.levi_roots.iter().map(|r| r.coeffs().to_vec()).collect();
    let w_i: Vec<usize> = p.w_i_word.iter().map(|i| i + 1).collect();
    let ac = rs.anticanonical_weight(&p);
    let text = format!(
        "{} I={{{}}}\nN_P = {}\nPhi_P^+: {}\nLevi roots: {}\nw_I = {}\nanticanonical weight: {ac}\n",
        rs.cartan_type(),
        join(&p.levi),
        p.n_p(),
        rows(&phi),
        rows(&lr),
        if w_i.is_empty() { "1".into() } else { w_i.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ") },
    );
    Ok(Output::ok(
        json!({
            "type": rs.cartan_type().to_string(),
            "levi": p.levi,
            "n_p": p.n_p(),
            "phi_p_plus": phi,
            "levi_roots": lr,
            "w_i_word": w_i,
            "w_i_action": p.w_i_action,
            "anticanonical_weight": ac.coeffs(),
        }),
        text,
    ))
}

fn anticanonical(s: &System, levi: &Levi) -> Result<Output> {
    let rs = root_system(s)?;
    let p = levi_for(&rs, levi, None)?;
    let ac = rs.anticanonical_weight(&p);
    Ok(Output::ok(
        json!({"type": rs.cartan_type().to_string(), "levi": p.levi, "weight": ac.coeffs()}),
        format!("{ac}\n"),
    ))
}

fn dimension(s: &System, levi: &Levi, w: Ints) -> Result<Output> {
    let rs = root_system(s)?;
    let lam = weight_of(&rs, w)?;
    let p = levi_for(&rs, levi, Some(&lam))?;
    let d = kostant_dimension(&rs, &p, &lam)?;
    Ok(Output::ok(
        json!({"type": rs.cartan_type().to_string(), "levi": p.levi, "weight": lam.coeffs(), "dimension": d.to_string()}),
        format!("{d}\n"),
    ))
}

fn ehrhart(s: &System, levi: &Levi, w: Ints, expand: bool) -> Result<Output> {
    let rs = root_system(s)?;
    let lam = weight_of(&rs, w)?;
    let p = levi_for(&rs, levi, Some(&lam))?;
    let l = ehrhart_polynomial(&rs, &p, &lam)?;
    let coeffs: Vec<String> = l.coeffs().iter().map(flagpoly_core::arith::format_rational).collect();
    let text = if expand { l.to_string() } else { l.factored() };
    Ok(Output::ok(
        json!({
            "type": rs.cartan_type().to_string(),
            "levi": p.levi,
            "weight": lam.coeffs(),
            "degree": l.degree(),
            "coefficients": coeffs,
            "factored": l.factored(),
            "expanded": l.to_string(),
        }),
        text + "\n",
    ))
}

fn classify(s: &System, levi: &Levi, w: Ints) -> Result<Output> {
    let rs = root_system(s)?;
    let lam = weight_of(&rs, w)?;
    let p = levi_for(&rs, levi, Some(&lam))?;
    let r = classify_weight(&rs, &p, &lam)?;
    let mut doc = r.to_json();
    doc["type"] = json!(rs.cartan_type().to_string());
    let text = format!(
        "{} I={{{}}} λ={lam}\nanticanonical: {}\ninterior lattice points of Δ(λ): {}\nHibi identity: {}\nconsistent: {}\n",
        rs.cartan_type(),
        join(&r.levi),
        r.is_anticanonical,
        r.interior_count_at_1,
        r.hibi_holds,
        r.consistent
    );
    Ok(Output { json: doc, text, failed: !r.consistent })
}

fn analyze(file: &std::path::Path, reflexive: bool, count: bool) -> Result<Output> {
    let raw = std::fs::read_to_string(file)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", file.display())))?;
    let value: Value = serde_json::from_str(&raw).map_err(|e| Error::Parse(e.to_string()))?;
    let doc = value.get("polytope").unwrap_or(&value);
    let p = Polytope::from_json(doc)?;
    let mut out = json!({
        "dim": p.dim_ambient(),
        "affine_dim": p.dim_affine(),
        "vertices": p.vertices().len(),
        "facets": p.facets().len(),
        "lattice": p.is_lattice(),
        "non_integral_vertices": p.non_integral_vertices().len(),
        "vertex_denominator": p.vertex_denominator().to_string(),
    });
    let mut text = format!(
        "dimension {} in R^{}, {} vertices, {} facets\nlattice: {} (vertex denominator {})\n",
        p.dim_affine(),
        p.dim_ambient(),
        p.vertices().len(),
        p.facets().len(),
        p.is_lattice(),
        p.vertex_denominator()
    );
    if count {
        let n = p.count_lattice_points();
        let k = p.count_relative_interior_lattice_points();
        out["lattice_points"] = json!(n);
        out["interior_lattice_points"] = json!(k);
        let _ = writeln!(text, "lattice points: {n}, relative interior: {k}");
    }
    let mut failed = false;
    if reflexive {
        let verdict = match p.reflexive_after_translation() {
            Ok(r) => {
                let _ = writeln!(text, "reflexive after translation by ({})", join(&r.translation));
                json!({"reflexive": true, "translation": r.translation.iter().map(|x| x.to_string()).collect::<Vec<_>>()})
            }
            Err(e) => {
                failed = true;
                let _ = writeln!(text, "not reflexive: {}", e.code());
                let mut v = json!({"reflexive": false, "reason": e.code()});
                match e {
                    flagpoly_core::NotReflexive::InteriorCount(n) => v["interior_count"] = json!(n),
                    flagpoly_core::NotReflexive::DualNotLattice { translation } => {
                        v["translation"] = json!(translation.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    }
                    flagpoly_core::NotReflexive::NotLattice => {}
                }
                v
            }
        };
        out["reflexivity"] = verdict;
    }
    Ok(Output { json: out, text, failed })
}

fn grid_config(g: &Grid, families: &[Family], max_rank: usize, coeff: i64) -> Result<ScanConfig> {
    let fams = g.families.clone().map(|f| f.0).unwrap_or_else(|| families.to_vec());
    ScanConfig::grid(&fams, g.max_rank.unwrap_or(max_rank), g.coeff.unwrap_or(coeff))
}

fn report_output(r: FixtureReport) -> Output {
    let mut text = String::new();
    for row in &r.rows {
        let tag = if row.pass { "[PASS]" } else { "[FAIL]" };
        let _ = writeln!(text, "{tag} {}: expected {}, computed {}", row.claim, row.expected, row.computed);
    }
    let _ = writeln!(text, "{}: {}", r.fixture, if r.pass() { "pass" } else { "FAIL" });
    Output { json: r.to_json(), text, failed: !r.pass() }
}

fn verify(suite: Suite, ctx: &Context) -> Result<Output> {
    use Family::*;
    let report = match suite {
        Suite::Lemmas { grid } => {
            let cfg = grid_config(&grid, &[A, B, C, D, E, F, G], 4, 4)?;
            eprintln!("checking lemmas on {} root systems", cfg.systems.len());
            lemma_suite(&cfg)
        }
        Suite::MainTheorem { grid, policy } => {
            let mut cfg = grid_config(&grid, &[A, B, C, D, G], 4, 3)?;
            cfg.parabolics = match policy {
                Policy::All => ParabolicPolicy::All,
                Policy::Support => ParabolicPolicy::LeviOfSupport,
            };
            eprintln!("scanning {} (parabolic, weight) pairs", cfg.estimate());
            scan_main_theorem(&cfg)
        }
        Suite::Conjecture { grid, words } => {
            let mut cfg = grid_config(&grid, &[A, B], 3, 2)?;
            cfg.crystal_cap = ctx.crystal_cap;
            if !words.is_empty() {
                cfg.words = WordSource::Explicit(words.iter().map(|w| parse_typed_word(w)).collect::<Result<_>>()?);
            }
            let c = cfg.coeff_bound as u64;
            let total: u64 = cfg.words()?.iter().map(|(rs, _)| (c + 1).pow(rs.rank() as u32) - 1).sum();
            eprintln!("building {total} string polytopes");
            scan_conjecture(&cfg)?
        }
        Suite::Crosscheck { family, rank, word, weight, n_max } => {
            let cases: Vec<(RootSystem, ReducedWord, Weight)> = match (family, rank, weight) {
                (Some(f), Some(r), Some(w)) => {
                    let rs = RootSystem::new(CartanType::new(f, r)?);
                    let word = reduced_word(&rs, word)?;
                    let lam = weight_of(&rs, w)?;
                    vec![(rs, word, lam)]
                }
                _ => default_crosschecks()?,
            };
            let mut all = FixtureReport::new("crosscheck");
            for (rs, word, lam) in &cases {
                all.extend(crosscheck_counts(rs, word, lam, n_max, ctx.crystal_cap)?);
            }
            all
        }
    };
    Ok(report_output(report))
}

fn default_crosschecks() -> Result<Vec<(RootSystem, ReducedWord, Weight)>> {
    let a2 = RootSystem::of(Family::A, 2)?;
    let b2 = RootSystem::of(Family::B, 2)?;
    let wa = ReducedWord::new(&a2, vec![1, 2, 1])?;
    let wb = ReducedWord::new(&b2, vec![2, 1, 2, 1])?;
    let mut out = vec![(a2.clone(), wa.clone(), a2.rho().clone()), (a2.clone(), wa, a2.rho().scale(2))];
    for k in [1, 2, 4] {
        out.push((b2.clone(), wb.clone(), Weight::new(vec![0, k])));
    }
    Ok(out)
}

/// Parses `B2:2,1,2,1`.
fn parse_typed_word(s: &str) -> Result<(CartanType, Vec<usize>)> {
    let (t, w) = s.split_once(':').ok_or_else(|| Error::InvalidInput(format!("expected TYPE:WORD, got {s:?}")))?;
    let t = t.trim();
    let family: Family = t.get(..1).unwrap_or("").parse()?;
    let rank: usize = t[1..].parse().map_err(|_| Error::InvalidInput(format!("bad rank in {t:?}")))?;
    let ct = CartanType::new(family, rank)?;
    let word = ReducedWord::parse(&RootSystem::new(ct), w)?;
    Ok((ct, word.letters().to_vec()))
}

fn reproduce(name: &str, ctx: &Context) -> Result<Output> {
    if name != "all" {
        return Ok(report_output(reproduce_fixture(name, ctx.crystal_cap)?));
    }
    let mut docs = Vec::new();
    let mut text = String::new();
    let mut failed = false;
    for f in FIXTURES {
        let out = report_output(reproduce_fixture(f, ctx.crystal_cap)?);
        failed |= out.failed;
        text.push_str(&out.text);
        docs.push(out.json);
    }
    Ok(Output { json: json!({"fixtures": docs, "pass": !failed}), text, failed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn typed_words() {
        let (ct, w) = parse_typed_word("B2:2,1,2,1").unwrap();
        assert_eq!(ct.to_string(), "B2");
        assert_eq!(w, vec![2, 1, 2, 1]);
        assert!(parse_typed_word("B2").is_err());
        assert!(parse_typed_word("B2:1,1,2,2").is_err());
        assert!(parse_typed_word("X2:1,2").is_err());
    }

    #[test]
    fn levi_defaults_to_zeros_of_the_weight() {
        let rs = RootSystem::of(Family::A, 3).unwrap();
        let none = Levi { levi: None };
        assert_eq!(levi_for(&rs, &none, Some(&Weight::new(vec![0, 1, 0]))).unwrap().levi, vec![1, 3]);
        assert!(levi_for(&rs, &none, None).unwrap().levi.is_empty());
    }
}
