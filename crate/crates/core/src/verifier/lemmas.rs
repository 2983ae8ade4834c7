use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::{fmt_levi, fmt_vec, weight_grid, FixtureReport, ScanConfig};
use crate::rootsys::{ParabolicData, Root, RootSystem, Weight};

const NONE: &str = "none";

/// Exhaustive checks of the five root-theoretic lemmas behind the unique-interior-point
/// characterisation, over every system and parabolic of the configuration. Also adds the
/// two explicit anticanonical-weight rows for `(A2, ∅)` and `(B2, {1})`.
pub fn lemma_suite(cfg: &ScanConfig) -> FixtureReport {
    let per_system: Vec<FixtureReport> =
        cfg.root_systems().par_iter().map(|rs| system_lemmas(rs, cfg.coeff_bound)).collect();
    let mut report = FixtureReport::new("lemmas");
    for r in per_system {
        report.extend(r);
    }
    explicit_rows(&mut report);
    report
}

fn system_lemmas(rs: &RootSystem, c: i64) -> FixtureReport {
    let t = rs.cartan_type();
    let pars = rs.all_parabolics();
    let mut r = FixtureReport::new(t.to_string());
    let np = pars.len();

    let w = first_witness(&pars, |p| w_i_lemma(rs, p));
    r.check(format!("w_I² = 1, w_I(Φ_P^+) = Φ_P^+, w_I(⟨I⟩^+) = −⟨I⟩^+ in {t} ({np} parabolics)"), NONE, w);

    let w = first_witness(&pars, |p| anticanonical_sum(rs, p));
    r.check(format!("ρ + w_I(ρ) = Σ Φ_P^+ in {t} ({np} parabolics)"), NONE, w);

    let mut cases = 0usize;
    let mut witness = None;
    for p in &pars {
        for lam in weight_grid(rs.rank(), c).iter().filter(|l| rs.is_p_regular(p, l)) {
            cases += 1;
            if witness.is_none() {
                witness = nonneg(rs, p, lam);
            }
        }
    }
    r.check(
        format!("⟨λ−ρ,β^∨⟩ < 0 on Φ_P^+ forces a zero on Φ_P^+ in {t} ({cases} P-regular weights, coefficients ≤ {c})"),
        NONE,
        witness.unwrap_or_else(|| NONE.into()),
    );

    r.check(
        format!("β − α_j ∈ Φ for some j ≠ i whenever m_i(β) = 1, ht β > 1 in {t}"),
        NONE,
        roots_lemma(rs).unwrap_or_else(|| NONE.into()),
    );

    let w = first_witness(&pars, sequence_lemma);
    r.check(format!("every β ∈ Φ_P^+ is built from simple roots through Φ_P^+ in {t} ({np} parabolics)"), NONE, w);
    r
}

fn first_witness(pars: &[ParabolicData], f: impl Fn(&ParabolicData) -> Option<String>) -> String {
    pars.iter().find_map(|p| f(p).map(|w| format!("I={}: {w}", fmt_levi(&p.levi)))).unwrap_or_else(|| NONE.into())
}

fn w_i_lemma(rs: &RootSystem, p: &ParabolicData) -> Option<String> {
    let m = &p.w_i_action;
    let r = m.len();
    for i in 0..r {
        for j in 0..r {
            let sq: i64 = (0..r).map(|k| m[i][k] * m[k][j]).sum();
            if sq != (i == j) as i64 {
                return Some(format!("w_I² has entry {sq} at ({},{})", i + 1, j + 1));
            }
        }
    }
    let image: HashSet<&[i64]> = p.phi_p_plus.iter().map(|b| b.coeffs()).collect();
    let mapped: Vec<Root> = p.phi_p_plus.iter().map(|b| rs.w_i_apply_root(p, b)).collect();
    if let Some(b) = mapped.iter().find(|b| !image.contains(b.coeffs())) {
        return Some(format!("w_I sends a root of Φ_P^+ to {}", fmt_vec(b.coeffs())));
    }
    let distinct: HashSet<&[i64]> = mapped.iter().map(|b| b.coeffs()).collect();
    if distinct.len() != mapped.len() {
        return Some("w_I is not injective on Φ_P^+".into());
    }
    for b in &p.levi_roots {
        let m = rs.w_i_apply_root(p, b);
        if !p.levi_roots.contains(&m.neg()) {
            return Some(format!("w_I sends {} outside −⟨I⟩^+", fmt_vec(b.coeffs())));
        }
    }
    None
}

fn anticanonical_sum(rs: &RootSystem, p: &ParabolicData) -> Option<String> {
    let via_w = rs.rho().add(&rs.w_i_apply(p, rs.rho()));
    let mut sum = vec![0; rs.rank()];
    for b in &p.phi_p_plus {
        for (s, c) in sum.iter_mut().zip(b.coeffs()) {
            *s += c;
        }
    }
    let via_sum = rs.root_to_weight(&Root(sum));
    (via_w != via_sum).then(|| format!("ρ + w_I(ρ) = {via_w} but Σ Φ_P^+ = {via_sum}"))
}

fn nonneg(rs: &RootSystem, p: &ParabolicData, lam: &Weight) -> Option<String> {
    let shifted = lam.sub(rs.rho());
    let vals: Vec<i64> = p.phi_p_plus.iter().map(|b| rs.pairing(&shifted, b).expect("root")).collect();
    let neg = vals.iter().position(|&v| v < 0)?;
    if vals.contains(&0) {
        return None;
    }
    Some(format!(
        "I={}, λ={lam}: ⟨λ−ρ,β^∨⟩ = {} at β={} and no zero",
        fmt_levi(&p.levi),
        vals[neg],
        fmt_vec(p.phi_p_plus[neg].coeffs())
    ))
}

fn roots_lemma(rs: &RootSystem) -> Option<String> {
    let r = rs.rank();
    for b in rs.positive_roots().iter().filter(|b| b.height() > 1) {
        for i in (0..r).filter(|&i| b.coeffs()[i] == 1) {
            let found = (0..r).filter(|&j| j != i).any(|j| {
                let mut c = b.coeffs().to_vec();
                c[j] -= 1;
                rs.is_root(&Root(c))
            });
            if !found {
                return Some(format!("β={}, i={}", fmt_vec(b.coeffs()), i + 1));
            }
        }
    }
    None
}

/// Whether `β` is reachable from a simple root of `Φ_P^+` by adding simple roots while
/// staying in `Φ_P^+`. Searched downwards, memoised per root.
fn sequence_lemma(p: &ParabolicData) -> Option<String> {
    let in_p: HashSet<&[i64]> = p.phi_p_plus.iter().map(|b| b.coeffs()).collect();
    let mut memo: HashMap<Vec<i64>, bool> = HashMap::new();
    fn reach(b: &[i64], in_p: &HashSet<&[i64]>, memo: &mut HashMap<Vec<i64>, bool>) -> bool {
        if let Some(&v) = memo.get(b) {
            return v;
        }
        let height: i64 = b.iter().sum();
        let ok = height == 1
            || (0..b.len()).any(|j| {
                if b[j] == 0 {
                    return false;
                }
                let mut c = b.to_vec();
                c[j] -= 1;
                in_p.contains(c.as_slice()) && reach(&c, in_p, memo)
            });
        memo.insert(b.to_vec(), ok);
        ok
    }
    p.phi_p_plus
        .iter()
        .find(|b| !reach(b.coeffs(), &in_p, &mut memo))
        .map(|b| format!("no sequence for β={}", fmt_vec(b.coeffs())))
}

fn explicit_rows(report: &mut FixtureReport) {
    use crate::rootsys::Family;
    let a2 = RootSystem::of(Family::A, 2).expect("A2");
    let p = a2.parabolic(&[]).expect("Borel");
    let sum = p.phi_p_plus.iter().fold(vec![0; 2], |mut acc, b| {
        for (s, c) in acc.iter_mut().zip(b.coeffs()) {
            *s += c;
        }
        acc
    });
    report.check("A2, I=∅: Σ_{β∈Φ^+} β = 2ρ", a2.rho().scale(2), a2.root_to_weight(&Root(sum)));
    let b2 = RootSystem::of(Family::B, 2).expect("B2");
    let p = b2.parabolic(&[1]).expect("maximal parabolic");
    report.check(
        "B2, I={1}: 2α1 + 4α2 = 4ω2 = ρ + w_I(ρ)",
        format!("{} {}", Weight(vec![0, 4]), Weight(vec![0, 4])),
        format!("{} {}", b2.root_to_weight(&Root(vec![2, 4])), b2.rho().add(&b2.w_i_apply(&p, b2.rho()))),
    );
}
