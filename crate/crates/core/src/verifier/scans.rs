use num_bigint::BigInt;
use rayon::prelude::*;

use super::{fmt_levi, weight_grid, FixtureReport, ParabolicPolicy, ScanConfig};
use crate::charformula::{classify_weight, ehrhart_polynomial, TheoremReport};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, ParabolicData, RootSystem, Weight};
use crate::stringcones::{string_polytope, strings, Method, ReducedWord, DEFAULT_HULL_N_MAX};

fn pairs(rs: &RootSystem, cfg: &ScanConfig) -> Vec<(ParabolicData, Weight)> {
    let grid = weight_grid(rs.rank(), cfg.coeff_bound);
    match cfg.parabolics {
        ParabolicPolicy::All => rs
            .all_parabolics()
            .into_iter()
            .flat_map(|p| {
                grid.iter().filter(|l| rs.is_p_regular(&p, l)).map(|l| (p.clone(), l.clone())).collect::<Vec<_>>()
            })
            .collect(),
        ParabolicPolicy::LeviOfSupport => grid
            .into_iter()
            .filter(|l| l.coeffs().iter().any(|&c| c != 0))
            .map(|l| (rs.parabolic_of(&l).expect("proper Levi set"), l))
            .collect(),
    }
}

fn case(t: CartanType, r: &TheoremReport) -> String {
    format!("{t} I={} λ={}", fmt_levi(&r.levi), r.lam)
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join("; ")
    }
}

/// For every system, parabolic and `P`-regular weight of the grid: a unique interior lattice
/// point occurs exactly at the anticanonical weight, and there the Hibi identity holds.
pub fn scan_main_theorem(cfg: &ScanConfig) -> FixtureReport {
    let per_system: Vec<FixtureReport> = cfg
        .root_systems()
        .par_iter()
        .map(|rs| {
            let t = rs.cartan_type();
            let cases = pairs(rs, cfg);
            let reports: Vec<TheoremReport> =
                cases.par_iter().map(|(p, l)| classify_weight(rs, p, l).expect("P-regular by construction")).collect();
            let mut out = FixtureReport::new(t.to_string());
            let bad: Vec<String> = reports.iter().filter(|r| !r.consistent).map(|r| case(t, r)).collect();
            out.check(
                format!("interior count 1 ⇔ λ = ρ + w_I(ρ) in {t} ({} pairs)", reports.len()),
                "none",
                list(&bad),
            );
            let mut expected: Vec<String> = cases
                .iter()
                .filter(|(p, l)| *l == rs.anticanonical_weight(p))
                .map(|(p, l)| format!("{t} I={} λ={l}", fmt_levi(&p.levi)))
                .collect();
            expected.sort();
            let mut unique: Vec<String> =
                reports.iter().filter(|r| r.interior_count_at_1 == BigInt::from(1)).map(|r| case(t, r)).collect();
            unique.sort();
            out.check(format!("weights with a unique interior point in {t}"), list(&expected), list(&unique));
            let hibi_fail: Vec<String> =
                reports.iter().filter(|r| r.is_anticanonical && !r.hibi_holds).map(|r| case(t, r)).collect();
            out.check(format!("Hibi identity at every anticanonical weight of {t}"), "none", list(&hibi_fail));
            let hibi_extra: Vec<String> =
                reports.iter().filter(|r| !r.is_anticanonical && r.hibi_holds).map(|r| case(t, r)).collect();
            out.check(format!("Hibi identity fails off the anticanonical weights of {t}"), "none", list(&hibi_extra));
            out
        })
        .collect();
    let mut report = FixtureReport::new("main-theorem");
    for r in per_system {
        report.extend(r);
    }
    report
}

/// Ties crystal enumeration, polyhedral lattice-point counts of `nQ_w(λ)` and the product
/// formula for the parabolic of `λ`, together with relative-interior counts against
/// `(−1)^{N_P} L(−n)`.
pub fn crosscheck_counts(
    rs: &RootSystem,
    word: &ReducedWord,
    lam: &Weight,
    n_max: u32,
    cap: usize,
) -> Result<FixtureReport> {
    let q = string_polytope(rs, word, lam, Method::Auto, DEFAULT_HULL_N_MAX, cap)?;
    let par = rs.parabolic_of(lam)?;
    let l = ehrhart_polynomial(rs, &par, lam)?;
    let tag = format!("{} w=({word}) λ={lam}", rs.cartan_type());
    let mut report = FixtureReport::new(format!("crosscheck {tag}"));
    for n in 1..=n_max {
        let nq = q.polytope.dilate(&crate::arith::rat(n as i64))?;
        let crystal = strings(rs, &lam.scale(n as i64), word, cap)?.len();
        let expected = l.count(n as i64);
        report.check(format!("{tag}, n={n}: crystal strings = L(n)"), &expected, crystal);
        report.check(format!("{tag}, n={n}: lattice points of nQ = L(n)"), &expected, nq.count_lattice_points());
        report.check(
            format!("{tag}, n={n}: relative interior lattice points of nQ = (−1)^N_P L(−n)"),
            l.reciprocal_count(n as i64),
            nq.count_relative_interior_lattice_points(),
        );
    }
    Ok(report)
}

/// The parity predicate predicting that `Q_w(λ)` is a lattice polytope for a standard word,
/// or `None` for types it does not cover.
pub fn conjecture_predicate(ct: CartanType, lam: &Weight) -> Option<bool> {
    let c = lam.coeffs();
    let n = ct.rank();
    match ct.family() {
        Family::A | Family::C => Some(true),
        Family::B => Some(c[n - 1] % 2 == 0),
        Family::D => Some(n < 4 || (c[n - 2] + c[n - 1]) % 2 == 0),
        _ => None,
    }
}

/// Compares lattice-ness of `Q_w(λ)` with the parity predicate for every nonzero dominant
/// weight of the grid and every configured word.
pub fn scan_conjecture(cfg: &ScanConfig) -> Result<FixtureReport> {
    let mut report = FixtureReport::new("conjecture");
    for (rs, word) in cfg.words()? {
        let t = rs.cartan_type();
        if conjecture_predicate(t, rs.rho()).is_none() {
            return Err(Error::Unsupported(format!("no lattice-ness prediction for type {t}")));
        }
        let grid: Vec<Weight> = weight_grid(rs.rank(), cfg.coeff_bound)
            .into_iter()
            .filter(|l| l.coeffs().iter().any(|&c| c != 0))
            .collect();
        let rows: Vec<Result<(String, bool, bool)>> = grid
            .par_iter()
            .map(|lam| {
                let q = string_polytope(&rs, &word, lam, Method::Auto, DEFAULT_HULL_N_MAX, cfg.crystal_cap)?;
                let predicted = conjecture_predicate(t, lam).expect("covered type");
                Ok((format!("{t} w=({word}) λ={lam}: Q is a lattice polytope"), predicted, q.polytope.is_lattice()))
            })
            .collect();
        for row in rows {
            let (claim, predicted, lattice) = row?;
            report.check(claim, predicted, lattice);
        }
    }
    Ok(report)
}
