use num_bigint::BigInt;
use num_traits::One;

use super::{fmt_vec, FixtureReport};
use crate::arith::{rat, Rat};
use crate::charformula::{ehrhart_polynomial, interior_count};
use crate::error::{Error, Result};
use crate::polyhedra::Polytope;
use crate::polynomial::Polynomial;
use crate::rootsys::{Family, RootSystem, Weight};
use crate::stringcones::{hull_string_polytope, string_polytope, strings, Method, ReducedWord};

pub const FIXTURES: [&str; 6] = ["gr36", "a6", "b2", "g2-short", "g2-long", "fullflag-ehrhart"];

const GR36: [usize; 15] = [1, 3, 2, 1, 3, 2, 4, 3, 2, 1, 5, 4, 3, 2, 1];
const A6: [usize; 21] = [1, 3, 2, 1, 3, 2, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1];

/// Runs the pipeline for a named example and checks each of its claims.
pub fn reproduce_fixture(name: &str, cap: usize) -> Result<FixtureReport> {
    let mut r = FixtureReport::new(name);
    match name {
        "gr36" => gr36(&mut r, cap)?,
        "a6" => a6(&mut r)?,
        "b2" => b2(&mut r, cap)?,
        "g2-short" => g2_short(&mut r, cap)?,
        "g2-long" => g2_long(&mut r, cap)?,
        "fullflag-ehrhart" => fullflag(&mut r)?,
        _ => return Err(Error::invalid(format!("unknown fixture {name:?}; expected one of {}", FIXTURES.join(", ")))),
    }
    Ok(r)
}

fn half_integral(v: &[Rat]) -> bool {
    v.iter().all(|x| (x * rat(2)).is_integer())
}

fn ints(v: &[BigInt]) -> String {
    fmt_vec(v)
}

fn non_integral_summary(q: &Polytope) -> (usize, bool) {
    let bad = q.non_integral_vertices();
    (bad.len(), bad.iter().all(|v| half_integral(v)))
}

fn reflexivity(q: &Polytope) -> String {
    match q.reflexive_after_translation() {
        Ok(refl) => format!("reflexive, translation {}", ints(&refl.translation)),
        Err(e) => format!("not reflexive ({})", e.code()),
    }
}

fn gr36(r: &mut FixtureReport, cap: usize) -> Result<()> {
    let a5 = RootSystem::of(Family::A, 5)?;
    let w = ReducedWord::new(&a5, GR36.to_vec())?;
    let lam = a5.fundamental_weight(3)?;
    let par = a5.parabolic_of(&lam)?;
    let q = string_polytope(&a5, &w, &lam, Method::Cone, 1, cap)?.polytope;

    let (bad, half) = non_integral_summary(&q);
    r.check("non-integral vertices of Q(ω3)", 1, bad);
    r.check("the non-integral vertex is half-integral", true, half);
    r.check("lattice points of Q(ω3)", 20, q.count_lattice_points());
    r.check("6ω3 = ρ + w_I(ρ) for I = {1,2,4,5}", lam.scale(6), a5.anticanonical_weight(&par));

    let q6 = q.dilate(&rat(6))?;
    r.check("6Q is a lattice polytope", true, q6.is_lattice());
    r.check("relative interior lattice points of 6Q", 1, q6.count_relative_interior_lattice_points());
    r.check("interior count (−1)^N_P L(−1) at 6ω3", 1, interior_count(&a5, &par, &lam.scale(6), 1)?);
    let refl = q6.reflexive_after_translation();
    r.row("6Q is reflexive after translation", "reflexive", reflexivity(&q6), refl.is_ok());

    let hull = hull_string_polytope(&a5, &w, &lam, 2, cap)?;
    r.check("hull certificate n*", 2, hull.certificate);
    r.check("crystal size of B(2ω3)", 175, strings(&a5, &lam.scale(2), &w, cap)?.len());
    r.check("hull and cone constructions coincide", true, hull.polytope == q);
    Ok(())
}

fn a6(r: &mut FixtureReport) -> Result<()> {
    let a6 = RootSystem::of(Family::A, 6)?;
    let w = ReducedWord::new(&a6, A6.to_vec())?;
    let lam = a6.fundamental_weight(3)?;
    let par = a6.parabolic_of(&lam)?;
    let q = string_polytope(&a6, &w, &lam, Method::Cone, 1, 0)?.polytope;
    let (bad, half) = non_integral_summary(&q);
    r.row("Q(ω3) has non-integral vertices", "at least 1", bad, bad > 0);
    r.check("all non-integral vertices are half-integral", true, half);
    r.check("7ω3 = ρ + w_I(ρ) for I = {1,2,4,5,6}", lam.scale(7), a6.anticanonical_weight(&par));
    let q7 = q.dilate(&rat(7))?;
    r.check("7Q is a lattice polytope", false, q7.is_lattice());
    Ok(())
}

fn b2(r: &mut FixtureReport, cap: usize) -> Result<()> {
    let b2 = RootSystem::of(Family::B, 2)?;
    let w = ReducedWord::new(&b2, vec![2, 1, 2, 1])?;
    let q = string_polytope(&b2, &w, &Weight(vec![0, 1]), Method::Hull, 4, cap)?;
    let (bad, half) = non_integral_summary(&q.polytope);
    r.check("non-integral vertices of Q(ω2)", 1, bad);
    r.check("the non-integral vertex is half-integral", true, half);
    r.check("dimension of Q(ω2)", 3, q.polytope.dim_affine());
    let pts: Vec<Vec<Rat>> =
        q.polytope.lattice_points(false).into_iter().map(|p| p.into_iter().map(Rat::from_integer).collect()).collect();
    r.check("dimension of the affine hull of its lattice points", 2, Polytope::from_points(&pts)?.dim_affine());

    let lam = Weight(vec![0, 4]);
    let par = b2.parabolic_of(&lam)?;
    r.check("4ω2 = ρ + w_I(ρ) for I = {1}", &lam, b2.anticanonical_weight(&par));
    let q4 = string_polytope(&b2, &w, &lam, Method::Hull, 4, cap)?.polytope;
    r.check("Q(4ω2) is a lattice polytope", true, q4.is_lattice());
    r.check("Q(4ω2) after translation", "reflexive, translation (1,2,3,0)", reflexivity(&q4));
    Ok(())
}

fn g2_short(r: &mut FixtureReport, cap: usize) -> Result<()> {
    let g2 = RootSystem::of(Family::G, 2)?;
    let w = ReducedWord::new(&g2, vec![1, 2, 1, 2, 1, 2])?;
    let h = hull_string_polytope(&g2, &w, &g2.rho().scale(2), 4, cap)?;
    let q = &h.polytope;
    r.check("hull certificate n*", 3, h.certificate);
    r.check("vertices lie in (1/3)Z", true, q.vertices().iter().all(|v| v.iter().all(|x| (x * rat(3)).is_integer())));
    r.check("Q(2ρ) is a lattice polytope", false, q.is_lattice());
    let interior: Vec<String> = q.relative_interior_lattice_points().iter().map(|p| ints(p)).collect();
    r.check("interior lattice points", "(1,2,5,3,4,1)", interior.join(" "));
    let verdict = reflexivity(q);
    r.row("Q(2ρ) after translation", "not reflexive", &verdict, verdict.starts_with("not reflexive"));
    Ok(())
}

fn g2_long(r: &mut FixtureReport, cap: usize) -> Result<()> {
    let g2 = RootSystem::of(Family::G, 2)?;
    let w = ReducedWord::new(&g2, vec![2, 1, 2, 1, 2, 1])?;
    let h = hull_string_polytope(&g2, &w, &g2.rho().scale(2), 4, cap)?;
    r.check("Q(2ρ) is a lattice polytope", true, h.polytope.is_lattice());
    r.check("relative interior lattice points", 1, h.polytope.count_relative_interior_lattice_points());
    Ok(())
}

fn fullflag(r: &mut FixtureReport) -> Result<()> {
    for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::G, 2)] {
        let rs = RootSystem::of(f, n)?;
        let par = rs.parabolic(&[])?;
        let l = ehrhart_polynomial(&rs, &par, &rs.rho().scale(2))?;
        let big_n = rs.num_positive_roots();
        let target =
            (0..big_n).fold(Polynomial::constant(Rat::one()), |acc, _| &acc * &Polynomial::linear(rat(2), rat(1)));
        r.check(format!("{} at 2ρ: L(n) = (2n+1)^{big_n}", rs.cartan_type()), &target, l.polynomial());
    }
    Ok(())
}
