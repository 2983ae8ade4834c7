//! Kostant's dimension formula and the Ehrhart polynomial it induces.
//!
//! For `λ ∈ Λ_P^+` the lattice-point counts of the dilates of `Δ(λ)` are
//!
//! ```text
//! L(n) = ∏_{β ∈ Φ_P^+} ⟨nλ + ρ, β^∨⟩ / ⟨ρ, β^∨⟩,
//! ```
//!
//! a polynomial of degree `N_P`. Evaluating it at negative arguments gives interior
//! counts by reciprocity, and the identity `L(n) = (-1)^{N_P} L(-n-1)` decides whether
//! the polar dual of the (translated) polytope is a lattice polytope.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{rat, Rat};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rootsys::{ParabolicData, RootSystem, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    poly: Polynomial,
    n_p: usize,
    /// Slopes `⟨λ,β^∨⟩/⟨ρ,β^∨⟩` of the linear factors, sorted.
    slopes: Vec<Rat>,
}

impl EhrhartPolynomial {
    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn coeffs(&self) -> Vec<Rat> {
        (0..=self.n_p).map(|k| self.poly.coeff(k)).collect()
    }

    pub fn degree(&self) -> usize {
        self.n_p
    }

    pub fn eval(&self, n: i64) -> Rat {
        self.poly.eval_int(n)
    }

    /// `L(n)` as an integer.
    pub fn count(&self, n: i64) -> BigInt {
        let v = self.eval(n);
        assert!(v.is_integer(), "Ehrhart polynomial takes non-integral value {v} at {n}");
        v.to_integer()
    }

    /// `(-1)^{N_P} L(-n)`.
    pub fn reciprocal_count(&self, n: i64) -> BigInt {
        let v = self.count(-n);
        if self.n_p % 2 == 1 {
            -v
        } else {
            v
        }
    }
}

impl EhrhartPolynomial {
    /// Product form with repeated factors collected, e.g. `(2n+1)^3` or `(n+1)^2((3/2)n+1)`.
    pub fn factored(&self) -> String {
        let mut out = String::new();
        let mut k = 0;
        while k < self.slopes.len() {
            let s = &self.slopes[k];
            let m = self.slopes[k..].iter().take_while(|t| *t == s).count();
            k += m;
            if s.is_zero() {
                continue;
            }
            out.push_str(&format!("({})", Polynomial::linear(s.clone(), rat(1))));
            if m > 1 {
                out.push_str(&format!("^{m}"));
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl std::fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.poly.fmt(f)
    }
}

fn require_p_dominant(rs: &RootSystem, par: &ParabolicData, lam: &Weight) -> Result<()> {
    rs.check_weight(lam)?;
    if !rs.is_p_dominant(par, lam) {
        return Err(Error::invalid(format!(
            "weight {lam} is not dominant with zero coefficients on the Levi set {:?}",
            par.levi
        )));
    }
    Ok(())
}

/// Per-root factors `(⟨λ,β^∨⟩, ⟨ρ,β^∨⟩)` over `Φ_P^+`.
fn factors(rs: &RootSystem, par: &ParabolicData, lam: &Weight) -> Vec<(i64, i64)> {
    par.phi_p_plus
        .iter()
        .map(|b| {
            let l = rs.pairing(lam, b).expect("positive root");
            let r = rs.pairing(rs.rho(), b).expect("positive root");
            (l, r)
        })
        .collect()
}

fn product_value(fs: &[(i64, i64)], n: i64) -> Rat {
    fs.iter().fold(rat(1), |acc, &(l, r)| acc * rat(n * l + r) / rat(r))
}

/// `dim H^0(G/P, L_λ)` by Kostant's product formula.
pub fn kostant_dimension(rs: &RootSystem, par: &ParabolicData, lam: &Weight) -> Result<BigInt> {
    require_p_dominant(rs, par, lam)?;
    let v = product_value(&factors(rs, par, lam), 1);
    assert!(v.is_integer(), "Kostant product {v} is not an integer");
    Ok(v.to_integer())
}

/// Weyl dimension of `V(λ)` for a dominant `λ` (the product over all of `Φ^+`).
pub fn weyl_dimension(rs: &RootSystem, lam: &Weight) -> Result<BigInt> {
    rs.check_weight(lam)?;
    if !lam.is_dominant() {
        return Err(Error::invalid(format!("weight {lam} is not dominant")));
    }
    let v = (0..rs.num_positive_roots()).fold(rat(1), |acc, k| {
        acc * rat(rs.coroot_pairing(lam.coeffs(), k) + rs.coroot_pairing(rs.rho().coeffs(), k))
            / rat(rs.coroot_pairing(rs.rho().coeffs(), k))
    });
    assert!(v.is_integer());
    Ok(v.to_integer())
}

pub fn ehrhart_polynomial(rs: &RootSystem, par: &ParabolicData, lam: &Weight) -> Result<EhrhartPolynomial> {
    require_p_dominant(rs, par, lam)?;
    let mut slopes: Vec<Rat> = factors(rs, par, lam).iter().map(|&(l, r)| rat(l) / rat(r)).collect();
    slopes.sort();
    let poly = slopes.iter().fold(Polynomial::constant(rat(1)), |acc, s| &acc * &Polynomial::linear(s.clone(), rat(1)));
    Ok(EhrhartPolynomial { poly, n_p: par.n_p(), slopes })
}

/// Number of interior lattice points of `nΔ(λ)`, i.e. `(-1)^{N_P} L(-n)`.
pub fn interior_count(rs: &RootSystem, par: &ParabolicData, lam: &Weight, n: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::invalid(format!("dilation factor must be positive, got {n}")));
    }
    let c = ehrhart_polynomial(rs, par, lam)?.reciprocal_count(n);
    assert!(!c.is_negative(), "reciprocity produced a negative count {c}");
    Ok(c)
}

/// Whether `L(n) − (−1)^{N_P} L(−n−1)` vanishes identically.
pub fn hibi_identity_holds(rs: &RootSystem, par: &ParabolicData, lam: &Weight) -> Result<bool> {
    let l = ehrhart_polynomial(rs, par, lam)?;
    let mut reflected = l.poly.compose_linear(&rat(-1), &rat(-1));
    if par.n_p() % 2 == 1 {
        reflected = -&reflected;
    }
    Ok((&l.poly - &reflected).is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub lam: Weight,
    pub levi: Vec<usize>,
    pub is_anticanonical: bool,
    pub interior_count_at_1: BigInt,
    pub hibi_holds: bool,
    /// `is_anticanonical ⇔ interior_count_at_1 == 1`.
    pub consistent: bool,
}

impl TheoremReport {
    pub fn to_json(&self) -> Value {
        json!({
            "weight": self.lam.coeffs(),
            "levi": self.levi,
            "is_anticanonical": self.is_anticanonical,
            "interior_count_at_1": self.interior_count_at_1.to_string(),
            "hibi_holds": self.hibi_holds,
            "consistent": self.consistent,
        })
    }
}

/// Evaluates both sides of the unique-interior-point characterisation for a `P`-regular weight.
pub fn classify_weight(rs: &RootSystem, par: &ParabolicData, lam: &Weight) -> Result<TheoremReport> {
    rs.check_weight(lam)?;
    if !rs.is_p_regular(par, lam) {
        return Err(Error::invalid(format!("weight {lam} is not P-regular for the Levi set {:?}", par.levi)));
    }
    let is_anticanonical = *lam == rs.anticanonical_weight(par);
    let interior = interior_count(rs, par, lam, 1)?;
    let hibi_holds = hibi_identity_holds(rs, par, lam)?;
    let unique = interior == BigInt::from(1);
    Ok(TheoremReport {
        lam: lam.clone(),
        levi: par.levi.clone(),
        is_anticanonical,
        interior_count_at_1: interior,
        hibi_holds,
        consistent: is_anticanonical == unique,
    })
}

/// Leading coefficient of `L`, i.e. the relative volume of `Δ(λ)`.
pub fn normalized_volume(rs: &RootSystem, par: &ParabolicData, lam: &Weight) -> Result<Rat> {
    let l = ehrhart_polynomial(rs, par, lam)?;
    Ok(l.poly.coeff(par.n_p()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn setup(f: Family, r: usize, levi: &[usize]) -> (RootSystem, ParabolicData) {
        let rs = RootSystem::of(f, r).unwrap();
        let p = rs.parabolic(levi).unwrap();
        (rs, p)
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn kostant_examples() {
        let (a1, p) = setup(Family::A, 1, &[]);
        for k in 0..6 {
            assert_eq!(kostant_dimension(&a1, &p, &Weight(vec![k])).unwrap(), BigInt::from(k + 1));
        }
        let (a5, p) = setup(Family::A, 5, &[1, 2, 4, 5]);
        let w3 = a5.fundamental_weight(3).unwrap();
        assert_eq!(kostant_dimension(&a5, &p, &w3).unwrap(), BigInt::from(binomial(6, 3)));
        let (g2, p) = setup(Family::G, 2, &[]);
        assert_eq!(kostant_dimension(&g2, &p, &g2.rho().scale(2)).unwrap(), BigInt::from(729));
    }

    #[test]
    fn kostant_rejects_weights_outside_the_parabolic_cone() {
        let (a5, p) = setup(Family::A, 5, &[1, 2, 4, 5]);
        assert!(kostant_dimension(&a5, &p, &a5.fundamental_weight(1).unwrap()).is_err());
        assert!(kostant_dimension(&a5, &p, &Weight(vec![0, 0, -1, 0, 0])).is_err());
    }

    #[test]
    fn ehrhart_examples() {
        let (a1, p) = setup(Family::A, 1, &[]);
        assert_eq!(ehrhart_polynomial(&a1, &p, &Weight(vec![1])).unwrap().to_string(), "n+1");
        let (a2, p) = setup(Family::A, 2, &[]);
        let l = ehrhart_polynomial(&a2, &p, &Weight(vec![2, 2])).unwrap();
        assert_eq!(l.to_string(), "8n^3+12n^2+6n+1");
        assert_eq!(l.factored(), "(2n+1)^3");
        let (b2, p) = setup(Family::B, 2, &[1]);
        assert_eq!(ehrhart_polynomial(&b2, &p, &Weight(vec![0, 1])).unwrap().factored(), "((1/3)n+1)((1/2)n+1)(n+1)");
        let (a5, p) = setup(Family::A, 5, &[1, 2, 4, 5]);
        let l = ehrhart_polynomial(&a5, &p, &Weight(vec![0, 0, 1, 0, 0])).unwrap();
        assert_eq!(l.degree(), 9);
        assert_eq!(l.count(1), BigInt::from(20));
    }

    #[test]
    fn ehrhart_agrees_with_kostant_on_dilates() {
        let (b3, p) = setup(Family::B, 3, &[2]);
        let lam = Weight(vec![1, 0, 3]);
        let l = ehrhart_polynomial(&b3, &p, &lam).unwrap();
        assert_eq!(l.count(0), BigInt::from(1));
        for n in 1..=3 {
            assert_eq!(l.count(n), kostant_dimension(&b3, &p, &lam.scale(n)).unwrap());
            assert_eq!(l.count(n), weyl_dimension(&b3, &lam.scale(n)).unwrap());
        }
    }

    #[test]
    fn interior_count_examples() {
        let (a2, p) = setup(Family::A, 2, &[]);
        assert_eq!(interior_count(&a2, &p, &Weight(vec![2, 2]), 1).unwrap(), BigInt::from(1));
        assert_eq!(interior_count(&a2, &p, &Weight(vec![1, 2]), 1).unwrap(), BigInt::from(0));
        assert_eq!(interior_count(&a2, &p, &Weight(vec![2, 2]), 2).unwrap(), BigInt::from(27));
        assert!(interior_count(&a2, &p, &Weight(vec![2, 2]), 0).is_err());
    }

    #[test]
    fn hibi_examples() {
        let (a2, p) = setup(Family::A, 2, &[]);
        assert!(hibi_identity_holds(&a2, &p, &Weight(vec![2, 2])).unwrap());
        assert!(!hibi_identity_holds(&a2, &p, &Weight(vec![1, 1])).unwrap());
        let (b2, p) = setup(Family::B, 2, &[1]);
        assert!(hibi_identity_holds(&b2, &p, &Weight(vec![0, 4])).unwrap());
    }

    #[test]
    fn classify_examples() {
        let (a5, p) = setup(Family::A, 5, &[1, 2, 4, 5]);
        let r = classify_weight(&a5, &p, &Weight(vec![0, 0, 6, 0, 0])).unwrap();
        assert!(r.is_anticanonical && r.hibi_holds && r.consistent);
        assert_eq!(r.interior_count_at_1, BigInt::from(1));

        let (a2, p) = setup(Family::A, 2, &[]);
        let r = classify_weight(&a2, &p, &Weight(vec![2, 2])).unwrap();
        assert!(r.is_anticanonical && r.consistent);
        let r = classify_weight(&a2, &p, &Weight(vec![1, 2])).unwrap();
        assert!(!r.is_anticanonical && r.consistent);
        assert!(r.interior_count_at_1.is_zero());

        assert!(classify_weight(&a2, &p, &Weight(vec![0, 2])).is_err());
    }
}
