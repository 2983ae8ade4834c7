//! String polytopes `Q_w(λ)` for reduced words `w` of the longest Weyl group element.
//!
//! Two constructions are provided. The hull method enumerates the crystal `B(nλ)` with
//! Littelmann paths, takes the convex hull of the strings and rescales by `1/n`; it works
//! in every type but only for small weights. The cone method intersects the type-`A`
//! string cone with the `λ`-inequalities and works for any weight.

mod classical;
mod cone;
mod path;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::arith::Rat;
use crate::charformula::weyl_dimension;
use crate::error::{Error, Result};
use crate::polyhedra::Polytope;
use crate::rootsys::{CartanType, Family, RootSystem, Weight};

pub use classical::{fflv_polytope, gt_polytope};
pub use cone::{gp_string_cone, lambda_inequalities, truncate_cone, StringCone};
pub use path::{path_crystal, LSPath, DEFAULT_CRYSTAL_CAP};

/// A reduced word `i_1 … i_N` for the longest element `w_0` (1-based letters).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    cartan_type: CartanType,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(rs: &RootSystem, letters: Vec<usize>) -> Result<ReducedWord> {
        let r = rs.rank();
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > r) {
            return Err(Error::invalid(format!("letter {bad} is not a simple root label 1..={r}")));
        }
        let n = rs.num_positive_roots();
        if letters.len() != n {
            return Err(Error::invalid(format!(
                "a reduced word for w0 in {} has {n} letters, got {}",
                rs.cartan_type(),
                letters.len()
            )));
        }
        // ℓ(s_i u) > ℓ(u) iff ⟨uρ, α_i^∨⟩ > 0
        let mut mu = rs.rho().coeffs().to_vec();
        for (k, &l) in letters.iter().enumerate().rev() {
            if mu[l - 1] <= 0 {
                return Err(Error::invalid(format!("word {} is not reduced at position {}", join(&letters), k + 1)));
            }
            rs.reflect_weight_in_place(l - 1, &mut mu);
        }
        Ok(ReducedWord { cartan_type: rs.cartan_type(), letters })
    }

    /// Parses a comma-separated list such as `1,2,1`.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<ReducedWord> {
        let letters = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad letter {t:?} in word"))))
            .collect::<Result<Vec<_>>>()?;
        ReducedWord::new(rs, letters)
    }

    /// The word produced by greedy descent in the root system.
    pub fn default_for(rs: &RootSystem) -> ReducedWord {
        ReducedWord::new(rs, rs.longest_element_word()).expect("descent yields a reduced word")
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub(crate) fn check_system(&self, rs: &RootSystem) -> Result<()> {
        if rs.cartan_type() != self.cartan_type {
            return Err(Error::invalid(format!("word for {} used with {}", self.cartan_type, rs.cartan_type())));
        }
        Ok(())
    }

    fn zero_based(&self) -> Vec<usize> {
        self.letters.iter().map(|l| l - 1).collect()
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.letters))
    }
}

/// String of a crystal element along the word.
pub fn string_parametrization(rs: &RootSystem, b: &LSPath, word: &ReducedWord) -> Result<Vec<i64>> {
    word.check_system(rs)?;
    Ok(b.string(rs, &word.zero_based()))
}

/// All strings of `B(λ)` along the word, sorted.
pub fn strings(rs: &RootSystem, lam: &Weight, word: &ReducedWord, cap: usize) -> Result<Vec<Vec<i64>>> {
    word.check_system(rs)?;
    let crystal = path_crystal(rs, lam, cap)?;
    let w = word.zero_based();
    let mut out: Vec<Vec<i64>> = crystal.par_iter().map(|b| b.string(rs, &w)).collect();
    out.par_sort();
    let before = out.len();
    out.dedup();
    assert_eq!(before, out.len(), "two crystal elements share a string");
    Ok(out)
}

fn to_rat_points(s: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    s.iter().map(|v| v.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect()).collect()
}

/// Outcome of the hull construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullPolytope {
    pub polytope: Polytope,
    /// The dilation `n*` at which the certificate was obtained.
    pub certificate: u32,
}

/// `Q_w(λ)` as `(1/n)·conv(strings(nλ))` for the least `n ≤ n_max` passing the check:
/// the lattice points of the candidate are exactly `strings(λ)`, and for `m = 2, …, n+1`
/// its `m`-th dilate has `dim V(mλ)` lattice points.
pub fn hull_string_polytope(
    rs: &RootSystem,
    word: &ReducedWord,
    lam: &Weight,
    n_max: u32,
    cap: usize,
) -> Result<HullPolytope> {
    word.check_system(rs)?;
    rs.check_weight(lam)?;
    if !lam.is_dominant() {
        return Err(Error::invalid(format!("weight {lam} is not dominant")));
    }
    let base: Vec<Vec<BigInt>> =
        strings(rs, lam, word, cap)?.iter().map(|s| s.iter().map(|&x| BigInt::from(x)).collect()).collect();
    for n in 1..=n_max {
        let s = if n == 1 {
            base.iter().map(|v| v.iter().map(|x| x.to_i64().expect("small")).collect()).collect()
        } else {
            strings(rs, &lam.scale(n as i64), word, cap)?
        };
        let p = Polytope::from_points(&to_rat_points(&s))?.dilate(&Rat::new(BigInt::from(1), BigInt::from(n)))?;
        if certify(rs, lam, &p, &base, n)? {
            return Ok(HullPolytope { polytope: p, certificate: n });
        }
    }
    Err(Error::DenominatorBound(n_max))
}

fn certify(rs: &RootSystem, lam: &Weight, p: &Polytope, base: &[Vec<BigInt>], n: u32) -> Result<bool> {
    if p.lattice_points(false) != base {
        return Ok(false);
    }
    for m in 2..=n + 1 {
        let expected = weyl_dimension(rs, &lam.scale(m as i64))?;
        let dilated = p.dilate(&Rat::from_integer(BigInt::from(m)))?;
        if BigInt::from(dilated.count_lattice_points()) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Construction method for string polytopes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Hull,
    Cone,
    /// The cone in type `A`, the hull otherwise.
    Auto,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hull" => Ok(Method::Hull),
            "cone" => Ok(Method::Cone),
            "auto" => Ok(Method::Auto),
            _ => Err(Error::invalid(format!("unknown method {s:?}; expected hull, cone or auto"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Hull => "hull",
            Method::Cone => "cone",
            Method::Auto => "auto",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringPolytope {
    pub polytope: Polytope,
    /// `Hull` or `Cone`, never `Auto`.
    pub method: Method,
    /// Hull certificate `n*`, if the hull method was used.
    pub certificate: Option<u32>,
}

/// Default largest dilation tried by the hull method.
pub const DEFAULT_HULL_N_MAX: u32 = 4;

pub fn string_polytope(
    rs: &RootSystem,
    word: &ReducedWord,
    lam: &Weight,
    method: Method,
    n_max: u32,
    cap: usize,
) -> Result<StringPolytope> {
    let method = match method {
        Method::Auto if rs.cartan_type().family() == Family::A => Method::Cone,
        Method::Auto => Method::Hull,
        m => m,
    };
    match method {
        Method::Cone => {
            let cone = gp_string_cone(rs, word)?;
            let polytope = truncate_cone(&cone, rs, word, lam)?;
            Ok(StringPolytope { polytope, method, certificate: None })
        }
        _ => {
            let h = hull_string_polytope(rs, word, lam, n_max, cap)?;
            Ok(StringPolytope { polytope: h.polytope, method, certificate: Some(h.certificate) })
        }
    }
}

#[cfg(test)]
mod tests;
