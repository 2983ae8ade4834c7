//! Lakshmibai–Seshadri paths and Littelmann's root operators.
//!
//! A path is stored as a list of straight segments `(direction, length)`; directions
//! are integral weights in fundamental coordinates and lengths are positive rationals
//! summing to 1. Consecutive segments never share a direction, which makes the
//! representation canonical and equality of paths structural.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::Rat;
use crate::charformula::weyl_dimension;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LSPath {
    segments: Vec<(Vec<i64>, Rational64)>,
}

impl LSPath {
    /// The straight line from 0 to `lam`.
    pub fn straight(lam: &Weight) -> LSPath {
        let mut p = LSPath { segments: vec![(lam.coeffs().to_vec(), Rational64::one())] };
        p.canonicalize();
        p
    }

    fn canonicalize(&mut self) {
        let mut out: Vec<(Vec<i64>, Rational64)> = Vec::with_capacity(self.segments.len());
        for (d, l) in self.segments.drain(..) {
            if l.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some((pd, pl)) if *pd == d => *pl += l,
                _ => out.push((d, l)),
            }
        }
        self.segments = out;
    }

    pub fn segments(&self) -> &[(Vec<i64>, Rational64)] {
        &self.segments
    }

    /// Times `0 = t_0 < … < t_k = 1` and the points `π(t_j)` at which the path turns.
    pub fn turning_points(&self) -> Vec<(Rat, Vec<Rat>)> {
        let r = |q: Rational64| Rat::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()));
        let dim = self.segments.first().map_or(0, |s| s.0.len());
        let mut t = Rational64::zero();
        let mut pos = vec![Rational64::zero(); dim];
        let mut out = vec![(r(t), pos.iter().map(|&x| r(x)).collect())];
        for (d, l) in &self.segments {
            t += l;
            for (p, x) in pos.iter_mut().zip(d) {
                *p += l * x;
            }
            out.push((r(t), pos.iter().map(|&x| r(x)).collect()));
        }
        out
    }

    /// Endpoint `π(1)`.
    pub fn weight(&self, rank: usize) -> Weight {
        let mut w = vec![Rational64::zero(); rank];
        for (d, l) in &self.segments {
            for (x, c) in w.iter_mut().zip(d) {
                *x += l * c;
            }
        }
        Weight::new(
            w.iter()
                .map(|x| {
                    assert!(x.is_integer(), "path endpoint is not integral");
                    x.to_integer()
                })
                .collect(),
        )
    }

    /// Values of `h_i(t) = ⟨π(t), α_i^∨⟩` at the segment boundaries.
    fn heights(&self, i: usize) -> Vec<Rational64> {
        let mut h = Vec::with_capacity(self.segments.len() + 1);
        let mut cur = Rational64::zero();
        h.push(cur);
        for (d, l) in &self.segments {
            cur += l * d[i];
            h.push(cur);
        }
        h
    }

    /// `ε_i`: the number of times `e_i` can be applied.
    pub fn epsilon(&self, i: usize) -> i64 {
        let q = self.heights(i).into_iter().min().expect("nonempty");
        (-q).to_integer()
    }

    /// `φ_i`: the number of times `f_i` can be applied.
    pub fn phi(&self, i: usize) -> i64 {
        let h = self.heights(i);
        let q = *h.iter().min().expect("nonempty");
        (h[h.len() - 1] - q).to_integer()
    }

    /// Applies `s_i` to the directions of the stretch of path described by `cut`.
    fn reflect_range(&self, rs: &RootSystem, i: usize, cut: Cut) -> LSPath {
        let refl = |d: &Vec<i64>| {
            let mut d = d.clone();
            rs.reflect_weight_in_place(i, &mut d);
            d
        };
        let mut segs = Vec::with_capacity(self.segments.len() + 1);
        match cut {
            Cut::EndsInside { start, seg, len } => {
                for (k, (d, l)) in self.segments.iter().enumerate() {
                    if k < start || k > seg {
                        segs.push((d.clone(), *l));
                    } else if k < seg {
                        segs.push((refl(d), *l));
                    } else {
                        segs.push((refl(d), len));
                        segs.push((d.clone(), l - len));
                    }
                }
            }
            Cut::StartsInside { seg, len, end } => {
                for (k, (d, l)) in self.segments.iter().enumerate() {
                    if k < seg || k >= end {
                        segs.push((d.clone(), *l));
                    } else if k > seg {
                        segs.push((refl(d), *l));
                    } else {
                        segs.push((d.clone(), len));
                        segs.push((refl(d), l - len));
                    }
                }
            }
        }
        let mut p = LSPath { segments: segs };
        p.canonicalize();
        p
    }

    /// Root operator `f_i` (0-based), or `None` if it kills the path.
    pub fn f(&self, rs: &RootSystem, i: usize) -> Option<LSPath> {
        let h = self.heights(i);
        let q = *h.iter().min().expect("nonempty");
        if h[h.len() - 1] - q < Rational64::one() {
            return None;
        }
        let start = h.iter().rposition(|&x| x == q).expect("minimum attained");
        let target = q + 1;
        let seg = (start..self.segments.len()).find(|&s| h[s + 1] >= target).expect("reaches q+1");
        let slope = self.segments[seg].0[i];
        let len = (target - h[seg]) / slope;
        Some(self.reflect_range(rs, i, Cut::EndsInside { start, seg, len }))
    }

    /// Root operator `e_i` (0-based), or `None` if it kills the path.
    pub fn e(&self, rs: &RootSystem, i: usize) -> Option<LSPath> {
        let h = self.heights(i);
        let q = *h.iter().min().expect("nonempty");
        if q > -Rational64::one() {
            return None;
        }
        let end = h.iter().position(|&x| x == q).expect("minimum attained");
        let target = q + 1;
        let seg = (0..end).rev().find(|&s| h[s] >= target).expect("starts at 0 ≥ q+1");
        let slope = self.segments[seg].0[i];
        let len = (target - h[seg]) / slope;
        Some(self.reflect_range(rs, i, Cut::StartsInside { seg, len, end }))
    }

    /// String of the path along a word (0-based letters): `a_1 = ε_{i_1}(b)`, then
    /// `a_2 = ε_{i_2}(e_{i_1}^{a_1} b)`, and so on.
    pub fn string(&self, rs: &RootSystem, word: &[usize]) -> Vec<i64> {
        let mut p = self.clone();
        word.iter()
            .map(|&i| {
                let a = p.epsilon(i);
                for _ in 0..a {
                    p = p.e(rs, i).expect("ε counts applicable raising operators");
                }
                a
            })
            .collect()
    }
}

enum Cut {
    /// Reflect segments `start..seg` and the first `len` of segment `seg`.
    EndsInside { start: usize, seg: usize, len: Rational64 },
    /// Reflect the tail of segment `seg` after `len` and segments `seg+1..end`.
    StartsInside { seg: usize, len: Rational64, end: usize },
}

/// Default upper bound on the number of crystal elements generated.
pub const DEFAULT_CRYSTAL_CAP: usize = 200_000;

/// The crystal `B(λ)`: the closure of the straight path under all `f_i`, sorted.
pub fn path_crystal(rs: &RootSystem, lam: &Weight, cap: usize) -> Result<Vec<LSPath>> {
    let dim = weyl_dimension(rs, lam)?;
    let size = dim.to_usize().filter(|&s| s <= cap);
    let Some(size) = size else {
        return Err(Error::CrystalTooLarge { size: dim.to_string(), cap });
    };
    let start = LSPath::straight(lam);
    let mut seen: HashSet<LSPath> = HashSet::with_capacity(size);
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let children: Vec<LSPath> =
            frontier.par_iter().flat_map_iter(|p| (0..rs.rank()).filter_map(move |i| p.f(rs, i))).collect();
        frontier = children.into_iter().filter(|c| seen.insert(c.clone())).collect();
        assert!(seen.len() <= size, "path crystal exceeds the Weyl dimension {size}");
    }
    assert_eq!(seen.len(), size, "path crystal size differs from the Weyl dimension");
    let mut out: Vec<LSPath> = seen.into_iter().collect();
    out.par_sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn sl2_fundamental() {
        let a1 = RootSystem::of(Family::A, 1).unwrap();
        let c = path_crystal(&a1, &Weight(vec![1]), DEFAULT_CRYSTAL_CAP).unwrap();
        assert_eq!(c.len(), 2);
        let lowest = LSPath::straight(&Weight(vec![-1]));
        assert!(c.contains(&lowest));
    }

    #[test]
    fn crystal_sizes() {
        let a2 = RootSystem::of(Family::A, 2).unwrap();
        assert_eq!(path_crystal(&a2, a2.rho(), DEFAULT_CRYSTAL_CAP).unwrap().len(), 8);
        let g2 = RootSystem::of(Family::G, 2).unwrap();
        assert_eq!(path_crystal(&g2, &g2.rho().scale(2), DEFAULT_CRYSTAL_CAP).unwrap().len(), 729);
        let b3 = RootSystem::of(Family::B, 3).unwrap();
        assert_eq!(path_crystal(&b3, &Weight(vec![0, 1, 1]), DEFAULT_CRYSTAL_CAP).unwrap().len(), 112);
    }

    #[test]
    fn cap_is_enforced() {
        let g2 = RootSystem::of(Family::G, 2).unwrap();
        let err = path_crystal(&g2, &g2.rho().scale(2), 100).unwrap_err();
        assert_eq!(err, Error::CrystalTooLarge { size: "729".into(), cap: 100 });
    }

    #[test]
    fn operators_are_inverse_and_respect_weights() {
        let b2 = RootSystem::of(Family::B, 2).unwrap();
        let lam = Weight(vec![1, 1]);
        for p in path_crystal(&b2, &lam, DEFAULT_CRYSTAL_CAP).unwrap() {
            let wt = p.weight(2);
            for i in 0..2 {
                assert_eq!(p.phi(i) - p.epsilon(i), wt.coeffs()[i]);
                if let Some(q) = p.f(&b2, i) {
                    assert_eq!(q.e(&b2, i).as_ref(), Some(&p));
                    let mut w = wt.coeffs().to_vec();
                    for (k, x) in w.iter_mut().enumerate() {
                        *x -= b2.cartan_matrix()[k][i];
                    }
                    assert_eq!(q.weight(2).coeffs(), w.as_slice());
                }
            }
        }
    }

    #[test]
    fn turning_points_end_at_the_weight() {
        let a2 = RootSystem::of(Family::A, 2).unwrap();
        let p = LSPath::straight(a2.rho()).f(&a2, 0).unwrap().f(&a2, 1).unwrap();
        let tp = p.turning_points();
        assert_eq!(tp[0].0, Rat::zero());
        assert_eq!(tp.last().unwrap().0, Rat::one());
        let end: Vec<Rat> = p.weight(2).coeffs().iter().map(|&x| Rat::from_integer(x.into())).collect();
        assert_eq!(tp.last().unwrap().1, end);
    }
}
