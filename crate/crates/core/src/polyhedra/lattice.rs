//! Lattice point enumeration by coordinate recursion.
//!
//! A polytope is first moved into a lattice chart of its affine hull, where it is
//! full-dimensional. For each prefix length `i` the projection onto the first `i`
//! coordinates is a polytope whose facets bound coordinate `i` exactly for every
//! feasible prefix, so the recursion never enters an empty slice except by rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::Polytope;
use crate::arith::{solve_columns, Rat};

/// `a·x ≤ b` with integer data, valid on integer points.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bound {
    a: Vec<i128>,
    b: i128,
    b_strict: i128,
}

/// The affine lattice `origin + span_Z(basis)` of integer points of `aff(P)`, together
/// with `P` expressed in those coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeChart {
    origin: Vec<BigInt>,
    basis: Vec<Vec<BigInt>>,
    poly: Polytope,
    /// `levels[i]` bounds coordinate `i` given coordinates `0..i`.
    levels: Vec<Vec<Bound>>,
}

fn to_i128(x: &BigInt) -> i128 {
    x.to_i128().expect("lattice enumeration coordinates exceed 128 bits")
}

impl LatticeChart {
    pub(super) fn new(p: &Polytope) -> Option<LatticeChart> {
        let aff = p.affine_lattice()?;
        let k = aff.basis.len();
        let cols: Vec<Vec<Rat>> =
            aff.basis.iter().map(|c| c.iter().map(|x| Rat::from_integer(x.clone())).collect()).collect();
        let chart_vertices: Vec<Vec<Rat>> = p
            .vertices
            .iter()
            .map(|v| {
                let rhs: Vec<Rat> = v.iter().zip(&aff.origin).map(|(x, o)| x - Rat::from_integer(o.clone())).collect();
                if k == 0 {
                    Vec::new()
                } else {
                    solve_columns(&cols, &rhs).expect("vertex lies in the affine hull")
                }
            })
            .collect();
        let poly = Polytope::from_points(&chart_vertices).expect("nonempty vertex set");
        let levels = (0..k).map(|i| level_bounds(&poly, i)).collect();
        Some(LatticeChart { origin: aff.origin, basis: aff.basis, poly, levels })
    }

    /// Dimension of the chart, i.e. of the affine hull.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn origin(&self) -> &[BigInt] {
        &self.origin
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// The polytope in chart coordinates (full-dimensional).
    pub fn polytope(&self) -> &Polytope {
        &self.poly
    }

    pub fn to_ambient(&self, y: &[BigInt]) -> Vec<BigInt> {
        let mut x = self.origin.clone();
        for (c, b) in y.iter().zip(&self.basis) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += c * bi;
            }
        }
        x
    }

    /// Lattice points in chart coordinates, sorted; `strict` keeps only interior points.
    /// With a `limit`, returns the lexicographically first `limit` points.
    pub fn chart_points(&self, strict: bool, limit: Option<usize>) -> Vec<Vec<BigInt>> {
        let k = self.rank();
        if k == 0 {
            return if strict { vec![] } else { vec![vec![]] };
        }
        let mut out: Vec<Vec<i128>> = match limit {
            Some(lim) => {
                let mut acc = Vec::new();
                let mut prefix = Vec::with_capacity(k);
                self.walk(&mut prefix, strict, &mut |p| {
                    acc.push(p.to_vec());
                    acc.len() < lim
                });
                acc
            }
            None => {
                let (lo, hi) = match self.range(&[], strict) {
                    Some(r) => r,
                    None => return vec![],
                };
                (lo..=hi)
                    .into_par_iter()
                    .flat_map_iter(|x0| {
                        let mut acc = Vec::new();
                        let mut prefix = vec![x0];
                        self.walk(&mut prefix, strict, &mut |p| {
                            acc.push(p.to_vec());
                            true
                        });
                        acc
                    })
                    .collect()
            }
        };
        out.sort();
        out.into_iter().map(|p| p.into_iter().map(BigInt::from).collect()).collect()
    }

    /// Lattice points mapped back to ambient coordinates, sorted.
    pub fn points(&self, strict: bool, limit: Option<usize>) -> Vec<Vec<BigInt>> {
        let mut pts: Vec<Vec<BigInt>> = self.chart_points(strict, limit).iter().map(|y| self.to_ambient(y)).collect();
        pts.sort();
        pts
    }

    /// Number of lattice points (relative interior points with `strict`).
    pub fn count(&self, strict: bool) -> u64 {
        let k = self.rank();
        if k == 0 {
            return u64::from(!strict);
        }
        let Some((lo, hi)) = self.range(&[], strict) else { return 0 };
        (lo..=hi)
            .into_par_iter()
            .map(|x0| {
                if k == 1 {
                    return 1;
                }
                let mut prefix = vec![x0];
                self.count_from(&mut prefix, strict)
            })
            .sum()
    }

    /// Integer range of coordinate `prefix.len()` given the prefix.
    fn range(&self, prefix: &[i128], strict: bool) -> Option<(i128, i128)> {
        let i = prefix.len();
        let last = i + 1 == self.rank();
        let mut lo = i128::MIN;
        let mut hi = i128::MAX;
        for bd in &self.levels[i] {
            let rest: i128 = bd.a[..i].iter().zip(prefix).map(|(a, x)| a * x).sum();
            let b = if strict && last { bd.b_strict } else { bd.b };
            let slack = b - rest;
            let c = bd.a[i];
            if c == 0 {
                if slack < 0 {
                    return None;
                }
            } else if c > 0 {
                hi = hi.min(Integer::div_floor(&slack, &c));
            } else {
                lo = lo.max(Integer::div_ceil(&slack, &c));
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    fn walk(&self, prefix: &mut Vec<i128>, strict: bool, emit: &mut dyn FnMut(&[i128]) -> bool) -> bool {
        if prefix.len() == self.rank() {
            return emit(prefix);
        }
        let Some((lo, hi)) = self.range(prefix, strict) else { return true };
        for x in lo..=hi {
            prefix.push(x);
            let go_on = self.walk(prefix, strict, emit);
            prefix.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    fn count_from(&self, prefix: &mut Vec<i128>, strict: bool) -> u64 {
        let Some((lo, hi)) = self.range(prefix, strict) else { return 0 };
        if prefix.len() + 1 == self.rank() {
            return (hi - lo + 1) as u64;
        }
        let mut total = 0;
        for x in lo..=hi {
            prefix.push(x);
            total += self.count_from(prefix, strict);
            prefix.pop();
        }
        total
    }
}

/// Facets of the projection of a full-dimensional polytope onto coordinates `0..=i`.
fn level_bounds(p: &Polytope, i: usize) -> Vec<Bound> {
    let k = p.dim_ambient();
    let projected;
    let proj = if i + 1 == k {
        p
    } else {
        let pts: Vec<Vec<Rat>> = p.vertices().iter().map(|v| v[..=i].to_vec()).collect();
        projected = Polytope::from_points(&pts).expect("nonempty");
        &projected
    };
    debug_assert!(proj.is_full_dimensional());
    proj.facets()
        .iter()
        .map(|f| {
            // integral a on integral x: a·x ≤ b ⇔ a·x ≤ ⌊b⌋, a·x < b ⇔ a·x ≤ ⌈b⌉ − 1
            let fl = f.b.floor().to_integer();
            let ce = f.b.ceil().to_integer();
            Bound { a: f.a.iter().map(to_i128).collect(), b: to_i128(&fl), b_strict: to_i128(&(ce - 1)) }
        })
        .filter(|b| !b.a.iter().all(Zero::is_zero))
        .collect()
}
