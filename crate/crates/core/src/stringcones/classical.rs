//! Gelfand–Tsetlin and FFLV polytopes of type `A_n`.

use num_traits::Zero;

use crate::arith::{rat, Rat};
use crate::error::{Error, Result};
use crate::polyhedra::{HalfSpace, Polytope};
use crate::rootsys::{Family, RootSystem, Weight};

fn require_type_a(rs: &RootSystem, lam: &Weight) -> Result<()> {
    if rs.cartan_type().family() != Family::A {
        return Err(Error::Unsupported(format!("{} is not of type A", rs.cartan_type())));
    }
    rs.check_weight(lam)?;
    if !lam.is_dominant() {
        return Err(Error::invalid(format!("weight {lam} is not dominant")));
    }
    Ok(())
}

/// `a·x ≤ b` over `dim` variables given sparse integer coefficients.
fn sparse(dim: usize, terms: &[(usize, i64)], b: i64) -> HalfSpace {
    let mut a = vec![Rat::zero(); dim];
    for &(k, c) in terms {
        a[k] += rat(c);
    }
    HalfSpace::new(a, rat(b)).expect("nonzero normal")
}

/// Gelfand–Tsetlin patterns with top row `μ_j = λ_j + … + λ_n` (and `μ_{n+1} = 0`).
/// Coordinates list the rows below the top one, row by row, left to right.
pub fn gt_polytope(rs: &RootSystem, lam: &Weight) -> Result<Polytope> {
    require_type_a(rs, lam)?;
    let n = rs.rank();
    let l = lam.coeffs();
    let top: Vec<i64> = (0..=n).map(|j| l[j.min(n)..].iter().sum()).collect();
    // row r (1-based, r = 1..=n) has n+1-r entries
    let mut index = vec![vec![]; n + 1];
    let mut next = 0;
    for (r, row) in index.iter_mut().enumerate().skip(1) {
        for _ in 0..n + 1 - r {
            row.push(next);
            next += 1;
        }
    }
    let dim = next;
    let mut hs = Vec::new();
    for r in 1..=n {
        for j in 0..n + 1 - r {
            let x = index[r][j];
            // x_{r-1, j} ≥ x_{r, j} ≥ x_{r-1, j+1}
            if r == 1 {
                hs.push(sparse(dim, &[(x, 1)], top[j]));
                hs.push(sparse(dim, &[(x, -1)], -top[j + 1]));
            } else {
                hs.push(sparse(dim, &[(x, 1), (index[r - 1][j], -1)], 0));
                hs.push(sparse(dim, &[(x, -1), (index[r - 1][j + 1], 1)], 0));
            }
        }
    }
    Polytope::from_halfspaces(dim, &hs)
}

/// FFLV polytope: `s_β ≥ 0` for the positive roots `α_{p,q} = α_p + … + α_q`, and
/// `Σ_{β ∈ D} s_β ≤ λ_i + … + λ_j` for every Dyck path `D` from `α_i` to `α_j`.
/// Coordinates are ordered by `(p, q)` lexicographically.
pub fn fflv_polytope(rs: &RootSystem, lam: &Weight) -> Result<Polytope> {
    require_type_a(rs, lam)?;
    let n = rs.rank();
    let l = lam.coeffs();
    let mut index = vec![vec![usize::MAX; n]; n];
    let mut dim = 0;
    for (p, row) in index.iter_mut().enumerate() {
        for slot in &mut row[p..] {
            *slot = dim;
            dim += 1;
        }
    }
    let mut hs: Vec<HalfSpace> = (0..dim).map(|k| sparse(dim, &[(k, -1)], 0)).collect();
    for i in 0..n {
        for j in i..n {
            let bound: i64 = l[i..=j].iter().sum();
            let mut path = vec![(i, i)];
            dyck_paths((i, i), j, &mut path, &mut |p| {
                let terms: Vec<(usize, i64)> = p.iter().map(|&(a, b)| (index[a][b], 1)).collect();
                hs.push(sparse(dim, &terms, bound));
            });
        }
    }
    hs.sort();
    hs.dedup();
    Polytope::from_halfspaces(dim, &hs)
}

type PathSink<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

fn dyck_paths(at: (usize, usize), end: usize, path: &mut Vec<(usize, usize)>, emit: &mut PathSink<'_>) {
    let (p, q) = at;
    if p == end && q == end {
        emit(path);
        return;
    }
    if p < q {
        path.push((p + 1, q));
        dyck_paths((p + 1, q), end, path, emit);
        path.pop();
    }
    if q < end {
        path.push((p, q + 1));
        dyck_paths((p, q + 1), end, path, emit);
        path.pop();
    }
}
