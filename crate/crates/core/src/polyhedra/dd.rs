//! Double description method for pointed polyhedral cones.
//!
//! Rows are inserted one at a time in the order given. Adjacency of two rays is decided
//! combinatorially: their common zero set must not be contained in the zero set of any
//! third ray. Zero sets are sorted lists of row insertion indices, and a per-step
//! inverted index keeps the containment test proportional to the rays that can
//! actually dominate a pair.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{int_dot, make_primitive, rref, Rat};

struct Ray {
    v: Vec<BigInt>,
    /// Insertion indices of processed rows on which the ray vanishes, ascending.
    zeros: Vec<u32>,
}

/// Greedily picks `m` linearly independent rows (by index), if they exist.
pub(crate) fn independent_rows(rows: &[Vec<BigInt>], m: usize) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<Rat>)> = Vec::with_capacity(m); // (pivot col, row with 1 at pivot)
    let mut chosen = Vec::with_capacity(m);
    for (idx, row) in rows.iter().enumerate() {
        if chosen.len() == m {
            break;
        }
        let mut v: Vec<Rat> = row.iter().map(|x| Rat::from_integer(x.clone())).collect();
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].recip();
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
            // keep earlier basis rows reduced at the new pivot
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&v) {
                        *x -= &f * y;
                    }
                }
            }
            basis.push((p, v));
            chosen.push(idx);
        }
    }
    chosen
}

/// Column indices of a maximal independent column set, scanning left to right.
pub(crate) fn independent_columns(rows: &[Vec<BigInt>], m: usize) -> Vec<usize> {
    let t: Vec<Vec<Rat>> = (0..m).map(|c| rows.iter().map(|r| Rat::from_integer(r[c].clone())).collect()).collect();
    // Greedy on the transposed matrix keeps the leftmost columns.
    let mut chosen = Vec::new();
    let mut acc: Vec<Vec<Rat>> = Vec::new();
    for (c, col) in t.into_iter().enumerate() {
        acc.push(col);
        if rref(acc.clone()).1.len() == acc.len() {
            chosen.push(c);
        } else {
            acc.pop();
        }
    }
    chosen
}

/// Extreme rays of `{y ∈ R^m : row·y ≥ 0 for all rows}`. The rows must have rank `m`
/// (the cone is pointed). Rays are primitive integer vectors in a deterministic order.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], m: usize) -> Vec<Vec<BigInt>> {
    let init = independent_rows(rows, m);
    assert_eq!(init.len(), m, "double description needs a pointed cone");

    // Columns of B^{-1} are the initial rays: row_init[k]·ray_j = δ_kj.
    let mut aug: Vec<Vec<Rat>> = init
        .iter()
        .enumerate()
        .map(|(k, &r)| {
            let mut row: Vec<Rat> = rows[r].iter().map(|x| Rat::from_integer(x.clone())).collect();
            row.extend((0..m).map(|j| Rat::from_integer(BigInt::from((j == k) as i64))));
            row
        })
        .collect();
    aug = rref(aug).0;
    let mut rays: Vec<Ray> = (0..m)
        .map(|j| {
            let col: Vec<Rat> = aug.iter().map(|row| row[m + j].clone()).collect();
            let l = crate::arith::lcm_denoms(&col);
            let mut v: Vec<BigInt> = col.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
            make_primitive(&mut v);
            let zeros = (0..m as u32).filter(|&k| k != j as u32).collect();
            Ray { v, zeros }
        })
        .collect();

    let mut order: Vec<usize> = init.clone();
    let in_init: std::collections::HashSet<usize> = init.iter().copied().collect();
    order.extend((0..rows.len()).filter(|i| !in_init.contains(i)));

    for (step, &ri) in order.iter().enumerate().skip(m) {
        let step = step as u32;
        let row = &rows[ri];
        let vals: Vec<BigInt> = rays.iter().map(|r| int_dot(row, &r.v)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros.push(step);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

        // inverted index: row step -> rays vanishing on it
        let mut by_row: Vec<Vec<u32>> = vec![Vec::new(); step as usize];
        for (i, r) in rays.iter().enumerate() {
            for &z in &r.zeros {
                by_row[z as usize].push(i as u32);
            }
        }

        let mut created: Vec<Ray> = Vec::new();
        let need = m.saturating_sub(2);
        for &p in &pos {
            for &n in &neg {
                let common = intersect(&rays[p].zeros, &rays[n].zeros);
                if common.len() < need {
                    continue;
                }
                if !adjacent(&rays, &by_row, &common, p, n) {
                    continue;
                }
                let mut v: Vec<BigInt> =
                    rays[n].v.iter().zip(&rays[p].v).map(|(xn, xp)| &vals[p] * xn - &vals[n] * xp).collect();
                make_primitive(&mut v);
                let mut zeros = common;
                zeros.push(step);
                created.push(Ray { v, zeros });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (r, v) in rays.into_iter().zip(&vals) {
            if v.is_positive() {
                next.push(r);
            } else if v.is_zero() {
                let mut r = r;
                r.zeros.push(step);
                next.push(r);
            }
        }
        next.extend(created);
        rays = next;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    out
}

fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn adjacent(rays: &[Ray], by_row: &[Vec<u32>], common: &[u32], p: usize, n: usize) -> bool {
    if common.is_empty() {
        // Only possible in dimension ≤ 2, where every pair of distinct rays is adjacent
        // unless a third ray exists at all.
        return rays.len() == 2;
    }
    let candidates = common.iter().map(|&z| &by_row[z as usize]).min_by_key(|l| l.len()).expect("nonempty");
    !candidates.iter().any(|&t| {
        let t = t as usize;
        t != p && t != n && is_subset(common, &rays[t].zeros)
    })
}
