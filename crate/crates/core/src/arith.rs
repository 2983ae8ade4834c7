//! Exact arithmetic helpers shared by the algebraic and polyhedral layers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(Rat::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Canonical string form: `"p"` for integers, `"p/q"` (q > 0, reduced) otherwise.
pub fn format_rational(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

pub fn gcd_vec(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content of an integer vector. Zero vectors are returned unchanged.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = gcd_vec(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

pub fn lcm_denoms(v: &[Rat]) -> BigInt {
    v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
}

/// Smallest positive integer multiple of `v` with content 1, together with the scale used.
pub fn primitive_multiple(v: &[Rat]) -> (Vec<BigInt>, Rat) {
    let l = lcm_denoms(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = gcd_vec(&ints);
    if g.is_zero() {
        return (ints, Rat::one());
    }
    let out = ints.iter().map(|x| x / &g).collect();
    (out, Rat::new(l, g))
}

pub fn is_integral(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vec<Rat>>) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    rref(rows.to_vec()).1.len()
}

/// Basis of the right kernel `{x : rows·x = 0}` in `ncols` variables.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(rows.to_vec());
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Integer points of an affine subspace `{x ∈ Z^d : E x = f}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLattice {
    pub origin: Vec<BigInt>,
    /// Columns spanning the lattice `ker E ∩ Z^d`, one `Vec` per basis vector.
    pub basis: Vec<Vec<BigInt>>,
}

/// Solves `E x = f` over the integers by unimodular column reduction.
/// Returns `None` when the system has no integer solution.
pub fn integer_affine_solutions(e: &[Vec<BigInt>], f: &[Rat], d: usize) -> Option<AffineLattice> {
    if f.iter().any(|x| !x.is_integer()) {
        return None;
    }
    let f: Vec<BigInt> = f.iter().map(|x| x.to_integer()).collect();
    let mut h: Vec<Vec<BigInt>> = e.to_vec();
    // u is stored column-major: u[c] is column c.
    let mut u: Vec<Vec<BigInt>> =
        (0..d).map(|c| (0..d).map(|r| if r == c { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let swap_cols = |h: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in h.iter_mut() {
            row.swap(a, b);
        }
        u.swap(a, b);
    };
    let mut p = 0;
    let mut row_pivot: Vec<Option<usize>> = vec![None; h.len()];
    for i in 0..h.len() {
        if p == d {
            break;
        }
        loop {
            let best = (p..d).filter(|&c| !h[i][c].is_zero()).min_by(|&a, &b| h[i][a].abs().cmp(&h[i][b].abs()));
            let Some(c) = best else { break };
            swap_cols(&mut h, &mut u, p, c);
            let mut done = true;
            for c in p + 1..d {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[i][p]);
                for row in h.iter_mut() {
                    let t = &row[p] * &q;
                    row[c] -= t;
                }
                let col_p = u[p].clone();
                for (x, y) in u[c].iter_mut().zip(&col_p) {
                    *x -= y * &q;
                }
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !h[i][p].is_zero() {
            if h[i][p].is_negative() {
                for row in h.iter_mut() {
                    row[p] = -row[p].clone();
                }
                for x in u[p].iter_mut() {
                    *x = -x.clone();
                }
            }
            row_pivot[i] = Some(p);
            p += 1;
        }
    }
    // Forward substitution on the lower echelon H.
    let mut z = vec![BigInt::zero(); d];
    for (i, row) in h.iter().enumerate() {
        let limit = row_pivot[i].unwrap_or(p);
        let mut s = f[i].clone();
        for c in 0..limit {
            s -= &row[c] * &z[c];
        }
        match row_pivot[i] {
            Some(c) => {
                let (q, r) = s.div_rem(&row[c]);
                if !r.is_zero() {
                    return None;
                }
                z[c] = q;
            }
            None => {
                if !s.is_zero() {
                    return None;
                }
            }
        }
    }
    let origin = (0..d).map(|r| (0..p).fold(BigInt::zero(), |acc, c| acc + &u[c][r] * &z[c])).collect();
    Some(AffineLattice { origin, basis: u[p..].to_vec() })
}

/// Solves `A x = b` for a matrix with full column rank, given as columns.
/// Returns `None` if the system is inconsistent.
pub fn solve_columns(cols: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let k = cols.len();
    let rows: Vec<Vec<Rat>> = (0..b.len())
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(rows);
    if pivots.contains(&k) || pivots.len() != k {
        return None;
    }
    Some(red.iter().map(|row| row[k].clone()).collect())
}
