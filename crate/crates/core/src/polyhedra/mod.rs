//! Exact rational polytopes carrying both an irredundant H-description and their vertices.
//!
//! A [`Polytope`] is canonical: its affine hull is stored as equations in reduced row
//! echelon form (each row scaled to a primitive integer vector), every facet inequality
//! vanishes on the pivot coordinates of those equations and has a primitive integral
//! normal, and facets and vertices are sorted. Two polytopes are equal exactly when
//! they are the same point set.

mod dd;
mod json;
mod lattice;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, dot, integer_affine_solutions, primitive_multiple, AffineLattice, Rat};
use crate::error::{Error, Result};

pub use lattice::LatticeChart;

/// The inequality `a·x ≤ b` with `a` a primitive integer vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    pub a: Vec<BigInt>,
    pub b: Rat,
}

impl HalfSpace {
    /// Canonicalises `a·x ≤ b`; rejects `a = 0`.
    pub fn new(a: Vec<Rat>, b: Rat) -> Result<Self> {
        if a.iter().all(Zero::is_zero) {
            return Err(Error::invalid("halfspace with zero normal"));
        }
        let (ints, scale) = primitive_multiple(&a);
        Ok(HalfSpace { a: ints, b: b * scale })
    }

    pub fn from_ints(a: &[i64], b: i64) -> Result<Self> {
        HalfSpace::new(arith::rat_vec(a), arith::rat(b))
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn normal(&self) -> Vec<Rat> {
        self.a.iter().map(|x| Rat::from_integer(x.clone())).collect()
    }

    /// `a·x` for a rational point.
    pub fn eval(&self, x: &[Rat]) -> Rat {
        self.a.iter().zip(x).fold(Rat::zero(), |acc, (a, x)| acc + x * Rat::from_integer(a.clone()))
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.eval(x) <= self.b
    }

    pub fn negated(&self) -> HalfSpace {
        HalfSpace { a: self.a.iter().map(|x| -x).collect(), b: -self.b.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    /// Affine hull as `a·x = b`, rows of an RREF basis.
    equations: Vec<HalfSpace>,
    /// Pivot column of each equation.
    pivots: Vec<usize>,
    facets: Vec<HalfSpace>,
    vertices: Vec<Vec<Rat>>,
}

/// Why [`Polytope::reflexive_after_translation`] failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotReflexive {
    NotLattice,
    InteriorCount(u64),
    DualNotLattice { translation: Vec<BigInt> },
}

impl NotReflexive {
    pub fn code(&self) -> &'static str {
        match self {
            NotReflexive::NotLattice => "not-lattice",
            NotReflexive::InteriorCount(_) => "interior-count",
            NotReflexive::DualNotLattice { .. } => "dual-not-lattice",
        }
    }
}

/// A successful reflexivity certificate: `P − translation` has a lattice polar dual.
/// When `P` is not full-dimensional the dual is expressed in the lattice chart of the
/// affine hull (see [`Polytope::lattice_chart`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflexive {
    pub translation: Vec<BigInt>,
    pub chart: LatticeChart,
    pub dual: Polytope,
}

impl Polytope {
    /// Intersection of halfspaces in `R^dim`.
    pub fn from_halfspaces(dim: usize, hs: &[HalfSpace]) -> Result<Polytope> {
        for h in hs {
            if h.dim() != dim {
                return Err(Error::invalid(format!("halfspace of dimension {} in ambient dimension {dim}", h.dim())));
            }
        }
        // Homogenise: b·t − a·x ≥ 0 together with t ≥ 0.
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(hs.len() + 1);
        let mut t_row = vec![BigInt::zero(); dim + 1];
        t_row[0] = BigInt::one();
        rows.push(t_row);
        for h in hs {
            let mut r: Vec<Rat> = Vec::with_capacity(dim + 1);
            r.push(h.b.clone());
            r.extend(h.a.iter().map(|x| Rat::from_integer(-x)));
            rows.push(primitive_multiple(&r).0);
        }
        let cols = dd::independent_columns(&rows, dim + 1);
        debug_assert_eq!(cols.first(), Some(&0));
        let lineality = cols.len() < dim + 1;
        let restricted: Vec<Vec<BigInt>> = rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        let rays = dd::extreme_rays(&restricted, cols.len());

        let mut vertices = Vec::new();
        let mut recession = false;
        for ray in &rays {
            let mut full = vec![BigInt::zero(); dim + 1];
            for (&c, x) in cols.iter().zip(ray) {
                full[c] = x.clone();
            }
            if full[0].is_positive() {
                let t = Rat::from_integer(full[0].clone());
                vertices.push(full[1..].iter().map(|x| Rat::from_integer(x.clone()) / &t).collect());
            } else {
                recession = true;
            }
        }
        if vertices.is_empty() {
            return Err(Error::Empty);
        }
        if recession || lineality {
            return Err(Error::Unbounded);
        }
        Polytope::from_points(&vertices)
    }

    /// Convex hull of finitely many rational points.
    pub fn from_points(points: &[Vec<Rat>]) -> Result<Polytope> {
        let Some(first) = points.first() else {
            return Err(Error::invalid("convex hull of an empty point set"));
        };
        let dim = first.len();
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::invalid("points of mixed dimension"));
        }
        let mut pts: Vec<Vec<Rat>> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() > 64 {
            pts = drop_midpoints(pts);
        }

        let (equations, pivots) = affine_hull(&pts);
        let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
        let k = free.len();
        if k == 0 {
            return Ok(Polytope { dim, equations, pivots, facets: vec![], vertices: pts });
        }

        let proj: Vec<Vec<Rat>> = pts.iter().map(|p| free.iter().map(|&c| p[c].clone()).collect()).collect();
        // Valid inequalities (b, a) with b − a·y ≥ 0 for every point y.
        let rows: Vec<Vec<BigInt>> = proj
            .iter()
            .map(|y| {
                let mut r = Vec::with_capacity(k + 1);
                r.push(Rat::one());
                r.extend(y.iter().map(|x| -x.clone()));
                primitive_multiple(&r).0
            })
            .collect();
        let rays = dd::extreme_rays(&rows, k + 1);
        let mut facets: Vec<HalfSpace> = rays
            .iter()
            .map(|ray| {
                let mut a = vec![Rat::zero(); dim];
                for (&c, x) in free.iter().zip(&ray[1..]) {
                    a[c] = Rat::from_integer(x.clone());
                }
                HalfSpace::new(a, Rat::from_integer(ray[0].clone())).expect("facet normal is nonzero")
            })
            .collect();
        facets.sort();

        let vertices: Vec<Vec<Rat>> = pts
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vec<Rat>> = facets
                    .iter()
                    .filter(|f| f.eval(p) == f.b)
                    .map(|f| free.iter().map(|&c| Rat::from_integer(f.a[c].clone())).collect())
                    .collect();
                tight.len() >= k && arith::rank(&tight) == k
            })
            .collect();
        Ok(Polytope { dim, equations, pivots, facets, vertices })
    }

    pub fn dim_ambient(&self) -> usize {
        self.dim
    }

    pub fn dim_affine(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn equations(&self) -> &[HalfSpace] {
        &self.equations
    }

    /// Facets followed by each equation as a pair of opposite halfspaces, sorted.
    pub fn halfspaces(&self) -> Vec<HalfSpace> {
        let mut out = self.facets.clone();
        for e in &self.equations {
            out.push(e.clone());
            out.push(e.negated());
        }
        out.sort();
        out
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|e| e.eval(x) == e.b) && self.facets.iter().all(|f| f.contains(x))
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(|v| arith::is_integral(v))
    }

    /// Vertices that are not lattice points.
    pub fn non_integral_vertices(&self) -> Vec<&Vec<Rat>> {
        self.vertices.iter().filter(|v| !arith::is_integral(v)).collect()
    }

    /// Least common multiple of all vertex denominators.
    pub fn vertex_denominator(&self) -> BigInt {
        self.vertices.iter().fold(BigInt::one(), |l, v| num_integer::Integer::lcm(&l, &arith::lcm_denoms(v)))
    }

    /// `kP + t`.
    pub fn dilate_translate(&self, k: &Rat, t: &[Rat]) -> Result<Polytope> {
        if !k.is_positive() {
            return Err(Error::invalid(format!("dilation factor must be positive, got {k}")));
        }
        if t.len() != self.dim {
            return Err(Error::invalid("translation vector has the wrong dimension"));
        }
        let move_b = |h: &HalfSpace| HalfSpace { a: h.a.clone(), b: k * &h.b + h.eval(t) };
        let mut facets: Vec<HalfSpace> = self.facets.iter().map(move_b).collect();
        facets.sort();
        let equations = self.equations.iter().map(move_b).collect();
        let mut vertices: Vec<Vec<Rat>> =
            self.vertices.iter().map(|v| v.iter().zip(t).map(|(x, s)| k * x + s).collect()).collect();
        vertices.sort();
        Ok(Polytope { dim: self.dim, equations, pivots: self.pivots.clone(), facets, vertices })
    }

    pub fn dilate(&self, k: &Rat) -> Result<Polytope> {
        self.dilate_translate(k, &vec![Rat::zero(); self.dim])
    }

    pub fn translate(&self, t: &[Rat]) -> Result<Polytope> {
        self.dilate_translate(&Rat::one(), t)
    }

    /// `{y : ⟨x, y⟩ ≤ 1 for all x ∈ P}`; requires the origin in the interior of `P`.
    pub fn polar_dual(&self) -> Result<Polytope> {
        if !self.is_full_dimensional() {
            return Err(Error::DualUndefined("polytope is not full-dimensional".into()));
        }
        if self.facets.iter().any(|f| !f.b.is_positive()) {
            return Err(Error::DualUndefined("origin is not an interior point".into()));
        }
        let pts: Vec<Vec<Rat>> =
            self.facets.iter().map(|f| f.a.iter().map(|a| Rat::from_integer(a.clone()) / &f.b).collect()).collect();
        Polytope::from_points(&pts)
    }

    /// Integer points of the affine hull, or `None` if there are none.
    pub fn affine_lattice(&self) -> Option<AffineLattice> {
        let e: Vec<Vec<BigInt>> = self.equations.iter().map(|h| h.a.clone()).collect();
        let f: Vec<Rat> = self.equations.iter().map(|h| h.b.clone()).collect();
        integer_affine_solutions(&e, &f, self.dim)
    }

    /// All lattice points in sorted order. With `strict`, only points satisfying every
    /// inequality strictly; a lower-dimensional polytope has none.
    pub fn lattice_points(&self, strict: bool) -> Vec<Vec<BigInt>> {
        if strict && !self.is_full_dimensional() {
            return vec![];
        }
        match self.lattice_chart() {
            None => vec![],
            Some(chart) => chart.points(strict, None),
        }
    }

    pub fn count_lattice_points(&self) -> u64 {
        self.lattice_chart().map_or(0, |c| c.count(false))
    }

    /// Lattice points in the relative interior (interior within the affine hull).
    pub fn relative_interior_lattice_points(&self) -> Vec<Vec<BigInt>> {
        self.lattice_chart().map_or(vec![], |c| c.points(true, None))
    }

    pub fn count_relative_interior_lattice_points(&self) -> u64 {
        self.lattice_chart().map_or(0, |c| c.count(true))
    }

    /// Coordinates on the affine lattice `aff(P) ∩ Z^d` in which `P` is full-dimensional.
    pub fn lattice_chart(&self) -> Option<LatticeChart> {
        LatticeChart::new(self)
    }

    /// Checks whether `P − p` is reflexive for its unique interior lattice point `p`.
    /// Interior points and the dual are taken relative to the affine hull.
    pub fn reflexive_after_translation(&self) -> std::result::Result<Reflexive, NotReflexive> {
        if !self.is_lattice() {
            return Err(NotReflexive::NotLattice);
        }
        let chart = self.lattice_chart().expect("lattice polytopes contain lattice points");
        let interior = chart.chart_points(true, Some(2));
        if interior.len() != 1 {
            return Err(NotReflexive::InteriorCount(chart.count(true)));
        }
        let p_chart = &interior[0];
        let translation = chart.to_ambient(p_chart);
        let shift: Vec<Rat> = p_chart.iter().map(|x| -Rat::from_integer(x.clone())).collect();
        let centred = chart.polytope().translate(&shift).expect("dimension matches");
        let dual = centred.polar_dual().expect("unique interior point is interior");
        if !dual.is_lattice() {
            return Err(NotReflexive::DualNotLattice { translation });
        }
        Ok(Reflexive { translation, chart, dual })
    }
}

/// Affine hull of a nonempty point set: canonical equations and their pivot columns.
fn affine_hull(pts: &[Vec<Rat>]) -> (Vec<HalfSpace>, Vec<usize>) {
    let dim = pts[0].len();
    let base = &pts[0];
    // Incremental echelon basis of the difference vectors.
    let mut basis: Vec<(usize, Vec<Rat>)> = Vec::new();
    for p in &pts[1..] {
        if basis.len() == dim {
            break;
        }
        let mut v: Vec<Rat> = p.iter().zip(base).map(|(x, y)| x - y).collect();
        for (piv, b) in &basis {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(piv) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[piv].recip();
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
            basis.push((piv, v));
        }
    }
    let dirs: Vec<Vec<Rat>> = basis.into_iter().map(|(_, v)| v).collect();
    let normals = if dirs.is_empty() {
        (0..dim).map(|i| (0..dim).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect()
    } else {
        arith::nullspace(&dirs, dim)
    };
    if normals.is_empty() {
        return (vec![], vec![]);
    }
    let (red, pivots) = arith::rref(normals);
    let eqs = red
        .into_iter()
        .map(|n| {
            let b = dot(&n, base);
            HalfSpace::new(n, b).expect("nonzero equation")
        })
        .collect();
    (eqs, pivots)
}

/// Removes points that are the midpoint of two other points of the set along a
/// coordinate direction or a sum/difference of two coordinate directions. Such points
/// cannot be vertices of the hull.
fn drop_midpoints(pts: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let dim = pts[0].len();
    let set: HashSet<&Vec<Rat>> = pts.iter().collect();
    let mut dirs: Vec<Vec<(usize, i64)>> = (0..dim).map(|i| vec![(i, 1)]).collect();
    for i in 0..dim {
        for j in i + 1..dim {
            dirs.push(vec![(i, 1), (j, 1)]);
            dirs.push(vec![(i, 1), (j, -1)]);
        }
    }
    let keep: Vec<bool> = pts
        .iter()
        .map(|p| {
            let mut q = p.clone();
            !dirs.iter().any(|d| {
                let shift = |q: &mut Vec<Rat>, s: i64| {
                    for &(i, c) in d {
                        q[i] += Rat::from_integer(BigInt::from(c * s));
                    }
                };
                shift(&mut q, 1);
                let plus = set.contains(&q);
                shift(&mut q, -2);
                let minus = set.contains(&q);
                shift(&mut q, 1);
                plus && minus
            })
        })
        .collect();
    pts.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect()
}

#[cfg(test)]
mod tests;
