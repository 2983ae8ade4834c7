use super::*;
use crate::arith::{frac, rat, rat_vec};
use proptest::prelude::*;

fn hs(a: &[i64], b: i64) -> HalfSpace {
    HalfSpace::from_ints(a, b).unwrap()
}

fn pts(v: &[&[i64]]) -> Vec<Vec<Rat>> {
    v.iter().map(|p| rat_vec(p)).collect()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn unit_square() -> Polytope {
    Polytope::from_halfspaces(2, &[hs(&[-1, 0], 0), hs(&[0, -1], 0), hs(&[1, 0], 1), hs(&[0, 1], 1)]).unwrap()
}

fn cube(lo: i64, hi: i64) -> Polytope {
    Polytope::from_halfspaces(2, &[hs(&[-1, 0], -lo), hs(&[0, -1], -lo), hs(&[1, 0], hi), hs(&[0, 1], hi)]).unwrap()
}

#[test]
fn halfspace_canonical_form() {
    let h = HalfSpace::new(vec![frac(2, 3), frac(4, 3)], rat(2)).unwrap();
    assert_eq!(h.a, ints(&[1, 2]));
    assert_eq!(h.b, rat(3));
    assert!(HalfSpace::new(vec![rat(0), rat(0)], rat(1)).is_err());
}

#[test]
fn square_from_halfspaces() {
    assert_eq!(unit_square().vertices(), pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]).as_slice());
}

#[test]
fn triangle_from_halfspaces() {
    let t = Polytope::from_halfspaces(2, &[hs(&[-1, 0], 0), hs(&[0, -1], 0), hs(&[1, 1], 1)]).unwrap();
    assert_eq!(t.vertices(), pts(&[&[0, 0], &[0, 1], &[1, 0]]).as_slice());
}

#[test]
fn segment_with_rational_vertex() {
    // 0 ≤ x ≤ 1, x − 2y = 0
    let s = Polytope::from_halfspaces(2, &[hs(&[-1, 0], 0), hs(&[1, 0], 1), hs(&[1, -2], 0), hs(&[-1, 2], 0)]).unwrap();
    assert_eq!(s.dim_affine(), 1);
    assert_eq!(s.vertices(), &[vec![rat(0), rat(0)], vec![rat(1), frac(1, 2)]]);
    assert!(!s.is_lattice());
}

#[test]
fn unbounded_and_empty_systems() {
    let quadrant = [hs(&[-1, 0], 0), hs(&[0, -1], 0)];
    assert_eq!(Polytope::from_halfspaces(2, &quadrant), Err(Error::Unbounded));
    let strip = [hs(&[1, 0], 1), hs(&[-1, 0], 0)];
    assert_eq!(Polytope::from_halfspaces(2, &strip), Err(Error::Unbounded));
    let none = [hs(&[1, 0], 0), hs(&[-1, 0], -1), hs(&[0, 1], 1), hs(&[0, -1], 1)];
    assert_eq!(Polytope::from_halfspaces(2, &none), Err(Error::Empty));
}

#[test]
fn hull_drops_interior_points() {
    let mut p = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
    p.push(vec![frac(1, 4), frac(1, 4)]);
    let t = Polytope::from_points(&p).unwrap();
    assert_eq!(t.vertices().len(), 3);
    assert_eq!(t.facets().len(), 3);
}

#[test]
fn single_point() {
    let p = Polytope::from_points(&pts(&[&[0, 0]])).unwrap();
    assert_eq!(p.dim_affine(), 0);
    assert_eq!(p.vertices().len(), 1);
    assert_eq!(p.lattice_points(false), vec![ints(&[0, 0])]);
    assert!(p.lattice_points(true).is_empty());
    assert_eq!(p.count_relative_interior_lattice_points(), 0);
}

#[test]
fn round_trip_square() {
    let sq = unit_square();
    assert_eq!(Polytope::from_points(sq.vertices()).unwrap(), sq);
}

#[test]
fn lattice_points_of_squares_and_triangles() {
    let sq = cube(0, 2);
    assert_eq!(sq.lattice_points(false).len(), 9);
    assert_eq!(sq.lattice_points(true), vec![ints(&[1, 1])]);
    let t = Polytope::from_points(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
    assert!(t.lattice_points(true).is_empty());
    assert_eq!(t.count_lattice_points(), 3);
}

#[test]
fn lower_dimensional_counts() {
    // segment from (0,0,0) to (2,2,2) has 3 lattice points, 1 in the relative interior
    let s = Polytope::from_points(&pts(&[&[0, 0, 0], &[2, 2, 2]])).unwrap();
    assert_eq!(s.count_lattice_points(), 3);
    assert!(s.lattice_points(true).is_empty());
    assert_eq!(s.relative_interior_lattice_points(), vec![ints(&[1, 1, 1])]);
    // a plane section avoiding the integer lattice except along a sublattice
    let t = Polytope::from_points(&pts(&[&[0, 0, 0], &[4, 0, 2], &[0, 2, 1]])).unwrap();
    let brute = brute_force(&t, false);
    assert_eq!(t.count_lattice_points() as usize, brute.len());
    assert_eq!(t.lattice_points(false), brute);
}

#[test]
fn dilation_and_translation() {
    let sq = unit_square();
    assert_eq!(sq.dilate(&rat(2)).unwrap(), cube(0, 2));
    let c = sq.translate(&[frac(-1, 2), frac(-1, 2)]).unwrap();
    assert!(c.vertices().contains(&vec![frac(-1, 2), frac(1, 2)]));
    let three = sq.dilate(&rat(3)).unwrap();
    assert_eq!(three.dilate(&frac(1, 3)).unwrap(), sq);
    assert!(sq.dilate(&rat(0)).is_err());
    assert!(sq.dilate(&rat(-1)).is_err());
}

#[test]
fn polar_duals() {
    let sq = cube(-1, 1);
    let cross = sq.polar_dual().unwrap();
    assert_eq!(cross.vertices(), pts(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]]).as_slice());
    assert_eq!(cross.polar_dual().unwrap(), sq);
    let tri = Polytope::from_points(&pts(&[&[2, -1], &[-1, 2], &[-1, -1]])).unwrap();
    let d = tri.polar_dual().unwrap();
    assert!(d.is_lattice());
    assert_eq!(d.vertices(), pts(&[&[-1, 0], &[0, -1], &[1, 1]]).as_slice());
    assert!(matches!(unit_square().polar_dual(), Err(Error::DualUndefined(_))));
    let seg = Polytope::from_points(&pts(&[&[-1, 0], &[1, 0]])).unwrap();
    assert!(matches!(seg.polar_dual(), Err(Error::DualUndefined(_))));
}

#[test]
fn lattice_test() {
    assert!(unit_square().is_lattice());
    let t = Polytope::from_points(&[rat_vec(&[0, 0]), rat_vec(&[1, 0]), vec![frac(1, 2), rat(1)]]).unwrap();
    assert!(!t.is_lattice());
    assert_eq!(t.vertex_denominator(), BigInt::from(2));
    assert!(t.dilate(&rat(2)).unwrap().is_lattice());
}

#[test]
fn reflexivity() {
    let r = cube(-1, 1).reflexive_after_translation().unwrap();
    assert_eq!(r.translation, ints(&[0, 0]));
    assert_eq!(r.dual.vertices().len(), 4);
    let r = cube(0, 2).reflexive_after_translation().unwrap();
    assert_eq!(r.translation, ints(&[1, 1]));
    let t = Polytope::from_points(&pts(&[&[0, 0], &[3, 0], &[0, 3]])).unwrap();
    let r = t.reflexive_after_translation().unwrap();
    assert_eq!(r.translation, ints(&[1, 1]));
    assert_eq!(r.dual.vertices(), pts(&[&[-1, 0], &[0, -1], &[1, 1]]).as_slice());

    assert_eq!(cube(0, 3).reflexive_after_translation().unwrap_err(), NotReflexive::InteriorCount(4));
    let half = Polytope::from_points(&[rat_vec(&[0, 0]), rat_vec(&[1, 0]), vec![frac(1, 2), rat(1)]]).unwrap();
    assert_eq!(half.reflexive_after_translation().unwrap_err(), NotReflexive::NotLattice);
    // origin is the only interior point, but the facet through e1, e2 and the last
    // vertex is 2x + 2y − 3z ≤ 2
    let skew = Polytope::from_points(&pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -2]])).unwrap();
    assert_eq!(skew.count_relative_interior_lattice_points(), 1);
    assert!(matches!(skew.reflexive_after_translation(), Err(NotReflexive::DualNotLattice { .. })));
}

#[test]
fn reflexive_in_lower_dimension() {
    // the square [0,2]^2 placed in the plane z = x + y of R^3
    let p = Polytope::from_points(&pts(&[&[0, 0, 0], &[2, 0, 2], &[0, 2, 2], &[2, 2, 4]])).unwrap();
    assert_eq!(p.dim_affine(), 2);
    let r = p.reflexive_after_translation().unwrap();
    assert_eq!(r.translation, ints(&[1, 1, 2]));
    assert!(r.dual.is_lattice());
}

#[test]
fn json_round_trip() {
    let p = Polytope::from_points(&[rat_vec(&[0, 0]), rat_vec(&[1, 0]), vec![frac(1, 2), rat(1)]]).unwrap();
    let j = p.to_json();
    assert_eq!(j["dim"], 2);
    assert_eq!(Polytope::from_json(&j).unwrap(), p);
    let mut h_only = j.clone();
    h_only.as_object_mut().unwrap().remove("vertices");
    assert_eq!(Polytope::from_json(&h_only).unwrap(), p);
    let text = serde_json::to_string(&j).unwrap();
    assert!(text.contains("\"1/2\""));
    assert!(Polytope::from_json_str("{\"dim\":1}").is_err());
}

fn brute_force(p: &Polytope, strict: bool) -> Vec<Vec<BigInt>> {
    let d = p.dim_ambient();
    let lo: Vec<i64> = (0..d)
        .map(|i| p.vertices().iter().map(|v| v[i].floor().to_integer()).min().unwrap().try_into().unwrap())
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|i| p.vertices().iter().map(|v| v[i].ceil().to_integer()).max().unwrap().try_into().unwrap())
        .collect();
    let mut out = vec![];
    let mut cur = lo.clone();
    loop {
        let x = rat_vec(&cur);
        let inside = if strict {
            p.is_full_dimensional() && p.facets().iter().all(|f| f.eval(&x) < f.b)
        } else {
            p.contains(&x)
        };
        if inside {
            out.push(ints(&cur));
        }
        let mut i = 0;
        loop {
            if i == d {
                out.sort();
                return out;
            }
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

fn point_sets() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4).prop_flat_map(|d| prop::collection::vec(prop::collection::vec(-3i64..=3, d), 1..9))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn h_v_round_trip(raw in point_sets()) {
        let p = Polytope::from_points(&raw.iter().map(|v| rat_vec(v)).collect::<Vec<_>>()).unwrap();
        let q = Polytope::from_halfspaces(p.dim_ambient(), &p.halfspaces()).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(Polytope::from_points(p.vertices()).unwrap(), p.clone());
        for v in p.vertices() {
            prop_assert!(p.contains(v));
        }
        for f in p.facets() {
            let tight = p.vertices().iter().filter(|v| f.eval(v) == f.b).count();
            prop_assert!(tight >= p.dim_affine());
        }
    }

    #[test]
    fn biduality(raw in point_sets()) {
        let mut sym: Vec<Vec<Rat>> = raw.iter().map(|v| rat_vec(v)).collect();
        sym.extend(raw.iter().map(|v| v.iter().map(|&x| rat(-x)).collect::<Vec<_>>()));
        let p = Polytope::from_points(&sym).unwrap();
        if p.is_full_dimensional() && p.vertices().len() > 1 {
            let back = p.polar_dual().unwrap().polar_dual().unwrap();
            prop_assert_eq!(back, p);
        }
    }

    #[test]
    fn counts_match_brute_force(raw in point_sets(), k in 1i64..=3) {
        let p = Polytope::from_points(&raw.iter().map(|v| rat_vec(v)).collect::<Vec<_>>()).unwrap();
        let half = p.dilate(&frac(k, 2)).unwrap();
        for q in [p.dilate(&rat(k)).unwrap(), half] {
            let all = brute_force(&q, false);
            prop_assert_eq!(q.lattice_points(false), all.clone());
            prop_assert_eq!(q.count_lattice_points() as usize, all.len());
            prop_assert_eq!(q.lattice_points(true), brute_force(&q, true));
            let rel = q.relative_interior_lattice_points();
            prop_assert_eq!(rel.len() as u64, q.count_relative_interior_lattice_points());
            for x in &rel {
                prop_assert!(all.contains(x));
            }
        }
    }
}
