use super::*;
use crate::arith::{frac, rat, rat_vec};
use crate::charformula::weyl_dimension;
use crate::polyhedra::HalfSpace;

fn sys(f: Family, r: usize) -> RootSystem {
    RootSystem::of(f, r).unwrap()
}

fn word(rs: &RootSystem, w: &[usize]) -> ReducedWord {
    ReducedWord::new(rs, w.to_vec()).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

const GR36: [usize; 15] = [1, 3, 2, 1, 3, 2, 4, 3, 2, 1, 5, 4, 3, 2, 1];

#[test]
fn reduced_words() {
    let a2 = sys(Family::A, 2);
    assert!(ReducedWord::new(&a2, vec![1, 2, 1]).is_ok());
    assert!(ReducedWord::new(&a2, vec![1, 1, 2]).is_err());
    assert!(ReducedWord::new(&a2, vec![1, 2]).is_err());
    assert!(ReducedWord::new(&a2, vec![1, 3, 1]).is_err());
    assert_eq!(ReducedWord::parse(&a2, "2, 1,2").unwrap().letters(), &[2, 1, 2]);
    assert!(ReducedWord::parse(&a2, "2,x,2").is_err());
    let a5 = sys(Family::A, 5);
    assert_eq!(word(&a5, &GR36).to_string(), "1,3,2,1,3,2,4,3,2,1,5,4,3,2,1");
    for (f, r) in [(Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G, 2), (Family::F, 4)] {
        let rs = sys(f, r);
        assert_eq!(ReducedWord::default_for(&rs).len(), rs.num_positive_roots());
    }
    let b2 = sys(Family::B, 2);
    assert!(word(&b2, &[2, 1, 2, 1]).check_system(&a2).is_err());
}

#[test]
fn strings_of_small_crystals() {
    let a2 = sys(Family::A, 2);
    let w = word(&a2, &[1, 2, 1]);
    let s = strings(&a2, a2.rho(), &w, DEFAULT_CRYSTAL_CAP).unwrap();
    assert_eq!(s.len(), 8);
    assert!(s.contains(&vec![0, 0, 0]));
    assert!(s.contains(&vec![1, 2, 1]));
    for v in &s {
        // cone t1 ≥ 0, t2 ≥ t3 ≥ 0 and the λ-inequalities at ρ
        assert!(v[0] >= 0 && v[1] >= v[2] && v[2] >= 0);
    }
}

#[test]
fn lowest_weight_string() {
    let a2 = sys(Family::A, 2);
    let w = word(&a2, &[1, 2, 1]);
    let lowest = LSPath::straight(&Weight(vec![-1, -1]));
    assert_eq!(string_parametrization(&a2, &lowest, &w).unwrap(), vec![1, 2, 1]);
    let top = LSPath::straight(a2.rho());
    assert_eq!(string_parametrization(&a2, &top, &w).unwrap(), vec![0, 0, 0]);
}

#[test]
fn string_weight_identity() {
    for (f, r, w) in [(Family::B, 2, vec![2, 1, 2, 1]), (Family::G, 2, vec![1, 2, 1, 2, 1, 2])] {
        let rs = sys(f, r);
        let w = word(&rs, &w);
        let lam = rs.rho().clone();
        for b in path_crystal(&rs, &lam, DEFAULT_CRYSTAL_CAP).unwrap() {
            let a = string_parametrization(&rs, &b, &w).unwrap();
            let mut diff = lam.sub(&b.weight(r)).coeffs().to_vec();
            for (k, &l) in w.letters().iter().enumerate() {
                for (d, row) in diff.iter_mut().zip(rs.cartan_matrix()) {
                    *d -= a[k] * row[l - 1];
                }
            }
            assert!(diff.iter().all(|&x| x == 0));
        }
    }
}

#[test]
fn g2_crystal_contains_the_interior_string() {
    let g2 = sys(Family::G, 2);
    let s = strings(&g2, &g2.rho().scale(2), &word(&g2, &[1, 2, 1, 2, 1, 2]), DEFAULT_CRYSTAL_CAP).unwrap();
    assert_eq!(s.len(), 729);
    assert!(s.contains(&vec![1, 2, 5, 3, 4, 1]));
}

#[test]
fn b2_strings_span_a_plane() {
    let b2 = sys(Family::B, 2);
    let w = word(&b2, &[2, 1, 2, 1]);
    let s = strings(&b2, &Weight(vec![0, 1]), &w, DEFAULT_CRYSTAL_CAP).unwrap();
    assert_eq!(s.len(), 4);
    let pts: Vec<Vec<Rat>> = s.iter().map(|v| rat_vec(v)).collect();
    assert_eq!(Polytope::from_points(&pts).unwrap().dim_affine(), 2);
}

#[test]
fn hull_certificates() {
    let a2 = sys(Family::A, 2);
    let h = hull_string_polytope(&a2, &word(&a2, &[1, 2, 1]), a2.rho(), 2, DEFAULT_CRYSTAL_CAP).unwrap();
    assert_eq!(h.certificate, 1);
    assert_eq!(h.polytope.count_lattice_points(), 8);

    let b2 = sys(Family::B, 2);
    let h = hull_string_polytope(&b2, &word(&b2, &[2, 1, 2, 1]), &Weight(vec![0, 1]), 3, DEFAULT_CRYSTAL_CAP).unwrap();
    assert_eq!(h.certificate, 2);
    assert_eq!(h.polytope.dim_affine(), 3);
    let bad = h.polytope.non_integral_vertices();
    assert_eq!(bad.len(), 1);
    assert!(bad[0].iter().all(|x| (x * rat(2)).is_integer()));

    let err = hull_string_polytope(&b2, &word(&b2, &[2, 1, 2, 1]), &Weight(vec![0, 1]), 1, DEFAULT_CRYSTAL_CAP);
    assert_eq!(err.unwrap_err(), Error::DenominatorBound(1));
}

#[test]
fn a2_cones() {
    let a2 = sys(Family::A, 2);
    let expect = |w: &ReducedWord| {
        let c = gp_string_cone(&a2, w).unwrap();
        let mut hs = vec![
            HalfSpace::from_ints(&[-1, 0, 0], 0).unwrap(),
            HalfSpace::from_ints(&[0, 0, -1], 0).unwrap(),
            HalfSpace::from_ints(&[0, -1, 1], 0).unwrap(),
        ];
        hs.sort();
        assert_eq!(c.halfspaces(), hs.as_slice());
    };
    expect(&word(&a2, &[1, 2, 1]));
    expect(&word(&a2, &[2, 1, 2]));
}

#[test]
fn cone_requires_type_a() {
    let b2 = sys(Family::B, 2);
    assert!(matches!(gp_string_cone(&b2, &word(&b2, &[2, 1, 2, 1])), Err(Error::Unsupported(_))));
}

#[test]
fn truncations() {
    let a2 = sys(Family::A, 2);
    let w = word(&a2, &[1, 2, 1]);
    let cone = gp_string_cone(&a2, &w).unwrap();
    let q = truncate_cone(&cone, &a2, &w, a2.rho()).unwrap();
    assert_eq!(q.count_lattice_points(), 8);
    let zero = truncate_cone(&cone, &a2, &w, &Weight(vec![0, 0])).unwrap();
    assert_eq!(zero.vertices(), &[rat_vec(&[0, 0, 0])]);
    for k in 1..=3 {
        let lam = Weight(vec![1, 2]);
        let big = truncate_cone(&cone, &a2, &w, &lam.scale(k)).unwrap();
        assert_eq!(big, truncate_cone(&cone, &a2, &w, &lam).unwrap().dilate(&rat(k)).unwrap());
    }
    let other = word(&a2, &[2, 1, 2]);
    assert!(truncate_cone(&cone, &a2, &other, a2.rho()).is_err());
}

#[test]
fn cones_agree_with_crystals_in_rank_three() {
    let a3 = sys(Family::A, 3);
    for w in [vec![1, 2, 1, 3, 2, 1], vec![2, 1, 3, 2, 1, 3], vec![1, 3, 2, 1, 3, 2]] {
        let w = word(&a3, &w);
        let cone = gp_string_cone(&a3, &w).unwrap();
        for lam in [Weight(vec![1, 0, 2]), Weight(vec![2, 1, 1])] {
            let q = truncate_cone(&cone, &a3, &w, &lam).unwrap();
            let s = strings(&a3, &lam, &w, DEFAULT_CRYSTAL_CAP).unwrap();
            let expect: Vec<Vec<BigInt>> = s.iter().map(|v| ints(v)).collect();
            assert_eq!(q.lattice_points(false), expect);
        }
    }
}

#[test]
fn grassmannian_polytope() {
    let a5 = sys(Family::A, 5);
    let w = word(&a5, &GR36);
    let q = string_polytope(&a5, &w, &a5.fundamental_weight(3).unwrap(), Method::Auto, 2, DEFAULT_CRYSTAL_CAP).unwrap();
    assert_eq!(q.method, Method::Cone);
    assert_eq!(q.polytope.count_lattice_points(), 20);
    let bad = q.polytope.non_integral_vertices();
    assert_eq!(bad.len(), 1);
    assert!(bad[0].iter().all(|x| (x * rat(2)).is_integer()));
    assert!(bad[0].contains(&frac(1, 2)));
}

#[test]
fn crystal_cap_surfaces_in_strings() {
    let g2 = sys(Family::G, 2);
    let w = word(&g2, &[1, 2, 1, 2, 1, 2]);
    assert!(matches!(strings(&g2, &g2.rho().scale(2), &w, 10), Err(Error::CrystalTooLarge { .. })));
    let lam = g2.rho().scale(weyl_dimension(&g2, g2.rho()).unwrap().try_into().unwrap());
    assert!(matches!(strings(&g2, &lam, &w, DEFAULT_CRYSTAL_CAP), Err(Error::CrystalTooLarge { .. })));
}

#[test]
fn method_names() {
    assert_eq!("hull".parse::<Method>().unwrap(), Method::Hull);
    assert_eq!("auto".parse::<Method>().unwrap().to_string(), "auto");
    assert!("nope".parse::<Method>().is_err());
    let b2 = sys(Family::B, 2);
    let q = string_polytope(&b2, &word(&b2, &[2, 1, 2, 1]), &Weight(vec![0, 2]), Method::Auto, 3, DEFAULT_CRYSTAL_CAP)
        .unwrap();
    assert_eq!(q.method, Method::Hull);
    assert_eq!(q.certificate, Some(1));
    assert!(q.polytope.is_lattice());
}
