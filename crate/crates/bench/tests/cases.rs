use flagpoly_bench::{a3_two_rho, b2_anticanonical, g2_rho, gr36};
use flagpoly_core::charformula::weyl_dimension;
use flagpoly_core::stringcones::{string_polytope, Method, DEFAULT_CRYSTAL_CAP};

#[test]
fn benchmark_inputs_build_polytopes_of_the_right_size() {
    for c in [gr36(), b2_anticanonical(), g2_rho(), a3_two_rho()] {
        let q = string_polytope(&c.rs, &c.word, &c.lam, Method::Auto, 4, DEFAULT_CRYSTAL_CAP).unwrap().polytope;
        let dim = weyl_dimension(&c.rs, &c.lam).unwrap();
        assert_eq!(num_bigint::BigInt::from(q.count_lattice_points()), dim, "{}", c.name);
    }
}
