//! Inputs shared by the benchmarks.

use flagpoly_core::rootsys::{Family, RootSystem, Weight};
use flagpoly_core::stringcones::ReducedWord;

/// A root system, a reduced word for `w0` and a dominant weight.
pub struct Case {
    pub name: &'static str,
    pub rs: RootSystem,
    pub word: ReducedWord,
    pub lam: Weight,
}

fn case(name: &'static str, f: Family, r: usize, word: &[usize], lam: &[i64]) -> Case {
    let rs = RootSystem::of(f, r).expect("supported type");
    let word = ReducedWord::new(&rs, word.to_vec()).expect("reduced word");
    Case { name, rs, word, lam: Weight::new(lam.to_vec()) }
}

pub fn gr36() -> Case {
    case("gr36", Family::A, 5, &[1, 3, 2, 1, 3, 2, 4, 3, 2, 1, 5, 4, 3, 2, 1], &[0, 0, 1, 0, 0])
}

pub fn b2_anticanonical() -> Case {
    case("b2-4w2", Family::B, 2, &[2, 1, 2, 1], &[0, 4])
}

pub fn g2_rho() -> Case {
    case("g2-rho", Family::G, 2, &[2, 1, 2, 1, 2, 1], &[1, 1])
}

pub fn a3_two_rho() -> Case {
    case("a3-2rho", Family::A, 3, &[1, 2, 1, 3, 2, 1], &[2, 2, 2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_are_well_formed() {
        for c in [gr36(), b2_anticanonical(), g2_rho(), a3_two_rho()] {
            c.rs.check_weight(&c.lam).unwrap();
            assert_eq!(c.word.len(), c.rs.num_positive_roots(), "{}", c.name);
        }
    }
}
