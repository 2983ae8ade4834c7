//! Exact computations on flag varieties `G/P`: root data and parabolic subgroups,
//! Kostant's dimension formula and the Ehrhart polynomials it induces, an exact rational
//! polytope kernel, string polytopes from Littelmann paths and string cones, and
//! verification routines tying these together.
//!
//! Conventions: roots are written in the basis of simple roots, weights in the basis of
//! fundamental weights, and the Cartan matrix is `a_ij = ⟨α_j, α_i^∨⟩`. Simple-root
//! labels exposed to callers are 1-based.

pub mod arith;
pub mod charformula;
pub mod error;
pub mod polyhedra;
pub mod polynomial;
pub mod rootsys;
pub mod stringcones;
pub mod verifier;

pub use arith::Rat;
pub use charformula::{EhrhartPolynomial, TheoremReport};
pub use error::{Error, Result};
pub use polyhedra::{HalfSpace, LatticeChart, NotReflexive, Polytope, Reflexive};
pub use polynomial::Polynomial;
pub use rootsys::{CartanType, Family, ParabolicData, Root, RootSystem, Weight};
