//! Division-free exact linear algebra over commutative Q-algebras.
//!
//! The crate computes characteristic polynomials, determinants and
//! adjugates with the Faddeev-LeVerrier recursion, and Pfaffians and
//! Pfaff-adjugates of skew-symmetric matrices with its Pfaffian analogue.
//! Every algorithm is generic over [`ScalarRing`], so the same code runs on
//! exact rationals, integers, floats, multivariate polynomials, and the
//! even-degree exterior algebra (used for Euler forms).

pub mod bench;
pub mod charpoly;
pub mod error;
pub mod euler;
pub mod exterior;
pub mod io;
pub mod matrix;
pub mod pfaffian;
pub mod poly;
pub mod rational;
pub mod ring;

pub use charpoly::{adjugate, char_poly, determinant, CharPolyResult};
pub use error::{Error, ErrorKind, Result};
pub use exterior::{EvenForm, FormElement};
pub use matrix::{JForm, Matrix, SkewMatrix};
pub use pfaffian::{
    jacobi_pfaffian_check, matching_sign, pfaff_adjugate, pfaffian_fl, pfaffian_laplace,
    pfaffian_matchings, PerfectMatching, PfaffianResult,
};
pub use poly::Poly;
pub use rational::{Rational, RationalizedInteger};
pub use ring::{ring_axiom_check, RingOps, ScalarRing};
