//! Exact linear algebra: dense matrices over `BigInt`/`BigRational`,
//! Smith normal forms, rational elimination, finitely presented abelian
//! groups, and finite-dimensional algebras over the rationals.

pub mod algebra;
pub mod fpab;
pub mod mat;
pub mod rational;
pub mod snf;

pub use algebra::FiniteDimAlgebra;
pub use fpab::{AbelianPresentation, FpGroup};
pub use mat::{IntMat, Mat, QMat};
pub use rational::RatQuotient;
pub use snf::Snf;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for an exact rational from an integer pair.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an exact rational integer.
pub fn qi(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}
