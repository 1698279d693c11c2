//! Exact arithmetic over ℚ: scalars, polynomials, matrices and factorization.

pub mod arith;
pub mod binary;
pub mod factor;
pub mod matrix;
pub mod mpoly;
pub(crate) mod modp;
pub mod parse;
pub mod poly;

pub use arith::{rat, ratio, Rational};
pub use binary::BinaryForm;
pub use factor::{factor_rational, irreducible_factors, Factorization};
pub use matrix::Matrix;
pub use mpoly::MPoly;
pub use poly::UniPoly;
