//! Exact scalar fields, polynomials and dense matrices.

mod field;
mod matrix;
mod poly;
mod ratfunc;

pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use poly::Poly;
pub use ratfunc::RatFunc;
