//! Exact computations with finite-dimensional modules over canonical algebras.

pub mod error;
pub mod exactla;

pub mod algebra;
pub mod repcat;
pub mod homology;
pub mod trisection;
pub mod approx;
pub mod slopes;
pub mod format;

pub use error::{Error, Result};
pub use algebra::Algebra;
