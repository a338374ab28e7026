//! Exact scalars and dense linear algebra over ℚ and GF(p).

mod matrix;
mod scalar;
mod subspace;
pub mod vector;

pub use matrix::{Echelon, Matrix};
pub use scalar::{is_prime, Field, Scalar};
pub use subspace::{Quotient, Subspace};
