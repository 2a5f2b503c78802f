//! Exact arithmetic: fields, Laurent polynomials and matrices over them.

pub mod field;
pub mod laurent;
pub mod matrix;

pub use field::{Field, Scalar};
pub use laurent::{LaurentPoly, Monomial};
pub use matrix::{PolyMatrix, ScalarMatrix};
