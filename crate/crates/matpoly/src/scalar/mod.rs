//! Exact scalar arithmetic and the matrix-side oracle.

mod charpoly;
mod matrix;
mod rat;
mod univariate;

pub use charpoly::{char_poly, rational_roots, CharPolyCoeffs};
pub use matrix::Matrix;
pub use rat::Rat;
pub use univariate::UniPoly;
