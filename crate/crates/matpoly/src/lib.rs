//! Exact isomorphism between `m x n` rational matrices and the tensor-product
//! polynomial space `P_m^n` of bivariate polynomials with `x`-degree below `m`
//! and `y`-degree below `n`.
//!
//! A matrix `A` corresponds to the polynomial `P_A` interpolating `a_ij` at
//! the integer nodes `(i, j)`, `1 <= i <= m`, `1 <= j <= n`. Matrix products
//! become the DP product `P ⊗ Q = Σ_k P(x, k) Q(k, y)`.
//!
//! ```
//! use matpoly::{construct, dp_product, BiPoly, ConstructionMethod, Matrix};
//!
//! let tau = Matrix::from_i64(&[[-1, 2], [3, -4]]);
//! let p = construct(&tau, ConstructionMethod::Lagrange);
//! assert_eq!(p.to_text(), "-10*x*y + 14*x + 13*y - 18");
//! let sq = dp_product(&p, &p).unwrap();
//! assert_eq!(sq.to_text(), "54*x*y - 76*x - 71*y + 100");
//! ```

pub mod bipoly;
pub mod dpalgebra;
pub mod error;
pub mod formats;
pub mod interp;
pub mod isomap;
pub mod scalar;
pub mod surface;

pub use bipoly::{BiPoly, PolyJson, Shape};
pub use dpalgebra::{
    cayley_hamilton_residual, char_poly_of, classify, dp_inverse, dp_power, dp_product, eigen_pairs, identity_poly,
    is_invertible, verify_eigenpair, ClassificationReport, EigenPair, DEFAULT_MAX_PERIOD,
};
pub use error::{Error, ErrorKind, Position, Result};
pub use interp::{construct, construct_all, to_matrix, ConstructionMethod};
pub use isomap::{coordinate_matrix, sampling_matrix, MonomialOrder, Report};
pub use scalar::{char_poly, rational_roots, CharPolyCoeffs, Matrix, Rat, UniPoly};
pub use surface::SurfaceGrid;
