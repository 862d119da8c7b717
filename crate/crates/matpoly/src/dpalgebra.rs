//! The DP product `P ⊗ Q = Σ_{k=1}^{n} P(x, k) Q(k, y)` and the algebra built
//! on it: identity polynomials, inverses, powers, classification,
//! characteristic polynomials and eigen-polynomials.

use serde::Serialize;

use crate::bipoly::{BiPoly, Shape};
use crate::error::{Error, Result};
use crate::interp::{construct, to_matrix, ConstructionMethod};
use crate::scalar::{char_poly, rational_roots, CharPolyCoeffs, Matrix, Rat};

pub const DEFAULT_MAX_PERIOD: usize = 16;

/// `P ⊗ Q` for `P` in `P_m^n` and `Q` in `P_n^q`; the result lies in `P_m^q`.
pub fn dp_product(p: &BiPoly, q: &BiPoly) -> Result<BiPoly> {
    let (ps, qs) = (p.shape(), q.shape());
    if ps.n != qs.m {
        return Err(Error::ShapeMismatch {
            op: "DP product",
            left: ps,
            right: qs,
        });
    }
    let nodes: Vec<Rat> = (1..=ps.n).map(Rat::from).collect();
    // column k: coefficients of P(x, k) in x; row k: coefficients of Q(k, y) in y
    let left = Matrix::from_fn(ps.m, ps.n, |k1, k| p.at_y(&nodes[k]).coeff(k1))?;
    let right = Matrix::from_fn(qs.m, qs.n, |k, k2| q.at_x(&nodes[k]).coeff(k2))?;
    let prod = left.mul(&right)?;
    BiPoly::new(Shape::new(ps.m, qs.n)?, prod.into_entries())
}

/// The interpolant `I_n` of the `n x n` identity matrix.
pub fn identity_poly(n: usize) -> Result<BiPoly> {
    Ok(construct(&Matrix::identity(n)?, ConstructionMethod::Lagrange))
}

fn require_square(p: &BiPoly, op: &'static str) -> Result<usize> {
    let s = p.shape();
    if !s.is_square() {
        return Err(Error::NotSquare { op, shape: s });
    }
    Ok(s.m)
}

/// Whether the slices `P(i, y)`, `i = 1..n`, are linearly independent.
pub fn is_invertible(p: &BiPoly) -> Result<bool> {
    require_square(p, "invertibility")?;
    Ok(!to_matrix(p).determinant()?.is_zero())
}

/// Coefficient vectors `c` with `Σ_i c_i P(i, y) = 0`, one per independent
/// dependency among the row slices. Empty iff `p` is invertible.
pub fn slice_dependencies(p: &BiPoly) -> Result<Vec<Vec<Rat>>> {
    require_square(p, "slice dependencies")?;
    Ok(to_matrix(p)
        .transpose()
        .null_space()
        .into_iter()
        .map(Matrix::into_entries)
        .collect())
}

/// The two-sided inverse `Q` with `P ⊗ Q = I_n = Q ⊗ P`.
pub fn dp_inverse(p: &BiPoly) -> Result<BiPoly> {
    let n = require_square(p, "DP inverse")?;
    let inv = construct(&to_matrix(p).inverse()?, ConstructionMethod::Lagrange);
    let id = identity_poly(n)?;
    assert!(
        dp_product(p, &inv)? == id && dp_product(&inv, p)? == id,
        "inverse of {p} failed re-verification"
    );
    Ok(inv)
}

/// `r`-fold DP power; `r = 0` gives `I_n`.
pub fn dp_power(p: &BiPoly, r: u64) -> Result<BiPoly> {
    let n = require_square(p, "DP power")?;
    let mut result = identity_poly(n)?;
    let mut base = p.clone();
    let mut e = r;
    while e > 0 {
        if e & 1 == 1 {
            result = dp_product(&result, &base)?;
        }
        e >>= 1;
        if e > 0 {
            base = dp_product(&base, &base)?;
        }
    }
    Ok(result)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub symmetric: bool,
    pub skew_symmetric: bool,
    /// `P ⊗ P^T = I_n`.
    pub orthogonal: bool,
    pub invertible: bool,
    /// `P ⊗ P = I_n`.
    pub involuntary: bool,
    /// `P ⊗ P = P`.
    pub idempotent: bool,
    /// Least `r` with `P^r = 0`; searched up to `n`.
    pub nilpotent_index: Option<usize>,
    /// Least `r` with `P^(r+1) = P`; searched up to the caller's bound.
    pub periodic_index: Option<usize>,
}

pub fn classify(p: &BiPoly, max_period: usize) -> Result<ClassificationReport> {
    let n = require_square(p, "classify")?;
    let id = identity_poly(n)?;
    let square = dp_product(p, p)?;

    let mut nilpotent_index = None;
    let mut periodic_index = None;
    let mut power = p.clone();
    for r in 1..=n.max(max_period) {
        if r <= n && nilpotent_index.is_none() && power.is_zero() {
            nilpotent_index = Some(r);
        }
        let next = dp_product(&power, p)?;
        if r <= max_period && periodic_index.is_none() && next == *p {
            periodic_index = Some(r);
        }
        if (nilpotent_index.is_some() || r >= n) && (periodic_index.is_some() || r >= max_period) {
            break;
        }
        power = next;
    }

    Ok(ClassificationReport {
        symmetric: p.is_symmetric(),
        skew_symmetric: p.is_skew_symmetric(),
        orthogonal: dp_product(p, &p.transpose())? == id,
        invertible: is_invertible(p)?,
        involuntary: square == id,
        idempotent: square == *p,
        nilpotent_index,
        periodic_index,
    })
}

pub fn char_poly_of(p: &BiPoly) -> Result<CharPolyCoeffs> {
    require_square(p, "characteristic polynomial")?;
    char_poly(&to_matrix(p))
}

/// `Σ_k c_k P^k` for the characteristic polynomial `Σ_k c_k λ^k` of `p`.
/// Zero by Cayley–Hamilton.
pub fn cayley_hamilton_residual(p: &BiPoly) -> Result<BiPoly> {
    let n = require_square(p, "Cayley-Hamilton residual")?;
    let id = identity_poly(n)?;
    let cp = char_poly_of(p)?;
    let mut acc = BiPoly::zero(p.shape());
    for c in cp.coeffs().iter().rev() {
        acc = dp_product(&acc, p)?.add(&id.scale(c))?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenPair {
    pub value: Rat,
    /// Element of `P_n^1`, scaled so its first nonzero node value is 1.
    pub eigen_poly: BiPoly,
}

/// Eigen-pairs for every rational eigenvalue, one per basis vector of the
/// corresponding eigenspace. Irrational eigenvalues are omitted.
pub fn eigen_pairs(p: &BiPoly) -> Result<Vec<EigenPair>> {
    let n = require_square(p, "eigen-polynomials")?;
    let m = to_matrix(p);
    let mut pairs = Vec::new();
    for (value, _) in rational_roots(&char_poly(&m)?) {
        let shifted = m.sub(&Matrix::identity(n)?.scale(&value))?;
        for v in shifted.null_space() {
            let pivot = v
                .entries()
                .iter()
                .find(|c| !c.is_zero())
                .expect("basis vectors are nonzero")
                .clone();
            let v = v.scale(&pivot.recip()?);
            let eigen_poly = construct(&v, ConstructionMethod::Lagrange);
            debug_assert!(verify_eigenpair(p, &value, &eigen_poly).unwrap_or(false));
            pairs.push(EigenPair {
                value: value.clone(),
                eigen_poly,
            });
        }
    }
    Ok(pairs)
}

/// Exact check of `P ⊗ X = λ X` for a nonzero `X` in `P_n^1`.
pub fn verify_eigenpair(p: &BiPoly, value: &Rat, x_poly: &BiPoly) -> Result<bool> {
    let n = require_square(p, "eigenpair check")?;
    let expected = Shape::new(n, 1)?;
    if x_poly.shape() != expected {
        return Err(Error::ShapeMismatch {
            op: "eigenpair check",
            left: p.shape(),
            right: x_poly.shape(),
        });
    }
    Ok(!x_poly.is_zero() && dp_product(p, x_poly)? == x_poly.scale(value))
}
