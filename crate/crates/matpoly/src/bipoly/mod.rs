//! Elements of the tensor-product space `P_m^n`.
//!
//! A [`BiPoly`] stores the dense coefficient grid `λ[k1][k2]` of
//! `Σ λ[k1][k2] x^k1 y^k2` with `0 <= k1 < m`, `0 <= k2 < n`. The declared
//! [`Shape`] is part of the value: `2x - 3` declared in `P_3^1` and the same
//! polynomial declared in `P_2^1` are different elements of different spaces,
//! though [`BiPoly::poly_eq`] reports them equal as polynomials.

mod json;
pub(crate) mod text;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Rat, UniPoly};

pub use json::PolyJson;

/// Largest number of coefficients a polynomial may carry.
pub const MAX_COEFFS: usize = 1 << 20;

/// Declared space `P_m^n`: x-degree below `m`, y-degree below `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    pub m: usize,
    pub n: usize,
}

impl Shape {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape(format!("dimensions must be positive, got {m}x{n}")));
        }
        if m.checked_mul(n).is_none_or(|len| len > MAX_COEFFS) {
            return Err(Error::InvalidShape(format!(
                "{m}x{n} exceeds {MAX_COEFFS} coefficients"
            )));
        }
        Ok(Shape { m, n })
    }

    pub(crate) fn new_unchecked(m: usize, n: usize) -> Self {
        Shape { m, n }
    }

    pub fn square(n: usize) -> Result<Self> {
        Shape::new(n, n)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.m * self.n
    }

    pub fn is_square(&self) -> bool {
        self.m == self.n
    }

    pub fn transposed(&self) -> Shape {
        Shape { m: self.n, n: self.m }
    }

    pub fn contains(&self, other: Shape) -> bool {
        other.m <= self.m && other.n <= self.n
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    shape: Shape,
    coeffs: Vec<Rat>,
}

impl BiPoly {
    /// `coeffs` is the grid in row-major order: index `k1 * n + k2`.
    pub fn new(shape: Shape, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != shape.len() {
            return Err(Error::InvalidShape(format!(
                "{shape} polynomial needs {} coefficients, got {}",
                shape.len(),
                coeffs.len()
            )));
        }
        Ok(BiPoly { shape, coeffs })
    }

    pub fn zero(shape: Shape) -> Self {
        BiPoly {
            shape,
            coeffs: vec![Rat::zero(); shape.len()],
        }
    }

    pub fn constant(shape: Shape, c: Rat) -> Self {
        let mut p = BiPoly::zero(shape);
        p.coeffs[0] = c;
        p
    }

    /// `grid[k1][k2]` multiplies `x^k1 y^k2`.
    pub fn from_grid(grid: Vec<Vec<Rat>>) -> Result<Self> {
        let m = grid.len();
        let n = grid.first().map_or(0, Vec::len);
        let shape = Shape::new(m, n)?;
        if let Some(bad) = grid.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidShape(format!(
                "coefficient row {bad} has {} entries, expected {n}",
                grid[bad].len()
            )));
        }
        BiPoly::new(shape, grid.into_iter().flatten().collect())
    }

    pub(crate) fn from_fn(shape: Shape, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut coeffs = Vec::with_capacity(shape.len());
        for k1 in 0..shape.m {
            for k2 in 0..shape.n {
                coeffs.push(f(k1, k2));
            }
        }
        BiPoly { shape, coeffs }
    }

    /// `px(x) * qy(y)` in `shape`; both factors must fit.
    pub fn outer(shape: Shape, px: &UniPoly, qy: &UniPoly) -> Result<Self> {
        let dx = px.coeffs().len();
        let dy = qy.coeffs().len();
        if dx > shape.m || dy > shape.n {
            return Err(Error::DegreeExceedsShape {
                k1: dx.saturating_sub(1),
                k2: dy.saturating_sub(1),
                shape,
            });
        }
        Ok(BiPoly::from_fn(shape, |k1, k2| {
            match (px.coeffs().get(k1), qy.coeffs().get(k2)) {
                (Some(a), Some(b)) => a * b,
                _ => Rat::zero(),
            }
        }))
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn coeff(&self, k1: usize, k2: usize) -> &Rat {
        assert!(
            k1 < self.shape.m && k2 < self.shape.n,
            "x^{k1} y^{k2} outside {}",
            self.shape
        );
        &self.coeffs[k1 * self.shape.n + k2]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn grid(&self) -> Vec<Vec<Rat>> {
        self.coeffs.chunks(self.shape.n).map(<[Rat]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Smallest shape holding every nonzero coefficient; `1x1` for zero.
    pub fn minimal_shape(&self) -> Shape {
        let (mut m, mut n) = (1, 1);
        for k1 in 0..self.shape.m {
            for k2 in 0..self.shape.n {
                if !self.coeff(k1, k2).is_zero() {
                    m = m.max(k1 + 1);
                    n = n.max(k2 + 1);
                }
            }
        }
        Shape { m, n }
    }

    /// Re-declares the polynomial in another space, padding or dropping
    /// zero coefficients. Fails if a nonzero coefficient would not fit.
    pub fn reshape(&self, shape: Shape) -> Result<Self> {
        let min = self.minimal_shape();
        if !self.is_zero() && !shape.contains(min) {
            return Err(Error::DegreeExceedsShape {
                k1: min.m - 1,
                k2: min.n - 1,
                shape,
            });
        }
        Ok(BiPoly::from_fn(shape, |k1, k2| {
            if k1 < self.shape.m && k2 < self.shape.n {
                self.coeff(k1, k2).clone()
            } else {
                Rat::zero()
            }
        }))
    }

    /// Exact value: Horner in `y` for each x-row, then Horner in `x`.
    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.coeffs.chunks(self.shape.n).rev().fold(Rat::zero(), |acc, row| {
            let row_val = row.iter().rev().fold(Rat::zero(), |a, c| a * y + c);
            acc * x + row_val
        })
    }

    /// `P(x, y0)` as a polynomial in `x` (length `m`, untrimmed degree bound).
    pub fn at_y(&self, y0: &Rat) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .chunks(self.shape.n)
                .map(|row| row.iter().rev().fold(Rat::zero(), |a, c| a * y0 + c))
                .collect(),
        )
    }

    /// `P(x0, y)` as a polynomial in `y`.
    pub fn at_x(&self, x0: &Rat) -> UniPoly {
        let mut out = vec![Rat::zero(); self.shape.n];
        let mut pw = Rat::one();
        for row in self.coeffs.chunks(self.shape.n) {
            for (o, c) in out.iter_mut().zip(row) {
                if !c.is_zero() {
                    *o += c * &pw;
                }
            }
            pw *= x0;
        }
        UniPoly::new(out)
    }

    pub fn add(&self, other: &BiPoly) -> Result<BiPoly> {
        self.require_same_shape("polynomial addition", other)?;
        Ok(BiPoly {
            shape: self.shape,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &BiPoly) -> Result<BiPoly> {
        self.require_same_shape("polynomial subtraction", other)?;
        Ok(BiPoly {
            shape: self.shape,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            shape: self.shape,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        BiPoly {
            shape: self.shape,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn require_same_shape(&self, op: &'static str, other: &BiPoly) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                op,
                left: self.shape,
                right: other.shape,
            })
        }
    }

    /// Equality as polynomials: grids are compared after zero-padding to the
    /// larger shape, so declared shapes may differ.
    pub fn poly_eq(&self, other: &BiPoly) -> bool {
        let m = self.shape.m.max(other.shape.m);
        let n = self.shape.n.max(other.shape.n);
        fn get(p: &BiPoly, k1: usize, k2: usize) -> Option<&Rat> {
            (k1 < p.shape.m && k2 < p.shape.n).then(|| p.coeff(k1, k2))
        }
        (0..m).all(|k1| {
            (0..n).all(|k2| match (get(self, k1, k2), get(other, k1, k2)) {
                (Some(a), Some(b)) => a == b,
                (Some(a), None) | (None, Some(a)) => a.is_zero(),
                (None, None) => true,
            })
        })
    }

    /// `P^T(x, y) = P(y, x)`, declared in the transposed space.
    pub fn transpose(&self) -> BiPoly {
        BiPoly::from_fn(self.shape.transposed(), |k1, k2| self.coeff(k2, k1).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.shape.is_square() && *self == self.transpose()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.shape.is_square() && *self == self.transpose().neg()
    }
}

impl fmt::Display for BiPoly {
    /// Canonical text, see [`BiPoly::to_text`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_poly(f, self)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[{}]({})", self.shape, self)
    }
}
