//! Dense univariate polynomials over [`Rat`], ascending coefficient order.
//!
//! Used for Lagrange bases, Newton falling-factorial terms, and the
//! characteristic polynomial.

use std::fmt;

use crate::scalar::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    /// Trailing zero coefficients are dropped; the zero polynomial has no
    /// coefficients.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// `x - root`
    pub fn linear_root(root: &Rat) -> Self {
        UniPoly::new(vec![-root, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<Rat> {
        assert!(self.coeffs.len() <= len, "degree exceeds requested length");
        let mut v = self.coeffs.clone();
        v.resize(len, Rat::zero());
        v
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Divides by `x - root`, returning quotient and remainder.
    pub fn deflate(&self, root: &Rat) -> (UniPoly, Rat) {
        if self.is_zero() {
            return (UniPoly::zero(), Rat::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![Rat::zero(); n - 1];
        let mut carry = Rat::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &(&carry * root);
            if k == 0 {
                return (UniPoly::new(quotient), v);
            }
            quotient[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        DisplayUni { poly: self, var }
    }
}

struct DisplayUni<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for DisplayUni<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{k}", self.var),
            };
            crate::bipoly::text::write_term(f, c, &mono, first)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}
