//! Construction of the interpolant `P_A` in `P_m^n` of an `m x n` matrix.
//!
//! The nodes are the integer grid `{1..m} x {1..n}`; `P_A(i, j) = a_ij`.
//! Lagrange and both Newton routes work in two stages: a column polynomial
//! `p_r(x)` with `p_r(i) = a_ir` for every column `r`, then interpolation
//! across columns in `y` so that `P(x, j) = p_j(x)`. The linear-system route
//! solves for the coefficient grid against the node sample matrix.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bipoly::{BiPoly, Shape};
use crate::error::{Error, Result};
use crate::scalar::{Matrix, Rat, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionMethod {
    Lagrange,
    NewtonForward,
    NewtonBackward,
    LinearSystem,
}

impl ConstructionMethod {
    pub const ALL: [ConstructionMethod; 4] = [
        ConstructionMethod::Lagrange,
        ConstructionMethod::NewtonForward,
        ConstructionMethod::NewtonBackward,
        ConstructionMethod::LinearSystem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionMethod::Lagrange => "lagrange",
            ConstructionMethod::NewtonForward => "newton-fwd",
            ConstructionMethod::NewtonBackward => "newton-bwd",
            ConstructionMethod::LinearSystem => "linsys",
        }
    }
}

impl fmt::Display for ConstructionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown construction method {s:?}")))
    }
}

/// Systems up to this many unknowns are solved directly; larger ones go
/// through the Kronecker factorization of the sample matrix.
pub const DIRECT_SOLVE_LIMIT: usize = 100;

/// The unique interpolant of `a` in `P_m^n`.
pub fn construct(a: &Matrix, method: ConstructionMethod) -> BiPoly {
    match method {
        ConstructionMethod::Lagrange => lagrange(a),
        ConstructionMethod::NewtonForward => newton_forward(a),
        ConstructionMethod::NewtonBackward => newton_backward(a),
        ConstructionMethod::LinearSystem => linear_system(a),
    }
}

/// Runs every method and checks that they agree exactly.
pub fn construct_all(a: &Matrix) -> Result<BiPoly> {
    let mut results = ConstructionMethod::ALL.into_iter().map(|m| (m, construct(a, m)));
    let (first_method, first) = results.next().expect("four methods");
    for (method, p) in results {
        if !p.poly_eq(&first) {
            return Err(Error::InvalidArgument(format!(
                "{method} produced {p} but {first_method} produced {first}"
            )));
        }
    }
    Ok(first)
}

/// Samples `p` on its node grid: entry `(i, j)` is `p(i, j)` for
/// `1 <= i <= m`, `1 <= j <= n`.
pub fn to_matrix(p: &BiPoly) -> Matrix {
    let Shape { m, n } = p.shape();
    let mut data = Vec::with_capacity(m * n);
    for i in 1..=m {
        let row = p.at_x(&Rat::from(i));
        for j in 1..=n {
            data.push(row.eval(&Rat::from(j)));
        }
    }
    Matrix::new(m, n, data).expect("shape is positive")
}

/// `l_k(x) = ∏_{α≠k} (x - α) / (k - α)` over the nodes `1..=m`.
pub fn lagrange_basis(m: usize, k: usize) -> Result<UniPoly> {
    if k == 0 || k > m {
        return Err(Error::IndexOutOfRange { index: k, len: m });
    }
    let mut num = UniPoly::constant(Rat::one());
    let mut den = Rat::one();
    for alpha in (1..=m).filter(|&a| a != k) {
        num = num.mul(&UniPoly::linear_root(&Rat::from(alpha)));
        den *= Rat::from(k as i64 - alpha as i64);
    }
    Ok(num.scale(&den.recip()?))
}

/// Row `k` holds the `k`-th forward differences of `v`; `table[k][0]` is
/// `Δ^k v_1`, the anchor used by the forward Newton formula.
pub fn forward_difference_table(v: &[Rat]) -> Vec<Vec<Rat>> {
    let mut table = vec![v.to_vec()];
    while table.last().is_some_and(|row| row.len() > 1) {
        let prev = table.last().expect("non-empty");
        let next = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        table.push(next);
    }
    table
}

/// Row `k` holds the `k`-th backward differences of `v`, aligned so that the
/// last entry of each row is `∇^k v_last`, the backward Newton anchor.
pub fn backward_difference_table(v: &[Rat]) -> Vec<Vec<Rat>> {
    let mut table = vec![v.to_vec()];
    while table.last().is_some_and(|row| row.len() > 1) {
        let prev = table.last().expect("non-empty");
        let mut next: Vec<Rat> = prev
            .iter()
            .rev()
            .zip(prev.iter().rev().skip(1))
            .map(|(a, b)| a - b)
            .collect();
        next.reverse();
        table.push(next);
    }
    table
}

/// `∏_{t in offsets} (x - t) / k!` where `k = offsets.len()`.
fn newton_term(offsets: impl Iterator<Item = usize>) -> UniPoly {
    let mut p = UniPoly::constant(Rat::one());
    let mut k = 0usize;
    let mut fact = Rat::one();
    for t in offsets {
        k += 1;
        fact *= Rat::from(k);
        p = p.mul(&UniPoly::linear_root(&Rat::from(t)));
    }
    p.scale(&fact.recip().expect("factorial is positive"))
}

/// Forward Newton basis over nodes `1..=len`: term `k` is `C(x - 1, k)`.
fn forward_basis(len: usize) -> Vec<UniPoly> {
    (0..len).map(|k| newton_term(1..=k)).collect()
}

/// Backward Newton basis over nodes `1..=len`: term `k` is
/// `(x - len)(x - len + 1)...(x - len + k - 1) / k!`.
fn backward_basis(len: usize) -> Vec<UniPoly> {
    (0..len).map(|k| newton_term((0..k).map(|i| len - i))).collect()
}

fn columns(a: &Matrix) -> Vec<Vec<Rat>> {
    (0..a.cols())
        .map(|r| (0..a.rows()).map(|i| a[(i, r)].clone()).collect())
        .collect()
}

/// Combines per-column `x`-coefficient vectors `p_r` (each of length `m`)
/// with `y`-basis polynomials: `λ[k1][k2] = Σ_r p_r[k1] * basis_r[k2]`.
fn combine(shape: Shape, column_coeffs: &[Vec<Rat>], basis: &[Vec<Rat>]) -> BiPoly {
    BiPoly::from_fn(shape, |k1, k2| {
        column_coeffs
            .iter()
            .zip(basis)
            .filter(|(p, b)| !p[k1].is_zero() && !b[k2].is_zero())
            .map(|(p, b)| &p[k1] * &b[k2])
            .sum()
    })
}

/// `Σ_k weights[k] * basis[k]`, padded to `len` coefficients.
fn weighted(basis: &[Vec<Rat>], weights: &[Rat], len: usize) -> Vec<Rat> {
    (0..len)
        .map(|d| {
            basis
                .iter()
                .zip(weights)
                .filter(|(b, w)| !b[d].is_zero() && !w.is_zero())
                .map(|(b, w)| &b[d] * w)
                .sum()
        })
        .collect()
}

/// `(-1)^(len-k) C(len-1, k-1) ∏_{α≠k} (x - α)`: the Lagrange basis
/// polynomial `l_k` times `(len-1)!`, with integer coefficients.
fn scaled_lagrange_numerators(len: usize) -> Vec<Vec<BigInt>> {
    let mut binom = BigInt::one();
    (1..=len)
        .map(|k| {
            let mut num = vec![BigInt::one()];
            for alpha in (1..=len).filter(|&a| a != k) {
                // multiply by (x - alpha)
                let mut next = vec![BigInt::zero(); num.len() + 1];
                for (d, c) in num.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] -= c * BigInt::from(alpha);
                }
                num = next;
            }
            let w = if (len - k).is_multiple_of(2) {
                binom.clone()
            } else {
                -binom.clone()
            };
            binom = binom.clone() * BigInt::from(len - k) / BigInt::from(k);
            num.into_iter().map(|c| c * &w).collect()
        })
        .collect()
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Both stages over the integers: with `L` clearing the denominators of `a`,
/// `P = Wx^T (L A) Wy / (L (m-1)! (n-1)!)` where the rows of `Wx`, `Wy` are
/// the scaled basis numerators.
fn lagrange(a: &Matrix) -> BiPoly {
    let (m, n) = (a.rows(), a.cols());
    let lcm = a.entries().iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<BigInt> = a.entries().iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    let wx = scaled_lagrange_numerators(m);
    let wy = scaled_lagrange_numerators(n);

    // stage 1: column polynomials p_r(x), as columns of `cols[k1][r]`
    let mut cols = vec![vec![BigInt::zero(); n]; m];
    for (k, w) in wx.iter().enumerate() {
        for r in 0..n {
            let v = &scaled[k * n + r];
            if v.is_zero() {
                continue;
            }
            for (k1, c) in w.iter().enumerate() {
                cols[k1][r] += c * v;
            }
        }
    }
    // stage 2: P(x, y) = Σ_r p_r(x) l_r(y)
    let den = lcm * factorial(m - 1) * factorial(n - 1);
    let mut coeffs = Vec::with_capacity(m * n);
    for row in &cols {
        let mut acc = vec![BigInt::zero(); n];
        for (r, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (k2, c) in wy[r].iter().enumerate() {
                acc[k2] += c * v;
            }
        }
        coeffs.extend(
            acc.into_iter()
                .map(|v| Rat::new(v, den.clone()).expect("positive denominator")),
        );
    }
    BiPoly::new(a.shape(), coeffs).expect("mn coefficients")
}

fn newton_forward(a: &Matrix) -> BiPoly {
    let (m, n) = (a.rows(), a.cols());
    let bx: Vec<Vec<Rat>> = forward_basis(m).iter().map(|p| p.padded(m)).collect();
    let by: Vec<Vec<Rat>> = forward_basis(n).iter().map(|p| p.padded(n)).collect();

    let col_polys: Vec<Vec<Rat>> = columns(a)
        .iter()
        .map(|col| {
            let anchors: Vec<Rat> = forward_difference_table(col)
                .into_iter()
                .map(|row| row[0].clone())
                .collect();
            weighted(&bx, &anchors, m)
        })
        .collect();

    // Differences of whole column polynomials, coefficient by coefficient.
    let diffs = coefficientwise(&col_polys, m, |seq| {
        forward_difference_table(seq)
            .into_iter()
            .map(|row| row[0].clone())
            .collect()
    });
    combine(a.shape(), &diffs, &by)
}

fn newton_backward(a: &Matrix) -> BiPoly {
    let (m, n) = (a.rows(), a.cols());
    let bx: Vec<Vec<Rat>> = backward_basis(m).iter().map(|p| p.padded(m)).collect();
    let by: Vec<Vec<Rat>> = backward_basis(n).iter().map(|p| p.padded(n)).collect();

    let last = |table: Vec<Vec<Rat>>| -> Vec<Rat> {
        table
            .into_iter()
            .map(|row| row.last().expect("non-empty row").clone())
            .collect()
    };
    let col_polys: Vec<Vec<Rat>> = columns(a)
        .iter()
        .map(|col| weighted(&bx, &last(backward_difference_table(col)), m))
        .collect();
    let diffs = coefficientwise(&col_polys, m, |seq| last(backward_difference_table(seq)));
    combine(a.shape(), &diffs, &by)
}

/// Applies `anchors` to the sequence `(p_1[d], ..., p_n[d])` for each
/// coefficient index `d` and regroups the result as `n` coefficient vectors.
fn coefficientwise(polys: &[Vec<Rat>], len: usize, anchors: impl Fn(&[Rat]) -> Vec<Rat>) -> Vec<Vec<Rat>> {
    let per_coeff: Vec<Vec<Rat>> = (0..len)
        .map(|d| {
            let seq: Vec<Rat> = polys.iter().map(|p| p[d].clone()).collect();
            anchors(&seq)
        })
        .collect();
    (0..polys.len())
        .map(|r| (0..len).map(|d| per_coeff[d][r].clone()).collect())
        .collect()
}

/// Node-evaluation matrix of `P_m^n`: row `(i, j)` (row-major over nodes)
/// holds `i^k1 j^k2` for coefficients `(k1, k2)` in storage order
/// (`k1` major). `Λ · vec(coeffs) = vec(A)`.
pub fn interpolation_system(shape: Shape) -> Matrix {
    let Shape { m, n } = shape;
    let powers = |base: usize, count: usize| -> Vec<Rat> {
        let b = Rat::from(base);
        std::iter::successors(Some(Rat::one()), |p| Some(p * &b))
            .take(count)
            .collect()
    };
    let px: Vec<Vec<Rat>> = (1..=m).map(|i| powers(i, m)).collect();
    let py: Vec<Vec<Rat>> = (1..=n).map(|j| powers(j, n)).collect();
    let mn = m * n;
    Matrix::from_fn(mn, mn, |row, col| {
        let (i, j) = (row / n, row % n);
        let (k1, k2) = (col / n, col % n);
        &px[i][k1] * &py[j][k2]
    })
    .expect("positive size")
}

/// Vandermonde matrix on nodes `1..=len`: entry `(i, k)` is `(i+1)^k`.
fn vandermonde(len: usize) -> Matrix {
    Matrix::from_fn(len, len, |i, k| Rat::from(i + 1).pow(k as u32)).expect("positive size")
}

fn linear_system(a: &Matrix) -> BiPoly {
    let shape = a.shape();
    let mn = shape.len();
    if mn <= DIRECT_SOLVE_LIMIT {
        let lambda = interpolation_system(shape);
        let mu = Matrix::new(mn, 1, a.entries().to_vec()).expect("column vector");
        let x = lambda.solve(&mu).expect("node sample matrix is nonsingular");
        return BiPoly::new(shape, x.into_entries()).expect("mn coefficients");
    }
    // Λ = V_m ⊗ V_n, so the coefficient grid is V_m^{-1} A V_n^{-T}.
    let left = vandermonde(a.rows()).solve(a).expect("distinct nodes");
    let grid_t = vandermonde(a.cols()).solve(&left.transpose()).expect("distinct nodes");
    BiPoly::new(shape, grid_t.transpose().into_entries()).expect("mn coefficients")
}
