//! Dense exact matrices over [`Rat`] and the elimination routines the
//! polynomial side is checked against.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bipoly::Shape;
use crate::error::{Error, Result};
use crate::scalar::Rat;

/// Dense row-major `rows x cols` matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidShape(format!("{rows}x{cols} matrix")));
        }
        if data.len() != rows * cols {
            return Err(Error::InvalidShape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::InvalidShape(format!(
                "row {} has {} entries, expected {c}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer data, mostly for tests and examples.
    pub fn from_i64<const C: usize>(rows: &[[i64; C]]) -> Self {
        let data = rows.iter().flatten().map(|&v| Rat::from(v)).collect();
        Matrix::new(rows.len(), C, data).expect("non-empty integer matrix")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Matrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        Matrix::from_fn(n, n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> Shape {
        Shape::new_unchecked(self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        self.data.chunks(self.cols).map(<[Rat]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone()).expect("same size")
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                op: "matrix addition",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                op: "matrix product",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = vec![Rat::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Matrix::new(self.rows, other.cols, data)
    }

    pub fn trace(&self) -> Result<Rat> {
        self.require_square("trace")?;
        Ok((0..self.rows).map(|i| &self[(i, i)]).sum())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    fn require_square(&self, op: &'static str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                op,
                shape: self.shape(),
            })
        }
    }

    /// Exact Gauss-Jordan inverse.
    ///
    /// Fails with [`Error::Singular`] carrying the (0-based) column in which
    /// no pivot could be found.
    pub fn inverse(&self) -> Result<Matrix> {
        self.require_square("matrix inverse")?;
        let n = self.rows;
        let rhs = Matrix::identity(n)?;
        self.solve(&rhs)
    }

    /// Solves `self * X = rhs` exactly for square nonsingular `self`.
    ///
    /// Rows are scaled to integers and eliminated fraction-free (Bareiss), so
    /// intermediate values never need gcd normalization.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        self.require_square("linear solve")?;
        if rhs.rows != self.rows {
            return Err(Error::ShapeMismatch {
                op: "linear solve",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<BigInt>> = (0..n)
            .map(|i| integer_row(self.row(i).iter().chain(rhs.row(i))).0)
            .collect();
        bareiss(&mut aug, n).map_err(|column| Error::Singular { column })?;

        // Cramer: det * x is integral, so each step divides exactly.
        let det = aug[n - 1][n - 1].clone();
        let mut data = vec![Rat::zero(); n * rhs.cols];
        let mut scaled = vec![BigInt::zero(); n];
        for c in 0..rhs.cols {
            for i in (0..n).rev() {
                let mut acc = &det * &aug[i][n + c];
                for j in i + 1..n {
                    if !aug[i][j].is_zero() {
                        acc -= &aug[i][j] * &scaled[j];
                    }
                }
                scaled[i] = acc / &aug[i][i];
                data[i * rhs.cols + c] = Rat::new(scaled[i].clone(), det.clone())?;
            }
        }
        Matrix::new(n, rhs.cols, data)
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<Rat> {
        self.require_square("determinant")?;
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let (row, s) = integer_row(self.row(i).iter());
                scale *= s;
                row
            })
            .collect();
        match bareiss(&mut a, n) {
            Ok(odd) => {
                let det = Rat::new(a[n - 1][n - 1].clone(), scale)?;
                Ok(if odd { -det } else { det })
            }
            Err(_) => Ok(Rat::zero()),
        }
    }

    /// Reduced row echelon form with unit pivots, plus the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][col].recip().expect("nonzero pivot");
            for v in a[r][col..].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for c in col..self.cols {
                    if !pivot_row[c].is_zero() {
                        row[c] -= &factor * &pivot_row[c];
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        let m = Matrix::from_rows(a).expect("same shape");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact kernel basis as column vectors.
    ///
    /// Each basis vector sets one free variable to 1 (in increasing column
    /// order) and the others to 0; pivot variables follow from the RREF.
    /// Full column rank gives an empty basis.
    pub fn null_space(&self) -> Vec<Matrix> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&r[(row, f)];
                }
                Matrix::new(self.cols, 1, v).expect("column vector")
            })
            .collect()
    }
}

/// Multiplies a row by the lcm of its denominators; returns the integer row
/// and the multiplier.
fn integer_row<'a>(row: impl Iterator<Item = &'a Rat> + Clone) -> (Vec<BigInt>, BigInt) {
    let lcm = row.clone().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints = row.map(|v| v.numer() * (&lcm / v.denom())).collect();
    (ints, lcm)
}

/// In-place Bareiss elimination on the first `n` columns of an integer
/// matrix with `n` rows. Returns whether an odd number of row swaps occurred,
/// or the first column without a pivot. On success `a[n-1][n-1]` is the
/// determinant of the leading block up to that sign.
fn bareiss(a: &mut [Vec<BigInt>], n: usize) -> std::result::Result<bool, usize> {
    let mut prev = BigInt::one();
    let mut odd = false;
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(k)?;
        if p != k {
            a.swap(p, k);
            odd = !odd;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..row.len() {
                let mut v = &row[j] * &pivot[k];
                if !factor.is_zero() && !pivot[j].is_zero() {
                    v -= &factor * &pivot[j];
                }
                row[j] = v / &prev;
            }
        }
        prev = top[k][k].clone();
    }
    Ok(odd)
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rat;

    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl fmt::Display for Matrix {
    /// Comma-separated rows, one per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(Rat::to_string).collect();
            writeln!(f, "{}", line.join(","))?;
        }
        Ok(())
    }
}
