//! Characteristic polynomials (Faddeev-LeVerrier) and exact rational roots.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Matrix, Rat, UniPoly};

/// Monic characteristic polynomial `λ^n + c_{n-1} λ^{n-1} + ... + c_0`.
#[derive(Clone, PartialEq, Eq)]
pub struct CharPolyCoeffs {
    coeffs: Vec<Rat>,
}

impl CharPolyCoeffs {
    /// `coeffs[k]` multiplies `λ^k`; the last entry must be 1.
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        match coeffs.last() {
            Some(c) if c.is_one() => Ok(CharPolyCoeffs { coeffs }),
            _ => Err(Error::InvalidArgument("characteristic polynomial must be monic".into())),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.to_unipoly().eval(t)
    }

    /// Horner evaluation with matrix argument; the zero matrix for the
    /// characteristic polynomial of `a` (Cayley-Hamilton).
    pub fn eval_matrix(&self, a: &Matrix) -> Result<Matrix> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                op: "matrix polynomial",
                shape: a.shape(),
            });
        }
        let id = Matrix::identity(a.rows())?;
        let mut acc = Matrix::zeros(a.rows(), a.cols())?;
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?.add(&id.scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for CharPolyCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_unipoly().display_with("λ"))
    }
}

impl fmt::Debug for CharPolyCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Characteristic polynomial of a square matrix by Faddeev-LeVerrier.
///
/// With `M_0 = 0`: `M_k = A M_{k-1} + c_{n-k+1} I` and
/// `c_{n-k} = -tr(A M_k) / k`, starting from `c_n = 1`.
pub fn char_poly(a: &Matrix) -> Result<CharPolyCoeffs> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            op: "characteristic polynomial",
            shape: a.shape(),
        });
    }
    let n = a.rows();
    let id = Matrix::identity(n)?;
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut m = Matrix::zeros(n, n)?;
    for k in 1..=n {
        m = a.mul(&m)?.add(&id.scale(&coeffs[n - k + 1]))?;
        let am = a.mul(&m)?;
        coeffs[n - k] = -(am.trace()? / Rat::from(k));
    }
    CharPolyCoeffs::new(coeffs)
}

/// All rational roots with multiplicities, ascending.
///
/// Zero roots are stripped first. The remainder is scaled to integer
/// coefficients and candidates `±p/q` with `p | a_0`, `q | a_d` are tested
/// by exact evaluation; every accepted root is deflated out completely.
/// Irrational and complex roots are not reported.
pub fn rational_roots(p: &CharPolyCoeffs) -> Vec<(Rat, usize)> {
    let mut poly = p.to_unipoly();
    let mut roots = Vec::new();

    let zeros = poly.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push((Rat::zero(), zeros));
        poly = UniPoly::new(poly.coeffs()[zeros..].to_vec());
    }
    if poly.degree().unwrap_or(0) == 0 {
        return roots;
    }

    let lcm = poly.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly.coeffs().iter().map(|c| (c.numer() * &lcm) / c.denom()).collect();
    let lead = ints.last().expect("nonzero degree").abs();
    let constant = ints[0].abs();

    let numerators = divisors(&constant);
    let denominators = divisors(&lead);
    let mut candidates: Vec<Rat> = Vec::new();
    for num in &numerators {
        for den in &denominators {
            let c = Rat::new(num.clone(), den.clone()).expect("positive divisor");
            candidates.push(-c.clone());
            candidates.push(c);
        }
    }
    candidates.sort();
    candidates.dedup();

    for c in candidates {
        let mut mult = 0;
        loop {
            if poly.degree().unwrap_or(0) == 0 {
                break;
            }
            let (q, rem) = poly.deflate(&c);
            if !rem.is_zero() {
                break;
            }
            poly = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((c, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    roots
}

/// Positive divisors of a nonzero integer. Cofactors the factorizer cannot
/// split are treated as primes.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n: BigUint = n.magnitude().clone();
    if n.is_zero() {
        return Vec::new();
    }
    let (mut factors, rest) = num_prime::nt_funcs::factors(n, None);
    for f in rest.unwrap_or_default() {
        *factors.entry(f).or_insert(0) += 1;
    }
    let factors: BTreeMap<BigUint, usize> = factors;
    let mut divs = vec![BigUint::one()];
    for (prime, exp) in factors {
        let mut next = Vec::with_capacity(divs.len() * (exp + 1));
        for d in &divs {
            let mut pw = d.clone();
            next.push(pw.clone());
            for _ in 0..exp {
                pw *= &prime;
                next.push(pw.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs.into_iter().map(BigInt::from).collect()
}
