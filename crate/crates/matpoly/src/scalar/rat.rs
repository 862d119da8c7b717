//! Exact rational scalars.
//!
//! [`Rat`] wraps an arbitrary-precision [`BigRational`]. Values are always
//! normalized: the denominator is positive, numerator and denominator are
//! coprime, and zero is `0/1`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    /// Builds `num / den`, failing when `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rat(r)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rat(Pow::pow(&self.0, exp))
    }

    /// Parses a finite decimal literal such as `-3.25`, `.5` or `12.`.
    pub fn from_decimal_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (negative, body) = split_sign(t);
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(Error::parse_at(s, 0, "expected a number"));
        }
        if let Some(bad) = int_part
            .char_indices()
            .chain(frac_part.char_indices())
            .find(|(_, c)| !c.is_ascii_digit())
        {
            let offset = s.find(bad.1).unwrap_or(0);
            return Err(Error::parse_at(s, offset, format!("unexpected character {:?}", bad.1)));
        }
        let digits = format!("{int_part}{frac_part}");
        let num: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| Error::parse_at(s, 0, "invalid digits"))?
        };
        let den = Pow::pow(BigInt::from(10u32), frac_part.len() as u32);
        let num = if negative { -num } else { num };
        Rat::new(num, den)
    }

    /// Parses `p/q` with integer `p` and nonzero integer `q`.
    pub fn from_fraction_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let Some((p, q)) = t.split_once('/') else {
            return Err(Error::parse_at(s, 0, "expected p/q"));
        };
        let p = parse_integer(p.trim()).ok_or_else(|| Error::parse_at(s, 0, "invalid numerator"))?;
        let q = parse_integer(q.trim())
            .ok_or_else(|| Error::parse_at(s, s.find('/').map_or(0, |i| i + 1), "invalid denominator"))?;
        if q.is_zero() {
            return Err(Error::parse_at(s, 0, "zero denominator"));
        }
        Rat::new(p, q)
    }

    /// Best-effort conversion for plotting and diagnostics. Not exact.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with exactly `sig` significant digits, rounded
    /// half away from zero. Zero renders as `0`.
    pub fn to_decimal_string(&self, sig: usize) -> String {
        assert!(sig > 0, "at least one significant digit");
        if self.is_zero() {
            return "0".to_string();
        }
        let num = self.numer().abs();
        let den = self.denom().clone();
        let ten = BigInt::from(10u32);

        // e such that 10^e <= |v| < 10^(e+1)
        let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
        let ge_pow = |e: i64| -> bool {
            if e >= 0 {
                num >= &den * Pow::pow(&ten, e as u64)
            } else {
                &num * Pow::pow(&ten, (-e) as u64) >= den
            }
        };
        while !ge_pow(e) {
            e -= 1;
        }
        while ge_pow(e + 1) {
            e += 1;
        }

        let shift = sig as i64 - 1 - e;
        let (n, d) = if shift >= 0 {
            (&num * Pow::pow(&ten, shift as u64), den.clone())
        } else {
            (num.clone(), &den * Pow::pow(&ten, (-shift) as u64))
        };
        let (q, r) = n.div_rem(&d);
        let mut scaled = if &r * 2u32 >= d { q + 1u32 } else { q };
        if scaled == Pow::pow(&ten, sig as u64) {
            scaled /= &ten;
            e += 1;
        }
        let digits = scaled.to_string();
        let point = e + 1;
        let mut out = String::new();
        if self.is_negative() {
            out.push('-');
        }
        if point <= 0 {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-point) as usize));
            out.push_str(&digits);
        } else if point as usize >= digits.len() {
            out.push_str(&digits);
            out.extend(std::iter::repeat_n('0', point as usize - digits.len()));
        } else {
            let (head, tail) = digits.split_at(point as usize);
            out.push_str(head);
            out.push('.');
            out.push_str(tail);
        }
        out
    }
}

fn split_sign(t: &str) -> (bool, &str) {
    if let Some(rest) = t.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = t.strip_prefix('\u{2212}') {
        (true, rest)
    } else if let Some(rest) = t.strip_prefix('+') {
        (false, rest)
    } else {
        (false, t)
    }
}

fn parse_integer(t: &str) -> Option<BigInt> {
    let (negative, body) = split_sign(t);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: BigInt = body.parse().ok()?;
    Some(if negative { -v } else { v })
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts integers, `p/q` fractions and finite decimals.
    fn from_str(s: &str) -> Result<Self> {
        if s.contains('/') {
            Rat::from_fraction_str(s)
        } else {
            Rat::from_decimal_str(s)
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rat {
            fn from(v: $t) -> Self {
                Rat::from_integer(v)
            }
        }
    )*};
}
from_int!(i8, i16, i32, i64, i128, isize, u8, u16, u32, u64, u128, usize);

impl From<BigInt> for Rat {
    fn from(v: BigInt) -> Self {
        Rat::from_integer(v)
    }
}

impl From<BigRational> for Rat {
    fn from(v: BigRational) -> Self {
        Rat(v)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($tr::$method(self.0, &rhs.0))
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($tr::$method(&self.0, rhs.0))
            }
        }
        impl $assign_tr<&Rat> for Rat {
            fn $assign(&mut self, rhs: &Rat) {
                $assign_tr::$assign(&mut self.0, &rhs.0);
            }
        }
        impl $assign_tr<Rat> for Rat {
            fn $assign(&mut self, rhs: Rat) {
                $assign_tr::$assign(&mut self.0, rhs.0);
            }
        }
    };
}
binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

// Panics on a zero divisor, like integer division. Use `checked_div` when the
// divisor is not known to be nonzero.
impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Div<&Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        &self / rhs
    }
}

impl Div<Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        self / &rhs
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, x| acc * x)
    }
}

impl Rat {
    pub fn signum(&self) -> Ordering {
        match self.numer().sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}
