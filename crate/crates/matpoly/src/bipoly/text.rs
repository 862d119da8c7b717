//! Canonical polynomial text.
//!
//! Printing: terms by descending total degree `k1 + k2`, ties by descending
//! `k1`; zero terms omitted; unit coefficients written without `1*`; the zero
//! polynomial is `0`. Example: `-1/2*x - y + 7/2`.
//!
//! Parsing accepts signed terms separated by `+`/`-`. A term is a product of
//! factors, each an unsigned rational literal (`3`, `2/5`, `0.25`),
//! `x`, `y`, `x^k` or `y^k`. The `*` between factors may be omitted and
//! whitespace is insignificant. Repeated terms are summed.

use std::fmt;

use crate::bipoly::{BiPoly, Shape, MAX_COEFFS};
use crate::error::{Error, Result};
use crate::scalar::Rat;

/// Exponents above this are rejected while parsing.
pub const MAX_EXPONENT: usize = 4096;

pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, coeff: &Rat, mono: &str, first: bool) -> fmt::Result {
    let negative = coeff.is_negative();
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let abs = coeff.abs();
    if mono.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{abs}*{mono}")
    }
}

fn monomial(k1: usize, k2: usize) -> String {
    let var = |name: &str, k: usize| match k {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{k}")),
    };
    [var("x", k1), var("y", k2)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, p: &BiPoly) -> fmt::Result {
    let shape = p.shape();
    let mut terms: Vec<(usize, usize)> = (0..shape.m)
        .flat_map(|k1| (0..shape.n).map(move |k2| (k1, k2)))
        .filter(|&(k1, k2)| !p.coeff(k1, k2).is_zero())
        .collect();
    terms.sort_by_key(|&(k1, k2)| std::cmp::Reverse((k1 + k2, k1)));
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, &(k1, k2)) in terms.iter().enumerate() {
        write_term(f, p.coeff(k1, k2), &monomial(k1, k2), i == 0)?;
    }
    Ok(())
}

impl BiPoly {
    /// Canonical text form.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses polynomial text.
    ///
    /// With `shape = Some(s)` the result is declared in `s` and any nonzero
    /// term outside it is a [`Error::DegreeExceedsShape`]. With `None` the
    /// minimal shape holding every nonzero term is used.
    pub fn parse(text: &str, shape: Option<Shape>) -> Result<BiPoly> {
        let terms = Parser {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
        .parse()?;

        let mut need = Shape { m: 1, n: 1 };
        for (c, k1, k2) in &terms {
            if !c.is_zero() {
                need.m = need.m.max(k1 + 1);
                need.n = need.n.max(k2 + 1);
            }
        }
        let target = match shape {
            Some(s) => s,
            None => Shape::new(need.m, need.n)?,
        };
        if target.len() > MAX_COEFFS {
            return Err(Error::InvalidShape(format!(
                "{target} exceeds {MAX_COEFFS} coefficients"
            )));
        }

        let mut coeffs = vec![Rat::zero(); target.len()];
        for (c, k1, k2) in terms {
            if c.is_zero() {
                continue;
            }
            if k1 >= target.m || k2 >= target.n {
                return Err(Error::DegreeExceedsShape { k1, k2, shape: target });
            }
            coeffs[k1 * target.n + k2] += c;
        }
        BiPoly::new(target, coeffs)
    }
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, at: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse_at(self.text, at, msg))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Vec<(Rat, usize, usize)>> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return self.err(self.pos, "empty polynomial"),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    Rat::one()
                }
                Some(b'-') => {
                    self.pos += 1;
                    -Rat::one()
                }
                Some(_) if first => Rat::one(),
                Some(c) => return self.err(self.pos, format!("expected '+' or '-', found {:?}", c as char)),
            };
            first = false;
            let (c, k1, k2) = self.term()?;
            terms.push((sign * c, k1, k2));
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Rat, usize, usize)> {
        let mut coeff = Rat::one();
        let (mut k1, mut k2) = (0usize, 0usize);
        let mut factors = 0;
        while let Some(c) = self.peek() {
            if factors > 0 && c == b'*' {
                self.pos += 1;
                if !matches!(self.peek(), Some(b'0'..=b'9' | b'.' | b'x' | b'y')) {
                    return self.err(self.pos, "expected a factor after '*'");
                }
                continue;
            }
            match c {
                b'0'..=b'9' | b'.' => {
                    coeff *= self.number()?;
                }
                b'x' | b'y' => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    let slot = if c == b'x' { &mut k1 } else { &mut k2 };
                    *slot += e;
                    if *slot > MAX_EXPONENT {
                        return self.err(self.pos, format!("exponent exceeds {MAX_EXPONENT}"));
                    }
                }
                b'+' | b'-' => break,
                other => return self.err(self.pos, format!("unexpected character {:?}", other as char)),
            }
            factors += 1;
        }
        if factors == 0 {
            return self.err(self.pos, "expected a term");
        }
        Ok((coeff, k1, k2))
    }

    fn number(&mut self) -> Result<Rat> {
        let start = self.pos;
        while self.pos < self.bytes.len() && matches!(self.bytes[self.pos], b'0'..=b'9' | b'.' | b'/') {
            self.pos += 1;
        }
        let lit = &self.text[start..self.pos];
        lit.parse::<Rat>()
            .or_else(|_| self.err(start, format!("invalid number {lit:?}")))
    }

    fn exponent(&mut self) -> Result<usize> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an exponent after '^'");
        }
        match self.text[start..self.pos].parse::<usize>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(e),
            _ => self.err(start, format!("exponent exceeds {MAX_EXPONENT}")),
        }
    }
}
