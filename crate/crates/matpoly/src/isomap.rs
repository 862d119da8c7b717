//! The polynomial map `D_p : A -> P_A` as a matrix, and randomized checks of
//! the structure it preserves.
//!
//! Both matrices here use the "rows are images" convention. The matrix basis
//! is `E_11, E_12, ..., E_mn` in row-major order. Row `i` of the coordinate
//! matrix holds the monomial coefficients of `D_p(E_i)`; row `k` of the
//! sampling matrix holds the values of the `k`-th monomial at the nodes. The
//! two are mutually inverse.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bipoly::{BiPoly, Shape};
use crate::dpalgebra::{dp_product, identity_poly};
use crate::error::{Error, Result};
use crate::interp::{construct, to_matrix, ConstructionMethod};
use crate::scalar::{Matrix, Rat};

/// Ordering of the monomial basis `x^k1 y^k2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MonomialOrder {
    /// `k1` major: `1, y, ..., x, xy, ...`. Matches coefficient storage.
    #[default]
    XMajor,
    /// `k2` major: `1, x, ..., y, xy, ...`.
    YMajor,
}

impl MonomialOrder {
    /// Position of `x^k1 y^k2` in this ordering.
    pub fn index(self, shape: Shape, k1: usize, k2: usize) -> usize {
        match self {
            MonomialOrder::XMajor => k1 * shape.n + k2,
            MonomialOrder::YMajor => k2 * shape.m + k1,
        }
    }

    /// Monomials `(k1, k2)` in this ordering.
    pub fn monomials(self, shape: Shape) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); shape.len()];
        for k1 in 0..shape.m {
            for k2 in 0..shape.n {
                out[self.index(shape, k1, k2)] = (k1, k2);
            }
        }
        out
    }
}

/// Largest `m * n` accepted by the coordinate and sampling matrices.
pub const MAX_BASIS: usize = 1024;

fn basis_shape(m: usize, n: usize) -> Result<Shape> {
    let shape = Shape::new(m, n)?;
    if shape.len() > MAX_BASIS {
        return Err(Error::InvalidShape(format!(
            "{shape} exceeds {MAX_BASIS} basis elements"
        )));
    }
    Ok(shape)
}

fn basis_matrix(shape: Shape, at: usize) -> Matrix {
    Matrix::from_fn(shape.m, shape.n, |i, j| {
        if i * shape.n + j == at {
            Rat::one()
        } else {
            Rat::zero()
        }
    })
    .expect("positive shape")
}

/// `[D_p]` for `P_m^n` with monomials in storage order.
pub fn coordinate_matrix(m: usize, n: usize) -> Result<Matrix> {
    coordinate_matrix_in(m, n, MonomialOrder::XMajor)
}

pub fn coordinate_matrix_in(m: usize, n: usize, order: MonomialOrder) -> Result<Matrix> {
    let shape = basis_shape(m, n)?;
    let monomials = order.monomials(shape);
    let mut data = Vec::with_capacity(shape.len() * shape.len());
    for e in 0..shape.len() {
        let image = construct(&basis_matrix(shape, e), ConstructionMethod::Lagrange);
        data.extend(monomials.iter().map(|&(k1, k2)| image.coeff(k1, k2).clone()));
    }
    Matrix::new(shape.len(), shape.len(), data)
}

/// `[D_p^{-1}]`: entry `(k, (i, j))` is `i^k1 j^k2` for the `k`-th monomial.
pub fn sampling_matrix(m: usize, n: usize) -> Result<Matrix> {
    sampling_matrix_in(m, n, MonomialOrder::XMajor)
}

pub fn sampling_matrix_in(m: usize, n: usize, order: MonomialOrder) -> Result<Matrix> {
    let shape = basis_shape(m, n)?;
    let monomials = order.monomials(shape);
    Matrix::from_fn(shape.len(), shape.len(), |k, node| {
        let (k1, k2) = monomials[k];
        let (i, j) = (node / n + 1, node % n + 1);
        Rat::from(i).pow(k1 as u32) * Rat::from(j).pow(k2 as u32)
    })
}

/// Outcome of a seeded randomized check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub inputs: BTreeMap<String, String>,
    pub expected: String,
    pub actual: String,
}

impl Report {
    fn new(suite: &str, seed: u64, trials: usize) -> Self {
        Report {
            suite: suite.to_string(),
            seed,
            trials,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    fn expect_eq<T: std::fmt::Display + PartialEq>(
        &mut self,
        check: &str,
        inputs: &[(&str, String)],
        expected: &T,
        actual: &T,
    ) {
        if expected != actual {
            self.failures.push(Failure {
                check: check.to_string(),
                inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
}

/// Small rational with numerator in `-9..=9` and denominator in `1..=4`.
pub fn random_rat(rng: &mut impl Rng) -> Rat {
    Rat::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)).expect("nonzero denominator")
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| random_rat(rng)).expect("positive size")
}

pub fn random_poly(rng: &mut impl Rng, shape: Shape) -> BiPoly {
    BiPoly::new(shape, (0..shape.len()).map(|_| random_rat(rng)).collect()).expect("length matches")
}

fn matrix_text(a: &Matrix) -> String {
    a.to_rows()
        .iter()
        .map(|r| r.iter().map(Rat::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

/// `D_p(αA + B) = α D_p(A) + D_p(B)` and `to_matrix(D_p(A)) = A` on random
/// shapes up to `max_m x max_n`. Trial 0 uses `α = 0`; trial 1 uses `α = 1`,
/// `B = 0`. Construction methods rotate across trials.
pub fn check_linearity(trials: usize, max_m: usize, max_n: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("linearity", seed, trials);
    for t in 0..trials {
        let method = ConstructionMethod::ALL[t % 4];
        let (m, n) = (rng.gen_range(1..=max_m.max(1)), rng.gen_range(1..=max_n.max(1)));
        let a = random_matrix(&mut rng, m, n);
        let (alpha, b) = match t {
            0 => (Rat::zero(), random_matrix(&mut rng, m, n)),
            1 => (Rat::one(), Matrix::zeros(m, n).expect("positive size")),
            _ => (random_rat(&mut rng), random_matrix(&mut rng, m, n)),
        };
        let inputs = [
            ("A", matrix_text(&a)),
            ("B", matrix_text(&b)),
            ("alpha", alpha.to_string()),
            ("method", method.to_string()),
        ];

        let combo = a.scale(&alpha).add(&b).expect("same shape");
        let lhs = construct(&combo, method);
        let pa = construct(&a, method);
        let rhs = pa.scale(&alpha).add(&construct(&b, method)).expect("same shape");
        report.expect_eq("linearity", &inputs, &rhs, &lhs);
        report.expect_eq("round trip", &inputs, &a, &to_matrix(&pa));
    }
    report
}

/// `D_p(AB) = D_p(A) ⊗ D_p(B)` on random conformable chains up to
/// `max_dim` in each dimension, plus three-term combinations
/// `D_p(Σ α_i A_i B_i) = Σ α_i D_p(A_i) ⊗ D_p(B_i)`.
pub fn check_product_structure(trials: usize, max_dim: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("product structure", seed, trials);
    let dim = |rng: &mut ChaCha8Rng| rng.gen_range(1..=max_dim.max(1));
    for t in 0..trials {
        let method = ConstructionMethod::ALL[t % 4];
        let (m, k, n) = (dim(&mut rng), dim(&mut rng), dim(&mut rng));
        let a = random_matrix(&mut rng, m, k);
        let b = if t == 0 {
            Matrix::identity(k).expect("positive")
        } else {
            random_matrix(&mut rng, k, n)
        };
        let inputs = [
            ("A", matrix_text(&a)),
            ("B", matrix_text(&b)),
            ("method", method.to_string()),
        ];
        let lhs = construct(&a.mul(&b).expect("conformable"), method);
        let rhs = dp_product(&construct(&a, method), &construct(&b, method)).expect("conformable");
        report.expect_eq("homomorphism", &inputs, &lhs, &rhs);

        let n2 = b.cols();
        let mut sum_m = Matrix::zeros(m, n2).expect("positive");
        let mut sum_p = BiPoly::zero(Shape::new(m, n2).expect("positive"));
        let mut inputs = Vec::new();
        for term in 0..3 {
            let alpha = random_rat(&mut rng);
            let ai = random_matrix(&mut rng, m, k);
            let bi = random_matrix(&mut rng, k, n2);
            sum_m = sum_m
                .add(&ai.mul(&bi).expect("conformable").scale(&alpha))
                .expect("same shape");
            let prod = dp_product(&construct(&ai, method), &construct(&bi, method)).expect("conformable");
            sum_p = sum_p.add(&prod.scale(&alpha)).expect("same shape");
            inputs.push((["A1", "A2", "A3"][term], matrix_text(&ai)));
            inputs.push((["B1", "B2", "B3"][term], matrix_text(&bi)));
            inputs.push((["alpha1", "alpha2", "alpha3"][term], alpha.to_string()));
        }
        report.expect_eq(
            "linear combination of products",
            &inputs,
            &construct(&sum_m, method),
            &sum_p,
        );
    }
    report
}

/// Ring-with-unity axioms of `(P_n^n, +, ⊗)` on random triples with
/// `n <= max_n`.
pub fn check_ring_axioms(trials: usize, max_n: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("ring axioms", seed, trials);
    for _ in 0..trials {
        let n = rng.gen_range(1..=max_n.max(1));
        let shape = Shape::square(n).expect("positive");
        let (p, q, r) = (
            random_poly(&mut rng, shape),
            random_poly(&mut rng, shape),
            random_poly(&mut rng, shape),
        );
        let inputs = [
            ("P", p.to_text()),
            ("Q", q.to_text()),
            ("R", r.to_text()),
            ("n", n.to_string()),
        ];
        let zero = BiPoly::zero(shape);
        let id = identity_poly(n).expect("positive");
        let mul = |a: &BiPoly, b: &BiPoly| dp_product(a, b).expect("square");
        let add = |a: &BiPoly, b: &BiPoly| a.add(b).expect("same shape");

        report.expect_eq(
            "additive associativity",
            &inputs,
            &add(&add(&p, &q), &r),
            &add(&p, &add(&q, &r)),
        );
        report.expect_eq("additive commutativity", &inputs, &add(&p, &q), &add(&q, &p));
        report.expect_eq("additive identity", &inputs, &p, &add(&p, &zero));
        report.expect_eq("additive inverse", &inputs, &zero, &add(&p, &p.neg()));
        report.expect_eq("associativity", &inputs, &mul(&mul(&p, &q), &r), &mul(&p, &mul(&q, &r)));
        report.expect_eq(
            "left distributivity",
            &inputs,
            &mul(&p, &add(&q, &r)),
            &add(&mul(&p, &q), &mul(&p, &r)),
        );
        report.expect_eq(
            "right distributivity",
            &inputs,
            &mul(&add(&p, &q), &r),
            &add(&mul(&p, &r), &mul(&q, &r)),
        );
        report.expect_eq("left unity", &inputs, &p, &mul(&id, &p));
        report.expect_eq("right unity", &inputs, &p, &mul(&p, &id));
    }
    report
}
