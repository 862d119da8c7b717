//! Independent reference computations: naive symbolic expansion over sparse
//! term maps and Leibniz determinants. Nothing here calls the library's
//! interpolation, product or elimination code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use matpoly::{BiPoly, Matrix, Rat, Shape};

/// Sparse bivariate polynomial: `(k1, k2) -> coefficient`, zeros removed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sparse(pub BTreeMap<(usize, usize), Rat>);

impl Sparse {
    pub fn constant(c: Rat) -> Sparse {
        Sparse::term(c, 0, 0)
    }

    pub fn term(c: Rat, k1: usize, k2: usize) -> Sparse {
        let mut map = BTreeMap::new();
        if !c.is_zero() {
            map.insert((k1, k2), c);
        }
        Sparse(map)
    }

    pub fn add(&self, other: &Sparse) -> Sparse {
        let mut out = self.0.clone();
        for (k, v) in &other.0 {
            let e = out.entry(*k).or_insert_with(Rat::zero);
            *e += v;
            if e.is_zero() {
                out.remove(k);
            }
        }
        Sparse(out)
    }

    pub fn mul(&self, other: &Sparse) -> Sparse {
        let mut out = Sparse::default();
        for ((a1, a2), u) in &self.0 {
            for ((b1, b2), v) in &other.0 {
                out = out.add(&Sparse::term(u * v, a1 + b1, a2 + b2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Sparse {
        Sparse::constant(c.clone()).mul(self)
    }

    /// Substitutes `x = v` (result has no `x`).
    pub fn at_x(&self, v: &Rat) -> Sparse {
        self.0.iter().fold(Sparse::default(), |acc, ((k1, k2), c)| {
            acc.add(&Sparse::term(c * &v.pow(*k1 as u32), 0, *k2))
        })
    }

    /// Substitutes `y = v` (result has no `y`).
    pub fn at_y(&self, v: &Rat) -> Sparse {
        self.0.iter().fold(Sparse::default(), |acc, ((k1, k2), c)| {
            acc.add(&Sparse::term(c * &v.pow(*k2 as u32), *k1, 0))
        })
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.0
            .iter()
            .map(|((k1, k2), c)| c * &x.pow(*k1 as u32) * y.pow(*k2 as u32))
            .sum()
    }

    pub fn from_poly(p: &BiPoly) -> Sparse {
        let s = p.shape();
        let mut out = Sparse::default();
        for k1 in 0..s.m {
            for k2 in 0..s.n {
                out = out.add(&Sparse::term(p.coeff(k1, k2).clone(), k1, k2));
            }
        }
        out
    }

    pub fn matches(&self, p: &BiPoly) -> bool {
        *self == Sparse::from_poly(p)
    }
}

/// `Σ_ij a_ij ∏_{α≠i} (x-α)/(i-α) ∏_{β≠j} (y-β)/(j-β)`, expanded term by term.
pub fn interpolate(a: &Matrix) -> Sparse {
    let (m, n) = (a.rows(), a.cols());
    let factor = |var_x: bool, node: usize, alpha: usize| {
        let inv = Rat::new(1, node as i64 - alpha as i64).unwrap();
        let var = if var_x {
            Sparse::term(inv.clone(), 1, 0)
        } else {
            Sparse::term(inv.clone(), 0, 1)
        };
        var.add(&Sparse::constant(-(Rat::from(alpha) * &inv)))
    };
    let mut out = Sparse::default();
    for i in 1..=m {
        for j in 1..=n {
            let mut t = Sparse::constant(a[(i - 1, j - 1)].clone());
            for alpha in (1..=m).filter(|&al| al != i) {
                t = t.mul(&factor(true, i, alpha));
            }
            for beta in (1..=n).filter(|&b| b != j) {
                t = t.mul(&factor(false, j, beta));
            }
            out = out.add(&t);
        }
    }
    out
}

/// `Σ_{k=1}^{n} P(x, k) Q(k, y)` by literal substitution.
pub fn dp(p: &Sparse, q: &Sparse, n: usize) -> Sparse {
    (1..=n).fold(Sparse::default(), |acc, k| {
        let k = Rat::from(k);
        acc.add(&p.at_y(&k).mul(&q.at_x(&k)))
    })
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).map(|k| &a[(i, k)] * &b[(k, j)]).sum()
    })
    .unwrap()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(vec![], false)];
    }
    let mut out = Vec::new();
    for (perm, odd) in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, n - 1);
            // inserting the largest element at `pos` adds len-pos inversions
            let parity = odd ^ ((perm.len() - pos) % 2 == 1);
            out.push((p, parity));
        }
    }
    out
}

/// Leibniz expansion.
pub fn det(a: &Matrix) -> Rat {
    let n = a.rows();
    permutations(n)
        .into_iter()
        .map(|(p, odd)| {
            let t: Rat = (0..n).map(|i| a[(i, p[i])].clone()).product();
            if odd {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// Coefficients (ascending) of `det(λI - A)` by Leibniz over univariate
/// polynomials.
pub fn char_poly(a: &Matrix) -> Vec<Rat> {
    let n = a.rows();
    let mul = |u: &[Rat], v: &[Rat]| {
        let mut out = vec![Rat::zero(); u.len() + v.len() - 1];
        for (i, x) in u.iter().enumerate() {
            for (j, y) in v.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let entry = |i: usize, j: usize| {
        if i == j {
            vec![-a[(i, j)].clone(), Rat::one()]
        } else {
            vec![-a[(i, j)].clone()]
        }
    };
    let mut total = vec![Rat::zero(); n + 1];
    for (p, odd) in permutations(n) {
        let t = (0..n).fold(vec![Rat::one()], |acc, i| mul(&acc, &entry(i, p[i])));
        for (k, c) in t.into_iter().enumerate() {
            total[k] += if odd { -c } else { c };
        }
    }
    total
}

pub fn q(s: &str) -> Rat {
    s.parse().unwrap()
}

pub fn poly(text: &str, m: usize, n: usize) -> BiPoly {
    BiPoly::parse(text, Some(Shape::new(m, n).unwrap())).unwrap()
}

pub fn mat(rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()).unwrap()
}

pub struct Golden {
    pub name: &'static str,
    pub matrix: Matrix,
    pub text: &'static str,
}

/// Published interpolants and their source matrices.
pub fn goldens() -> Vec<Golden> {
    let g = |name, rows: &[&[i64]], text| Golden {
        name,
        matrix: Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Rat::from(v)).collect()).collect()).unwrap(),
        text,
    };
    vec![
        g("tau", &[&[-1, 2], &[3, -4]], "-10*x*y + 14*x + 13*y - 18"),
        g("tau^2", &[&[7, -10], &[-15, 22]], "54*x*y - 76*x - 71*y + 100"),
        g("I1", &[&[1]], "1"),
        g("I2", &[&[1, 0], &[0, 1]], "2*x*y - 3*x - 3*y + 5"),
        g(
            "I3",
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
            "3/2*x^2*y^2 - 6*x^2*y - 6*x*y^2 + 5*x^2 + 49/2*x*y + 5*y^2 - 21*x - 21*y + 19",
        ),
        g("delta", &[&[1, -1, -2]], "1/2*y^2 - 7/2*y + 4"),
        g("eta", &[&[-1], &[1], &[3]], "2*x - 3"),
        g("vartheta", &[&[-15, 36], &[-1, 96]], "46*x*y - 32*x + 5*y - 34"),
        g("psi", &[&[-216, 2], &[540, -5]], "-763*x*y + 1519*x + 981*y - 1953"),
        g(
            "zeta",
            &[&[1, 0, 2], &[-1, 2, -3]],
            "-11/2*x*y^2 + 41/2*x*y + 7*y^2 - 17*x - 26*y + 22",
        ),
        g("theta", &[&[1, 0], &[0, -1], &[1, 0]], "x^2 - 4*x - y + 5"),
        g(
            "A1",
            &[&[1, -1, 2], &[-1, 0, -2]],
            "-4*x*y^2 + 15*x*y + 13/2*y^2 - 13*x - 49/2*y + 21",
        ),
        g(
            "A2",
            &[&[1, -1], &[-1, 0], &[2, -2]],
            "-4*x^2*y + 13/2*x^2 + 15*x*y - 49/2*x - 13*y + 21",
        ),
        g(
            "A3",
            &[&[1, 2, 3], &[2, 0, 4], &[3, 4, -1]],
            "-9/2*x^2*y^2 + 33/2*x^2*y + 33/2*x*y^2 - 12*x^2 - 123/2*x*y - 12*y^2 + 46*x + 46*y - 34",
        ),
        g(
            "A4",
            &[&[0, 1, 2], &[-1, 0, 3], &[-2, -3, 0]],
            "-x^2*y + x*y^2 + x^2 - y^2 - 2*x + 2*y",
        ),
    ]
}

/// The six published products among `A1..A4`, as `(left, right, text)`.
pub fn golden_products() -> Vec<(&'static str, &'static str, &'static str)> {
    vec![
        ("A1", "A2", "21*x*y - 32*x - 32*y + 49"),
        ("A1", "A3", "15*x*y^2 - 24*y^2 - 53*x*y + 26*x + 85*y - 44"),
        ("A1", "A4", "-7*x*y^2 + 10*y^2 + 24*x*y - 10*x - 35*y + 15"),
        (
            "A2",
            "A1",
            "17/2*x^2*y^2 - 32*x^2*y - 32*x*y^2 + 241/2*x*y + 55/2*x^2 + 55/2*y^2 - 207/2*x - 207/2*y + 89",
        ),
        (
            "A3",
            "A4",
            "-3*x^2*y^2 + 15*x^2*y + 9*x*y^2 - 47*x*y - 9*x^2 + 2*y^2 + 29*x + 8*y - 12",
        ),
        (
            "A4",
            "A3",
            "3*x^2*y^2 - 9*x^2*y - 15*x*y^2 + 47*x*y - 2*x^2 + 9*y^2 - 8*x - 29*y + 12",
        ),
    ]
}

pub fn golden(name: &str) -> Golden {
    goldens().into_iter().find(|g| g.name == name).expect("known golden")
}
