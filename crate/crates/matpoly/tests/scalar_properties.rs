mod common;

use matpoly::{char_poly, rational_roots, CharPolyCoeffs, Matrix, Rat};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(rat(), rows * cols).prop_map(move |v| Matrix::new(rows, cols, v).unwrap())
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| matrix(n, n))
}

/// Square matrices with small integer entries; singular ones are common.
fn small_square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(-2i64..=2, n * n)
            .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(Rat::from).collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Rat::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rat::one());
        } else {
            prop_assert!(a.recip().is_err());
        }
    }

    #[test]
    fn normalized_storage(n in -1000i64..1000, d in 1i64..1000, k in 1i64..50) {
        let a = Rat::new(n * k, d * k).unwrap();
        prop_assert_eq!(&a, &Rat::new(n, d).unwrap());
        prop_assert!(a.denom() > &0.into());
        let g = num_integer::Integer::gcd(a.numer(), a.denom());
        prop_assert!(g == 1.into());
    }

    #[test]
    fn literal_round_trip(a in rat()) {
        prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
    }

    #[test]
    fn product_laws(
        (a, b, c) in (1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4)
            .prop_flat_map(|(m, k, l, n)| (matrix(m, k), matrix(k, l), matrix(l, n)))
    ) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        prop_assert_eq!(a.mul(&b).unwrap(), common::mat_mul(&a, &b));
    }

    #[test]
    fn distributive((a, b, c) in (1usize..=4, 1usize..=4, 1usize..=4)
        .prop_flat_map(|(m, k, n)| (matrix(m, k), matrix(k, n), matrix(k, n))))
    {
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_iff_nonzero_determinant(a in small_square(4)) {
        let det = a.determinant().unwrap();
        prop_assert_eq!(&det, &common::det(&a));
        match a.inverse() {
            Ok(inv) => {
                prop_assert!(!det.is_zero());
                let id = Matrix::identity(a.rows()).unwrap();
                prop_assert_eq!(inv.mul(&a).unwrap(), id.clone());
                prop_assert_eq!(a.mul(&inv).unwrap(), id);
            }
            Err(matpoly::Error::Singular { column }) => {
                prop_assert!(det.is_zero());
                prop_assert!(column < a.rows());
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn null_space_is_kernel(a in (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-2i64..=2, r * c)
            .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(Rat::from).collect()).unwrap())
    })) {
        let basis = a.null_space();
        prop_assert_eq!(basis.len() + a.rank(), a.cols());
        for v in &basis {
            prop_assert!(a.mul(v).unwrap().is_zero());
        }
    }

    #[test]
    fn cayley_hamilton_on_matrices(a in square(5)) {
        let cp = char_poly(&a).unwrap();
        prop_assert_eq!(cp.degree(), a.rows());
        prop_assert!(cp.eval_matrix(&a).unwrap().is_zero());
        if a.rows() <= 4 {
            prop_assert_eq!(cp.coeffs().to_vec(), common::char_poly(&a));
        }
    }

    #[test]
    fn rational_roots_are_roots(roots in prop::collection::vec(rat(), 1..=5), extra in 0i64..=3) {
        // ∏ (λ - r_i) * (λ^2 + extra + 1), the last factor having no real roots
        let mut coeffs = vec![Rat::one()];
        let factors = roots.iter().map(|r| vec![-r.clone(), Rat::one()])
            .chain(std::iter::once(vec![Rat::from(extra + 1), Rat::zero(), Rat::one()]));
        for f in factors {
            let mut next = vec![Rat::zero(); coeffs.len() + f.len() - 1];
            for (i, a) in coeffs.iter().enumerate() {
                for (j, b) in f.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            coeffs = next;
        }
        let p = CharPolyCoeffs::new(coeffs).unwrap();
        let found = rational_roots(&p);
        let total: usize = found.iter().map(|(_, k)| k).sum();
        prop_assert_eq!(total, roots.len());
        for (r, k) in &found {
            prop_assert!(p.eval(r).is_zero());
            prop_assert_eq!(roots.iter().filter(|x| *x == r).count(), *k);
        }
    }
}
