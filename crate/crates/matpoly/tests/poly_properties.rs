mod common;

use matpoly::isomap::coordinate_matrix;
use matpoly::*;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn shape(max: usize) -> impl Strategy<Value = Shape> {
    (1..=max, 1..=max).prop_map(|(m, n)| Shape::new(m, n).unwrap())
}

fn poly_in(s: Shape) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(rat(), s.len()).prop_map(move |v| BiPoly::new(s, v).unwrap())
}

fn matrix_in(s: Shape) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(rat(), s.len()).prop_map(move |v| Matrix::new(s.m, s.n, v).unwrap())
}

fn method() -> impl Strategy<Value = ConstructionMethod> {
    prop::sample::select(ConstructionMethod::ALL.to_vec())
}

fn square_shape(max: usize) -> impl Strategy<Value = Shape> {
    (1..=max).prop_map(|n| Shape::square(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn vector_space_axioms((p, q, r) in shape(5).prop_flat_map(|s| (poly_in(s), poly_in(s), poly_in(s))),
                           a in rat(), b in rat()) {
        prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
        prop_assert_eq!(p.add(&q).unwrap().add(&r).unwrap(), p.add(&q.add(&r).unwrap()).unwrap());
        prop_assert_eq!(p.add(&q).unwrap().scale(&a), p.scale(&a).add(&q.scale(&a)).unwrap());
        prop_assert_eq!(p.scale(&(&a + &b)), p.scale(&a).add(&p.scale(&b)).unwrap());
        prop_assert_eq!(p.scale(&a).scale(&b), p.scale(&(&a * &b)));
        prop_assert!(p.add(&p.neg()).unwrap().is_zero());
    }

    #[test]
    fn eval_is_linear((p, q) in shape(5).prop_flat_map(|s| (poly_in(s), poly_in(s))),
                      c in rat(), x in rat(), y in rat()) {
        prop_assert_eq!(p.add(&q).unwrap().eval(&x, &y), p.eval(&x, &y) + q.eval(&x, &y));
        prop_assert_eq!(p.scale(&c).eval(&x, &y), &c * &p.eval(&x, &y));
        prop_assert_eq!(p.eval(&x, &y), common::Sparse::from_poly(&p).eval(&x, &y));
    }

    #[test]
    fn transpose_swaps_arguments(p in shape(5).prop_flat_map(poly_in), x in rat(), y in rat()) {
        prop_assert_eq!(p.transpose().eval(&x, &y), p.eval(&y, &x));
        prop_assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn poly_eq_is_padding_invariant(p in shape(4).prop_flat_map(poly_in), dm in 0usize..3, dn in 0usize..3) {
        let s = p.shape();
        let wide = p.reshape(Shape::new(s.m + dm, s.n + dn).unwrap()).unwrap();
        prop_assert!(wide.poly_eq(&p) && p.poly_eq(&wide));
        let minimal = p.reshape(p.minimal_shape()).unwrap();
        prop_assert!(minimal.poly_eq(&wide));
    }

    #[test]
    fn text_and_json_round_trip(p in shape(5).prop_flat_map(poly_in)) {
        let text = p.to_text();
        let back = BiPoly::parse(&text, Some(p.shape())).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(BiPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn interpolates_nodes_and_round_trips(a in shape(6).prop_flat_map(matrix_in), m in method()) {
        let p = construct(&a, m);
        prop_assert_eq!(p.shape(), a.shape());
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                prop_assert_eq!(&p.eval(&Rat::from(i + 1), &Rat::from(j + 1)), &a[(i, j)]);
            }
        }
        prop_assert_eq!(to_matrix(&p), a);
        prop_assert_eq!(construct(&to_matrix(&p), ConstructionMethod::Lagrange), p);
    }

    #[test]
    fn methods_agree(a in shape(6).prop_flat_map(matrix_in)) {
        let first = construct(&a, ConstructionMethod::Lagrange);
        for m in ConstructionMethod::ALL {
            prop_assert_eq!(&construct(&a, m), &first, "{}", m);
        }
        if a.rows() <= 3 && a.cols() <= 3 {
            prop_assert!(common::interpolate(&a).matches(&first));
        }
    }

    #[test]
    fn uniqueness(a in shape(4).prop_flat_map(matrix_in), k in any::<prop::sample::Index>(), d in rat()) {
        prop_assume!(!d.is_zero());
        let p = construct(&a, ConstructionMethod::NewtonForward);
        let mut coeffs = p.coeffs().to_vec();
        let at = k.index(coeffs.len());
        coeffs[at] += d;
        let perturbed = BiPoly::new(p.shape(), coeffs).unwrap();
        prop_assert_ne!(to_matrix(&perturbed), a);
    }

    #[test]
    fn coordinate_matrix_is_the_map(a in shape(4).prop_flat_map(matrix_in)) {
        let c = coordinate_matrix(a.rows(), a.cols()).unwrap();
        let flat = Matrix::new(1, a.shape().len(), a.entries().to_vec()).unwrap();
        let coeffs = flat.mul(&c).unwrap();
        let p = construct(&a, ConstructionMethod::Lagrange);
        prop_assert_eq!(coeffs.entries(), p.coeffs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn homomorphism((a, b) in (1usize..=5, 1usize..=5, 1usize..=5)
        .prop_flat_map(|(m, k, n)| (matrix_in(Shape::new(m, k).unwrap()), matrix_in(Shape::new(k, n).unwrap()))),
        m in method())
    {
        let lhs = construct(&a.mul(&b).unwrap(), m);
        let rhs = dp_product(&construct(&a, m), &construct(&b, m)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_matches_oracle((p, q) in (1usize..=3, 1usize..=3, 1usize..=3)
        .prop_flat_map(|(m, k, n)| (poly_in(Shape::new(m, k).unwrap()), poly_in(Shape::new(k, n).unwrap()))))
    {
        let prod = dp_product(&p, &q).unwrap();
        let oracle = common::dp(&common::Sparse::from_poly(&p), &common::Sparse::from_poly(&q), p.shape().n);
        prop_assert!(oracle.matches(&prod));
    }

    #[test]
    fn associativity_and_scalars((p, q, r) in (1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4)
        .prop_flat_map(|(a, b, c, d)| (
            poly_in(Shape::new(a, b).unwrap()),
            poly_in(Shape::new(b, c).unwrap()),
            poly_in(Shape::new(c, d).unwrap()),
        )), c in rat())
    {
        let lhs = dp_product(&dp_product(&p, &q).unwrap(), &r).unwrap();
        let rhs = dp_product(&p, &dp_product(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let pq = dp_product(&p, &q).unwrap();
        prop_assert_eq!(pq.scale(&c), dp_product(&p.scale(&c), &q).unwrap());
        prop_assert_eq!(pq.scale(&c), dp_product(&p, &q.scale(&c)).unwrap());
    }

    #[test]
    fn distributivity((p, s, q, r) in (1usize..=4, 1usize..=4, 1usize..=4)
        .prop_flat_map(|(a, b, c)| (
            poly_in(Shape::new(a, b).unwrap()),
            poly_in(Shape::new(a, b).unwrap()),
            poly_in(Shape::new(b, c).unwrap()),
            poly_in(Shape::new(b, c).unwrap()),
        )))
    {
        let left = dp_product(&p, &q.add(&r).unwrap()).unwrap();
        prop_assert_eq!(left, dp_product(&p, &q).unwrap().add(&dp_product(&p, &r).unwrap()).unwrap());
        let right = dp_product(&p.add(&s).unwrap(), &q).unwrap();
        prop_assert_eq!(right, dp_product(&p, &q).unwrap().add(&dp_product(&s, &q).unwrap()).unwrap());
    }

    #[test]
    fn zero_and_identity(p in shape(4).prop_flat_map(poly_in), k in 1usize..=4) {
        let s = p.shape();
        let zero_right = BiPoly::zero(Shape::new(s.n, k).unwrap());
        let zero_left = BiPoly::zero(Shape::new(k, s.m).unwrap());
        prop_assert!(dp_product(&p, &zero_right).unwrap().is_zero());
        prop_assert!(dp_product(&zero_left, &p).unwrap().is_zero());
        prop_assert_eq!(&dp_product(&p, &identity_poly(s.n).unwrap()).unwrap(), &p);
        prop_assert_eq!(&dp_product(&identity_poly(s.m).unwrap(), &p).unwrap(), &p);
    }

    #[test]
    fn transpose_reverses_products((p, q) in (1usize..=4, 1usize..=4, 1usize..=4)
        .prop_flat_map(|(m, k, n)| (poly_in(Shape::new(m, k).unwrap()), poly_in(Shape::new(k, n).unwrap()))))
    {
        let lhs = dp_product(&p, &q).unwrap().transpose();
        prop_assert_eq!(lhs, dp_product(&q.transpose(), &p.transpose()).unwrap());
    }

    #[test]
    fn cayley_hamilton(p in square_shape(5).prop_flat_map(poly_in)) {
        prop_assert!(cayley_hamilton_residual(&p).unwrap().is_zero());
    }

    #[test]
    fn inverse_round_trip(p in square_shape(4).prop_flat_map(poly_in)) {
        match dp_inverse(&p) {
            Ok(inv) => {
                let id = identity_poly(p.shape().m).unwrap();
                prop_assert_eq!(&dp_product(&p, &inv).unwrap(), &id);
                prop_assert_eq!(&dp_product(&inv, &p).unwrap(), &id);
                prop_assert_eq!(dp_inverse(&inv).unwrap(), p);
            }
            Err(Error::Singular { .. }) => prop_assert!(!is_invertible(&p).unwrap()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn eigen_pairs_are_consistent(a in square_shape(4).prop_flat_map(|s| {
        prop::collection::vec(-3i64..=3, s.len())
            .prop_map(move |v| Matrix::new(s.m, s.n, v.into_iter().map(Rat::from).collect()).unwrap())
    })) {
        let p = construct(&a, ConstructionMethod::Lagrange);
        let pairs = eigen_pairs(&p).unwrap();
        let roots = rational_roots(&matpoly::char_poly(&a).unwrap());
        for e in &pairs {
            prop_assert!(verify_eigenpair(&p, &e.value, &e.eigen_poly).unwrap());
            prop_assert!(roots.iter().any(|(r, _)| *r == e.value));
        }
        for (r, _) in &roots {
            prop_assert!(pairs.iter().any(|e| e.value == *r));
        }
    }

    #[test]
    fn powers_follow_products(p in square_shape(3).prop_flat_map(poly_in), r in 0u64..6) {
        let mut expected = identity_poly(p.shape().m).unwrap();
        for _ in 0..r {
            expected = dp_product(&expected, &p).unwrap();
        }
        prop_assert_eq!(dp_power(&p, r).unwrap(), expected);
    }
}

#[test]
fn sample_systems_are_nonsingular() {
    for m in 1..=4 {
        for n in 1..=4 {
            let lambda = interp::interpolation_system(Shape::new(m, n).unwrap());
            assert!(!lambda.determinant().unwrap().is_zero(), "{m}x{n}");
        }
    }
}
