//! Property-based invariants for the exact arithmetic tower and the
//! transform/engine layers.

use proptest::prelude::*;

use equimod::{
    binomial_transform, build, det_oracle, hessenberg_minors, inverse_binomial_transform,
    leading_minors, materialize, parse_scalar, DenseMatrix, FieldTag, GibonacciParams,
    MatrixFamily, MatrixSpec, QuadScalar, Rational, SequenceSpec,
};

fn field_strategy() -> impl Strategy<Value = FieldTag> {
    prop_oneof![
        Just(FieldTag::RATIONAL),
        Just(FieldTag::GAUSSIAN),
        Just(FieldTag::new(2).unwrap()),
        Just(FieldTag::new(5).unwrap()),
    ]
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn scalar_in(field: FieldTag) -> BoxedStrategy<QuadScalar> {
    if field.is_rational() {
        rational_strategy()
            .prop_map(move |p| QuadScalar::from_rational(field, p))
            .boxed()
    } else {
        (rational_strategy(), rational_strategy())
            .prop_map(move |(p, q)| QuadScalar::new(field, p, q).unwrap())
            .boxed()
    }
}

fn scalar_strategy() -> impl Strategy<Value = (FieldTag, QuadScalar, QuadScalar, QuadScalar)> {
    field_strategy().prop_flat_map(|field| {
        (scalar_in(field), scalar_in(field), scalar_in(field))
            .prop_map(move |(x, y, z)| (field, x, y, z))
    })
}

proptest! {
    // 4000 cases so each of the four radicands sees on the order of a
    // thousand samples
    #![proptest_config(ProptestConfig::with_cases(4000))]

    // field axioms over every supported radicand
    #[test]
    fn field_axioms((field, x, y, z) in scalar_strategy()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!((&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!((&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
        prop_assert_eq!(&x + &QuadScalar::zero(field), x.clone());
        prop_assert_eq!(&x * &QuadScalar::one(field), x.clone());
        if !x.is_zero() {
            let inverse = QuadScalar::one(field).try_div(&x).unwrap();
            prop_assert_eq!(&x * &inverse, QuadScalar::one(field));
        }
    }

    #[test]
    fn norm_is_multiplicative((_, x, y, _) in scalar_strategy()) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn printing_round_trips((field, x, _, _) in scalar_strategy()) {
        let text = x.to_string();
        let back = parse_scalar(&text, field).unwrap();
        prop_assert_eq!(back, x);
    }
}

fn window_strategy() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-100i64..=100, 1..=12)
}

fn explicit_window(values: &[i64]) -> equimod::SequenceWindow {
    let terms: Vec<QuadScalar> = values
        .iter()
        .map(|&v| QuadScalar::from_integer(FieldTag::RATIONAL, v))
        .collect();
    materialize(&SequenceSpec::Explicit { terms }, values.len() - 1).unwrap()
}

proptest! {
    #[test]
    fn transforms_invert_each_other(values in window_strategy()) {
        let window = explicit_window(&values);
        let round = inverse_binomial_transform(&binomial_transform(&window));
        prop_assert_eq!(round.terms(), window.terms());
        let round = binomial_transform(&inverse_binomial_transform(&window));
        prop_assert_eq!(round.terms(), window.terms());
    }

    #[test]
    fn alternate_twice_is_identity(values in window_strategy()) {
        let terms: Vec<QuadScalar> = values
            .iter()
            .map(|&v| QuadScalar::from_integer(FieldTag::RATIONAL, v))
            .collect();
        let spec = SequenceSpec::Explicit { terms };
        let twice = SequenceSpec::alternate(SequenceSpec::alternate(spec.clone()));
        let n = values.len() - 1;
        let once = materialize(&spec, n).unwrap();
        let doubled = materialize(&twice, n).unwrap();
        prop_assert_eq!(once.terms(), doubled.terms());
    }
}

fn integer_matrix_strategy(max_order: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_order).prop_flat_map(|order| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, order), order)
    })
}

fn to_matrix(rows: &[Vec<i64>]) -> DenseMatrix {
    DenseMatrix::from_rows(
        FieldTag::RATIONAL,
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&v| QuadScalar::from_integer(FieldTag::RATIONAL, v))
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

proptest! {
    #[test]
    fn transpose_is_an_involution(rows in integer_matrix_strategy(6)) {
        let m = to_matrix(&rows);
        prop_assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn transpose_preserves_determinant(rows in integer_matrix_strategy(6)) {
        let m = to_matrix(&rows);
        prop_assert_eq!(det_oracle(&m.transpose()), det_oracle(&m));
    }

    #[test]
    fn hessenberg_engine_matches_oracle(rows in integer_matrix_strategy(8)) {
        let mut rows = rows;
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                if i > j + 1 {
                    *cell = 0;
                }
            }
        }
        let h = to_matrix(&rows);
        let fast = hessenberg_minors(&h).unwrap();
        let slow = leading_minors(&h);
        prop_assert_eq!(fast.values(), slow.values());
    }

    // expanding a minor by one row and column of zeros (except a unit pivot)
    // must not change the determinant
    #[test]
    fn bordered_determinant_is_stable(rows in integer_matrix_strategy(5)) {
        let m = to_matrix(&rows);
        let order = m.order();
        let f = FieldTag::RATIONAL;
        let bordered = DenseMatrix::from_rows(
            f,
            (0..=order)
                .map(|i| {
                    (0..=order)
                        .map(|j| {
                            if i == order || j == order {
                                QuadScalar::from_integer(f, i64::from(i == j))
                            } else {
                                m.get(i, j).clone()
                            }
                        })
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        prop_assert_eq!(det_oracle(&bordered), det_oracle(&m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // minor sequences are invariant under the a <-> b swap of the
    // three-value Toeplitz family
    #[test]
    fn toeplitz_swap_symmetry(a in -9i64..=9, b in -9i64..=9, c in -9i64..=9, order in 1usize..=7) {
        let f = FieldTag::RATIONAL;
        let (a, b, c) = (
            QuadScalar::from_integer(f, a),
            QuadScalar::from_integer(f, b),
            QuadScalar::from_integer(f, c),
        );
        let forward = build(&MatrixSpec::new(
            f,
            order,
            MatrixFamily::ToeplitzAbc { a: a.clone(), b: b.clone(), c: c.clone() },
        ))
        .unwrap();
        let swapped = build(&MatrixSpec::new(
            f,
            order,
            MatrixFamily::ToeplitzAbc { a: b, b: a, c },
        ))
        .unwrap();
        let forward_minors = leading_minors(&forward);
        let swapped_minors = leading_minors(&swapped);
        prop_assert_eq!(forward_minors.values(), swapped_minors.values());
    }

    // anchored family decomposition: G_n = a G*(n-1) + b G*(n)
    #[test]
    fn anchored_decomposition(a in -20i64..=20, b in -20i64..=20, r in 1i64..=4) {
        let f = FieldTag::RATIONAL;
        let params = GibonacciParams::new(
            QuadScalar::from_integer(f, a),
            QuadScalar::from_integer(f, b),
            QuadScalar::from_integer(f, r),
            QuadScalar::one(f),
        )
        .unwrap();
        let g = materialize(&SequenceSpec::gibonacci(params), 20).unwrap();
        let barred = materialize(
            &SequenceSpec::gibonacci(GibonacciParams::barred(QuadScalar::from_integer(f, r))),
            20,
        )
        .unwrap();
        let (a, b) = (QuadScalar::from_integer(f, a), QuadScalar::from_integer(f, b));
        for n in 1..=20usize {
            prop_assert_eq!(
                g.get(n).clone(),
                &a * barred.get(n - 1) + &b * barred.get(n)
            );
        }
    }
}
