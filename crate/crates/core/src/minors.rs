//! Exact leading-principal-minor engines.
//!
//! Three independent routes produce the same values: a fraction-free /
//! field-elimination oracle, the Hessenberg last-column expansion, and the
//! closed forms for the special Toeplitz families. The oracle is the
//! reference implementation the others are verified against.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::{QuadScalar, Rational};
use crate::sequence::{gibonacci_window, GibonacciParams};

/// Which engine produced a minor sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Oracle,
    Hessenberg,
    ToeplitzClosed,
    GibonacciClosed,
}

impl Engine {
    pub fn name(&self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::Hessenberg => "hessenberg",
            Engine::ToeplitzClosed => "toeplitz_closed",
            Engine::GibonacciClosed => "gibonacci_closed",
        }
    }
}

/// The minors d0..=dn of a matrix together with their provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorSequence {
    values: Vec<QuadScalar>,
    engine: Engine,
}

impl MinorSequence {
    pub fn new(values: Vec<QuadScalar>, engine: Engine) -> MinorSequence {
        MinorSequence { values, engine }
    }

    pub fn values(&self) -> &[QuadScalar] {
        &self.values
    }

    pub fn get(&self, n: usize) -> &QuadScalar {
        &self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    /// The full determinant (last minor).
    pub fn det(&self) -> &QuadScalar {
        self.values.last().expect("minor sequence is nonempty")
    }
}

/// Exact determinant: fraction-free elimination over the integers when the
/// matrix is integral, exact field elimination with first-nonzero-pivot
/// column pivoting otherwise. Singular matrices return zero.
pub fn det_oracle(m: &DenseMatrix) -> QuadScalar {
    if m.is_integral() {
        let grid: Vec<Vec<BigInt>> = m
            .rows()
            .map(|row| row.iter().map(|e| e.to_integer().unwrap()).collect())
            .collect();
        QuadScalar::from_rational(m.field(), Rational::from_integer(det_bareiss(grid)))
    } else {
        det_field_elimination(m)
    }
}

/// One-step Bareiss elimination; every division is exact over the integers.
fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut negated = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(pivot_row) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, pivot_row);
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negated {
        -det
    } else {
        det
    }
}

#[allow(clippy::needless_range_loop)]
pub(crate) fn det_field_elimination(m: &DenseMatrix) -> QuadScalar {
    let n = m.order();
    let field = m.field();
    let mut grid: Vec<Vec<QuadScalar>> = m.rows().map(|r| r.to_vec()).collect();
    let mut det = QuadScalar::one(field);
    let mut negated = false;
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&i| !grid[i][k].is_zero()) else {
            return QuadScalar::zero(field);
        };
        if pivot_row != k {
            grid.swap(k, pivot_row);
            negated = !negated;
        }
        let pivot = grid[k][k].clone();
        det = det * &pivot;
        for i in k + 1..n {
            if grid[i][k].is_zero() {
                continue;
            }
            let factor = &grid[i][k] / &pivot;
            for j in k..n {
                let delta = &factor * &grid[k][j];
                grid[i][j] = &grid[i][j] - &delta;
            }
        }
    }
    if negated {
        -det
    } else {
        det
    }
}

/// All leading principal minors by the oracle, one block at a time. Zero
/// minors along the way are legitimate and handled per block.
pub fn leading_minors(m: &DenseMatrix) -> MinorSequence {
    let values = (1..=m.order())
        .map(|order| det_oracle(&m.leading_block(order)))
        .collect();
    MinorSequence::new(values, Engine::Oracle)
}

/// Minors of an upper Hessenberg matrix by last-column expansion:
///
/// ```text
/// d_k = sum_j (-1)^(k+j) h[j][k] * (prod_{l=j+1..=k} h[l][l-1]) * d_(j-1)
/// ```
///
/// with d_(-1) = 1. O(n^2) scalar operations overall.
pub fn hessenberg_minors(h: &DenseMatrix) -> Result<MinorSequence> {
    let n = h.order();
    for i in 0..n {
        for j in 0..n {
            if i > j + 1 && !h.get(i, j).is_zero() {
                return Err(Error::NotHessenberg { i, j });
            }
        }
    }
    let field = h.field();
    let one = QuadScalar::one(field);
    // minors[k + 1] = d_k, minors[0] = d_(-1) = 1
    let mut minors: Vec<QuadScalar> = Vec::with_capacity(n + 1);
    minors.push(one.clone());
    for k in 0..n {
        let mut acc = h.get(k, k) * &minors[k];
        let mut subdiagonal_product = one.clone();
        for j in (0..k).rev() {
            subdiagonal_product = subdiagonal_product * h.get(j + 1, j);
            let mut term = h.get(j, k) * &subdiagonal_product * &minors[j];
            if (k + j) % 2 == 1 {
                term = -term;
            }
            acc = acc + term;
        }
        minors.push(acc);
    }
    Ok(MinorSequence::new(minors.split_off(1), Engine::Hessenberg))
}

/// Minor sequence of a spec with the cheapest applicable engine: the closed
/// recurrence for unmodified three-value Toeplitz families, the Hessenberg
/// expansion for Hessenberg-shaped matrices, the oracle otherwise.
pub fn minors_auto(spec: &crate::matrix::MatrixSpec) -> Result<MinorSequence> {
    if spec.modifiers.is_empty() {
        if let crate::matrix::MatrixFamily::ToeplitzAbc { a, b, c } = &spec.family {
            let values = (1..=spec.order)
                .map(|n| det_toeplitz_abc(a, b, c, n, ToeplitzMethod::Recurrence))
                .collect::<Result<Vec<_>>>()?;
            return Ok(MinorSequence::new(values, Engine::ToeplitzClosed));
        }
    }
    let matrix = crate::matrix::build(spec)?;
    if matrix.is_upper_hessenberg() {
        return hessenberg_minors(&matrix);
    }
    Ok(leading_minors(&matrix))
}

/// Evaluation strategy for the three-value Toeplitz determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToeplitzMethod {
    Recurrence,
    Closed,
}

/// Determinant of the order-n Toeplitz matrix with diagonal c, upper part a,
/// lower part b. Indexing follows det T_1 = c, so `n` counts rows, not the
/// zero-based minor index used elsewhere.
pub fn det_toeplitz_abc(
    a: &QuadScalar,
    b: &QuadScalar,
    c: &QuadScalar,
    n: usize,
    method: ToeplitzMethod,
) -> Result<QuadScalar> {
    let field = a.field();
    for s in [b, c] {
        if s.field() != field {
            return Err(Error::FieldMismatch {
                left: field.d(),
                right: s.field().d(),
            });
        }
    }
    if n < 1 {
        return Err(Error::BadSpec(
            "Toeplitz determinant indexing starts at n = 1".into(),
        ));
    }
    let det2 = c * c - a * b;
    let value = match method {
        ToeplitzMethod::Recurrence => {
            let two_c = QuadScalar::from_integer(field, 2) * c;
            let p = &two_c - a - b;
            let q = (c - a) * (c - b);
            let mut prev = c.clone(); // det T_1
            let mut curr = det2; // det T_2
            match n {
                1 => prev,
                2 => curr,
                _ => {
                    for _ in 3..=n {
                        let next = &p * &curr - &q * &prev;
                        prev = curr;
                        curr = next;
                    }
                    curr
                }
            }
        }
        ToeplitzMethod::Closed => match n {
            1 => c.clone(),
            2 => det2,
            _ => {
                if a == b && b == c {
                    QuadScalar::zero(field)
                } else if a == b {
                    // [c + a(n-1)] (c-a)^(n-1)
                    let count = QuadScalar::from_integer(field, (n - 1) as i64);
                    (c + a * count) * (c - a).int_pow(n as u64 - 1)
                } else {
                    // [b (c-a)^n - a (c-b)^n] / (b - a)
                    let num = b * (c - a).int_pow(n as u64) - a * (c - b).int_pow(n as u64);
                    num.try_div(&(b - a))?
                }
            }
        },
    };
    Ok(value)
}

/// Closed form for the n-th leading minor of the Toeplitz matrix built from
/// a G(a, b, r, 1) window and its alternating companion:
///
///   d_0 = a,   d_n = (2b - ar)^(n-1) (a G_(n-1) + b G_n)   for n >= 1,
///
/// with the 0^0 = 1 convention making n = 1 well defined when 2b = ar.
pub fn det_gibonacci_closed(
    a: &QuadScalar,
    b: &QuadScalar,
    r: &QuadScalar,
    n: usize,
) -> Result<QuadScalar> {
    let field = a.field();
    for s in [b, r] {
        if s.field() != field {
            return Err(Error::FieldMismatch {
                left: field.d(),
                right: s.field().d(),
            });
        }
    }
    if n == 0 {
        return Ok(a.clone());
    }
    let params = GibonacciParams::new(a.clone(), b.clone(), r.clone(), QuadScalar::one(field))?;
    let g = gibonacci_window(&params, n);
    let base = QuadScalar::from_integer(field, 2) * b - a * r;
    Ok(base.int_pow(n as u64 - 1) * (a * &g[n - 1] + b * &g[n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{build, build_factor_h, MatrixFamily, MatrixSpec};
    use crate::scalar::FieldTag;

    fn rational_int(v: i64) -> QuadScalar {
        QuadScalar::from_integer(FieldTag::RATIONAL, v)
    }

    fn ints(values: &[i64]) -> Vec<QuadScalar> {
        values.iter().map(|&v| rational_int(v)).collect()
    }

    fn golden_pair() -> (QuadScalar, QuadScalar) {
        let d5 = FieldTag::new(5).unwrap();
        let phi = QuadScalar::rat(d5, 1, 2)
            + QuadScalar::rat(d5, 1, 2) * QuadScalar::radical(d5).unwrap();
        (phi.clone(), phi.conjugate())
    }

    #[test]
    fn oracle_identity() {
        let m = DenseMatrix::identity(FieldTag::RATIONAL, 5);
        assert!(det_oracle(&m).is_one());
    }

    #[test]
    fn oracle_on_displayed_bespoke_blocks() {
        let a3 = build(&MatrixSpec::new(
            FieldTag::RATIONAL,
            4,
            MatrixFamily::BespokeA,
        ))
        .unwrap();
        assert_eq!(det_oracle(&a3), rational_int(3));
        let b3 = build(&MatrixSpec::new(
            FieldTag::RATIONAL,
            4,
            MatrixFamily::BespokeB,
        ))
        .unwrap();
        assert_eq!(det_oracle(&b3), rational_int(4));
        let c3 = build(&MatrixSpec::new(
            FieldTag::RATIONAL,
            4,
            MatrixFamily::BespokeC,
        ))
        .unwrap();
        assert_eq!(det_oracle(&c3), rational_int(4));
    }

    #[test]
    fn bareiss_and_field_agree_including_pivot_cases() {
        // Both elimination paths run on the same matrices; first column
        // zero forces a swap in each.
        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![0, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
            vec![vec![1, 2, 3], vec![2, 4, 6], vec![7, 8, 9]],
            vec![
                vec![3, 1, 4, 1],
                vec![5, 9, 2, 6],
                vec![5, 3, 5, 8],
                vec![9, 7, 9, 3],
            ],
        ];
        for rows in cases {
            let m =
                DenseMatrix::from_rows(FieldTag::RATIONAL, rows.iter().map(|r| ints(r)).collect())
                    .unwrap();
            assert_eq!(det_oracle(&m), det_field_elimination(&m), "case {rows:?}");
        }
    }

    #[test]
    fn leading_minors_with_zero_head() {
        // Pell window against its alternating companion: d0 is legitimately
        // zero and later minors are 2^(n-1) P_n.
        let pell = SequenceSpecHelper::pell_window_spec();
        let spec = MatrixSpec::new(
            FieldTag::RATIONAL,
            5,
            MatrixFamily::Toeplitz {
                alpha: crate::sequence::SequenceSpec::alternate(pell.clone()),
                beta: pell,
            },
        );
        let m = build(&spec).unwrap();
        let minors = leading_minors(&m);
        assert_eq!(minors.values(), ints(&[0, 1, 4, 20, 96]).as_slice());
    }

    struct SequenceSpecHelper;
    impl SequenceSpecHelper {
        fn pell_window_spec() -> crate::sequence::SequenceSpec {
            crate::sequence::SequenceSpec::gibonacci(GibonacciParams::pell())
        }
    }

    #[test]
    fn leading_minors_of_bespoke_d() {
        let m = build(&MatrixSpec::new(
            FieldTag::RATIONAL,
            4,
            MatrixFamily::BespokeD,
        ))
        .unwrap();
        let minors = leading_minors(&m);
        assert_eq!(minors.values(), ints(&[1, -3, 6, -10]).as_slice());
    }

    #[test]
    fn first_minor_is_top_left_entry() {
        let m = DenseMatrix::from_rows(FieldTag::RATIONAL, vec![ints(&[42, 1]), ints(&[7, 0])])
            .unwrap();
        assert_eq!(leading_minors(&m).get(0), &rational_int(42));
    }

    #[test]
    fn hessenberg_engine_on_factor_matrix() {
        let one = rational_int(1);
        let h = build_factor_h(&one, &one, &one, 4).unwrap();
        let minors = hessenberg_minors(&h).unwrap();
        assert_eq!(minors.det(), &rational_int(8));
        assert_eq!(leading_minors(&h).values(), minors.values());
    }

    #[test]
    fn hessenberg_diagonal_case() {
        let m = DenseMatrix::from_rows(
            FieldTag::RATIONAL,
            vec![ints(&[2, 0, 0]), ints(&[0, 3, 0]), ints(&[0, 0, 5])],
        )
        .unwrap();
        let minors = hessenberg_minors(&m).unwrap();
        assert_eq!(minors.values(), ints(&[2, 6, 30]).as_slice());
    }

    #[test]
    fn hessenberg_shape_rejected() {
        let m = DenseMatrix::from_rows(
            FieldTag::RATIONAL,
            vec![ints(&[1, 2, 3]), ints(&[4, 5, 6]), ints(&[7, 8, 9])],
        )
        .unwrap();
        assert!(matches!(
            hessenberg_minors(&m),
            Err(Error::NotHessenberg { i: 2, j: 0 })
        ));
    }

    #[test]
    fn toeplitz_abc_golden_instances() {
        // Diagonal 1 with the golden pair gives shifted Fibonacci numbers,
        // diagonal 0 with the negated pair the down-shifted ones.
        let (phi, phi_bar) = golden_pair();
        let d5 = phi.field();
        let one = QuadScalar::one(d5);
        let zero = QuadScalar::zero(d5);
        for method in [ToeplitzMethod::Recurrence, ToeplitzMethod::Closed] {
            let p6 = det_toeplitz_abc(&phi, &phi_bar, &one, 6, method).unwrap();
            assert_eq!(p6, QuadScalar::from_integer(d5, 13));
            let q6 = det_toeplitz_abc(&(-&phi), &(-&phi_bar), &zero, 6, method).unwrap();
            assert_eq!(q6, QuadScalar::from_integer(d5, 5));
        }
    }

    #[test]
    fn toeplitz_abc_equal_entries_vanish() {
        let three = rational_int(3);
        for method in [ToeplitzMethod::Recurrence, ToeplitzMethod::Closed] {
            let d = det_toeplitz_abc(&three, &three, &three, 5, method).unwrap();
            assert!(d.is_zero());
        }
        // but the order-1 and order-2 seeds are not the n >= 3 case
        let d1 = det_toeplitz_abc(&three, &three, &three, 1, ToeplitzMethod::Closed).unwrap();
        assert_eq!(d1, three);
    }

    #[test]
    fn toeplitz_abc_equal_offdiagonal_case() {
        let one = rational_int(1);
        let two = rational_int(2);
        for method in [ToeplitzMethod::Recurrence, ToeplitzMethod::Closed] {
            let d = det_toeplitz_abc(&one, &one, &two, 4, method).unwrap();
            assert_eq!(d, rational_int(5));
        }
    }

    #[test]
    fn toeplitz_abc_rejects_index_zero() {
        let one = rational_int(1);
        assert!(det_toeplitz_abc(&one, &one, &one, 0, ToeplitzMethod::Closed).is_err());
    }

    #[test]
    fn toeplitz_abc_methods_match_oracle() {
        let samples = [
            (2i64, -1i64, 1i64),
            (3, 3, 7),
            (0, 5, 5),
            (-2, -2, -2),
            (4, 1, 0),
        ];
        for (a, b, c) in samples {
            let (a, b, c) = (rational_int(a), rational_int(b), rational_int(c));
            for n in 1..=8usize {
                let spec = MatrixSpec::new(
                    FieldTag::RATIONAL,
                    n,
                    MatrixFamily::ToeplitzAbc {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                    },
                );
                let oracle = det_oracle(&build(&spec).unwrap());
                for method in [ToeplitzMethod::Recurrence, ToeplitzMethod::Closed] {
                    assert_eq!(
                        det_toeplitz_abc(&a, &b, &c, n, method).unwrap(),
                        oracle,
                        "({a}, {b}, {c}) at n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn auto_engine_picks_cheap_paths_and_agrees() {
        let f = FieldTag::RATIONAL;
        let abc = MatrixSpec::new(
            f,
            6,
            MatrixFamily::ToeplitzAbc {
                a: rational_int(2),
                b: rational_int(-1),
                c: rational_int(3),
            },
        );
        let auto = minors_auto(&abc).unwrap();
        assert_eq!(auto.engine(), Engine::ToeplitzClosed);
        assert_eq!(
            auto.values(),
            leading_minors(&build(&abc).unwrap()).values()
        );

        let hess = MatrixSpec::new(
            f,
            5,
            MatrixFamily::FactorH {
                a: rational_int(1),
                b: rational_int(2),
                r: rational_int(1),
            },
        );
        let auto = minors_auto(&hess).unwrap();
        assert_eq!(auto.engine(), Engine::Hessenberg);
        assert_eq!(
            auto.values(),
            leading_minors(&build(&hess).unwrap()).values()
        );

        let dense = MatrixSpec::new(f, 5, MatrixFamily::BespokeA);
        assert_eq!(minors_auto(&dense).unwrap().engine(), Engine::Oracle);
    }

    #[test]
    fn gibonacci_closed_form_values() {
        let one = rational_int(1);
        let zero = rational_int(0);
        // (1, 1, 1) at n = 2 is the fourth Fibonacci number
        assert_eq!(
            det_gibonacci_closed(&one, &one, &one, 2).unwrap(),
            rational_int(3)
        );
        // (0, 1, 1) at n = 5 is 2^4 F_5
        assert_eq!(
            det_gibonacci_closed(&zero, &one, &one, 5).unwrap(),
            rational_int(80)
        );
        // n = 0 returns the anchor
        let a = rational_int(-7);
        assert_eq!(det_gibonacci_closed(&a, &one, &one, 0).unwrap(), a);
    }
}
