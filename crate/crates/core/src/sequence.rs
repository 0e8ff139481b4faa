//! Declarative sequence generators and the alternating/binomial transforms.
//!
//! Sequences are described by a `SequenceSpec` and materialized into exact
//! windows of terms. The transforms are computed by their defining sums with
//! exact binomial coefficients, so they can serve as oracles for closed-form
//! claims elsewhere in the crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{FieldTag, QuadScalar};

/// Anchors of a second-order recurrence G0 = a, G1 = b, Gn = r*G(n-1) + s*G(n-2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GibonacciParams {
    a: QuadScalar,
    b: QuadScalar,
    r: QuadScalar,
    s: QuadScalar,
}

impl GibonacciParams {
    pub fn new(a: QuadScalar, b: QuadScalar, r: QuadScalar, s: QuadScalar) -> Result<Self> {
        for other in [&b, &r, &s] {
            if other.field() != a.field() {
                return Err(Error::FieldMismatch {
                    left: a.field().d(),
                    right: other.field().d(),
                });
            }
        }
        Ok(GibonacciParams { a, b, r, s })
    }

    fn named(a: i64, b: i64, r: i64, s: i64) -> Self {
        let f = FieldTag::RATIONAL;
        GibonacciParams {
            a: QuadScalar::from_integer(f, a),
            b: QuadScalar::from_integer(f, b),
            r: QuadScalar::from_integer(f, r),
            s: QuadScalar::from_integer(f, s),
        }
    }

    pub fn fibonacci() -> Self {
        Self::named(0, 1, 1, 1)
    }

    pub fn lucas() -> Self {
        Self::named(2, 1, 1, 1)
    }

    pub fn pell() -> Self {
        Self::named(0, 1, 2, 1)
    }

    pub fn jacobsthal() -> Self {
        Self::named(0, 1, 1, 2)
    }

    /// The (0, 1, r, 1) family underlying the factorization identities.
    pub fn barred(r: QuadScalar) -> Self {
        let f = r.field();
        GibonacciParams {
            a: QuadScalar::zero(f),
            b: QuadScalar::one(f),
            r,
            s: QuadScalar::one(f),
        }
    }

    pub fn a(&self) -> &QuadScalar {
        &self.a
    }

    pub fn b(&self) -> &QuadScalar {
        &self.b
    }

    pub fn r(&self) -> &QuadScalar {
        &self.r
    }

    pub fn s(&self) -> &QuadScalar {
        &self.s
    }

    pub fn field(&self) -> FieldTag {
        self.a.field()
    }

    /// Whether the anchors are (0, 1); only this family extends to index -1.
    pub fn is_anchored_zero_one(&self) -> bool {
        self.a.is_zero() && self.b.is_one()
    }
}

/// Declarative description of a sequence, including transform wrappers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceSpec {
    Gibonacci {
        params: GibonacciParams,
        shift: usize,
    },
    HeadThenConstant {
        head: Vec<QuadScalar>,
        tail: QuadScalar,
    },
    Periodic {
        head: Vec<QuadScalar>,
        cycle: Vec<QuadScalar>,
    },
    Arithmetic {
        start: QuadScalar,
        step: QuadScalar,
    },
    /// u * t^i + v.
    GeometricAffine {
        u: QuadScalar,
        t: QuadScalar,
        v: QuadScalar,
    },
    Explicit {
        terms: Vec<QuadScalar>,
    },
    Alternate(Box<SequenceSpec>),
    Binomial(Box<SequenceSpec>),
    InverseBinomial(Box<SequenceSpec>),
}

impl SequenceSpec {
    pub fn gibonacci(params: GibonacciParams) -> Self {
        SequenceSpec::Gibonacci { params, shift: 0 }
    }

    pub fn alternate(inner: SequenceSpec) -> Self {
        SequenceSpec::Alternate(Box::new(inner))
    }

    pub fn binomial(inner: SequenceSpec) -> Self {
        SequenceSpec::Binomial(Box::new(inner))
    }

    pub fn inverse_binomial(inner: SequenceSpec) -> Self {
        SequenceSpec::InverseBinomial(Box::new(inner))
    }

    /// The field every term lives in; errors if scalars disagree.
    pub fn field(&self) -> Result<FieldTag> {
        let mut scalars: Vec<&QuadScalar> = Vec::new();
        self.collect_scalars(&mut scalars);
        let first = scalars
            .first()
            .ok_or_else(|| Error::BadSpec("sequence spec carries no scalars".into()))?;
        for s in &scalars[1..] {
            if s.field() != first.field() {
                return Err(Error::FieldMismatch {
                    left: first.field().d(),
                    right: s.field().d(),
                });
            }
        }
        Ok(first.field())
    }

    fn collect_scalars<'a>(&'a self, out: &mut Vec<&'a QuadScalar>) {
        match self {
            SequenceSpec::Gibonacci { params, .. } => {
                out.extend([&params.a, &params.b, &params.r, &params.s]);
            }
            SequenceSpec::HeadThenConstant { head, tail } => {
                out.extend(head.iter());
                out.push(tail);
            }
            SequenceSpec::Periodic { head, cycle } => {
                out.extend(head.iter());
                out.extend(cycle.iter());
            }
            SequenceSpec::Arithmetic { start, step } => out.extend([start, step]),
            SequenceSpec::GeometricAffine { u, t, v } => out.extend([u, t, v]),
            SequenceSpec::Explicit { terms } => out.extend(terms.iter()),
            SequenceSpec::Alternate(inner)
            | SequenceSpec::Binomial(inner)
            | SequenceSpec::InverseBinomial(inner) => inner.collect_scalars(out),
        }
    }
}

/// A materialized prefix of a sequence: terms 0..=n plus the spec that
/// produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceWindow {
    spec: SequenceSpec,
    terms: Vec<QuadScalar>,
}

impl SequenceWindow {
    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn terms(&self) -> &[QuadScalar] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, i: usize) -> &QuadScalar {
        &self.terms[i]
    }

    pub fn field(&self) -> FieldTag {
        self.terms[0].field()
    }
}

/// Materialize terms 0..=n of a spec.
pub fn materialize(spec: &SequenceSpec, n: usize) -> Result<SequenceWindow> {
    let field = spec.field()?;
    let len = n + 1;
    let terms = match spec {
        SequenceSpec::Gibonacci { params, shift } => {
            let window = gibonacci_window(params, shift + n);
            window[*shift..].to_vec()
        }
        SequenceSpec::HeadThenConstant { head, tail } => (0..len)
            .map(|i| head.get(i).unwrap_or(tail).clone())
            .collect(),
        SequenceSpec::Periodic { head, cycle } => {
            if cycle.is_empty() {
                return Err(Error::BadSpec("periodic cycle must be nonempty".into()));
            }
            (0..len)
                .map(|i| {
                    if i < head.len() {
                        head[i].clone()
                    } else {
                        cycle[(i - head.len()) % cycle.len()].clone()
                    }
                })
                .collect()
        }
        SequenceSpec::Arithmetic { start, step } => {
            let mut terms = Vec::with_capacity(len);
            let mut current = start.clone();
            for _ in 0..len {
                terms.push(current.clone());
                current = &current + step;
            }
            terms
        }
        SequenceSpec::GeometricAffine { u, t, v } => {
            let mut terms = Vec::with_capacity(len);
            let mut power = u.clone();
            for _ in 0..len {
                terms.push(&power + v);
                power = &power * t;
            }
            terms
        }
        SequenceSpec::Explicit { terms } => {
            if terms.len() < len {
                return Err(Error::ExplicitExhausted {
                    len: terms.len(),
                    wanted: len,
                });
            }
            terms[..len].to_vec()
        }
        SequenceSpec::Alternate(inner) => {
            let inner_window = materialize(inner, n)?;
            alternate_terms(inner_window.terms())
        }
        SequenceSpec::Binomial(inner) => {
            let inner_window = materialize(inner, n)?;
            binomial_sum_terms(inner_window.terms(), false)
        }
        SequenceSpec::InverseBinomial(inner) => {
            let inner_window = materialize(inner, n)?;
            binomial_sum_terms(inner_window.terms(), true)
        }
    };
    debug_assert!(terms.iter().all(|t| t.field() == field));
    Ok(SequenceWindow {
        spec: spec.clone(),
        terms,
    })
}

fn alternate_terms(terms: &[QuadScalar]) -> Vec<QuadScalar> {
    terms
        .iter()
        .enumerate()
        .map(|(i, t)| if i % 2 == 0 { t.clone() } else { -t })
        .collect()
}

/// The defining sums of both transforms; `inverse` inserts the (-1)^(i+k)
/// sign. O(n^2) exact arithmetic, no shortcuts.
fn binomial_sum_terms(terms: &[QuadScalar], inverse: bool) -> Vec<QuadScalar> {
    let Some(first) = terms.first() else {
        return Vec::new();
    };
    let field = first.field();
    let mut out = Vec::with_capacity(terms.len());
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for (i, _) in terms.iter().enumerate() {
        let mut acc = QuadScalar::zero(field);
        for (k, coeff) in row.iter().enumerate() {
            let mut contribution = terms[k].mul_int(coeff);
            if inverse && (i + k) % 2 == 1 {
                contribution = -contribution;
            }
            acc = acc + contribution;
        }
        out.push(acc);
        row = next_binomial_row(&row);
    }
    out
}

/// Pascal step: row of C(i, .) to row of C(i+1, .).
fn next_binomial_row(row: &[BigInt]) -> Vec<BigInt> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(BigInt::one());
    for w in row.windows(2) {
        next.push(&w[0] + &w[1]);
    }
    next.push(BigInt::one());
    next
}

/// Exact binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial transform: out_i = sum_k C(i, k) * in_k.
pub fn binomial_transform(window: &SequenceWindow) -> SequenceWindow {
    SequenceWindow {
        spec: SequenceSpec::binomial(window.spec.clone()),
        terms: binomial_sum_terms(&window.terms, false),
    }
}

/// Inverse binomial transform: out_i = sum_k (-1)^(i+k) C(i, k) * in_k.
pub fn inverse_binomial_transform(window: &SequenceWindow) -> SequenceWindow {
    SequenceWindow {
        spec: SequenceSpec::inverse_binomial(window.spec.clone()),
        terms: binomial_sum_terms(&window.terms, true),
    }
}

/// Terms G0..=Gn of a recurrence family as a plain vector.
pub fn gibonacci_window(params: &GibonacciParams, n: usize) -> Vec<QuadScalar> {
    let mut terms = Vec::with_capacity(n + 1);
    terms.push(params.a.clone());
    if n >= 1 {
        terms.push(params.b.clone());
    }
    for i in 2..=n {
        let next = params.r() * &terms[i - 1] + params.s() * &terms[i - 2];
        terms.push(next);
    }
    terms
}

/// A single term. Index -1 is permitted only for (0, 1) anchored families,
/// where it is 1 by convention.
pub fn gibonacci_term(params: &GibonacciParams, n: i64) -> Result<QuadScalar> {
    if n < -1 {
        return Err(Error::NegativeIndex);
    }
    if n == -1 {
        if params.is_anchored_zero_one() {
            return Ok(QuadScalar::one(params.field()));
        }
        return Err(Error::NegativeIndex);
    }
    Ok(gibonacci_window(params, n as usize).pop().unwrap())
}

/// Which transformed family a recurrence is requested for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformVariant {
    /// Binomial transform of G itself.
    Binomial,
    /// Binomial transform of the alternating-sign companion of G.
    BinomialOfAlternate,
}

/// Second-order recurrence coefficients satisfied by the transformed
/// windows of a G(a, b, r, 1) family: (r+2, -r) for the binomial
/// transform and (2-r, r) for the binomial transform of the alternate.
pub fn transformed_recurrence_coeffs(
    r: &QuadScalar,
    variant: TransformVariant,
) -> (QuadScalar, QuadScalar) {
    let two = QuadScalar::from_integer(r.field(), 2);
    match variant {
        TransformVariant::Binomial => (&two + r, -r),
        TransformVariant::BinomialOfAlternate => (&two - r, r.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn ints(field: FieldTag, values: &[i64]) -> Vec<QuadScalar> {
        values
            .iter()
            .map(|&v| QuadScalar::from_integer(field, v))
            .collect()
    }

    fn window_ints(window: &SequenceWindow) -> Vec<i64> {
        window
            .terms()
            .iter()
            .map(|t| {
                let r = t.rational_part();
                assert!(t.is_integer(), "non-integer term {t}");
                i64::try_from(r.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn fibonacci_window() {
        let spec = SequenceSpec::gibonacci(GibonacciParams::fibonacci());
        let w = materialize(&spec, 10).unwrap();
        assert_eq!(window_ints(&w), vec![0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]);
    }

    #[test]
    fn lucas_window() {
        let spec = SequenceSpec::gibonacci(GibonacciParams::lucas());
        let w = materialize(&spec, 4).unwrap();
        assert_eq!(window_ints(&w), vec![2, 1, 3, 4, 7]);
    }

    #[test]
    fn periodic_window() {
        let f = FieldTag::RATIONAL;
        let spec = SequenceSpec::Periodic {
            head: ints(f, &[2]),
            cycle: ints(f, &[-1, 1]),
        };
        let w = materialize(&spec, 4).unwrap();
        assert_eq!(window_ints(&w), vec![2, -1, 1, -1, 1]);
    }

    #[test]
    fn geometric_affine_window() {
        let f = FieldTag::RATIONAL;
        let spec = SequenceSpec::GeometricAffine {
            u: QuadScalar::from_integer(f, 2),
            t: QuadScalar::from_integer(f, 2),
            v: QuadScalar::from_integer(f, -1),
        };
        let w = materialize(&spec, 3).unwrap();
        assert_eq!(window_ints(&w), vec![1, 3, 7, 15]);
    }

    #[test]
    fn explicit_exhaustion() {
        let f = FieldTag::RATIONAL;
        let spec = SequenceSpec::Explicit {
            terms: ints(f, &[1, 2]),
        };
        assert!(materialize(&spec, 1).is_ok());
        assert!(matches!(
            materialize(&spec, 2),
            Err(Error::ExplicitExhausted { len: 2, wanted: 3 })
        ));
    }

    #[test]
    fn binomial_transform_of_shifted_fibonacci() {
        // alpha_i = F(i+1); the transform gives the odd-indexed Fibonacci
        // subsequence, checked here by the raw defining sum at i = 2.
        let spec = SequenceSpec::Gibonacci {
            params: GibonacciParams::fibonacci(),
            shift: 1,
        };
        let w = materialize(&spec, 4).unwrap();
        assert_eq!(window_ints(&w), vec![1, 1, 2, 3, 5]);
        let t = binomial_transform(&w);
        assert_eq!(window_ints(&t), vec![1, 2, 5, 13, 34]);
    }

    #[test]
    fn binomial_transform_of_head_then_constant() {
        let f = FieldTag::RATIONAL;
        let spec = SequenceSpec::HeadThenConstant {
            head: ints(f, &[2]),
            tail: QuadScalar::from_integer(f, 3),
        };
        let w = materialize(&spec, 3).unwrap();
        let t = binomial_transform(&w);
        // c + a(2^i - 1) at i = 3: 2 + 3 * 7.
        assert_eq!(t.get(3), &QuadScalar::from_integer(f, 23));
    }

    #[test]
    fn binomial_transform_of_zeros() {
        let f = FieldTag::RATIONAL;
        let spec = SequenceSpec::Explicit {
            terms: ints(f, &[0, 0, 0, 0]),
        };
        let w = materialize(&spec, 3).unwrap();
        assert!(binomial_transform(&w).terms().iter().all(|t| t.is_zero()));
    }

    #[test]
    fn inverse_transform_alternation() {
        let f = FieldTag::RATIONAL;
        let spec = SequenceSpec::HeadThenConstant {
            head: ints(f, &[2]),
            tail: QuadScalar::from_integer(f, 3),
        };
        let w = materialize(&spec, 4).unwrap();
        let t = inverse_binomial_transform(&w);
        assert_eq!(window_ints(&t), vec![2, 1, -1, 1, -1]);
    }

    #[test]
    fn inverse_of_unit_impulse() {
        let f = FieldTag::RATIONAL;
        let spec = SequenceSpec::Explicit {
            terms: ints(f, &[1, 0, 0, 0, 0]),
        };
        let w = materialize(&spec, 4).unwrap();
        let t = inverse_binomial_transform(&w);
        assert_eq!(window_ints(&t), vec![1, -1, 1, -1, 1]);
    }

    #[test]
    fn gibonacci_terms() {
        let minus_one = gibonacci_term(
            &GibonacciParams::barred(QuadScalar::one(FieldTag::RATIONAL)),
            -1,
        )
        .unwrap();
        assert!(minus_one.is_one());
        assert_eq!(
            gibonacci_term(&GibonacciParams::pell(), 5).unwrap(),
            QuadScalar::from_integer(FieldTag::RATIONAL, 29)
        );
        assert_eq!(
            gibonacci_term(&GibonacciParams::jacobsthal(), 5).unwrap(),
            QuadScalar::from_integer(FieldTag::RATIONAL, 11)
        );
        assert!(matches!(
            gibonacci_term(&GibonacciParams::lucas(), -1),
            Err(Error::NegativeIndex)
        ));
    }

    #[test]
    fn transform_recurrence_coefficients() {
        let one = QuadScalar::one(FieldTag::RATIONAL);
        let two = QuadScalar::from_integer(FieldTag::RATIONAL, 2);
        let (p, q) = transformed_recurrence_coeffs(&one, TransformVariant::Binomial);
        assert_eq!(p, QuadScalar::from_integer(FieldTag::RATIONAL, 3));
        assert_eq!(q, QuadScalar::from_integer(FieldTag::RATIONAL, -1));
        let (p, q) = transformed_recurrence_coeffs(&one, TransformVariant::BinomialOfAlternate);
        assert_eq!(p, QuadScalar::one(FieldTag::RATIONAL));
        assert_eq!(q, QuadScalar::one(FieldTag::RATIONAL));
        let (p, q) = transformed_recurrence_coeffs(&two, TransformVariant::Binomial);
        assert_eq!(p, QuadScalar::from_integer(FieldTag::RATIONAL, 4));
        assert_eq!(q, QuadScalar::from_integer(FieldTag::RATIONAL, -2));
    }

    #[test]
    fn alternate_is_involution() {
        let spec = SequenceSpec::gibonacci(GibonacciParams::pell());
        let twice = SequenceSpec::alternate(SequenceSpec::alternate(spec.clone()));
        assert_eq!(
            materialize(&spec, 12).unwrap().terms(),
            materialize(&twice, 12).unwrap().terms()
        );
    }

    #[test]
    fn binomial_helper_matches_pascal() {
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(20, 10), BigInt::from(184_756));
    }

    #[test]
    fn shifted_window_starts_at_shift() {
        let spec = SequenceSpec::Gibonacci {
            params: GibonacciParams::fibonacci(),
            shift: 3,
        };
        let w = materialize(&spec, 4).unwrap();
        assert_eq!(window_ints(&w), vec![2, 3, 5, 8, 13]);
    }

    #[test]
    fn mixed_field_spec_rejected() {
        let d5 = FieldTag::new(5).unwrap();
        let spec = SequenceSpec::Arithmetic {
            start: QuadScalar::one(FieldTag::RATIONAL),
            step: QuadScalar::one(d5),
        };
        assert!(matches!(spec.field(), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn rational_arithmetic_sequence() {
        let f = FieldTag::RATIONAL;
        let spec = SequenceSpec::Arithmetic {
            start: QuadScalar::one(f),
            step: QuadScalar::from_rational(f, Rational::new((-1).into(), 3.into())),
        };
        let w = materialize(&spec, 3).unwrap();
        assert_eq!(w.get(3), &QuadScalar::zero(f));
    }
}
