//! Recover the (a, b, c) Toeplitz families whose leading minors satisfy a
//! prescribed second-order recurrence, and predict the resulting minors.
//!
//! Given the target det T_n = r det T_(n-1) + s det T_(n-2) with diagonal c,
//! the off-diagonal values are c - u and c - v where u, v are the roots of
//! x^2 - r x - s. Depending on the discriminant r^2 + 4s those roots are
//! rational or live in a quadratic extension, which the solver reports.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{FieldTag, QuadScalar, Rational};
use crate::sequence::{gibonacci_window, GibonacciParams};

/// A target minor recurrence det T_n = r det T_(n-1) + s det T_(n-2)
/// together with the diagonal value c of the sought Toeplitz family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceTarget {
    pub r: QuadScalar,
    pub s: QuadScalar,
    pub c: QuadScalar,
}

impl RecurrenceTarget {
    pub fn new(r: QuadScalar, s: QuadScalar, c: QuadScalar) -> RecurrenceTarget {
        RecurrenceTarget { r, s, c }
    }
}

/// The (a, b) pairs solving the target system, with field bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedFamily {
    /// Each pair satisfies 2c - a - b = r and (c - a)(c - b) = -s exactly;
    /// a repeated root yields a single flagged pair.
    pub solutions: Vec<(QuadScalar, QuadScalar)>,
    /// Exact discriminant r^2 + 4s.
    pub discriminant: Rational,
    /// The quadratic field the solutions need when the discriminant is not
    /// a rational square; `None` when they are rational.
    pub extension_needed: Option<FieldTag>,
    /// True when the discriminant vanishes and the two solutions coincide.
    pub repeated: bool,
}

/// Solve 2c - a - b = r, (c - a)(c - b) = -s for (a, b).
///
/// r and s must be rational values; c may live in any supported field as
/// long as it does not clash with the extension the discriminant demands.
pub fn solve_family(target: &RecurrenceTarget) -> Result<SolvedFamily> {
    let (r, s, c) = (&target.r, &target.s, &target.c);
    if !r.is_rational_value() || !s.is_rational_value() {
        return Err(Error::BadSpec(
            "recurrence coefficients must be rational".into(),
        ));
    }
    let r_rat = r.rational_part();
    let s_rat = s.rational_part();
    let discriminant = r_rat * r_rat + Rational::from_integer(4.into()) * s_rat;

    if discriminant.is_zero() {
        let field = c.field();
        let half_r = QuadScalar::from_rational(field, r_rat / Rational::from_integer(2.into()));
        let a = c - &half_r;
        return Ok(SolvedFamily {
            solutions: vec![(a.clone(), a)],
            discriminant,
            extension_needed: None,
            repeated: true,
        });
    }

    // sqrt(N/D) = sqrt(N*D)/D; split N*D into square * squarefree parts.
    let numer = discriminant.numer().clone();
    let denom = discriminant.denom().clone();
    let (square_root_part, squarefree) = split_square(&(&numer * &denom));

    if squarefree.is_one() {
        // rational square: roots (r +- e)/2 with e = sqrt(discriminant)
        let field = c.field();
        let e = Rational::new(square_root_part, denom);
        let half = Rational::new(BigInt::one(), 2.into());
        let u = QuadScalar::from_rational(field, (r_rat + &e) * &half);
        let v = QuadScalar::from_rational(field, (r_rat - &e) * &half);
        let a = c - &u;
        let b = c - &v;
        return Ok(SolvedFamily {
            solutions: vec![(a.clone(), b.clone()), (b, a)],
            discriminant,
            extension_needed: None,
            repeated: false,
        });
    }

    let d = i64::try_from(&squarefree)
        .map_err(|_| Error::BadSpec("discriminant radicand exceeds supported range".into()))?;
    let extension = FieldTag::new(d)?;
    let c_lifted = if c.field() == extension {
        c.clone()
    } else if c.field().is_rational() {
        QuadScalar::from_rational(extension, c.rational_part().clone())
    } else {
        return Err(Error::FieldMismatch {
            left: c.field().d(),
            right: extension.d(),
        });
    };
    // u, v = r/2 +- (f / 2D) sqrt(d) where N*D = f^2 d
    let half = Rational::new(BigInt::one(), 2.into());
    let radical_coeff = Rational::new(square_root_part, denom) * &half;
    let u = QuadScalar::new(extension, r_rat * &half, radical_coeff.clone())?;
    let v = QuadScalar::new(extension, r_rat * &half, -radical_coeff)?;
    let a = &c_lifted - &u;
    let b = &c_lifted - &v;
    Ok(SolvedFamily {
        solutions: vec![(a.clone(), b.clone()), (b, a)],
        discriminant,
        extension_needed: Some(extension),
        repeated: false,
    })
}

/// Write n = f^2 * d with d squarefree (sign carried by d); returns (f, d).
/// Exact integer arithmetic by trial division.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero());
    let mut remaining = n.abs();
    let mut square_root = BigInt::one();
    let mut squarefree = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= remaining {
        let mut count = 0u32;
        while (&remaining % &p).is_zero() {
            remaining /= &p;
            count += 1;
        }
        if count > 0 {
            square_root *= p.pow(count / 2);
            if count.is_odd() {
                squarefree *= &p;
            }
        }
        p += 1;
    }
    squarefree *= remaining; // leftover prime
    if n.is_negative() {
        squarefree = -squarefree;
    }
    (square_root, squarefree)
}

/// Predicted minor det T_n = c X_n + s X_(n-1) where X is the (0, 1, r, s)
/// family, evaluated in the field of c.
pub fn predicted_minor(target: &RecurrenceTarget, n: usize) -> Result<QuadScalar> {
    if n < 1 {
        return Err(Error::BadSpec("predicted minors start at n = 1".into()));
    }
    let (r, s, c) = (&target.r, &target.s, &target.c);
    if !r.is_rational_value() || !s.is_rational_value() {
        return Err(Error::BadSpec(
            "recurrence coefficients must be rational".into(),
        ));
    }
    let field = c.field();
    let lift = |x: &QuadScalar| QuadScalar::from_rational(field, x.rational_part().clone());
    let params = GibonacciParams::new(
        QuadScalar::zero(field),
        QuadScalar::one(field),
        lift(r),
        lift(s),
    )?;
    let x = gibonacci_window(&params, n);
    Ok(c * &x[n] + lift(s) * &x[n - 1])
}
