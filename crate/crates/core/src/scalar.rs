//! Exact arithmetic over Q and its quadratic extensions Q(sqrt(d)).
//!
//! Every value is a pair p + q*sqrt(d) of arbitrary-precision rationals
//! tagged with the radicand d. The tag d = 0 denotes plain rationals,
//! d = -1 the Gaussian field, d = 5 the field of the golden ratio.
//! There is no floating point anywhere in this tower.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms, positive denominator.
pub type Rational = BigRational;

/// Radicand tag for a fixed quadratic extension. One computation context
/// uses one tag throughout; mixed radicands are rejected, not lifted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldTag {
    d: i64,
}

impl FieldTag {
    /// Plain rationals (d = 0).
    pub const RATIONAL: FieldTag = FieldTag { d: 0 };
    /// The Gaussian field Q(i).
    pub const GAUSSIAN: FieldTag = FieldTag { d: -1 };

    /// A quadratic field tag. Nonzero radicands must be squarefree and != 1.
    pub fn new(d: i64) -> Result<FieldTag> {
        if d == 1 || (d != 0 && !is_squarefree(d)) {
            return Err(Error::InvalidField(d));
        }
        Ok(FieldTag { d })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 0 {
            write!(f, "Q")
        } else {
            write!(f, "Q(sqrt({}))", self.d)
        }
    }
}

fn is_squarefree(d: i64) -> bool {
    let mut n = d.unsigned_abs();
    let mut p: u64 = 2;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        while n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

/// An element p + q*sqrt(d) of the field tagged by `field`.
///
/// Canonical form: both components are reduced rationals and q = 0
/// whenever d = 0, so derived equality is exact value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    field: FieldTag,
    p: Rational,
    q: Rational,
}

impl QuadScalar {
    pub fn new(field: FieldTag, p: Rational, q: Rational) -> Result<QuadScalar> {
        if field.is_rational() && !q.is_zero() {
            return Err(Error::BadSpec(
                "radical part must be zero over plain rationals".into(),
            ));
        }
        Ok(QuadScalar { field, p, q })
    }

    pub fn from_rational(field: FieldTag, p: Rational) -> QuadScalar {
        QuadScalar {
            field,
            p,
            q: Rational::zero(),
        }
    }

    pub fn from_integer<T: Into<BigInt>>(field: FieldTag, n: T) -> QuadScalar {
        QuadScalar::from_rational(field, Rational::from_integer(n.into()))
    }

    /// Convenience for literal p/q rationals; panics on zero denominator.
    pub fn rat(field: FieldTag, numer: i64, denom: i64) -> QuadScalar {
        QuadScalar::from_rational(field, Rational::new(numer.into(), denom.into()))
    }

    pub fn zero(field: FieldTag) -> QuadScalar {
        QuadScalar::from_integer(field, 0)
    }

    pub fn one(field: FieldTag) -> QuadScalar {
        QuadScalar::from_integer(field, 1)
    }

    /// The generator sqrt(d); an error over plain rationals.
    pub fn radical(field: FieldTag) -> Result<QuadScalar> {
        QuadScalar::new(field, Rational::zero(), Rational::one())
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn rational_part(&self) -> &Rational {
        &self.p
    }

    pub fn radical_part(&self) -> &Rational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.p.is_one() && self.q.is_zero()
    }

    /// True when the value lies in Q (no radical part).
    pub fn is_rational_value(&self) -> bool {
        self.q.is_zero()
    }

    /// True when the value is a plain integer.
    pub fn is_integer(&self) -> bool {
        self.q.is_zero() && self.p.is_integer()
    }

    /// The integer value, if `is_integer`.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.p.to_integer())
        } else {
            None
        }
    }

    fn check_field(&self, other: &QuadScalar) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.d,
                right: other.field.d,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &QuadScalar) -> Result<QuadScalar> {
        self.check_field(other)?;
        Ok(QuadScalar {
            field: self.field,
            p: &self.p + &other.p,
            q: &self.q + &other.q,
        })
    }

    pub fn try_sub(&self, other: &QuadScalar) -> Result<QuadScalar> {
        self.check_field(other)?;
        Ok(QuadScalar {
            field: self.field,
            p: &self.p - &other.p,
            q: &self.q - &other.q,
        })
    }

    /// (p1 + q1 s)(p2 + q2 s) = (p1 p2 + d q1 q2) + (p1 q2 + p2 q1) s.
    pub fn try_mul(&self, other: &QuadScalar) -> Result<QuadScalar> {
        self.check_field(other)?;
        let d = Rational::from_integer(self.field.d.into());
        Ok(QuadScalar {
            field: self.field,
            p: &self.p * &other.p + &d * &self.q * &other.q,
            q: &self.p * &other.q + &other.p * &self.q,
        })
    }

    /// Division by conjugate over norm; norm is nonzero for nonzero
    /// divisors because d is never a perfect square.
    pub fn try_div(&self, other: &QuadScalar) -> Result<QuadScalar> {
        self.check_field(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = other.norm();
        let conj = other.conjugate();
        let num = self.try_mul(&conj)?;
        Ok(QuadScalar {
            field: self.field,
            p: num.p / &n,
            q: num.q / &n,
        })
    }

    /// p - q*sqrt(d).
    pub fn conjugate(&self) -> QuadScalar {
        QuadScalar {
            field: self.field,
            p: self.p.clone(),
            q: -self.q.clone(),
        }
    }

    /// Field norm p^2 - d q^2; zero iff the value is zero.
    pub fn norm(&self) -> Rational {
        let d = Rational::from_integer(self.field.d.into());
        &self.p * &self.p - d * &self.q * &self.q
    }

    /// Exponentiation by squaring with the 0^0 = 1 convention.
    pub fn int_pow(&self, k: u64) -> QuadScalar {
        let mut acc = QuadScalar::one(self.field);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiply by a plain integer without leaving the field.
    pub fn mul_int(&self, k: &BigInt) -> QuadScalar {
        let k = Rational::from_integer(k.clone());
        QuadScalar {
            field: self.field,
            p: &self.p * &k,
            q: &self.q * &k,
        }
    }
}

/// Binary scalar operation selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic on two scalars of the same field.
pub fn scalar_arith(x: &QuadScalar, y: &QuadScalar, op: ArithOp) -> Result<QuadScalar> {
    match op {
        ArithOp::Add => x.try_add(y),
        ArithOp::Sub => x.try_sub(y),
        ArithOp::Mul => x.try_mul(y),
        ArithOp::Div => x.try_div(y),
    }
}

// Operator impls panic on field mismatch and zero division; internal
// callers establish both invariants up front, external callers who
// cannot should use the try_* methods.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                self.$checked(&rhs).expect("scalar operation")
            }
        }
        impl $trait<&QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                self.$checked(rhs).expect("scalar operation")
            }
        }
        impl $trait<QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                self.$checked(&rhs).expect("scalar operation")
            }
        }
        impl $trait<&QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                self.$checked(rhs).expect("scalar operation")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar {
            field: self.field,
            p: -self.p,
            q: -self.q,
        }
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -self.clone()
    }
}

// ---------------------------------------------------------------------------
// Text grammar
//
//   scalar := term (("+"|"-") term)?
//   term   := rat | rat "*" rad | rad
//   rad    := "s" | "i"
//   rat    := ["-"] digits ["/" digits]
//
// "s" denotes sqrt(d); "i" is accepted as an alias only when d = -1.
// Printing emits the same grammar in lowest terms, rational part first,
// omitting zero parts. The parser additionally tolerates a sign directly
// before a bare radical ("-s"); the printer never emits that form.
// ---------------------------------------------------------------------------

/// Parse a scalar literal against a fixed field tag.
pub fn parse_scalar(text: &str, field: FieldTag) -> Result<QuadScalar> {
    let mut parser = ScalarParser {
        bytes: text.trim().as_bytes(),
        pos: 0,
        field,
    };
    let value = parser.scalar()?;
    if parser.pos != parser.bytes.len() {
        return Err(Error::ParseScalar(format!(
            "trailing input at byte {} in {text:?}",
            parser.pos
        )));
    }
    Ok(value)
}

struct ScalarParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    field: FieldTag,
}

impl ScalarParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn scalar(&mut self) -> Result<QuadScalar> {
        let mut acc = self.term(false)?;
        while let Some(c) = self.peek() {
            let negate = match c {
                b'+' => false,
                b'-' => true,
                _ => break,
            };
            self.pos += 1;
            let next = self.term(negate)?;
            acc = acc.try_add(&next)?;
        }
        Ok(acc)
    }

    /// One term, with an already-consumed leading sign applied.
    fn term(&mut self, negate: bool) -> Result<QuadScalar> {
        let value = match self.peek() {
            Some(b's') | Some(b'i') => {
                let coeff = Rational::one();
                self.radical_term(coeff)?
            }
            Some(b'-') if matches!(self.bytes.get(self.pos + 1), Some(b's') | Some(b'i')) => {
                self.pos += 1;
                self.radical_term(-Rational::one())?
            }
            _ => {
                let r = self.rat()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.radical_term(r)?
                } else {
                    QuadScalar::from_rational(self.field, r)
                }
            }
        };
        Ok(if negate { -value } else { value })
    }

    fn radical_term(&mut self, coeff: Rational) -> Result<QuadScalar> {
        match self.peek() {
            Some(b's') => {}
            Some(b'i') => {
                if self.field.d() != -1 {
                    return Err(Error::ParseScalar(format!(
                        "\"i\" denotes sqrt(-1) and is not available when d = {}",
                        self.field.d()
                    )));
                }
            }
            other => {
                return Err(Error::ParseScalar(format!(
                    "expected radical symbol, found {other:?}"
                )))
            }
        }
        if self.field.is_rational() {
            return Err(Error::ParseScalar(
                "radical symbol used over plain rationals (d = 0)".into(),
            ));
        }
        self.pos += 1;
        QuadScalar::new(self.field, Rational::zero(), coeff)
    }

    fn rat(&mut self) -> Result<Rational> {
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let numer = self.digits()?;
        let denom = if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.digits()?;
            if d.is_zero() {
                return Err(Error::ParseScalar("zero denominator".into()));
            }
            d
        } else {
            BigInt::one()
        };
        let r = Rational::new(numer, denom);
        Ok(if negative { -r } else { r })
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::ParseScalar(format!(
                "expected digits at byte {start}"
            )));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let radical = |q: &Rational| {
            if q.is_one() {
                "s".to_string()
            } else {
                format!("{q}*s")
            }
        };
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else if self.p.is_zero() {
            write!(f, "{}", radical(&self.q))
        } else if self.q.is_negative() {
            write!(f, "{}-{}", self.p, radical(&-self.q.clone()))
        } else {
            write!(f, "{}+{}", self.p, radical(&self.q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> (FieldTag, QuadScalar, QuadScalar) {
        let d5 = FieldTag::new(5).unwrap();
        let phi = QuadScalar::new(
            d5,
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 2.into()),
        )
        .unwrap();
        let phi_conj = phi.conjugate();
        (d5, phi, phi_conj)
    }

    #[test]
    fn golden_ratio_products_and_sums() {
        let (d5, phi, phi_conj) = golden();
        assert_eq!(&phi * &phi_conj, QuadScalar::from_integer(d5, -1));
        assert_eq!(&phi + &phi_conj, QuadScalar::one(d5));
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let gauss = FieldTag::GAUSSIAN;
        let i = QuadScalar::radical(gauss).unwrap();
        assert_eq!(&i * &i, QuadScalar::from_integer(gauss, -1));
    }

    #[test]
    fn parse_examples() {
        let d5 = FieldTag::new(5).unwrap();
        let x = parse_scalar("-1/2+1/2*s", d5).unwrap();
        assert_eq!(x.rational_part(), &Rational::new((-1).into(), 2.into()));
        assert_eq!(x.radical_part(), &Rational::new(1.into(), 2.into()));

        let three = parse_scalar("3", FieldTag::RATIONAL).unwrap();
        assert_eq!(three, QuadScalar::from_integer(FieldTag::RATIONAL, 3));

        let two_i = parse_scalar("2*i", FieldTag::GAUSSIAN).unwrap();
        assert_eq!(two_i.radical_part(), &Rational::from_integer(2.into()));
        assert!(two_i.rational_part().is_zero());
    }

    #[test]
    fn parse_rejects_misplaced_radicals() {
        assert!(parse_scalar("s", FieldTag::RATIONAL).is_err());
        assert!(parse_scalar("i", FieldTag::new(2).unwrap()).is_err());
        assert!(parse_scalar("1+", FieldTag::RATIONAL).is_err());
        assert!(parse_scalar("1/0", FieldTag::RATIONAL).is_err());
        assert!(parse_scalar("", FieldTag::RATIONAL).is_err());
    }

    #[test]
    fn field_tag_rejects_bad_radicands() {
        assert!(FieldTag::new(1).is_err());
        assert!(FieldTag::new(4).is_err());
        assert!(FieldTag::new(12).is_err());
        assert!(FieldTag::new(-4).is_err());
        assert!(FieldTag::new(-1).is_ok());
        assert!(FieldTag::new(10).is_ok());
    }

    #[test]
    fn mixed_fields_and_zero_division_error() {
        let d2 = FieldTag::new(2).unwrap();
        let d5 = FieldTag::new(5).unwrap();
        let x = QuadScalar::one(d2);
        let y = QuadScalar::one(d5);
        assert!(matches!(x.try_add(&y), Err(Error::FieldMismatch { .. })));
        assert!(matches!(
            x.try_div(&QuadScalar::zero(d2)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        let zero = QuadScalar::zero(FieldTag::RATIONAL);
        assert_eq!(zero.int_pow(0), QuadScalar::one(FieldTag::RATIONAL));
        assert!(zero.int_pow(3).is_zero());
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        // Independent route: multiply out phi * phi and compare with the
        // defining relation x^2 = x + 1.
        let (d5, phi, _) = golden();
        let direct = phi.int_pow(2);
        let via_mul = phi.try_mul(&phi).unwrap();
        let via_relation = phi.try_add(&QuadScalar::one(d5)).unwrap();
        assert_eq!(direct, via_mul);
        assert_eq!(direct, via_relation);
        assert_eq!(direct.rational_part(), &Rational::new(3.into(), 2.into()));
        assert_eq!(direct.radical_part(), &Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn integer_power() {
        let two = QuadScalar::from_integer(FieldTag::RATIONAL, 2);
        assert_eq!(
            two.int_pow(10),
            QuadScalar::from_integer(FieldTag::RATIONAL, 1024)
        );
    }

    #[test]
    fn arith_selector_covers_all_operations() {
        let (d5, phi, phi_conj) = golden();
        assert_eq!(
            scalar_arith(&phi, &phi_conj, ArithOp::Mul).unwrap(),
            QuadScalar::from_integer(d5, -1)
        );
        assert_eq!(
            scalar_arith(&phi, &phi_conj, ArithOp::Add).unwrap(),
            QuadScalar::one(d5)
        );
        let diff = scalar_arith(&phi, &phi_conj, ArithOp::Sub).unwrap();
        assert_eq!(diff, QuadScalar::radical(d5).unwrap());
        let ratio = scalar_arith(&phi, &phi, ArithOp::Div).unwrap();
        assert!(ratio.is_one());
        assert!(matches!(
            scalar_arith(&phi, &QuadScalar::zero(d5), ArithOp::Div),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn scalars_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<QuadScalar>();
        assert_send_sync::<FieldTag>();
    }

    #[test]
    fn display_uses_grammar() {
        let (d5, phi, phi_conj) = golden();
        assert_eq!(phi.to_string(), "1/2+1/2*s");
        assert_eq!(phi_conj.to_string(), "1/2-1/2*s");
        assert_eq!(QuadScalar::zero(d5).to_string(), "0");
        assert_eq!(QuadScalar::radical(d5).unwrap().to_string(), "s");
        assert_eq!((-QuadScalar::radical(d5).unwrap()).to_string(), "-1*s");
        assert_eq!(QuadScalar::from_integer(d5, -7).to_string(), "-7");
        assert_eq!(QuadScalar::rat(d5, -2, 4).to_string(), "-1/2");
    }
}
