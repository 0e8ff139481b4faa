//! JSON wire formats for sequence and matrix specs.
//!
//! Scalars travel as grammar strings ("1/2+1/2*s"), so a raw document is
//! parsed in two phases: serde gives the shape, then every scalar string is
//! interpreted against the spec's field tag.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{MatrixFamily, MatrixSpec, Modifier};
use crate::scalar::{parse_scalar, FieldTag, QuadScalar};
use crate::sequence::{GibonacciParams, SequenceSpec};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RawSequenceSpec {
    Gibonacci {
        a: String,
        b: String,
        r: String,
        s: String,
        #[serde(default)]
        shift: usize,
    },
    HeadThenConstant {
        head: Vec<String>,
        tail: String,
    },
    Periodic {
        head: Vec<String>,
        cycle: Vec<String>,
    },
    Arithmetic {
        start: String,
        step: String,
    },
    GeometricAffine {
        u: String,
        t: String,
        v: String,
    },
    Explicit {
        terms: Vec<String>,
    },
    Alternate {
        inner: Box<RawSequenceSpec>,
    },
    Binomial {
        inner: Box<RawSequenceSpec>,
    },
    InverseBinomial {
        inner: Box<RawSequenceSpec>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawFieldTag {
    pub d: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RawFamily {
    Pascal {
        alpha: RawSequenceSpec,
        beta: RawSequenceSpec,
    },
    Seven {
        alpha: RawSequenceSpec,
        beta: RawSequenceSpec,
    },
    Toeplitz {
        alpha: RawSequenceSpec,
        beta: RawSequenceSpec,
    },
    ToeplitzAbc {
        a: String,
        b: String,
        c: String,
    },
    BespokeA,
    BespokeB,
    BespokeC,
    BespokeD,
    UnipotentL,
    UnipotentU,
    FactorL {
        a: String,
        b: String,
        r: String,
    },
    FactorH {
        a: String,
        b: String,
        r: String,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawModifier {
    pub i: usize,
    pub j: usize,
    pub delta: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMatrixSpec {
    pub field: RawFieldTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub family: RawFamily,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modifiers: Vec<RawModifier>,
}

pub fn sequence_spec_from_raw(raw: &RawSequenceSpec, field: FieldTag) -> Result<SequenceSpec> {
    let scalar = |s: &String| parse_scalar(s, field);
    let scalars = |v: &[String]| {
        v.iter()
            .map(|s| parse_scalar(s, field))
            .collect::<Result<Vec<QuadScalar>>>()
    };
    Ok(match raw {
        RawSequenceSpec::Gibonacci { a, b, r, s, shift } => SequenceSpec::Gibonacci {
            params: GibonacciParams::new(scalar(a)?, scalar(b)?, scalar(r)?, scalar(s)?)?,
            shift: *shift,
        },
        RawSequenceSpec::HeadThenConstant { head, tail } => SequenceSpec::HeadThenConstant {
            head: scalars(head)?,
            tail: scalar(tail)?,
        },
        RawSequenceSpec::Periodic { head, cycle } => SequenceSpec::Periodic {
            head: scalars(head)?,
            cycle: scalars(cycle)?,
        },
        RawSequenceSpec::Arithmetic { start, step } => SequenceSpec::Arithmetic {
            start: scalar(start)?,
            step: scalar(step)?,
        },
        RawSequenceSpec::GeometricAffine { u, t, v } => SequenceSpec::GeometricAffine {
            u: scalar(u)?,
            t: scalar(t)?,
            v: scalar(v)?,
        },
        RawSequenceSpec::Explicit { terms } => SequenceSpec::Explicit {
            terms: scalars(terms)?,
        },
        RawSequenceSpec::Alternate { inner } => {
            SequenceSpec::alternate(sequence_spec_from_raw(inner, field)?)
        }
        RawSequenceSpec::Binomial { inner } => {
            SequenceSpec::binomial(sequence_spec_from_raw(inner, field)?)
        }
        RawSequenceSpec::InverseBinomial { inner } => {
            SequenceSpec::inverse_binomial(sequence_spec_from_raw(inner, field)?)
        }
    })
}

pub fn matrix_spec_from_raw(
    raw: &RawMatrixSpec,
    order_override: Option<usize>,
) -> Result<MatrixSpec> {
    let field = FieldTag::new(raw.field.d)?;
    let order = order_override.or(raw.order).ok_or_else(|| {
        Error::BadSpec("matrix spec needs an order (in the document or on the command line)".into())
    })?;
    let scalar = |s: &String| parse_scalar(s, field);
    let family = match &raw.family {
        RawFamily::Pascal { alpha, beta } => MatrixFamily::Pascal {
            alpha: sequence_spec_from_raw(alpha, field)?,
            beta: sequence_spec_from_raw(beta, field)?,
        },
        RawFamily::Seven { alpha, beta } => MatrixFamily::Seven {
            alpha: sequence_spec_from_raw(alpha, field)?,
            beta: sequence_spec_from_raw(beta, field)?,
        },
        RawFamily::Toeplitz { alpha, beta } => MatrixFamily::Toeplitz {
            alpha: sequence_spec_from_raw(alpha, field)?,
            beta: sequence_spec_from_raw(beta, field)?,
        },
        RawFamily::ToeplitzAbc { a, b, c } => MatrixFamily::ToeplitzAbc {
            a: scalar(a)?,
            b: scalar(b)?,
            c: scalar(c)?,
        },
        RawFamily::BespokeA => MatrixFamily::BespokeA,
        RawFamily::BespokeB => MatrixFamily::BespokeB,
        RawFamily::BespokeC => MatrixFamily::BespokeC,
        RawFamily::BespokeD => MatrixFamily::BespokeD,
        RawFamily::UnipotentL => MatrixFamily::UnipotentL,
        RawFamily::UnipotentU => MatrixFamily::UnipotentU,
        RawFamily::FactorL { a, b, r } => MatrixFamily::FactorL {
            a: scalar(a)?,
            b: scalar(b)?,
            r: scalar(r)?,
        },
        RawFamily::FactorH { a, b, r } => MatrixFamily::FactorH {
            a: scalar(a)?,
            b: scalar(b)?,
            r: scalar(r)?,
        },
    };
    let modifiers = raw
        .modifiers
        .iter()
        .map(|m| {
            Ok(Modifier {
                i: m.i,
                j: m.j,
                delta: scalar(&m.delta)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixSpec {
        field,
        order,
        family,
        modifiers,
    })
}

/// Parse a standalone sequence document against an explicit field.
pub fn parse_sequence_json(text: &str, field: FieldTag) -> Result<SequenceSpec> {
    let raw: RawSequenceSpec = serde_json::from_str(text)?;
    sequence_spec_from_raw(&raw, field)
}

/// Parse a matrix document; the embedded field tag governs scalar parsing.
pub fn parse_matrix_json(text: &str, order_override: Option<usize>) -> Result<MatrixSpec> {
    let raw: RawMatrixSpec = serde_json::from_str(text)?;
    matrix_spec_from_raw(&raw, order_override)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::build;
    use crate::sequence::materialize;

    #[test]
    fn gibonacci_document_round_trip() {
        let text = r#"{"kind":"gibonacci","a":"0","b":"1","r":"1","s":"1","shift":0}"#;
        let spec = parse_sequence_json(text, FieldTag::RATIONAL).unwrap();
        let w = materialize(&spec, 6).unwrap();
        assert_eq!(w.get(6), &QuadScalar::from_integer(FieldTag::RATIONAL, 8));
    }

    #[test]
    fn wrapper_document() {
        let text = r#"{"kind":"alternate","inner":{"kind":"arithmetic","start":"1","step":"1"}}"#;
        let spec = parse_sequence_json(text, FieldTag::RATIONAL).unwrap();
        let w = materialize(&spec, 3).unwrap();
        let values: Vec<String> = w.terms().iter().map(|t| t.to_string()).collect();
        assert_eq!(values, vec!["1", "-2", "3", "-4"]);
    }

    #[test]
    fn matrix_document_with_modifiers() {
        let text = r#"{
            "field": {"d": -1},
            "order": 3,
            "family": {"kind": "toeplitz_abc", "a": "i", "b": "i", "c": "1"},
            "modifiers": [{"i": 1, "j": 1, "delta": "1"}]
        }"#;
        let spec = parse_matrix_json(text, None).unwrap();
        let m = build(&spec).unwrap();
        assert_eq!(m.get(1, 1).to_string(), "2");
        assert_eq!(m.get(0, 1).to_string(), "s");
    }

    #[test]
    fn order_override_takes_precedence() {
        let text = r#"{"field":{"d":0},"order":2,"family":{"kind":"bespoke_a"}}"#;
        let spec = parse_matrix_json(text, Some(5)).unwrap();
        assert_eq!(spec.order, 5);
        let spec = parse_matrix_json(text, None).unwrap();
        assert_eq!(spec.order, 2);
    }

    #[test]
    fn missing_order_is_an_error() {
        let text = r#"{"field":{"d":0},"family":{"kind":"bespoke_a"}}"#;
        assert!(parse_matrix_json(text, None).is_err());
        assert!(parse_matrix_json(text, Some(3)).is_ok());
    }

    #[test]
    fn factor_families_parse_and_multiply_back() {
        let lower = parse_matrix_json(
            r#"{"field":{"d":0},"order":5,"family":{"kind":"factor_l","a":"1","b":"1","r":"1"}}"#,
            None,
        )
        .unwrap();
        let upper = parse_matrix_json(
            r#"{"field":{"d":0},"order":5,"family":{"kind":"factor_h","a":"1","b":"1","r":"1"}}"#,
            None,
        )
        .unwrap();
        let toeplitz = parse_matrix_json(
            r#"{"field":{"d":0},"order":5,"family":{"kind":"toeplitz",
                "alpha":{"kind":"alternate","inner":{"kind":"gibonacci","a":"1","b":"1","r":"1","s":"1"}},
                "beta":{"kind":"gibonacci","a":"1","b":"1","r":"1","s":"1"}}}"#,
            None,
        )
        .unwrap();
        let product = build(&lower)
            .unwrap()
            .matmul(&build(&upper).unwrap())
            .unwrap();
        assert_eq!(product, build(&toeplitz).unwrap());
    }

    #[test]
    fn zero_order_is_rejected() {
        let text = r#"{"field":{"d":0},"order":0,"family":{"kind":"bespoke_a"}}"#;
        let spec = parse_matrix_json(text, None).unwrap();
        assert!(matches!(build(&spec), Err(Error::BadSpec(_))));
    }

    #[test]
    fn bad_field_tag_is_rejected() {
        let text = r#"{"field":{"d":4},"order":2,"family":{"kind":"bespoke_a"}}"#;
        assert!(matches!(
            parse_matrix_json(text, None),
            Err(Error::InvalidField(4))
        ));
    }

    #[test]
    fn unknown_kind_is_a_json_error() {
        let text = r#"{"kind":"fancy","terms":["1"]}"#;
        assert!(matches!(
            parse_sequence_json(text, FieldTag::RATIONAL),
            Err(Error::Json(_))
        ));
    }
}
