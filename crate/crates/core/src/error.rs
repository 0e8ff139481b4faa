//! Shared error type for spec validation, parsing, and arithmetic preconditions.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two scalars from different quadratic fields met in one operation.
    FieldMismatch {
        left: i64,
        right: i64,
    },
    DivisionByZero,
    /// Radicand is 1 or not squarefree.
    InvalidField(i64),
    /// Scalar text does not conform to the grammar, or uses a radical
    /// symbol not available in the target field.
    ParseScalar(String),
    /// Pascal/seven/Toeplitz families require a common first term.
    GammaMismatch {
        alpha0: String,
        beta0: String,
    },
    IndexOutOfRange {
        i: usize,
        j: usize,
        order: usize,
    },
    ExplicitExhausted {
        len: usize,
        wanted: usize,
    },
    /// Index -1 is only defined for the (0, 1) anchored family.
    NegativeIndex,
    NotHessenberg {
        i: usize,
        j: usize,
    },
    /// A builder produced a non-integer where the family demands one.
    NonIntegerEntry {
        i: usize,
        j: usize,
    },
    /// Structural problem with a declarative spec (empty cycle, zero order, ...).
    BadSpec(String),
    Json(String),
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch { left, right } => {
                write!(f, "field mismatch: d = {left} vs d = {right}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InvalidField(d) => {
                write!(f, "invalid radicand {d}: must be squarefree and not 1")
            }
            Error::ParseScalar(msg) => write!(f, "scalar parse error: {msg}"),
            Error::GammaMismatch { alpha0, beta0 } => {
                write!(f, "sequences must share a first term: {alpha0} != {beta0}")
            }
            Error::IndexOutOfRange { i, j, order } => {
                write!(f, "index ({i}, {j}) out of range for order {order}")
            }
            Error::ExplicitExhausted { len, wanted } => {
                write!(f, "explicit sequence has {len} terms, {wanted} requested")
            }
            Error::NegativeIndex => {
                write!(f, "index -1 is only defined for the (0, 1) anchored family")
            }
            Error::NotHessenberg { i, j } => {
                write!(
                    f,
                    "matrix is not upper Hessenberg: nonzero entry at ({i}, {j})"
                )
            }
            Error::NonIntegerEntry { i, j } => {
                write!(f, "family produced a non-integer entry at ({i}, {j})")
            }
            Error::BadSpec(msg) => write!(f, "invalid spec: {msg}"),
            Error::Json(msg) => write!(f, "json error: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
