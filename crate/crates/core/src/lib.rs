//! Exact construction of structured integer and quadratic-field matrices
//! (generalized Pascal triangles, 7-matrices, Toeplitz families) and
//! verification of the determinant identities their leading principal
//! minors satisfy.
//!
//! Everything is computed in exact arithmetic: big integers, rationals, and
//! elements of a fixed quadratic extension Q(sqrt(d)). The crate ships an
//! elimination oracle independent of every closed form it checks, plus a
//! solver that recovers the Toeplitz families realizing a prescribed minor
//! recurrence.

pub mod error;
pub mod identity;
pub mod json;
pub mod matrix;
pub mod minors;
pub mod scalar;
pub mod sequence;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use identity::{
    check_equimodular, check_six_family, identify_minor_sequence, verify_factorization,
    verify_gibonacci_identities, EquimodularReport, NamedFamily, SequenceMatch,
};
pub use matrix::{
    build, build_factor_h, build_factor_l, DenseMatrix, MatrixFamily, MatrixSpec, Modifier,
};
pub use minors::{
    det_gibonacci_closed, det_oracle, det_toeplitz_abc, hessenberg_minors, leading_minors,
    minors_auto, Engine, MinorSequence, ToeplitzMethod,
};
pub use scalar::{parse_scalar, scalar_arith, ArithOp, FieldTag, QuadScalar, Rational};
pub use sequence::{
    binomial_transform, gibonacci_term, inverse_binomial_transform, materialize,
    transformed_recurrence_coeffs, GibonacciParams, SequenceSpec, SequenceWindow, TransformVariant,
};
pub use solver::{predicted_minor, solve_family, RecurrenceTarget, SolvedFamily};
