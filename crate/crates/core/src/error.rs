use thiserror::Error;

use crate::linalg::Field;

/// Errors raised by the exact algebra routines.
///
/// `InvariantViolation` is reserved for outcomes that a finite-dimensional
/// theorem rules out; hitting it means either a bug or corrupted input that
/// slipped past verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid scalar: {0}")]
    InvalidScalar(String),

    #[error("not a bialgebra: {axiom} fails at {witness}")]
    InvalidBialgebra { axiom: String, witness: String },

    #[error("precondition `{check}` failed: {witness}")]
    Precondition { check: &'static str, witness: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("invalid monoid: {0}")]
    Monoid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }

    pub(crate) fn precondition(check: &'static str, witness: impl Into<String>) -> Self {
        Error::Precondition {
            check,
            witness: witness.into(),
        }
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}
