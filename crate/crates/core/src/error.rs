use thiserror::Error;

use crate::violation::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid rational {text:?}: {reason}")]
    BadRational { text: String, reason: String },

    #[error("{what} fails its axioms ({} violation(s)); first: {}", .violations.len(), .violations.first().map(ToString::to_string).unwrap_or_default())]
    Axioms { what: &'static str, violations: Vec<Violation> },

    #[error("operator is not nilpotent")]
    NotNilpotent,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cochain of degree {degree} is not a cocycle")]
    NotACocycle { degree: usize },

    #[error("infinitesimals live in different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),

    #[error("value {0} does not lie in the image of the fiber")]
    EscapesFiber(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid document: {0}")]
    Document(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
