use std::fmt;

use thiserror::Error;

/// Location-tagged failure from the scalar or element parsers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where parsing stopped.
    pub position: usize,
    /// Tokens that would have been accepted at `position`.
    pub expected: Vec<String>,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            expected: Vec::new(),
            message: message.into(),
        }
    }

    pub fn expecting(position: usize, expected: &[&str], message: impl Into<String>) -> Self {
        ParseError {
            position,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("period must be nonzero")]
    ZeroPeriod,
    #[error("unsupported for {0}")]
    Unsupported(String),
    #[error("iterates of the point are not distinct")]
    NotSeparable,
    #[error("model has no bump functions")]
    NotRegularModel,
    #[error("operands belong to different models")]
    ModelMismatch,
    #[error("model coefficient algebra has no unit")]
    NotUnital,
    #[error("generator list is empty or all generators are zero")]
    EmptyGenerators,
    #[error("element does not fit the coordinate window: {0}")]
    WindowOverflow(String),
    #[error("element is zero")]
    ZeroElement,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("malformed certificate: {0}")]
    InvalidCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
