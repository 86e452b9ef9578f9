//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced while parsing, validating, or transforming algebras.
#[derive(Debug, Error)]
pub enum Error {
    /// The input is not syntactically valid (malformed JSON, wrong shape).
    #[error("parse error: {0}")]
    Parse(String),

    /// The input parsed but violates a semantic constraint.
    #[error("invalid input at {location}: {message}")]
    Validation { location: String, message: String },

    /// An enumeration grew past the configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
}

impl Error {
    pub fn validation(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            location: location.into(),
            message: message.into(),
        }
    }

    /// Process exit code used by the CLI: 2 parse, 3 validation, 4 budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Validation { .. } => 3,
            Error::BudgetExceeded(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
