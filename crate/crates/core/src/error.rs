//! Errors shared by every model and construction in the workbench.

use thiserror::Error;

/// Domain errors. Ill-typed queries are errors, not `false` answers, so a
/// negative result from a relation always means the relation itself failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type mismatch in {context}: expected {expected}, found {found}")]
    TypeMismatch {
        context: &'static str,
        expected: String,
        found: String,
    },

    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { index: usize, what: String },

    #[error("model has no restriction zeroes")]
    NoZeroes,

    #[error("maps {0} and {1} of the family are not compatible")]
    Incompatible(usize, usize),

    #[error("map is not below the other in the restriction order")]
    NotBelow,

    #[error("map is not a restriction idempotent")]
    NotIdempotent,

    #[error("codomain is not a coproduct")]
    NotCoproductCodomain,

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("model does not supply {0}")]
    Unsupported(&'static str),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn mismatch(context: &'static str, expected: impl Into<String>, found: impl Into<String>) -> Self {
        Error::TypeMismatch {
            context,
            expected: expected.into(),
            found: found.into(),
        }
    }
}
