use thiserror::Error;

/// Errors raised by the library.
///
/// [`Error::category`] sorts them into input problems, violated mathematical
/// preconditions and violated postconditions, which the CLI maps onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{context}: expected a subspace of {expected}, got one of {found}")]
    KindMismatch {
        context: &'static str,
        expected: &'static str,
        found: &'static str,
    },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("matrix is not antisymmetric ({context})")]
    NotAntisymmetric { context: &'static str },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("property violated: {0}")]
    Property(String),
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Malformed or inconsistent input data.
    Input,
    /// Well-formed input on which a mathematical precondition fails.
    Precondition,
    /// A computed object failed a property it is guaranteed to have.
    Property,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::DimensionMismatch { .. }
            | Error::KindMismatch { .. }
            | Error::Parse { .. }
            | Error::UnknownVariable(_)
            | Error::NotAntisymmetric { .. } => ErrorCategory::Input,
            Error::Precondition(_) => ErrorCategory::Precondition,
            Error::Property(_) => ErrorCategory::Property,
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn property(msg: impl Into<String>) -> Self {
        Error::Property(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}
