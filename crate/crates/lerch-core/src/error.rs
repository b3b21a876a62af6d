//! Error taxonomy shared by every module.

use crate::scalar::ComplexScalar;

/// Library-wide error type.
///
/// The variants map onto the process exit codes used by the CLI front end:
/// domain and usage violations are caller mistakes (exit 2), while accuracy,
/// non-convergence, and degenerate-reference conditions are evaluation
/// failures (exit 1) that carry the best value obtained so far whenever one
/// exists.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The input lies outside the mathematical domain of the operation.
    #[error("domain: {0}")]
    Domain(String),

    /// The call violates an argument contract (wrong path for the argument
    /// shape, zero order, and so on).
    #[error("usage: {0}")]
    Usage(String),

    /// The requested tolerance could not be met; `best` is the closest
    /// estimate produced before giving up.
    #[error("accuracy: {message}")]
    Accuracy {
        message: String,
        best: Option<ComplexScalar>,
    },

    /// A series failed to satisfy its stop rule within `max_order` terms.
    #[error("no convergence within {max_order} terms")]
    NoConvergence {
        max_order: usize,
        best: ComplexScalar,
    },

    /// A relative error was requested against a reference value too small to
    /// divide by meaningfully.
    #[error("degenerate reference: |F| = {magnitude:e} is below 1e-300")]
    DegenerateReference { magnitude: f64 },
}

impl Error {
    /// Best evaluation attached to the error, if the failure mode has one.
    pub fn best_value(&self) -> Option<ComplexScalar> {
        match self {
            Error::Accuracy { best, .. } => *best,
            Error::NoConvergence { best, .. } => Some(*best),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
