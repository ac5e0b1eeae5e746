use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the kernel.
///
/// Variants are split into usage errors (malformed requests such as arity
/// mismatches) and domain errors (well-formed requests with no answer).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },
    #[error("operation requires a univariate polynomial, found arity {0}")]
    NotUnivariate(usize),
    #[error("strict constraints are not allowed here")]
    StrictConstraint,
    #[error("empty input")]
    EmptyInput,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("zero has no canonical form")]
    ZeroPolynomial,
    #[error("outside Newton polytope")]
    OutsideNewtonPolytope,
    #[error("infeasible")]
    Infeasible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("varieties do not share this wall")]
    NoSharedWall,
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// True for errors caused by a malformed request rather than by the
    /// mathematics of a well-formed one.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::ArityMismatch { .. }
                | Error::DimensionMismatch { .. }
                | Error::VariableOutOfRange { .. }
                | Error::NotUnivariate(_)
                | Error::StrictConstraint
                | Error::EmptyInput
        )
    }
}
