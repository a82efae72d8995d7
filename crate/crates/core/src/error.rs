use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into two families: violated preconditions (bad input, the
/// caller's fault) and [`Error::Invariant`], which signals that an internal
/// mathematical identity failed to hold and therefore points at a bug.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("denominator vanishes at the specialization: {factor}")]
    ZeroDenominator { factor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{value} is not coprime to {modulus}")]
    NotCoprime { value: i64, modulus: u32 },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("strand mismatch: expected {expected} strands, got {actual}")]
    StrandMismatch { expected: usize, actual: usize },

    #[error("word is not a pure braid (permutation image {0})")]
    NonPureWord(String),

    #[error("form is degenerate at this embedding: {0}")]
    Degenerate(String),

    #[error("eigenvalue {value:e} is within tolerance {tolerance:e} of zero")]
    EigenvalueTolerance { value: f64, tolerance: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True when the error reports a failed internal identity rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_) | Error::EigenvalueTolerance { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
