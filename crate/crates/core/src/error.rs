use thiserror::Error;

/// Errors raised by the library. Infeasibility and failed checks are
/// verdicts, not errors; these are contract violations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable x{} out of range for arity {arity}", .index + 1)]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a polynomial of positive degree")]
    ConstantPolynomial,
    #[error("no point of the cube evaluates to {0}")]
    EmptyLevel(bool),
    #[error("every input polynomial vanishes at domain point {0}")]
    AvoidancePrecondition(String),
    #[error("hypothesis violated at {point}: {reason}")]
    HypothesisViolation { point: String, reason: String },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("arity {n} exceeds the exact-computation cap {cap} (set BOOLDEG_MAX_N to raise it)")]
    CapExceeded { n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
