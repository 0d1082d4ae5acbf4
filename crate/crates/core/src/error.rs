use thiserror::Error;

/// Errors raised by the polytope and Ehrhart machinery.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("dimension {dim} exceeds the supported maximum of {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("point {point:?} is not an interior point of the polytope")]
    CenterNotInterior { point: Vec<i64> },
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: String },
    #[error("bad parameters for {family}: {reason}")]
    BadParams { family: String, reason: String },
    #[error("enumeration would scan about {estimated} rows, above the work cap of {cap}")]
    WorkCapExceeded { estimated: u128, cap: u128 },
    #[error("count mismatch at k={k}: polynomial predicts {predicted}, enumeration found {counted}")]
    CountMismatch { k: u64, predicted: String, counted: u64 },
    #[error("h*-entry a_{index} = {value} is not an integer")]
    NonIntegral { index: usize, value: String },
    #[error("h*-entry a_{index} = {value} is negative")]
    NegativeEntry { index: usize, value: i64 },
    #[error("polytope with {vertices} vertices in dimension {dim} is not a simplex")]
    NotASimplex { vertices: usize, dim: usize },
    #[error("root iteration did not converge (worst relative residual {worst_residual:e})")]
    NoConvergence { worst_residual: f64 },
    #[error("expected degree {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("bracketing failed while solving h(b) = {k}pi")]
    BracketFailure { k: usize },
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("dimension {0} is not supported by this operation")]
    DimensionUnsupported(usize),
    #[error("random generation exhausted {attempts} consecutive attempts")]
    ExhaustedAttempts { attempts: usize },
    #[error("integer overflow: {0}")]
    Overflow(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
