use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors across all subsystems. Variants are grouped by how a front end
/// should classify them: invalid input, violated mathematical precondition,
/// or an internal stage failure that should not occur on feasible inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not symmetric: |m[{row},{col}] - m[{col},{row}]| = {deviation:.3e} exceeds tolerance")]
    NotSymmetric {
        row: usize,
        col: usize,
        deviation: f64,
    },

    #[error("non-finite entry in {context}")]
    NonFinite { context: &'static str },

    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    DimensionMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },

    #[error("cardinality mismatch: {left} vs {right} vectors (the frame metric pairs by index)")]
    CardinalityMismatch { left: usize, right: usize },

    #[error("invalid weights: {reason}")]
    InvalidWeights { reason: String },

    #[error("split coefficients must satisfy sum of squares = 1, got {sum_sq}")]
    InvalidCoefficients { sum_sq: f64 },

    #[error("index {index} out of range for {len} vectors")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("not a frame operator / numerically singular: lower bound {min_eigenvalue:.3e} is at or below floor {floor:.3e}")]
    SingularOperator { min_eigenvalue: f64, floor: f64 },

    #[error("eigenvalue {value:.3e} is negative beyond tolerance; matrix is not positive semidefinite")]
    NegativeEigenvalue { value: f64 },

    #[error("requires N >= d, got N = {n} < d = {d}")]
    TooFewVectors { n: usize, d: usize },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("atom at distance {norm} lies outside the grid's covered ball of radius {radius}")]
    AtomOutsideGrid { norm: f64, radius: f64 },

    #[error("measure is not Parseval within tolerance: ||S - I|| = {defect:.3e} > {tol:.3e}")]
    NotParseval { defect: f64, tol: f64 },

    #[error("sampling budget exhausted: {reason}")]
    SamplingBudget { reason: String },

    #[error("schema violation: {reason}")]
    Schema { reason: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("internal solver failure: {reason}")]
    Internal { reason: String },
}

impl Error {
    /// True for errors that signal a violated mathematical precondition
    /// (as opposed to malformed input or an internal failure).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::SingularOperator { .. }
                | Error::NegativeEigenvalue { .. }
                | Error::NotParseval { .. }
                | Error::TooFewVectors { .. }
        )
    }

    /// True for malformed input: schema violations, dimension mismatches,
    /// bad parameters.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Schema { .. }
                | Error::DimensionMismatch { .. }
                | Error::CardinalityMismatch { .. }
                | Error::InvalidWeights { .. }
                | Error::InvalidCoefficients { .. }
                | Error::IndexOutOfRange { .. }
                | Error::InvalidParameter { .. }
                | Error::NotSymmetric { .. }
                | Error::NonFinite { .. }
                | Error::Json(_)
        )
    }
}
