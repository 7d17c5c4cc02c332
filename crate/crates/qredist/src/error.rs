use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("label collision: `{0}` appears in both operands")]
    LabelCollision(String),

    #[error("unknown label: `{0}`")]
    UnknownLabel(String),

    #[error("duplicate label: `{0}`")]
    DuplicateLabel(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("state is not normalized (norm² deviates by {0:.3e})")]
    NotNormalized(f64),

    #[error("matrix is not Hermitian (max asymmetry {0:.3e})")]
    NotHermitian(f64),

    #[error("operator is not positive semidefinite (min eigenvalue {0:.3e})")]
    NotPositive(f64),

    #[error("matrix is not a partial isometry (gram eigenvalue {0} outside {{0,1}})")]
    NotIsometry(f64),

    #[error("trace deviates from 1 by {0:.3e}")]
    InvalidTrace(f64),

    #[error("reference dimension {got} is smaller than the state rank {need}")]
    ReferenceTooSmall { got: usize, need: usize },

    #[error("target dimension {got} is smaller than the source support rank {need}")]
    TargetTooSmall { got: usize, need: usize },

    #[error("{s_dim} does not divide the carrier dimension {c_dim}")]
    NonDivisor { s_dim: usize, c_dim: usize },

    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("operator inequality hypothesis violated: {what} has eigenvalue {eigenvalue:.3e}")]
    HypothesisViolation { what: String, eigenvalue: f64 },

    #[error("register size mismatch: expected {expected} states, got {got}")]
    KappaMismatch { expected: usize, got: usize },

    #[error("states are {got:.6} apart in trace distance, exceeding the declared bound {bound}")]
    ClosenessViolation { got: f64, bound: f64 },

    #[error("total dimension {got} exceeds the cap {cap}")]
    DimensionCap { got: usize, cap: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("expected a pure global state: {0}")]
    NotPure(String),

    #[error("inconsistent Kraus block shapes: {0}")]
    BlockShape(String),

    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("composition middle mismatch:\n  lhs rhs: {left}\n  rhs lhs: {right}")]
    MiddleMismatch { left: String, right: String },

    #[error("symbol `{symbol}` absent from the {side} side")]
    SymbolAbsent { symbol: String, side: String },

    #[error("negative rate {rate} for `{symbol}` on the right-hand side")]
    NegativeRate { symbol: String, rate: String },

    #[error("invalid state file: {0}")]
    StateFile(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
