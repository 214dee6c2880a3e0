use thiserror::Error;

/// Errors shared across the diagram-algebra modules.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KmyError {
    #[error("malformed pairing: {0}")]
    MalformedPairing(String),
    #[error("strand count mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("coefficient ring mismatch")]
    RingMismatch,
    #[error("evaluation at delta = 0 with a negative power of delta present")]
    EvalAtZeroWithNegativePower,
    #[error("delta is not invertible here")]
    DeltaNotInvertible,
    #[error("height bound l = {l} out of range for n = {n} (need -1 <= l <= n-2)")]
    BadHeightBound { n: usize, l: i64 },
    #[error("invalid cell index: {0}")]
    BadCellIndex(String),
    #[error("inflation layer mismatch: {0}")]
    LayerMismatch(String),
    #[error("permutation degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("vector does not lie in the polytabloid span")]
    NotInSpan,
    #[error("induced permutation moves a strand past position {m_l}: {detail}")]
    HeightInvariantViolation { m_l: usize, detail: String },
    #[error("Gram decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("diagram has height {height}, above the bound l = {l}")]
    NotInAlgebra { height: i64, l: i64 },
    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, KmyError>;
