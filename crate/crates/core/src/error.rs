use thiserror::Error;

/// Errors produced by graph construction and zeta evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph generation failed: {0}")]
    GenerationFailure(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not tagged vertex-transitive: {0}")]
    UnsupportedGraph(String),

    #[error("outside convergence domain: {0}")]
    OutsideDomain(String),

    #[error("quadrature did not converge at {grid} points per axis (best estimate {best}, error estimate {error_estimate})")]
    NoConvergence {
        best: f64,
        error_estimate: f64,
        grid: usize,
    },

    #[error("enumeration budget of {0} partial paths exceeded")]
    BudgetExceeded(u64),

    #[error("matrix dimension {0} too large for cofactor expansion (max 8)")]
    DimensionTooLarge(usize),

    #[error("unknown identity or suite: {0}")]
    UnknownIdentity(String),

    #[error("eigen-decomposition failed to converge")]
    EigenFailure,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
