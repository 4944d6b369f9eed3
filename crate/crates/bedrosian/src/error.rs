use thiserror::Error;

/// Errors reported by grid, mask, multiplier, and verification operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },

    #[error("anti-aliasing violation: {0}")]
    AntiAliasing(String),

    #[error("invalid region descriptor at {path}: {reason}")]
    InvalidDescriptor { path: String, reason: String },

    #[error("invalid config at {path}: {reason}")]
    InvalidConfig { path: String, reason: String },

    #[error("unknown selector `{0}`")]
    UnknownSelector(String),

    #[error("non-finite multiplier value at bin {0}")]
    NonFinite(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("config parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
