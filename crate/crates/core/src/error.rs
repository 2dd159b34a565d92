use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GarnirError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("action mismatch: permutation of {perm} letters applied to shape of size {shape}")]
    ActionMismatch { perm: usize, shape: usize },

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    SizeBound {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, GarnirError>;
