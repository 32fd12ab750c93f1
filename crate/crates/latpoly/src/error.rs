use thiserror::Error;

/// Errors surfaced by the toolkit. Data conditions (empty polytopes, absent
/// solutions) are values, not errors; these variants cover contract
/// violations and malformed input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polytope is not smooth: {0}")]
    NotSmooth(String),
    #[error("polytope is not simple: {0}")]
    NotSimple(String),
    #[error("polytope is not full-dimensional: dim {dim} in ambient {ambient}")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("document error: {0}")]
    Document(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
