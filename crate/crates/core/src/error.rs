use thiserror::Error;

/// Errors raised by the tableau, growth and carton operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotPartition(Vec<usize>),

    #[error("rectangle dimensions must be positive, got {ell}x{k}")]
    EmptyRectangle { ell: usize, k: usize },

    #[error("{shape} does not fit in {rect}")]
    DoesNotFit { shape: String, rect: String },

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("{upper} does not cover {lower}")]
    NotCover { lower: String, upper: String },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid slide: {0}")]
    InvalidSlide(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("expected a straight shape, got {0}")]
    NotStraight(String),

    #[error("no shape completes the square {0}")]
    NoCompletion(String),

    #[error("more than one shape completes the square {0}")]
    AmbiguousCompletion(String),

    #[error("invalid layered tableau: {0}")]
    InvalidLayered(String),

    #[error("carton consistency check failed on face {face}, edge {edge}: {detail}")]
    Consistency {
        face: &'static str,
        edge: &'static str,
        detail: String,
    },

    #[error("invalid carton: {0}")]
    InvalidCarton(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
