use thiserror::Error;

/// Errors for Brascamp-Lieb data construction and finiteness checks.
#[derive(Debug, Error)]
pub enum BlError {
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },

    #[error("map count {maps} does not match exponent count {exponents}")]
    CountMismatch { maps: usize, exponents: usize },

    #[error("exponent {index} is negative")]
    NegativeExponent { index: usize },

    #[error("cap point set needs {expected} points of length {dim}, got {got}")]
    BadPointCount { expected: usize, got: usize, dim: usize },

    #[error("collection has {got} cubes but the cap construction needs d+1 = {expected}")]
    WrongCubeCount { expected: usize, got: usize },

    #[error(
        "projections of the failing subset share no common value on axis {axis}; \
         refine the collection and retry on each refined selection"
    )]
    NeedsRefinement { axis: usize },

    #[error("{context}: {message}")]
    Parse { context: String, message: String },

    #[error(transparent)]
    Geometry(#[from] extlab_geometry::GeomError),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl BlError {
    pub fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        BlError::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}
