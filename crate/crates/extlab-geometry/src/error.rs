use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },

    #[error("cube index {index} out of range for collection of {len}")]
    CubeIndexOutOfRange { index: usize, len: usize },

    #[error("interval endpoints reversed: {lo} > {hi}")]
    ReversedInterval { lo: String, hi: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty {what}")]
    Empty { what: &'static str },

    #[error("rank deficient")]
    RankDeficient,

    #[error("last row is not all ones")]
    MissingOnesRow,

    #[error("matrix shape {rows}x{cols} incompatible with {len} entries")]
    BadMatrixShape { rows: usize, cols: usize, len: usize },

    #[error("subdivisions must be at least 1")]
    BadSubdivisions,

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl GeomError {
    pub fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        GeomError::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}
