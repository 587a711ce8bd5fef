use thiserror::Error;

/// Errors for wave packet construction, quadrature, and grid I/O.
#[derive(Debug, Error)]
pub enum PacketError {
    #[error("non-finite input: {what}")]
    NonFinite { what: &'static str },

    #[error("segment endpoints are reversed: {a} > {b}")]
    ReversedSegment { a: f64, b: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("profile support does not cover the grid cube")]
    SupportMismatch,

    #[error("smooth margin must be positive, got {margin}")]
    BadMargin { margin: f64 },

    #[error("resolution must be at least 1")]
    ZeroResolution,

    #[error("expected {expected} samples, got {got}")]
    BadSampleCount { expected: usize, got: usize },

    #[error("sample {index} is not finite")]
    NonFiniteSample { index: usize },

    #[error("frequency box reaches |n| = {requested} but the grid resolves |n| <= {max_allowed}; increase resolution")]
    FrequencyBoxTooWide { requested: i64, max_allowed: i64 },

    #[error("frequency range is reversed: {lo} > {hi}")]
    ReversedRange { lo: i64, hi: i64 },

    #[error("chirp scale must be positive, got {t}")]
    NonPositiveScale { t: f64 },

    #[error("{context}: {message}")]
    Parse { context: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl PacketError {
    pub fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        PacketError::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}
