use thiserror::Error;

/// Errors for coefficient field assembly, norms, and reports.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("m range is reversed: {lo} > {hi}")]
    ReversedRange { lo: i64, hi: i64 },

    #[error("expected {expected} values, got {got}")]
    BadValueCount { expected: usize, got: usize },

    #[error("value {index} is not finite")]
    NonFiniteValue { index: usize },

    #[error("index ({n:?}, {m}) is outside the field")]
    IndexOutOfRange { n: Vec<i64>, m: i64 },

    #[error("fields have mismatched index ranges")]
    RangeMismatch,

    #[error("collection has {cubes} cubes but {inputs} inputs were given")]
    CountMismatch { cubes: usize, inputs: usize },

    #[error("input {index} does not live on cube {index} of the collection")]
    CubeMismatch { index: usize },

    #[error("norm exponent must be >= 1 or infinity, got {p}")]
    BadExponent { p: f64 },

    #[error("quasi-norm exponent must be positive and finite, got {q}")]
    BadQuasiExponent { q: f64 },

    #[error("axis {axis} repeats or exceeds dimension {d}")]
    BadAxisSet { axis: usize, d: usize },

    #[error("level-set floor must be positive and finite, got {floor}")]
    BadFloor { floor: f64 },

    #[error("input function has zero norm")]
    ZeroDenominator,

    #[error(
        "outermost m shell carries {fraction:.3e} of the mass, above the {limit:.0e} truncation gate; widen the m range"
    )]
    TruncationTail { fraction: f64, limit: f64 },

    #[error(transparent)]
    Packet(#[from] extlab_packets::PacketError),

    #[error("{context}: {message}")]
    Parse { context: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ModelError {
    pub fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        ModelError::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}
