use thiserror::Error;

use crate::family::FamilyKind;

/// Errors for family construction, dual-box quadrature, and thresholds.
#[derive(Debug, Error)]
pub enum ScalingError {
    #[error("{kind} family does not admit d = {d}, k = {k}")]
    InvalidFamily { kind: FamilyKind, d: usize, k: usize },

    #[error("delta {delta} is outside (0, 1/8]")]
    BadDelta { delta: f64 },

    #[error("need at least two deltas to fit a slope, got {got}")]
    TooFewDeltas { got: usize },

    #[error("deltas must be strictly decreasing (position {position})")]
    UnorderedDeltas { position: usize },

    #[error("exponent p = {p} must be positive and finite")]
    BadExponent { p: String },

    #[error("quadrature needs at least 2 grid points per axis, got {grid}")]
    BadGrid { grid: usize },

    #[error("shrink factor {shrink} is outside (0, 1]")]
    BadShrink { shrink: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("no input boxes")]
    NoBoxes,

    #[error(
        "dual-box quadrature did not settle at delta = {delta}: doubling the grid \
         moved the norm by {rel_change:.3e}, above {tolerance:.1e}; the grid does \
         not resolve the phase, raise it or shrink the dual box"
    )]
    QuadratureFailure {
        delta: f64,
        rel_change: f64,
        tolerance: f64,
    },

    #[error("unknown family kind {name:?}, expected cube, slab, or rhombus")]
    UnknownKind { name: String },

    #[error("thresholds need 1 <= k <= d+1 and tau <= d, got k = {k}, d = {d}, tau = {tau_total}")]
    ThresholdRange { k: usize, d: usize, tau_total: usize },

    #[error(transparent)]
    Geometry(#[from] extlab_geometry::GeomError),

    #[error(transparent)]
    Packet(#[from] extlab_packets::PacketError),

    #[error("{context}: {message}")]
    Report { context: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ScalingError {
    pub fn report(context: impl Into<String>, message: impl Into<String>) -> Self {
        ScalingError::Report {
            context: context.into(),
            message: message.into(),
        }
    }
}
