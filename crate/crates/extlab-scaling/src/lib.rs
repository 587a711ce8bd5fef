//! Scaling-law experiments on sharp example families.
//!
//! Each family places k small boxes inside the standard caps so that the
//! product of their extensions concentrates on an explicit dual box whose
//! measure is a power of the box scale delta. Sweeping delta and fitting
//! the log-log slope of the measured Lp-over-L2 ratio then recovers the
//! predicted exponent, giving a quantitative check of the lower-bound
//! constructions. Only exponents are asserted; the constants hiding in the
//! comparisons are reported, never tested.
//!
//! The crate also keeps the closed-form exponent thresholds as exact
//! rationals, so identities between them (the maximal-degree threshold
//! equals the sharp k-linear exponent, the two tensor-input branches agree
//! at their crossover) hold exactly rather than to rounding.

mod error;
mod family;
mod quadrature;
mod report;
mod thresholds;

pub use error::ScalingError;
pub use family::{
    predicted_exponent, rotate_quarter_turn, DualBox, ExampleFamily, FamilyKind, SupportBox,
    DEFAULT_SHRINK, MAX_DELTA,
};
pub use quadrature::product_lp_norm;
pub use report::{run_scaling, ScalingConfig, ScalingReport};
pub use thresholds::{
    formula_value, threshold_table, thresholds, ThresholdFormula, ThresholdRow, ALL_FORMULAS,
};
