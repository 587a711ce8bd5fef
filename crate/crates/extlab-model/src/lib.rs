//! Discretized extension operators and their norm diagnostics.
//!
//! The linear operator tabulates packet coefficients of a grid function
//! over a finite (n, m) window; the multilinear operator multiplies the
//! per-cube tables of several inputs entrywise. On top of the tables
//! sit sequence norms (l^p, quasi l^q, mixed l^2-in-n / l^q-out),
//! dyadic level-set histograms, and operator-to-input norm ratios.
//!
//! The m lattice is infinite and per-m squared mass is exactly flat
//! (discrete Parseval), so truncation is a real decision, not a detail:
//! every reported norm carries the fraction of its power mass in the
//! outermost m slices and refuses to report past the truncation gate.
//! A separate quadrature path evaluates the continuous extension of
//! box-indicator sums exactly by axis factorization, for the
//! lower-bound mechanisms that the model's step functions cannot see.

mod corpus;
mod error;
mod extension;
mod field;
mod levels;
mod norms;
mod operators;

pub use corpus::{bandlimited_corpus, gaussian_corpus, normalized_l2};
pub use error::ModelError;
pub use extension::{continuous_extension, IndicatorSum};
pub use field::CoefficientField;
pub use levels::{dyadic_level, level_set_histogram, LevelSetHistogram};
pub use norms::{
    grid_lp_norm, lp_norm, lq_quasinorm, mixed_norm, multilinear_norm_ratio, norm_ratio,
    norm_report, tail_fraction, NormRatioReport, NormReport, TRUNCATION_TAIL_LIMIT,
};
pub use operators::{e_d_coefficients, me_kd_coefficients, window_is_resolved, MultilinearSpec};
