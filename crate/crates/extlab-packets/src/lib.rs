//! Quadratic-chirp wave packets and their coefficient calculus.
//!
//! A packet is a bump profile on a rational cube carrying the phase
//! e^{2 pi i (x.n + |x|^2 m)}. This crate evaluates packets, takes their
//! inner products against grid-sampled functions by the midpoint rule,
//! computes whole fixed-m coefficient slabs with one FFT when the cube
//! has unit sides, integrates 1-D chirp segments to 1e-10, and splits the
//! unit chirp e^{2 pi i t x^2} into phase-space atoms along a smooth
//! partition of unity.
//!
//! Everything oscillatory is resolved by panel counts proportional to the
//! total phase variation, so accuracy is uniform over the frequency ranges
//! the operator experiments use. Grid functions round-trip through a
//! binary container that stores cube endpoints as exact decimal strings.

mod atoms;
mod chirp;
mod coeffs;
mod error;
mod grid;
mod packet;
mod profile;
mod quadrature;

pub use atoms::{chirp_unit_decomposition, partition_bump, ChirpAtom};
pub use chirp::chirp_segment_integral;
pub use coeffs::{
    coefficient_slab, coefficient_slab_range, inner_product, resolution_is_adequate,
    CoefficientSlab, FrequencyBox,
    QuadratureResult,
};
pub use error::PacketError;
pub use grid::GridFunction;
pub use packet::{eval_wavepacket, packet_overlap, WavePacket};
pub use profile::{smooth_step, BumpProfile, DEFAULT_SMOOTH_MARGIN};
pub use quadrature::{gauss_legendre, integrate_panels, integrate_panels_c, GaussRule};
