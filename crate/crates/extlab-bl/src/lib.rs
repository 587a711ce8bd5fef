//! Brascamp-Lieb finiteness checks for paraboloid cap data.
//!
//! A tuple of base points in Q^d induces a datum of 2d linear maps on
//! Q^(d+1): d rank-one maps tied to the first point and one corank-one
//! projection per remaining point, all with exponent 1/d. The constant is
//! finite iff the exact scaling identity holds and the dimension inequality
//! dim V <= sum_j p_j dim(L_j V) holds for every subspace V. This crate
//! checks both conditions in exact rational arithmetic on a finite candidate
//! lattice, and for points ranging over cube collections it decides
//! finiteness geometrically, producing an explicit violating subspace when
//! the answer is negative.

mod candidates;
mod datum;
mod error;
mod finiteness;
mod subspace;
mod witness;

pub use candidates::{candidate_subspaces, candidate_subspaces_with_cap, CandidateSet, MAX_CANDIDATES};
pub use datum::{
    bl_datum_from_caps, dimension_condition_on, image_dim, scaling_condition, BLDatum,
    CapPointSet, DimensionCheck, ScalingCheck,
};
pub use error::BlError;
pub use finiteness::{check_finiteness, FinitenessVerdict, InfinitenessCertificate};
pub use subspace::Subspace;
pub use witness::{
    cap_finiteness_via_geometry, construct_violating_subspace, CapFinitenessVerdict, CapWitness,
};
