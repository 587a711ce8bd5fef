//! Exact rational geometry of axis-aligned cube collections.
//!
//! Everything boundary-sensitive runs over `num::BigRational`: interval
//! projections use closed-interval semantics, so shared endpoints count as
//! intersections and floating point would misclassify exactly the cases
//! that matter. Floating point appears only in the wedge-volume heuristics,
//! which are estimates by design.
//!
//! The central notion is weak transversality: a collection of k cubes in
//! R^d is weakly transversal with a pivot cube when k-1 pairwise-distinct
//! canonical axes separate the pivot's closed projection from each other
//! cube's. The module decides it by bipartite matching, refines collections
//! into subcube partitions whose selections can be checked individually,
//! and extracts the combinatorial witnesses (minimal failing subsets, row
//! systems of full-rank matrices) that downstream linear algebra consumes.

mod cube;
mod error;
mod interval;
mod matching;
mod matrix;
mod matrix_lemma;
mod minimal;
mod rational;
mod refine;
mod transversality;
mod wedge;

pub use cube::{CubeCollection, RationalCube};
pub use error::GeomError;
pub use interval::Interval;
pub use matrix::{dot, gram_det, RationalMatrix};
pub use matrix_lemma::{matrix_lemma_rows, MatrixLemmaRows};
pub use minimal::{find_minimal_property_p_subset, MinimalSubset};
pub use rational::{
    format_endpoint, format_rational, from_int, parse_rational, ratio, to_decimal_string, to_f64,
    Rational,
};
pub use refine::{
    decompose_weakly_transversal, refine_collection, Decomposition, RefinedCollection,
    SelectionVerdict,
};
pub use transversality::{
    axes_meeting_all, closed_projections_disjoint, is_weakly_transversal, transversality_vector,
    weakly_transversal_with_pivot, DirectionAssignment, TransversalityVector,
};
pub use wedge::{min_wedge_grid_estimate, wedge_volume};
