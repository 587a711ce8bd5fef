//! Weak transversality of cube collections: a pivot cube is weakly
//! transversal to the rest when k-1 pairwise-distinct canonical axes exist
//! on which its closed projection misses each other cube's. Decided exactly
//! over rationals via bipartite matching, which is complete: absence of a
//! matching certifies absence of any valid axis assignment.

use std::collections::{BTreeMap, HashSet};

use num::Zero;

use crate::cube::{CubeCollection, RationalCube};
use crate::error::GeomError;
use crate::matching::maximum_matching;
use crate::rational::Rational;

/// Distinct axes assigned to the non-pivot cubes, each axis separating that
/// cube's closed projection from the pivot's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionAssignment {
    pivot: usize,
    assignment: BTreeMap<usize, usize>,
}

impl DirectionAssignment {
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// Map from non-pivot cube index to its assigned axis.
    pub fn assignment(&self) -> &BTreeMap<usize, usize> {
        &self.assignment
    }

    pub fn axis_for(&self, cube: usize) -> Option<usize> {
        self.assignment.get(&cube).copied()
    }

    /// Re-checks the defining conditions: axes pairwise distinct, every
    /// non-pivot cube covered, and closed projections disjoint on each
    /// assigned axis.
    pub fn verify(&self, coll: &CubeCollection) -> bool {
        if self.pivot >= coll.len() || self.assignment.len() != coll.len() - 1 {
            return false;
        }
        let mut used = HashSet::new();
        for (&j, &axis) in &self.assignment {
            if j == self.pivot || j >= coll.len() || axis >= coll.dim() || !used.insert(axis) {
                return false;
            }
            let ok = closed_projections_disjoint(&coll.cubes()[self.pivot], &coll.cubes()[j], axis);
            if !matches!(ok, Ok(true)) {
                return false;
            }
        }
        true
    }

    /// Smallest separation realized by the assigned pairs; None for an empty
    /// assignment (k = 1).
    pub fn min_separation(&self, coll: &CubeCollection) -> Option<Rational> {
        self.assignment
            .iter()
            .map(|(&j, &axis)| {
                coll.cubes()[self.pivot]
                    .projection(axis)
                    .gap(coll.cubes()[j].projection(axis))
            })
            .min()
    }
}

/// Exact disjointness of the closed axis projections; a shared endpoint
/// counts as intersecting.
pub fn closed_projections_disjoint(
    c1: &RationalCube,
    c2: &RationalCube,
    axis: usize,
) -> Result<bool, GeomError> {
    let dim = c1.dim().min(c2.dim());
    if axis >= dim {
        return Err(GeomError::AxisOutOfRange { axis, dim });
    }
    Ok(c1.projection(axis).disjoint(c2.projection(axis)))
}

/// Finds k-1 distinct axes for the non-pivot cubes with disjoint closed
/// projections against the pivot, or None when no such assignment exists.
/// Ties resolve to the lowest axis index.
pub fn weakly_transversal_with_pivot(
    coll: &CubeCollection,
    pivot: usize,
) -> Result<Option<DirectionAssignment>, GeomError> {
    if pivot >= coll.len() {
        return Err(GeomError::CubeIndexOutOfRange { index: pivot, len: coll.len() });
    }
    let d = coll.dim();
    let others: Vec<usize> = (0..coll.len()).filter(|&j| j != pivot).collect();
    if others.len() > d {
        // More cubes than axes: no injective assignment can exist.
        return Ok(None);
    }
    let pivot_cube = &coll.cubes()[pivot];
    let adj: Vec<Vec<usize>> = others
        .iter()
        .map(|&j| {
            (0..d)
                .filter(|&axis| {
                    pivot_cube
                        .projection(axis)
                        .disjoint(coll.cubes()[j].projection(axis))
                })
                .collect()
        })
        .collect();
    let matched = maximum_matching(d, &adj);
    if matched.iter().any(Option::is_none) {
        return Ok(None);
    }
    let assignment = others
        .iter()
        .zip(&matched)
        .map(|(&j, m)| (j, m.unwrap()))
        .collect();
    Ok(Some(DirectionAssignment { pivot, assignment }))
}

/// True when every cube works as a pivot.
pub fn is_weakly_transversal(coll: &CubeCollection) -> bool {
    (0..coll.len()).all(|p| {
        weakly_transversal_with_pivot(coll, p)
            .expect("pivot index in range")
            .is_some()
    })
}

/// Per-axis indicator that the cubes' projections are not all identical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalityVector {
    bits: Vec<bool>,
}

impl TransversalityVector {
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn bit(&self, axis: usize) -> bool {
        self.bits[axis]
    }

    pub fn total(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

/// Bit l set iff at least two distinct intervals occur among the axis-l
/// projections.
pub fn transversality_vector(coll: &CubeCollection) -> TransversalityVector {
    let bits = (0..coll.dim())
        .map(|axis| {
            let first = coll.cubes()[0].projection(axis);
            coll.cubes()[1..].iter().any(|c| c.projection(axis) != first)
        })
        .collect();
    TransversalityVector { bits }
}

/// Axes on which the pivot's closed projection meets every listed member's.
pub fn axes_meeting_all(coll: &CubeCollection, pivot: usize, members: &[usize]) -> Vec<usize> {
    let pivot_cube = &coll.cubes()[pivot];
    (0..coll.dim())
        .filter(|&axis| {
            members.iter().all(|&j| {
                j == pivot
                    || pivot_cube
                        .projection(axis)
                        .gap(coll.cubes()[j].projection(axis))
                        .is_zero()
            })
        })
        .collect()
}
