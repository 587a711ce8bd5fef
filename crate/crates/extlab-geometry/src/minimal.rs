//! Minimal failing subsets. When a collection is not weakly transversal
//! with a pivot, some smallest subset containing the pivot already fails,
//! and on exactly d - n + 2 axes (n the subset size) the pivot's projection
//! meets every other member's: by Hall's condition the failing subset's
//! members jointly reach at most n - 2 separating axes, and minimality
//! forces exactly n - 2, so the meeting axes number d - (n - 2).

use itertools::Itertools;

use crate::cube::CubeCollection;
use crate::error::GeomError;
use crate::transversality::{axes_meeting_all, weakly_transversal_with_pivot};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSubset {
    /// Sorted member indices into the original collection; contains the pivot.
    pub members: Vec<usize>,
    /// Sorted axes on which the pivot's closed projection meets every
    /// member's; always exactly d - members.len() + 2 of them.
    pub directions: Vec<usize>,
}

/// Smallest subset containing the pivot that is not weakly transversal with
/// it, or None when the whole collection is weakly transversal with the
/// pivot. Searched in ascending subset size, lexicographic within a size,
/// so the result is deterministic.
pub fn find_minimal_property_p_subset(
    coll: &CubeCollection,
    pivot: usize,
) -> Result<Option<MinimalSubset>, GeomError> {
    if pivot >= coll.len() {
        return Err(GeomError::CubeIndexOutOfRange { index: pivot, len: coll.len() });
    }
    if weakly_transversal_with_pivot(coll, pivot)?.is_some() {
        return Ok(None);
    }
    let others: Vec<usize> = (0..coll.len()).filter(|&j| j != pivot).collect();
    for n in 2..=coll.len() {
        for combo in others.iter().copied().combinations(n - 1) {
            let mut members: Vec<usize> = combo;
            members.push(pivot);
            members.sort_unstable();
            let sub = coll.subset(&members)?;
            let sub_pivot = members.binary_search(&pivot).expect("pivot is a member");
            if weakly_transversal_with_pivot(&sub, sub_pivot)?.is_some() {
                continue;
            }
            let directions = axes_meeting_all(coll, pivot, &members);
            let expected = (coll.dim() + 2).checked_sub(n);
            if Some(directions.len()) != expected {
                return Err(GeomError::Internal(format!(
                    "minimal failing subset of size {n} meets the pivot on {} axes, expected {expected:?}",
                    directions.len()
                )));
            }
            return Ok(Some(MinimalSubset { members, directions }));
        }
    }
    Err(GeomError::Internal(
        "collection fails weak transversality but no subset does".into(),
    ))
}
