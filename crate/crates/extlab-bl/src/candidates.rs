//! Candidate subspace lattice for the dimension condition.
//!
//! The dimension inequality only needs to be tested on a finite set of
//! critical subspaces. We take the kernels of the datum maps together with
//! the coordinate axes and close the set under pairwise intersection and
//! sum. The closure is deterministic: seeds in a fixed order, every
//! intersection before any sum, then mixed products in discovery order, so
//! the kernel intersections that certify violations survive any cap.

use std::collections::HashSet;

use crate::datum::BLDatum;
use crate::error::BlError;
use crate::subspace::Subspace;

/// Hard cap on the closure size; lattices that grow past it are truncated
/// and flagged rather than ground out.
pub const MAX_CANDIDATES: usize = 4096;

#[derive(Debug, Clone)]
pub struct CandidateSet {
    pub subspaces: Vec<Subspace>,
    pub truncated: bool,
}

/// Lattice closure of the map kernels, the coordinate axes, and any extra
/// seeds, capped at [`MAX_CANDIDATES`] elements.
pub fn candidate_subspaces(
    datum: &BLDatum,
    extra: Option<&[Subspace]>,
) -> Result<CandidateSet, BlError> {
    candidate_subspaces_with_cap(datum, extra, MAX_CANDIDATES)
}

pub fn candidate_subspaces_with_cap(
    datum: &BLDatum,
    extra: Option<&[Subspace]>,
    cap: usize,
) -> Result<CandidateSet, BlError> {
    let n = datum.ambient_dim();
    let mut seeds = vec![Subspace::zero(n), Subspace::full(n)];
    for i in 0..n {
        seeds.push(Subspace::coordinate_span(n, &[i])?);
    }
    for m in datum.maps() {
        seeds.push(Subspace::from_kernel_of(m));
    }
    if let Some(extras) = extra {
        for s in extras {
            if s.ambient_dim() != n {
                return Err(BlError::AmbientMismatch {
                    expected: n,
                    got: s.ambient_dim(),
                });
            }
            seeds.push(s.clone());
        }
    }

    let mut out: Vec<Subspace> = Vec::new();
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut truncated = false;
    for s in seeds {
        if out.len() >= cap {
            truncated = true;
            break;
        }
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }

    // Intersections first: meets only lower dimension, so this phase always
    // terminates, and it already contains every intersection of map kernels.
    // Joins and mixed products follow; generic lines and planes in ambient
    // dimension 3 and up generate new subspaces indefinitely there, which is
    // what the cap is for.
    let mut i = 0;
    'meets: while i < out.len() {
        for j in 0..i {
            let meet = out[i].intersect(&out[j])?;
            if seen.contains(&meet) {
                continue;
            }
            if out.len() >= cap {
                truncated = true;
                break 'meets;
            }
            seen.insert(meet.clone());
            out.push(meet);
        }
        i += 1;
    }

    let mut i = 0;
    'joins: while i < out.len() {
        for j in 0..i {
            let meet = out[i].intersect(&out[j])?;
            let join = out[i].sum(&out[j])?;
            for s in [meet, join] {
                if seen.contains(&s) {
                    continue;
                }
                if out.len() >= cap {
                    truncated = true;
                    break 'joins;
                }
                seen.insert(s.clone());
                out.push(s);
            }
        }
        i += 1;
    }
    Ok(CandidateSet {
        subspaces: out,
        truncated,
    })
}
