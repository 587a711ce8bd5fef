//! Finiteness verdicts for a Brascamp-Lieb datum relative to a candidate
//! subspace set: scaling is checked exactly, then the dimension inequality
//! on every candidate in order. The first violation is returned as a
//! certificate.

use extlab_geometry::{format_rational, Rational};
use serde_json::Value;

use crate::candidates::CandidateSet;
use crate::datum::{dimension_condition_on, scaling_condition, BLDatum};
use crate::error::BlError;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq)]
pub enum InfinitenessCertificate {
    /// sum_j p_j n_j differs from the ambient dimension.
    ScalingFailure { lhs: Rational, rhs: Rational },
    /// A subspace with dim V > sum_j p_j dim(L_j V).
    DimensionViolation {
        subspace: Subspace,
        lhs: usize,
        rhs: Rational,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum FinitenessVerdict {
    Infinite(InfinitenessCertificate),
    /// No candidate violated the dimension condition. `truncated` is carried
    /// over from the candidate closure: when set, the verdict only covers
    /// the subspaces that were actually enumerated.
    FiniteOnCandidates {
        candidates_checked: usize,
        truncated: bool,
    },
}

impl FinitenessVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, FinitenessVerdict::FiniteOnCandidates { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            FinitenessVerdict::Infinite(cert) => {
                let witness = match cert {
                    InfinitenessCertificate::ScalingFailure { lhs, rhs } => serde_json::json!({
                        "kind": "scaling",
                        "lhs": format_rational(lhs),
                        "rhs": format_rational(rhs),
                    }),
                    InfinitenessCertificate::DimensionViolation { subspace, lhs, rhs } => {
                        serde_json::json!({
                            "kind": "dimension",
                            "subspace": subspace.to_json(),
                            "lhs": lhs,
                            "rhs": format_rational(rhs),
                        })
                    }
                };
                serde_json::json!({ "verdict": "infinite", "witness": witness })
            }
            FinitenessVerdict::FiniteOnCandidates {
                candidates_checked,
                truncated,
            } => serde_json::json!({
                "verdict": "finite-on-candidates",
                "candidates_checked": candidates_checked,
                "truncated": truncated,
            }),
        }
    }
}

/// Checks scaling, then the dimension condition on every candidate. The
/// candidate order is preserved, so the returned certificate is the first
/// violation in enumeration order.
pub fn check_finiteness(
    datum: &BLDatum,
    candidates: &CandidateSet,
) -> Result<FinitenessVerdict, BlError> {
    let scaling = scaling_condition(datum);
    if !scaling.holds {
        return Ok(FinitenessVerdict::Infinite(
            InfinitenessCertificate::ScalingFailure {
                lhs: scaling.lhs,
                rhs: scaling.rhs,
            },
        ));
    }
    for subspace in &candidates.subspaces {
        let check = dimension_condition_on(datum, subspace)?;
        if !check.holds {
            return Ok(FinitenessVerdict::Infinite(
                InfinitenessCertificate::DimensionViolation {
                    subspace: subspace.clone(),
                    lhs: check.lhs,
                    rhs: check.rhs,
                },
            ));
        }
    }
    Ok(FinitenessVerdict::FiniteOnCandidates {
        candidates_checked: candidates.subspaces.len(),
        truncated: candidates.truncated,
    })
}
