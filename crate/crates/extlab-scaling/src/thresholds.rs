//! Closed-form exponent thresholds for the multilinear estimates, kept as
//! exact rationals so identities between them can be checked exactly.

use std::fmt;

use extlab_geometry::{format_rational, ratio, to_f64, Rational};
use serde_json::{json, Value};

use crate::error::ScalingError;

/// Identifier of one closed-form exponent formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdFormula {
    /// 2(d+tau+2) / (k(d+tau)): the Lp threshold of the k-linear estimate
    /// on caps of total transversality degree tau.
    DegreeThreshold,
    /// 2(d+k+1) / (k(d+k-1)): the conjectured sharp k-linear exponent,
    /// equal to the degree threshold at the maximal degree tau = k-1.
    KLinearSharp,
    /// 2(d+2) / d: the Strichartz exponent.
    Strichartz,
    /// 2(d+1) / d: the adjoint restriction exponent.
    Restriction,
    /// 4(d+1) / (d+k+1) for 2 <= k < d/2, 4(d+1) / (2d-k+1) for
    /// d/2 <= k < d+1: the Lebesgue input exponent of the k-linear bound
    /// for tensor-structured inputs. The branches agree at k = d/2.
    TensorInput,
}

impl fmt::Display for ThresholdFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id = match self {
            ThresholdFormula::DegreeThreshold => "degree-threshold",
            ThresholdFormula::KLinearSharp => "k-linear-sharp",
            ThresholdFormula::Strichartz => "strichartz",
            ThresholdFormula::Restriction => "restriction",
            ThresholdFormula::TensorInput => "tensor-input",
        };
        write!(f, "{id}")
    }
}

pub const ALL_FORMULAS: [ThresholdFormula; 5] = [
    ThresholdFormula::DegreeThreshold,
    ThresholdFormula::KLinearSharp,
    ThresholdFormula::Strichartz,
    ThresholdFormula::Restriction,
    ThresholdFormula::TensorInput,
];

/// Evaluate one formula at (k, d, tau_total). None outside the formula's
/// domain: everything needs d >= 1 and k >= 1, and the tensor-input
/// exponent exists only for 2 <= k < d+1.
pub fn formula_value(
    formula: ThresholdFormula,
    k: usize,
    d: usize,
    tau_total: usize,
) -> Option<Rational> {
    if d == 0 || k == 0 {
        return None;
    }
    let (kq, dq, tq) = (k as i64, d as i64, tau_total as i64);
    match formula {
        ThresholdFormula::DegreeThreshold => Some(ratio(2 * (dq + tq + 2), kq * (dq + tq))),
        ThresholdFormula::KLinearSharp => Some(ratio(2 * (dq + kq + 1), kq * (dq + kq - 1))),
        ThresholdFormula::Strichartz => Some(ratio(2 * (dq + 2), dq)),
        ThresholdFormula::Restriction => Some(ratio(2 * (dq + 1), dq)),
        ThresholdFormula::TensorInput => {
            if k < 2 || k > d {
                return None;
            }
            if 2 * kq < dq {
                Some(ratio(4 * (dq + 1), dq + kq + 1))
            } else {
                Some(ratio(4 * (dq + 1), 2 * dq - kq + 1))
            }
        }
    }
}

/// One threshold table row: every closed-form exponent at (k, d, tau).
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdRow {
    pub k: usize,
    pub d: usize,
    pub tau_total: usize,
    pub degree_threshold: Rational,
    pub k_linear_sharp: Rational,
    pub strichartz: Rational,
    pub restriction: Rational,
    /// Absent for k = 1 and k = d+1, where the tensor-input bound has no
    /// two-branch formula.
    pub tensor_input: Option<Rational>,
}

impl ThresholdRow {
    /// The row as (formula id, value) pairs, for reproducibility checks
    /// and serialization.
    pub fn entries(&self) -> Vec<(ThresholdFormula, Rational)> {
        let mut out = vec![
            (
                ThresholdFormula::DegreeThreshold,
                self.degree_threshold.clone(),
            ),
            (ThresholdFormula::KLinearSharp, self.k_linear_sharp.clone()),
            (ThresholdFormula::Strichartz, self.strichartz.clone()),
            (ThresholdFormula::Restriction, self.restriction.clone()),
        ];
        if let Some(t) = &self.tensor_input {
            out.push((ThresholdFormula::TensorInput, t.clone()));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .iter()
            .map(|(formula, value)| {
                json!({
                    "formula": formula.to_string(),
                    "exact": format_rational(value),
                    "value": to_f64(value),
                })
            })
            .collect();
        json!({
            "k": self.k,
            "d": self.d,
            "tau_total": self.tau_total,
            "entries": entries,
        })
    }
}

/// Build the threshold row for (k, d, tau_total). Requires
/// 1 <= k <= d+1 and tau_total <= d.
pub fn thresholds(k: usize, d: usize, tau_total: usize) -> Result<ThresholdRow, ScalingError> {
    if d == 0 || k == 0 || k > d + 1 || tau_total > d {
        return Err(ScalingError::ThresholdRange { k, d, tau_total });
    }
    let value = |f| formula_value(f, k, d, tau_total).expect("total formula in range");
    Ok(ThresholdRow {
        k,
        d,
        tau_total,
        degree_threshold: value(ThresholdFormula::DegreeThreshold),
        k_linear_sharp: value(ThresholdFormula::KLinearSharp),
        strichartz: value(ThresholdFormula::Strichartz),
        restriction: value(ThresholdFormula::Restriction),
        tensor_input: formula_value(ThresholdFormula::TensorInput, k, d, tau_total),
    })
}

/// Every row with 1 <= d <= max_d, 1 <= k <= d+1, 0 <= tau <= d.
pub fn threshold_table(max_d: usize) -> Vec<ThresholdRow> {
    let mut rows = Vec::new();
    for d in 1..=max_d {
        for k in 1..=d + 1 {
            for tau in 0..=d {
                rows.push(thresholds(k, d, tau).expect("ranges are valid by construction"));
            }
        }
    }
    rows
}
