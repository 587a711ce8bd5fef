//! Sequence norms of coefficient fields, grid Lebesgue norms, and the
//! reporting layer with its truncation gate.
//!
//! The coefficient lattice is infinite in m; every reported norm is a
//! truncation. Per-m squared mass is exactly flat in m (discrete
//! Parseval), so an l2 over all m never converges and the honest
//! diagnostic is the fraction of the norm's own power mass carried by
//! the outermost m slices. Reports refuse to stand on a window whose
//! outermost shell still holds more than [`TRUNCATION_TAIL_LIMIT`] of
//! the mass.

use std::collections::HashMap;

use serde_json::{json, Value};

use extlab_packets::{FrequencyBox, GridFunction};

use crate::error::ModelError;
use crate::field::CoefficientField;
use crate::operators::{e_d_coefficients, me_kd_coefficients, MultilinearSpec};

/// Largest acceptable (outermost m shell mass) / (total mass) for a
/// reported norm.
pub const TRUNCATION_TAIL_LIMIT: f64 = 1e-3;

fn power_sum(values: &[num_complex::Complex64], q: f64) -> f64 {
    values.iter().map(|v| v.norm().powf(q)).sum()
}

/// l^p norm of the field, p >= 1 or infinity.
pub fn lp_norm(field: &CoefficientField, p: f64) -> Result<f64, ModelError> {
    if p.is_nan() || p < 1.0 {
        return Err(ModelError::BadExponent { p });
    }
    if p.is_infinite() {
        return Ok(field.values().iter().map(|v| v.norm()).fold(0.0, f64::max));
    }
    Ok(power_sum(field.values(), p).powf(1.0 / p))
}

/// l^q quasi-norm for any finite q > 0; same power sum formula, no
/// triangle inequality when q < 1.
pub fn lq_quasinorm(field: &CoefficientField, q: f64) -> Result<f64, ModelError> {
    if !q.is_finite() || q <= 0.0 {
        return Err(ModelError::BadQuasiExponent { q });
    }
    Ok(power_sum(field.values(), q).powf(1.0 / q))
}

/// Mixed norm: an l2 over the n axes in `inner_axes`, then an l^q over
/// everything else (the remaining n axes and m). `inner_axes` = all
/// axes with q = 2 collapses to the plain l2; empty `inner_axes` gives
/// the plain l^q.
pub fn mixed_norm(
    field: &CoefficientField,
    inner_axes: &[usize],
    q: f64,
) -> Result<f64, ModelError> {
    let d = field.dim();
    let mut inner = vec![false; d];
    for &axis in inner_axes {
        if axis >= d || inner[axis] {
            return Err(ModelError::BadAxisSet { axis, d });
        }
        inner[axis] = true;
    }
    if q.is_nan() || q <= 0.0 {
        return Err(ModelError::BadQuasiExponent { q });
    }

    let mut groups: HashMap<Vec<i64>, f64> = HashMap::new();
    for (n, m, v) in field.iter() {
        let mut key: Vec<i64> = n
            .iter()
            .enumerate()
            .filter(|(a, _)| !inner[*a])
            .map(|(_, &na)| na)
            .collect();
        key.push(m);
        *groups.entry(key).or_insert(0.0) += v.norm_sqr();
    }
    let inner_norms = groups.values().map(|s| s.sqrt());
    if q.is_infinite() {
        Ok(inner_norms.fold(0.0, f64::max))
    } else {
        Ok(inner_norms.map(|t| t.powf(q)).sum::<f64>().powf(1.0 / q))
    }
}

/// Midpoint-rule L^p norm of the grid function itself, p >= 1 or
/// infinity.
pub fn grid_lp_norm(g: &GridFunction, p: f64) -> Result<f64, ModelError> {
    if p.is_nan() || p < 1.0 {
        return Err(ModelError::BadExponent { p });
    }
    if p.is_infinite() {
        return Ok(g.samples().iter().map(|s| s.norm()).fold(0.0, f64::max));
    }
    let sum: f64 = g.samples().iter().map(|s| s.norm().powf(p)).sum();
    Ok((g.cell_volume() * sum).powf(1.0 / p))
}

/// Fraction of the q-power mass sitting in the outermost m slices.
/// Windows with fewer than three m slices are exact slice requests, not
/// truncations of an m sum, and report 0.
pub fn tail_fraction(field: &CoefficientField, q: f64) -> f64 {
    if field.m_count() < 3 {
        return 0.0;
    }
    let total = power_sum(field.values(), q);
    if total == 0.0 {
        return 0.0;
    }
    let (m_lo, m_hi) = field.m_range();
    let shell = power_sum(field.m_slice(m_lo).unwrap(), q)
        + power_sum(field.m_slice(m_hi).unwrap(), q);
    shell / total
}

/// A reported norm: the value, the exponent, and the truncation
/// diagnostic that justifies it.
#[derive(Debug, Clone, PartialEq)]
pub struct NormReport {
    pub p: f64,
    pub value: f64,
    pub tail_fraction: f64,
    pub quasi_norm: bool,
}

impl NormReport {
    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "value": self.value,
            "tail_fraction": self.tail_fraction,
            "quasi_norm": self.quasi_norm,
        })
    }
}

/// l^p (or quasi-norm) report with the truncation gate: errors instead
/// of standing on a window whose outermost m shell is still heavy.
pub fn norm_report(field: &CoefficientField, p: f64) -> Result<NormReport, ModelError> {
    let quasi_norm = p < 1.0;
    let value = if quasi_norm {
        lq_quasinorm(field, p)?
    } else {
        lp_norm(field, p)?
    };
    let tail = tail_fraction(field, if p.is_infinite() { 1.0 } else { p });
    if tail > TRUNCATION_TAIL_LIMIT {
        return Err(ModelError::TruncationTail {
            fraction: tail,
            limit: TRUNCATION_TAIL_LIMIT,
        });
    }
    Ok(NormReport {
        p,
        value,
        tail_fraction: tail,
        quasi_norm,
    })
}

/// Operator-level ratio report for one input or a multilinear family.
#[derive(Debug, Clone, PartialEq)]
pub struct NormRatioReport {
    pub p_in: f64,
    pub q_out: f64,
    pub ratio: f64,
    pub numerator: f64,
    pub denominator: f64,
    pub tail_fraction: f64,
    pub quasi_norm: bool,
    pub resolution_warning: bool,
}

impl NormRatioReport {
    pub fn to_json(&self) -> Value {
        json!({
            "p_in": self.p_in,
            "q_out": self.q_out,
            "ratio": self.ratio,
            "numerator": self.numerator,
            "denominator": self.denominator,
            "tail_fraction": self.tail_fraction,
            "quasi_norm": self.quasi_norm,
            "resolution_warning": self.resolution_warning,
        })
    }
}

fn ratio_from_field(
    field: &CoefficientField,
    denominator: f64,
    p_in: f64,
    q_out: f64,
) -> Result<NormRatioReport, ModelError> {
    if denominator == 0.0 {
        return Err(ModelError::ZeroDenominator);
    }
    let quasi_norm = q_out < 1.0;
    let numerator = if quasi_norm {
        lq_quasinorm(field, q_out)?
    } else {
        lp_norm(field, q_out)?
    };
    let tail = tail_fraction(field, if q_out.is_infinite() { 1.0 } else { q_out });
    if tail > TRUNCATION_TAIL_LIMIT {
        return Err(ModelError::TruncationTail {
            fraction: tail,
            limit: TRUNCATION_TAIL_LIMIT,
        });
    }
    Ok(NormRatioReport {
        p_in,
        q_out,
        ratio: numerator / denominator,
        numerator,
        denominator,
        tail_fraction: tail,
        quasi_norm,
        resolution_warning: field.resolution_warning(),
    })
}

/// Truncated l^{q_out} norm of the coefficient field over the window,
/// divided by the grid L^{p_in} norm of the input.
pub fn norm_ratio(
    g: &GridFunction,
    p_in: f64,
    q_out: f64,
    n_box: &FrequencyBox,
    m_range: (i64, i64),
) -> Result<NormRatioReport, ModelError> {
    let field = e_d_coefficients(g, n_box, m_range)?;
    let denominator = grid_lp_norm(g, p_in)?;
    ratio_from_field(&field, denominator, p_in, q_out)
}

/// Multilinear variant: l^{q_out} of the entrywise product field over
/// the product of the inputs' grid L^{p_in} norms.
pub fn multilinear_norm_ratio(
    spec: &MultilinearSpec,
    p_in: f64,
    q_out: f64,
    n_box: &FrequencyBox,
    m_range: (i64, i64),
) -> Result<NormRatioReport, ModelError> {
    let field = me_kd_coefficients(spec, n_box, m_range)?;
    let mut denominator = 1.0;
    for j in 0..spec.k() {
        denominator *= grid_lp_norm(spec.input(j), p_in)?;
    }
    ratio_from_field(&field, denominator, p_in, q_out)
}
