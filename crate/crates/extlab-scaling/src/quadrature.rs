//! Midpoint quadrature of |prod_j E f_j|^p over a dual box.
//!
//! The extension of an axis-aligned indicator box factors exactly across
//! axes, and the factor for axis a depends only on (xi_a, t). At a fixed
//! time slice the integrand modulus is therefore a tensor product over the
//! frequency axes, so its Lp mass is a product of one-dimensional sums:
//! the full grid is never materialized.

use extlab_packets::chirp_segment_integral;

use crate::error::ScalingError;
use crate::family::{DualBox, SupportBox};

/// Lp norm of the pointwise product of the box extensions over the dual
/// box, by the midpoint rule with n cell-centered points per axis. The
/// dual box's shear is measure preserving, so no Jacobian appears.
pub fn product_lp_norm(
    boxes: &[SupportBox],
    dual: &DualBox,
    p: f64,
    n: usize,
) -> Result<f64, ScalingError> {
    if boxes.is_empty() {
        return Err(ScalingError::NoBoxes);
    }
    let d = dual.dim();
    for b in boxes {
        if b.dim() != d {
            return Err(ScalingError::DimensionMismatch {
                expected: d,
                got: b.dim(),
            });
        }
    }
    if !p.is_finite() || p <= 0.0 {
        return Err(ScalingError::BadExponent { p: p.to_string() });
    }
    if n < 2 {
        return Err(ScalingError::BadGrid { grid: n });
    }

    // distinct intervals per axis, with one table slot each; boxes that
    // share an interval (the rhombus time axis) share the table
    let mut intervals: Vec<Vec<(f64, f64)>> = vec![Vec::new(); d];
    let mut slot: Vec<Vec<usize>> = vec![Vec::new(); d];
    for b in boxes {
        for (a, row) in intervals.iter_mut().enumerate() {
            let seg = b.axis(a);
            let idx = row.iter().position(|&s| s == seg).unwrap_or_else(|| {
                row.push(seg);
                row.len() - 1
            });
            slot[a].push(idx);
        }
    }

    let xi_half = dual.xi_half_widths();
    let shear = dual.shear();
    let mut total = 0.0;
    let mut tables: Vec<Vec<f64>> = Vec::new();
    for it in 0..n {
        let t = cell_center(dual.t_half_width(), n, it);
        // per-axis sum over the frequency grid of the combined modulus^p
        let mut slice = 1.0;
        for a in 0..d {
            tables.clear();
            for &(lo, hi) in &intervals[a] {
                let tab = (0..n)
                    .map(|i| {
                        let xi = cell_center(xi_half[a], n, i) - shear[a] * t;
                        chirp_segment_integral(lo, hi, xi, t).map(|v| v.norm())
                    })
                    .collect::<Result<Vec<f64>, _>>()?;
                tables.push(tab);
            }
            let axis_sum: f64 = (0..n)
                .map(|i| {
                    let combined: f64 = slot[a].iter().map(|&s| tables[s][i]).product();
                    combined.powf(p)
                })
                .sum();
            slice *= axis_sum;
        }
        total += slice;
    }

    let cell: f64 = xi_half
        .iter()
        .map(|w| 2.0 * w / n as f64)
        .product::<f64>()
        * (2.0 * dual.t_half_width() / n as f64);
    Ok((total * cell).powf(1.0 / p))
}

fn cell_center(half_width: f64, n: usize, i: usize) -> f64 {
    let step = 2.0 * half_width / n as f64;
    -half_width + step * (i as f64 + 0.5)
}
