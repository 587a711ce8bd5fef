//! Scaling sweeps: measured Lp-over-L2 ratios across a delta sweep, the
//! fitted log-log slope, and its comparison against the closed-form
//! exponent.

use std::io::Write;

use extlab_geometry::{format_rational, to_f64, Rational};
use num::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::ScalingError;
use crate::family::{predicted_exponent, ExampleFamily, FamilyKind, DEFAULT_SHRINK};
use crate::quadrature::product_lp_norm;

/// Knobs for a sweep. Every norm is evaluated at `grid` and `2 * grid`
/// points per axis; if the refinement moves it by more than
/// `richardson_tolerance` relative, the run fails with a phase-resolution
/// diagnostic. With `check_sensitivity` the whole sweep is refit at half
/// the shrink factor, recording how much the slope depends on the
/// dual-box constant.
#[derive(Clone, Debug)]
pub struct ScalingConfig {
    pub grid: usize,
    pub shrink: f64,
    pub richardson_tolerance: f64,
    pub check_sensitivity: bool,
}

impl Default for ScalingConfig {
    fn default() -> Self {
        ScalingConfig {
            grid: 32,
            shrink: DEFAULT_SHRINK,
            richardson_tolerance: 0.02,
            check_sensitivity: true,
        }
    }
}

/// Result of one sweep: the per-delta ratios, the fitted slope, and the
/// predicted exponent it is measured against.
#[derive(Clone, Debug)]
pub struct ScalingReport {
    pub kind: FamilyKind,
    pub d: usize,
    pub k: usize,
    /// Lp exponent, exact form as given.
    pub p_label: String,
    pub p: f64,
    /// Strictly decreasing sweep of box scales.
    pub deltas: Vec<f64>,
    /// ||prod E f_j||_Lp(dual box) / prod ||f_j||_2, one per delta.
    pub ratios: Vec<f64>,
    pub fitted_slope: f64,
    pub predicted_exponent: f64,
    /// Root mean square deviation of log ratio from the fitted line.
    pub residual: f64,
    /// min over the sweep of ratio / delta^predicted, the uniform constant
    /// of the lower bound as measured.
    pub min_constant: f64,
    pub grid: usize,
    pub shrink: f64,
    /// Worst relative change from doubling the grid, over the sweep.
    pub quadrature_rel_change: f64,
    /// Slope refit at shrink/2, when sensitivity checking is on.
    pub half_shrink_slope: Option<f64>,
}

impl ScalingReport {
    pub fn to_json(&self) -> Value {
        json!({
            "family": self.kind.to_string(),
            "d": self.d,
            "k": self.k,
            "p": self.p_label,
            "p_float": self.p,
            "deltas": self.deltas,
            "ratios": self.ratios,
            "fitted_slope": self.fitted_slope,
            "predicted_exponent": self.predicted_exponent,
            "residual": self.residual,
            "min_constant": self.min_constant,
            "grid": self.grid,
            "shrink": self.shrink,
            "quadrature_rel_change": self.quadrature_rel_change,
            "half_shrink_slope": self.half_shrink_slope,
        })
    }

    /// Plot-ready two-column data: a delta,ratio row per sweep point.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), ScalingError> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["delta", "ratio"])
            .map_err(|e| ScalingError::report("scaling csv", e.to_string()))?;
        for (delta, ratio) in self.deltas.iter().zip(&self.ratios) {
            out.write_record([delta.to_string(), ratio.to_string()])
                .map_err(|e| ScalingError::report("scaling csv", e.to_string()))?;
        }
        out.flush()?;
        Ok(())
    }
}

/// Run one family sweep: for each delta, integrate |prod_j E f_j|^p over
/// the shrunk dual box, divide by the closed-form product of input L2
/// norms, and fit the log-log slope by least squares. Deltas are
/// evaluated in parallel; the fit and report assembly are single-threaded.
pub fn run_scaling(
    kind: FamilyKind,
    d: usize,
    k: usize,
    p: &Rational,
    deltas: &[f64],
    config: &ScalingConfig,
) -> Result<ScalingReport, ScalingError> {
    if p <= &Rational::zero() {
        return Err(ScalingError::BadExponent {
            p: format_rational(p),
        });
    }
    if deltas.len() < 2 {
        return Err(ScalingError::TooFewDeltas { got: deltas.len() });
    }
    for (i, pair) in deltas.windows(2).enumerate() {
        if pair[1] >= pair[0] {
            return Err(ScalingError::UnorderedDeltas { position: i + 1 });
        }
    }
    if config.grid < 2 {
        return Err(ScalingError::BadGrid { grid: config.grid });
    }
    let families = deltas
        .iter()
        .map(|&delta| ExampleFamily::new(kind, d, k, delta))
        .collect::<Result<Vec<_>, _>>()?;
    let p_float = to_f64(p);

    let (ratios, rel_change) = sweep_ratios(&families, p_float, config.shrink, config)?;
    let logs: Vec<(f64, f64)> = deltas
        .iter()
        .zip(&ratios)
        .map(|(&delta, &r)| (delta.ln(), r.ln()))
        .collect();
    let (fitted_slope, residual) = fit_line(&logs);

    let predicted = to_f64(&predicted_exponent(kind, d, k, p));
    let min_constant = deltas
        .iter()
        .zip(&ratios)
        .map(|(&delta, &r)| r / delta.powf(predicted))
        .fold(f64::INFINITY, f64::min);

    let half_shrink_slope = if config.check_sensitivity {
        let (half_ratios, _) = sweep_ratios(&families, p_float, config.shrink / 2.0, config)?;
        let half_logs: Vec<(f64, f64)> = deltas
            .iter()
            .zip(&half_ratios)
            .map(|(&delta, &r)| (delta.ln(), r.ln()))
            .collect();
        Some(fit_line(&half_logs).0)
    } else {
        None
    };

    Ok(ScalingReport {
        kind,
        d,
        k,
        p_label: format_rational(p),
        p: p_float,
        deltas: deltas.to_vec(),
        ratios,
        fitted_slope,
        predicted_exponent: predicted,
        residual,
        min_constant,
        grid: config.grid,
        shrink: config.shrink,
        quadrature_rel_change: rel_change,
        half_shrink_slope,
    })
}

/// Per-delta ratios at one shrink factor, with the worst Richardson step.
fn sweep_ratios(
    families: &[ExampleFamily],
    p: f64,
    shrink: f64,
    config: &ScalingConfig,
) -> Result<(Vec<f64>, f64), ScalingError> {
    let evaluated: Vec<(f64, f64)> = families
        .par_iter()
        .map(|fam| {
            let boxes = fam.support_boxes();
            let dual = fam.dual_box(shrink)?;
            let coarse = product_lp_norm(&boxes, &dual, p, config.grid)?;
            let fine = product_lp_norm(&boxes, &dual, p, 2 * config.grid)?;
            let rel_change = if fine > 0.0 {
                (fine - coarse).abs() / fine
            } else {
                f64::INFINITY
            };
            if !rel_change.is_finite() || rel_change > config.richardson_tolerance {
                return Err(ScalingError::QuadratureFailure {
                    delta: fam.delta(),
                    rel_change,
                    tolerance: config.richardson_tolerance,
                });
            }
            Ok((fine / fam.l2_product(), rel_change))
        })
        .collect::<Result<_, _>>()?;
    let worst = evaluated
        .iter()
        .map(|&(_, rel)| rel)
        .fold(0.0, f64::max);
    Ok((evaluated.into_iter().map(|(r, _)| r).collect(), worst))
}

/// Least squares line through (x, y) pairs: (slope, rms residual).
fn fit_line(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mean_x = points.iter().map(|&(x, _)| x).sum::<f64>() / n;
    let mean_y = points.iter().map(|&(_, y)| y).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|&(x, _)| (x - mean_x).powi(2)).sum();
    let sxy: f64 = points
        .iter()
        .map(|&(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let rms = (points
        .iter()
        .map(|&(x, y)| (y - slope * x - intercept).powi(2))
        .sum::<f64>()
        / n)
        .sqrt();
    (slope, rms)
}

#[cfg(test)]
mod tests {
    use extlab_geometry::{from_int, ratio};

    use super::*;

    #[test]
    fn sweep_validation() {
        let cfg = ScalingConfig::default();
        let two = from_int(2);
        assert!(matches!(
            run_scaling(FamilyKind::Cube, 1, 2, &two, &[0.125], &cfg),
            Err(ScalingError::TooFewDeltas { got: 1 })
        ));
        assert!(matches!(
            run_scaling(FamilyKind::Cube, 1, 2, &two, &[0.0625, 0.125], &cfg),
            Err(ScalingError::UnorderedDeltas { position: 1 })
        ));
        assert!(matches!(
            run_scaling(FamilyKind::Cube, 1, 2, &from_int(-1), &[0.125, 0.0625], &cfg),
            Err(ScalingError::BadExponent { .. })
        ));
        assert!(matches!(
            run_scaling(FamilyKind::Cube, 1, 2, &two, &[0.25, 0.125], &cfg),
            Err(ScalingError::BadDelta { .. })
        ));
    }

    #[test]
    fn fit_recovers_an_exact_line() {
        let points: Vec<(f64, f64)> = (1..6)
            .map(|i| {
                let x = i as f64;
                (x, 3.5 * x - 2.0)
            })
            .collect();
        let (slope, rms) = fit_line(&points);
        assert!((slope - 3.5).abs() < 1e-12);
        assert!(rms < 1e-12);
    }

    #[test]
    fn report_serializes_cleanly() {
        let cfg = ScalingConfig {
            grid: 8,
            check_sensitivity: false,
            ..ScalingConfig::default()
        };
        let report = run_scaling(
            FamilyKind::Cube,
            1,
            2,
            &ratio(2, 1),
            &[0.125, 0.0625],
            &cfg,
        )
        .unwrap();
        assert_eq!(report.ratios.len(), 2);
        assert!(report.ratios.iter().all(|&r| r > 0.0));
        assert!(report.half_shrink_slope.is_none());

        let v = report.to_json();
        assert_eq!(v["family"], "cube");
        assert_eq!(v["p"], "2");
        assert!(v["fitted_slope"].is_f64());

        let mut buf = Vec::new();
        report.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("delta,ratio"));
        assert_eq!(lines.count(), 2);
    }
}
