//! Sweep-level checks: fitted slopes against predicted exponents, the
//! stability of the measured lower-bound constant, and a cross-check of
//! the dual-box evaluator against the pointwise extension quadrature.

use extlab_geometry::{from_int, parse_rational, ratio, to_f64};
use extlab_scaling::{
    predicted_exponent, product_lp_norm, run_scaling, ExampleFamily, FamilyKind, ScalingConfig,
    DEFAULT_SHRINK,
};

const SLOPE_TOLERANCE: f64 = 0.15;

fn octaves(from: i32, to: i32) -> Vec<f64> {
    (from..=to).map(|e| 2f64.powi(-e)).collect()
}

#[test]
fn cube_family_slopes_match_the_predicted_exponents() {
    let deltas = octaves(3, 7);
    let cfg = ScalingConfig::default();
    for p in [from_int(2), from_int(4)] {
        let report = run_scaling(FamilyKind::Cube, 1, 2, &p, &deltas, &cfg).unwrap();
        let predicted = to_f64(&predicted_exponent(FamilyKind::Cube, 1, 2, &p));
        assert!(
            (report.fitted_slope - predicted).abs() < SLOPE_TOLERANCE,
            "p = {}: slope {} vs predicted {predicted}",
            report.p_label,
            report.fitted_slope
        );
        assert!(report.ratios.iter().all(|&r| r > 0.0));
        assert!(report.quadrature_rel_change < 1e-3);
        // the slope barely moves when the dual box is halved
        let half = report.half_shrink_slope.unwrap();
        assert!((half - report.fitted_slope).abs() < 0.05);
    }
}

#[test]
fn slab_family_slopes_match_the_predicted_exponents() {
    let deltas = octaves(3, 6);
    let cfg = ScalingConfig::default();
    for (p, predicted) in [(from_int(2), 0.5), (ratio(5, 3), 0.0)] {
        let report = run_scaling(FamilyKind::Slab, 2, 2, &p, &deltas, &cfg).unwrap();
        assert!(
            (report.fitted_slope - predicted).abs() < SLOPE_TOLERANCE,
            "p = {}: slope {} vs predicted {predicted}",
            report.p_label,
            report.fitted_slope
        );
        assert!((report.predicted_exponent - predicted).abs() < 1e-12);
    }
}

#[test]
fn rhombus_family_is_flat_exactly_at_its_threshold() {
    let deltas = octaves(3, 6);
    let cfg = ScalingConfig::default();
    let p = parse_rational("10/9").unwrap();
    let report = run_scaling(FamilyKind::Rhombus, 2, 3, &p, &deltas, &cfg).unwrap();
    assert!(report.fitted_slope.abs() < SLOPE_TOLERANCE);
    assert!(report.residual < 0.05);
    // away from the threshold the slope is steep: p = 2 predicts 2
    let report2 = run_scaling(FamilyKind::Rhombus, 2, 3, &from_int(2), &deltas, &cfg).unwrap();
    assert!((report2.fitted_slope - 2.0).abs() < SLOPE_TOLERANCE);
}

#[test]
fn measured_constant_is_stable_under_octave_refinement() {
    // the uniform constant min ratio / delta^predicted must move by less
    // than a factor 4 when the sweep is refined one octave deeper
    let cfg = ScalingConfig {
        check_sensitivity: false,
        ..ScalingConfig::default()
    };
    let p = from_int(4);
    let coarse = run_scaling(FamilyKind::Cube, 1, 2, &p, &octaves(3, 6), &cfg).unwrap();
    let fine = run_scaling(FamilyKind::Cube, 1, 2, &p, &octaves(3, 7), &cfg).unwrap();
    let factor = coarse.min_constant / fine.min_constant;
    assert!(
        factor < 4.0 && factor > 0.25,
        "constant moved by {factor} under refinement"
    );
    assert!(coarse.min_constant > 0.0);
}

#[test]
fn dual_box_norm_agrees_with_the_pointwise_extension_product() {
    // independent path: evaluate each box extension with the indicator-sum
    // quadrature at a handful of dual-box points and integrate by hand
    use extlab_model::{continuous_extension, IndicatorSum};
    use extlab_geometry::{Interval, RationalCube};
    use num_complex::Complex64;

    let delta = 0.0625;
    let fam = ExampleFamily::new(FamilyKind::Cube, 1, 2, delta).unwrap();
    let dual = fam.dual_box(DEFAULT_SHRINK).unwrap();
    let boxes = fam.support_boxes();

    let n = 24;
    let p = 2.0;
    let fast = product_lp_norm(&boxes, &dual, p, n).unwrap();

    let rational_box = |lo: (i64, i64), hi: (i64, i64)| {
        RationalCube::new(vec![Interval::new(ratio(lo.0, lo.1), ratio(hi.0, hi.1)).unwrap()])
            .unwrap()
    };
    let inputs = [
        IndicatorSum::single(rational_box((0, 1), (1, 16))),
        IndicatorSum::single(rational_box((4, 1), (65, 16))),
    ];

    let w = dual.xi_half_widths()[0];
    let wt = dual.t_half_width();
    let mut total = 0.0;
    let mut points = Vec::new();
    for i in 0..n {
        let xi = -w + (2.0 * w / n as f64) * (i as f64 + 0.5);
        for j in 0..n {
            let t = -wt + (2.0 * wt / n as f64) * (j as f64 + 0.5);
            points.push((vec![xi], t));
        }
    }
    let values: Vec<Vec<Complex64>> = inputs
        .iter()
        .map(|f| continuous_extension(f, &points).unwrap())
        .collect();
    for (va, vb) in values[0].iter().zip(&values[1]) {
        total += (va * vb).norm().powf(p);
    }
    let cell = (2.0 * w / n as f64) * (2.0 * wt / n as f64);
    let slow = (total * cell).powf(1.0 / p);

    assert!(
        (fast - slow).abs() < 1e-10 * slow,
        "factored {fast} vs pointwise {slow}"
    );
}
