//! Reference values for the oscillatory primitives. The chirp constants
//! were frozen from an independent 30-digit adaptive-quadrature run
//! (tolerance well below 1e-13); the grid tests reduce inner products to
//! those constants, and the overlap sweep checks the stationary-phase
//! decay exponent by regression.

// The frozen constants keep their full reference digits.
#![allow(clippy::excessive_precision)]

use std::f64::consts::TAU;

use extlab_geometry::{ratio, Interval, RationalCube};
use extlab_packets::{
    chirp_segment_integral, inner_product, packet_overlap, BumpProfile, GridFunction, WavePacket,
};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn chirp_segment_matches_adaptive_quadrature_references() {
    let cases: [(f64, f64, f64, f64, Complex64); 6] = [
        // integral over [0,1] of e^{2 pi i x^2}: the Fresnel value
        (0.0, 1.0, 0.0, -1.0, c(0.2441267030376703772501, 0.1717078391818491210977)),
        (0.0, 1.0, 0.7, 3.2, c(0.04780466695997670572457, -0.1020136905813197290367)),
        (-1.0, 2.0, -2.0, 5.0, c(0.2815712642606279606789, 0.1656637753112356610637)),
        (0.0, 1.0, 12.3, -7.7, c(0.09307460726249122849862, 0.267483413695256560483)),
        (3.0, 4.0, -25.0, 3.125, c(0.1589391681543437283498, -0.1229950745625793652714)),
        (0.0, 0.25, 64.0, 128.0, c(0.00002160833836759927587795, -0.001242685408803197902091)),
    ];
    for (a, b, xi, t, expect) in cases {
        let v = chirp_segment_integral(a, b, xi, t).unwrap();
        assert!(
            (v - expect).norm() < 1e-10,
            "({a},{b},{xi},{t}): {v} vs {expect}"
        );
    }
}

fn unit_grid_of_chirp(resolution: usize) -> GridFunction {
    let cube =
        RationalCube::new(vec![Interval::new(ratio(0, 1), ratio(1, 1)).unwrap()]).unwrap();
    GridFunction::from_fn(cube, resolution, |x| {
        Complex64::from_polar(1.0, TAU * (3.0 * x[0] + 2.0 * x[0] * x[0]))
    })
    .unwrap()
}

fn sharp_unit_packet(n: i64, m: i64) -> WavePacket {
    let cube =
        RationalCube::new(vec![Interval::new(ratio(0, 1), ratio(1, 1)).unwrap()]).unwrap();
    WavePacket::new(BumpProfile::sharp(cube), vec![n], m).unwrap()
}

#[test]
fn inner_products_of_a_pure_chirp_hit_their_closed_forms() {
    let g = unit_grid_of_chirp(16384);

    // Matching packet: the integrand collapses to 1.
    let exact = inner_product(&g, &sharp_unit_packet(3, 2)).unwrap();
    assert!(!exact.resolution_warning);
    assert!((exact.value - c(1.0, 0.0)).norm() < 1e-9, "{}", exact.value);

    // Frequency offset by a whole mode: full periods cancel.
    let zero = inner_product(&g, &sharp_unit_packet(0, 2)).unwrap();
    assert!(zero.value.norm() < 1e-9, "{}", zero.value);

    // Chirp rate off by one: reduces to the Fresnel segment integral.
    let fresnel = inner_product(&g, &sharp_unit_packet(3, 1)).unwrap();
    let reference = chirp_segment_integral(0.0, 1.0, 0.0, -1.0).unwrap();
    assert!(
        (fresnel.value - reference).norm() < 1e-8,
        "{} vs {reference}",
        fresnel.value
    );
}

#[test]
fn smooth_overlaps_decay_at_the_stationary_phase_rate() {
    // Symmetric support keeps the stationary point of the quadratic phase
    // interior; the overlap against a rate-shifted twin then decays like
    // lambda^{-1/2}.
    let cube =
        RationalCube::new(vec![Interval::new(ratio(-1, 2), ratio(1, 2)).unwrap()]).unwrap();
    let profile = BumpProfile::smooth(cube, 0.1).unwrap();
    let base = WavePacket::new(profile.clone(), vec![0], 0).unwrap();
    let mut logs = Vec::new();
    let mut lambda = 4i64;
    while lambda <= 256 {
        let shifted = WavePacket::new(profile.clone(), vec![0], lambda).unwrap();
        let v = packet_overlap(&base, &shifted);
        assert!(v.norm() > 0.0);
        logs.push(((lambda as f64).ln(), v.norm().ln()));
        lambda *= 2;
    }
    let slope = least_squares_slope(&logs);
    assert!(
        (slope + 0.5).abs() < 0.1,
        "fitted decay exponent {slope}, expected -0.5 +- 0.1"
    );
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx: f64 = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my: f64 = points.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let var: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    cov / var
}
