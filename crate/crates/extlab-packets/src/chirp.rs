//! The 1-D chirp segment integral, the oscillatory primitive behind
//! extension values and atom coefficients.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::PacketError;
use crate::quadrature::{gauss_legendre, integrate_panels_c};

/// integral over [a, b] of e^{-2 pi i (xi x + t x^2)} dx, accurate to
/// 1e-10 absolute. Panel count scales with the total phase variation
/// 2 pi (|xi| (b-a) + |t| max(|a|,|b|) (b-a)), with a small floor.
pub fn chirp_segment_integral(
    a: f64,
    b: f64,
    xi: f64,
    t: f64,
) -> Result<Complex64, PacketError> {
    for (v, what) in [
        (a, "segment endpoint a"),
        (b, "segment endpoint b"),
        (xi, "frequency"),
        (t, "chirp rate"),
    ] {
        if !v.is_finite() {
            return Err(PacketError::NonFinite { what });
        }
    }
    if a > b {
        return Err(PacketError::ReversedSegment { a, b });
    }
    if a == b {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let len = b - a;
    let reach = a.abs().max(b.abs());
    let phase_var = TAU * (xi.abs() * len + t.abs() * reach * len);
    let panels = (phase_var / 4.0).ceil() as usize + 4;
    let rule = gauss_legendre(16);
    Ok(integrate_panels_c(&rule, a, b, panels, |x| {
        Complex64::from_polar(1.0, -TAU * (xi * x + t * x * x))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_integrand_gives_the_length() {
        let v = chirp_segment_integral(0.0, 1.0, 0.0, 0.0).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        let w = chirp_segment_integral(-2.0, 3.0, 0.0, 0.0).unwrap();
        assert!((w - Complex64::new(5.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn whole_periods_cancel() {
        for n in [1.0, 2.0, -3.0, 7.0] {
            let v = chirp_segment_integral(0.0, 1.0, n, 0.0).unwrap();
            assert!(v.norm() < 1e-13, "xi = {n}: {v}");
        }
    }

    #[test]
    fn pure_frequency_matches_the_closed_form() {
        // integral of e^{-2 pi i xi x} over [0, 1] = (1 - e^{-2 pi i xi}) / (2 pi i xi)
        let xi = 0.35;
        let v = chirp_segment_integral(0.0, 1.0, xi, 0.0).unwrap();
        let denom = Complex64::new(0.0, TAU * xi);
        let exact = (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, -TAU * xi)) / denom;
        assert!((v - exact).norm() < 1e-13);
    }

    #[test]
    fn conjugating_both_parameters_conjugates_the_value() {
        for (a, b, xi, t) in [
            (0.0, 1.0, 0.3, -1.0),
            (-1.5, 2.0, -4.0, 2.5),
            (0.25, 9.0, 11.0, 0.125),
        ] {
            let v = chirp_segment_integral(a, b, xi, t).unwrap();
            let w = chirp_segment_integral(a, b, -xi, -t).unwrap();
            assert!((v - w.conj()).norm() < 1e-12, "({a},{b},{xi},{t})");
        }
    }

    #[test]
    fn splitting_the_segment_is_additive() {
        let whole = chirp_segment_integral(0.0, 2.0, 1.7, -0.6).unwrap();
        let left = chirp_segment_integral(0.0, 0.8, 1.7, -0.6).unwrap();
        let right = chirp_segment_integral(0.8, 2.0, 1.7, -0.6).unwrap();
        assert!((whole - (left + right)).norm() < 1e-12);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(matches!(
            chirp_segment_integral(1.0, 0.0, 0.0, 0.0),
            Err(PacketError::ReversedSegment { .. })
        ));
        assert!(matches!(
            chirp_segment_integral(0.0, f64::INFINITY, 0.0, 0.0),
            Err(PacketError::NonFinite { .. })
        ));
        assert!(matches!(
            chirp_segment_integral(0.0, 1.0, f64::NAN, 0.0),
            Err(PacketError::NonFinite { .. })
        ));
    }
}
