//! The continuous extension of a sum of box indicators, evaluated by
//! exact factorization: for an axis-aligned box the oscillatory
//! integral splits into a product of one-dimensional chirp segment
//! integrals, one per axis, all sharing the quadratic scale t.

use num_complex::Complex64;

use extlab_geometry::{to_f64, RationalCube};
use extlab_packets::chirp_segment_integral;

use crate::error::ModelError;

/// Finite weighted sum of axis-aligned box indicators.
#[derive(Debug, Clone)]
pub struct IndicatorSum {
    d: usize,
    terms: Vec<(RationalCube, Complex64)>,
}

impl IndicatorSum {
    pub fn new(terms: Vec<(RationalCube, Complex64)>) -> Result<Self, ModelError> {
        let d = match terms.first() {
            Some((cube, _)) => cube.dim(),
            None => {
                return Err(ModelError::parse("indicator sum", "no boxes"));
            }
        };
        for (cube, _) in &terms {
            if cube.dim() != d {
                return Err(ModelError::DimensionMismatch {
                    expected: d,
                    got: cube.dim(),
                });
            }
        }
        Ok(IndicatorSum { d, terms })
    }

    /// A single box with unit weight.
    pub fn single(cube: RationalCube) -> Self {
        let d = cube.dim();
        IndicatorSum {
            d,
            terms: vec![(cube, Complex64::new(1.0, 0.0))],
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &[(RationalCube, Complex64)] {
        &self.terms
    }
}

/// Evaluate the extension at the given (xi, t) points. Each value is
/// sum over boxes of weight times prod_a int_{lo_a}^{hi_a}
/// e^{-2 pi i (xi_a x + t x^2)} dx.
pub fn continuous_extension(
    f: &IndicatorSum,
    points: &[(Vec<f64>, f64)],
) -> Result<Vec<Complex64>, ModelError> {
    let mut out = Vec::with_capacity(points.len());
    for (xi, t) in points {
        if xi.len() != f.dim() {
            return Err(ModelError::DimensionMismatch {
                expected: f.dim(),
                got: xi.len(),
            });
        }
        let mut value = Complex64::new(0.0, 0.0);
        for (cube, weight) in &f.terms {
            let mut product = Complex64::new(1.0, 0.0);
            for (a, &xi_a) in xi.iter().enumerate() {
                let proj = cube.projection(a);
                product *= chirp_segment_integral(to_f64(proj.lo()), to_f64(proj.hi()), xi_a, *t)?;
            }
            value += weight * product;
        }
        out.push(value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use extlab_geometry::{ratio, Interval};

    fn rational_box(ends: &[(i64, i64, i64)]) -> RationalCube {
        RationalCube::new(
            ends.iter()
                .map(|&(lo, hi, den)| Interval::new(ratio(lo, den), ratio(hi, den)).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn zero_frequency_gives_the_volume() {
        let unit = IndicatorSum::single(rational_box(&[(0, 1, 1), (0, 1, 1)]));
        let v = continuous_extension(&unit, &[(vec![0.0, 0.0], 0.0)]).unwrap();
        assert!((v[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);

        let delta: f64 = 1.0 / 8.0;
        let small = IndicatorSum::single(rational_box(&[(0, 1, 8), (0, 1, 8), (0, 1, 8)]));
        let v = continuous_extension(&small, &[(vec![0.0; 3], 0.0)]).unwrap();
        assert!((v[0].re - delta.powi(3)).abs() < 1e-12);
        assert!(v[0].im.abs() < 1e-15);
    }

    #[test]
    fn weights_and_boxes_add_linearly() {
        let left = rational_box(&[(0, 1, 2)]);
        let right = rational_box(&[(1, 2, 2)]);
        let split = IndicatorSum::new(vec![
            (left, Complex64::new(1.0, 0.0)),
            (right, Complex64::new(1.0, 0.0)),
        ])
        .unwrap();
        let whole = IndicatorSum::single(rational_box(&[(0, 2, 2)]));
        let points = vec![(vec![0.7], 0.3), (vec![-2.0], 1.5)];
        let a = continuous_extension(&split, &points).unwrap();
        let b = continuous_extension(&whole, &points).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn construction_and_evaluation_validate_dimensions() {
        assert!(IndicatorSum::new(vec![]).is_err());
        let mixed = IndicatorSum::new(vec![
            (rational_box(&[(0, 1, 1)]), Complex64::new(1.0, 0.0)),
            (rational_box(&[(0, 1, 1), (0, 1, 1)]), Complex64::new(1.0, 0.0)),
        ]);
        assert!(matches!(
            mixed,
            Err(ModelError::DimensionMismatch { expected: 1, got: 2 })
        ));
        let unit = IndicatorSum::single(rational_box(&[(0, 1, 1)]));
        assert!(matches!(
            continuous_extension(&unit, &[(vec![0.0, 0.0], 0.0)]),
            Err(ModelError::DimensionMismatch { expected: 1, got: 2 })
        ));
    }

    #[test]
    fn small_boxes_stay_above_half_volume_on_the_dual_box() {
        // For |xi| <= 1/(4 delta) and |t| <= 1/(4 delta^2) the phase on
        // [0, delta] moves by at most 2 pi (1/4 + 1/4) = pi, and the
        // integral keeps at least cos(pi/2)-type cancellation margin:
        // |E g| >= delta/2 across the whole dual box.
        let delta = 1.0 / 16.0;
        let g = IndicatorSum::single(rational_box(&[(0, 1, 16)]));
        let mut points = Vec::new();
        let xi_max = 1.0 / (4.0 * delta);
        let t_max = 1.0 / (4.0 * delta * delta);
        for i in -4i32..=4 {
            for j in -4i32..=4 {
                points.push((
                    vec![xi_max * i as f64 / 4.0],
                    t_max * j as f64 / 4.0,
                ));
            }
        }
        let values = continuous_extension(&g, &points).unwrap();
        for v in values {
            assert!(v.norm() >= delta / 2.0, "|E g| = {} < {}", v.norm(), delta / 2.0);
        }
    }
}
