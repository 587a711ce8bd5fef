//! Reproducible random input corpora. One seeded stream generates the
//! whole corpus, so a corpus of size 2N extends the corpus of size N
//! sample for sample; running-maximum statistics can be compared across
//! doublings of the same seed.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use extlab_geometry::RationalCube;
use extlab_packets::{FrequencyBox, GridFunction};

use crate::error::ModelError;

fn standard_complex<R: Rng>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) / 2f64.sqrt()
}

/// One pass of the periodic 3-tap moving average along every axis.
fn three_tap_smooth(samples: &mut Vec<Complex64>, d: usize, n: usize) {
    let mut scratch = samples.clone();
    for axis in 0..d {
        let stride = n.pow((d - 1 - axis) as u32);
        let outer = samples.len() / (n * stride);
        for p in 0..outer {
            for q in 0..stride {
                let base = p * n * stride + q;
                for i in 0..n {
                    let prev = samples[base + ((i + n - 1) % n) * stride];
                    let here = samples[base + i * stride];
                    let next = samples[base + ((i + 1) % n) * stride];
                    scratch[base + i * stride] = (prev + here + next) / 3.0;
                }
            }
        }
        std::mem::swap(samples, &mut scratch);
    }
}

/// Independent complex Gaussian samples on the grid, smoothed by one
/// periodic 3-tap moving average pass per axis.
pub fn gaussian_corpus(
    seed: u64,
    count: usize,
    cube: &RationalCube,
    resolution: usize,
) -> Result<Vec<GridFunction>, ModelError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = cube.dim();
    let total = resolution.pow(d as u32);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut samples: Vec<Complex64> = (0..total).map(|_| standard_complex(&mut rng)).collect();
        three_tap_smooth(&mut samples, d, resolution);
        out.push(GridFunction::from_samples(cube.clone(), resolution, samples)?);
    }
    Ok(out)
}

/// Random trigonometric polynomials: Gaussian amplitudes on the integer
/// modes with every |omega_a| <= max_mode, synthesized at the grid
/// centers. Band-limited inputs make the per-m coefficient mass decay,
/// which the truncation gate of reported norms needs.
pub fn bandlimited_corpus(
    seed: u64,
    count: usize,
    cube: &RationalCube,
    resolution: usize,
    max_mode: i64,
) -> Result<Vec<GridFunction>, ModelError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = cube.dim();
    let modes = FrequencyBox::centered(d, max_mode);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let amplitudes: Vec<Complex64> =
            (0..modes.len()).map(|_| standard_complex(&mut rng)).collect();
        let g = GridFunction::from_fn(cube.clone(), resolution, |x| {
            let mut value = Complex64::new(0.0, 0.0);
            for (flat, amp) in amplitudes.iter().enumerate() {
                let omega = modes.decode(flat);
                let phase: f64 = omega
                    .iter()
                    .zip(x)
                    .map(|(&w, &xa)| w as f64 * xa)
                    .sum();
                value += amp * Complex64::from_polar(1.0, std::f64::consts::TAU * phase);
            }
            value
        })?;
        out.push(g);
    }
    Ok(out)
}

/// The same grid function scaled to unit L2 norm.
pub fn normalized_l2(g: &GridFunction) -> Result<GridFunction, ModelError> {
    let norm = g.l2_norm_squared().sqrt();
    if norm == 0.0 {
        return Err(ModelError::ZeroDenominator);
    }
    let samples = g.samples().iter().map(|s| s / norm).collect();
    Ok(GridFunction::from_samples(
        g.cube().clone(),
        g.resolution(),
        samples,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use extlab_geometry::{ratio, Interval};

    fn unit_cube(d: usize) -> RationalCube {
        RationalCube::new(
            (0..d)
                .map(|_| Interval::new(ratio(0, 1), ratio(1, 1)).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn corpora_are_reproducible_and_prefix_stable() {
        let a = gaussian_corpus(7, 4, &unit_cube(1), 32).unwrap();
        let b = gaussian_corpus(7, 8, &unit_cube(1), 32).unwrap();
        assert_eq!(a.len(), 4);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
        }
        let c = gaussian_corpus(8, 4, &unit_cube(1), 32).unwrap();
        assert_ne!(a[0], c[0]);
    }

    #[test]
    fn smoothing_averages_neighbors_periodically() {
        let mut samples = vec![Complex64::new(0.0, 0.0); 4];
        samples[0] = Complex64::new(3.0, 0.0);
        three_tap_smooth(&mut samples, 1, 4);
        assert_eq!(samples[0], Complex64::new(1.0, 0.0));
        assert_eq!(samples[1], Complex64::new(1.0, 0.0));
        assert_eq!(samples[2], Complex64::new(0.0, 0.0));
        assert_eq!(samples[3], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn bandlimited_inputs_have_only_low_modes() {
        let g = bandlimited_corpus(3, 1, &unit_cube(1), 64, 2).unwrap().remove(0);
        let slab =
            extlab_packets::coefficient_slab(&g, 0, &FrequencyBox::centered(1, 6)).unwrap();
        for (n, v) in slab.iter() {
            if n[0].abs() > 2 {
                assert!(v.norm() < 1e-10, "mode {} leaked: {}", n[0], v.norm());
            }
        }
    }

    #[test]
    fn normalization_fixes_the_l2_norm() {
        let g = gaussian_corpus(5, 1, &unit_cube(2), 16).unwrap().remove(0);
        let n = normalized_l2(&g).unwrap();
        assert!((n.l2_norm_squared() - 1.0).abs() < 1e-12);
        let zero = GridFunction::from_fn(unit_cube(1), 8, |_| Complex64::new(0.0, 0.0)).unwrap();
        assert!(matches!(normalized_l2(&zero), Err(ModelError::ZeroDenominator)));
    }
}
