//! Packet coefficients of a grid function: midpoint-rule inner products
//! against single packets, and whole fixed-m slabs via one FFT of the
//! chirp-multiplied samples.
//!
//! The FFT path engages when every side of the grid cube has length
//! exactly 1, so integer frequencies land on DFT bins: with centers
//! x_j = lo + (j + 1/2) h and h = 1/N,
//!   c_n = h^d DFT[y]_{n mod N} prod_a e^{-2 pi i n_a (lo_a + h/2)}
//! for y_j = g_j e^{-2 pi i m |x_j|^2}. Other cubes fall back to a direct
//! separable evaluation of the same sums.
//!
//! Consecutive m share everything except the chirp, and the chirp at
//! m + 1 is the chirp at m times a fixed per-sample factor, so a whole
//! m range amortizes the plan, the bin phases, and almost all of the
//! complex exponentials; see [`coefficient_slab_range`].

use std::f64::consts::TAU;

use num::One;
use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::PacketError;
use crate::grid::GridFunction;
use crate::packet::WavePacket;

/// Inclusive integer ranges, one per axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyBox {
    ranges: Vec<(i64, i64)>,
}

impl FrequencyBox {
    pub fn new(ranges: Vec<(i64, i64)>) -> Result<Self, PacketError> {
        for &(lo, hi) in &ranges {
            if lo > hi {
                return Err(PacketError::ReversedRange { lo, hi });
            }
        }
        Ok(FrequencyBox { ranges })
    }

    /// [-radius, radius] on every axis.
    pub fn centered(d: usize, radius: i64) -> Self {
        FrequencyBox {
            ranges: vec![(-radius.abs(), radius.abs()); d],
        }
    }

    /// The N distinct DFT bins per axis in signed form, [-N/2, N/2 - 1]
    /// for even N. Summing squared coefficients over this box is the
    /// discrete Parseval sum.
    pub fn full_bins(d: usize, resolution: usize) -> Self {
        let lo = -(resolution as i64) / 2;
        let hi = lo + resolution as i64 - 1;
        FrequencyBox {
            ranges: vec![(lo, hi); d],
        }
    }

    pub fn dim(&self) -> usize {
        self.ranges.len()
    }

    pub fn axis_range(&self, axis: usize) -> (i64, i64) {
        self.ranges[axis]
    }

    pub fn axis_count(&self, axis: usize) -> usize {
        let (lo, hi) = self.ranges[axis];
        (hi - lo + 1) as usize
    }

    pub fn len(&self) -> usize {
        (0..self.dim()).map(|a| self.axis_count(a)).product()
    }

    pub fn is_empty(&self) -> bool {
        self.ranges.is_empty()
    }

    pub fn max_abs(&self) -> i64 {
        self.ranges
            .iter()
            .map(|&(lo, hi)| lo.abs().max(hi.abs()))
            .max()
            .unwrap_or(0)
    }

    pub fn contains(&self, n: &[i64]) -> bool {
        n.len() == self.dim()
            && n.iter()
                .zip(&self.ranges)
                .all(|(&v, &(lo, hi))| lo <= v && v <= hi)
    }

    /// Mixed-radix decode of a flat position, axis 0 slowest.
    pub fn decode(&self, mut flat: usize) -> Vec<i64> {
        let mut n = vec![0i64; self.dim()];
        for a in (0..self.dim()).rev() {
            let c = self.axis_count(a);
            n[a] = self.ranges[a].0 + (flat % c) as i64;
            flat /= c;
        }
        n
    }

    pub fn position(&self, n: &[i64]) -> Option<usize> {
        if !self.contains(n) {
            return None;
        }
        let mut flat = 0usize;
        for (a, &na) in n.iter().enumerate() {
            flat = flat * self.axis_count(a) + (na - self.ranges[a].0) as usize;
        }
        Some(flat)
    }
}

/// N >= 8 (max|n| + |m| + 1): eight samples per period of the fastest
/// instantaneous frequency of the chirped integrand on a unit cube.
pub fn resolution_is_adequate(resolution: usize, max_abs_n: i64, m: i64) -> bool {
    resolution as i64 >= 8 * (max_abs_n.abs() + m.abs() + 1)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    /// Set when the grid is coarser than the adequacy rule asks for.
    pub resolution_warning: bool,
}

/// <g, packet> by the midpoint rule on g's grid. The packet's window must
/// cover the grid cube; the conjugated packet factors over axes, so the
/// sum contracts against d per-axis tables.
pub fn inner_product(g: &GridFunction, wp: &WavePacket) -> Result<QuadratureResult, PacketError> {
    if wp.dim() != g.dim() {
        return Err(PacketError::DimensionMismatch {
            expected: g.dim(),
            got: wp.dim(),
        });
    }
    if !wp.profile.covers(g.cube()) {
        return Err(PacketError::SupportMismatch);
    }
    let m = wp.m as f64;
    let tabs: Vec<Vec<Complex64>> = (0..g.dim())
        .map(|a| {
            let na = wp.n[a] as f64;
            g.axis_centers(a)
                .iter()
                .map(|&c| {
                    wp.profile.window(a, c) * Complex64::from_polar(1.0, -TAU * (na * c + m * c * c))
                })
                .collect()
        })
        .collect();
    let tab_refs: Vec<&[Complex64]> = tabs.iter().map(|t| t.as_slice()).collect();
    let sum = contracted_sum(g.samples(), &tab_refs, g.resolution());
    let max_n = wp.n.iter().map(|v| v.abs()).max().unwrap_or(0);
    Ok(QuadratureResult {
        value: g.cell_volume() * sum,
        resolution_warning: !resolution_is_adequate(g.resolution(), max_n, wp.m),
    })
}

/// All coefficients at one m over a frequency box, stored row-major in the
/// box's own order.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSlab {
    m: i64,
    n_box: FrequencyBox,
    values: Vec<Complex64>,
    resolution_warning: bool,
}

impl CoefficientSlab {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n_box(&self) -> &FrequencyBox {
        &self.n_box
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn resolution_warning(&self) -> bool {
        self.resolution_warning
    }

    pub fn get(&self, n: &[i64]) -> Option<Complex64> {
        self.n_box.position(n).map(|p| self.values[p])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vec<i64>, Complex64)> + '_ {
        (0..self.values.len()).map(|f| (self.n_box.decode(f), self.values[f]))
    }

    pub fn sum_squared_moduli(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }
}

/// Coefficients <g, phi_{n,m}> of the sharp-profile packets on g's own
/// cube, for every n in the box. One FFT when the cube has unit sides,
/// direct evaluation otherwise. Frequencies beyond N/2 alias and are
/// rejected.
pub fn coefficient_slab(
    g: &GridFunction,
    m: i64,
    n_box: &FrequencyBox,
) -> Result<CoefficientSlab, PacketError> {
    if n_box.dim() != g.dim() {
        return Err(PacketError::DimensionMismatch {
            expected: g.dim(),
            got: n_box.dim(),
        });
    }
    let max_allowed = (g.resolution() / 2) as i64;
    if n_box.max_abs() > max_allowed {
        return Err(PacketError::FrequencyBoxTooWide {
            requested: n_box.max_abs(),
            max_allowed,
        });
    }
    let unit_sides = (0..g.dim()).all(|a| {
        let proj = g.cube().projection(a);
        (proj.hi() - proj.lo()).is_one()
    });
    let values = if unit_sides {
        slab_fft(g, m, n_box)
    } else {
        slab_direct(g, m, n_box)
    };
    Ok(CoefficientSlab {
        m,
        n_box: n_box.clone(),
        values,
        resolution_warning: !resolution_is_adequate(g.resolution(), n_box.max_abs(), m),
    })
}

fn chirp_tables(g: &GridFunction, m: i64) -> Vec<Vec<Complex64>> {
    (0..g.dim())
        .map(|a| {
            g.axis_centers(a)
                .iter()
                .map(|&c| Complex64::from_polar(1.0, -TAU * m as f64 * c * c))
                .collect()
        })
        .collect()
}

/// Samples times the separable chirp e^{-2 pi i m |x|^2}.
fn chirped_samples(g: &GridFunction, chirp: &[Vec<Complex64>]) -> Vec<Complex64> {
    let d = g.dim();
    let n = g.resolution();
    let mut idx = vec![0usize; d];
    let mut y = Vec::with_capacity(g.samples().len());
    for &s in g.samples() {
        let mut w = s;
        for a in 0..d {
            w *= chirp[a][idx[a]];
        }
        y.push(w);
        for a in (0..d).rev() {
            idx[a] += 1;
            if idx[a] < n {
                break;
            }
            idx[a] = 0;
        }
    }
    y
}

fn slab_fft(g: &GridFunction, m: i64, n_box: &FrequencyBox) -> Vec<Complex64> {
    let n = g.resolution();
    let mut y = chirped_samples(g, &chirp_tables(g, m));

    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    let mut line = vec![Complex64::new(0.0, 0.0); n];
    let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
    fft_axes(&mut y, g.dim(), n, fft.as_ref(), &mut line, &mut scratch);
    extract_box(&y, g, n_box, &offset_phase_tabs(g, n_box))
}

/// In-place forward DFT along every axis of a row-major d-cube of side n.
fn fft_axes(
    y: &mut [Complex64],
    d: usize,
    n: usize,
    fft: &dyn rustfft::Fft<f64>,
    line: &mut [Complex64],
    scratch: &mut [Complex64],
) {
    for axis in 0..d {
        let stride = n.pow((d - 1 - axis) as u32);
        let outer = n.pow(axis as u32);
        for p in 0..outer {
            for q in 0..stride {
                let base = p * n * stride + q;
                for (i, slot) in line.iter_mut().enumerate() {
                    *slot = y[base + i * stride];
                }
                fft.process_with_scratch(line, scratch);
                for (i, slot) in line.iter().enumerate() {
                    y[base + i * stride] = *slot;
                }
            }
        }
    }
}

/// Per-axis center offset phases e^{-2 pi i n_a (lo_a + h/2)}.
fn offset_phase_tabs(g: &GridFunction, n_box: &FrequencyBox) -> Vec<Vec<Complex64>> {
    (0..g.dim())
        .map(|a| {
            let first = g.axis_centers(a)[0];
            let (lo, hi) = n_box.axis_range(a);
            (lo..=hi)
                .map(|na| Complex64::from_polar(1.0, -TAU * na as f64 * first))
                .collect()
        })
        .collect()
}

/// Pull the requested bins out of the transformed cube and apply the
/// offset phases and the cell volume. Walks the box with an in-place
/// multi-index instead of decoding every flat position.
fn extract_box(
    y: &[Complex64],
    g: &GridFunction,
    n_box: &FrequencyBox,
    phase_tabs: &[Vec<Complex64>],
) -> Vec<Complex64> {
    let d = g.dim();
    let n = g.resolution();
    let vol = g.cell_volume();
    let mut nv: Vec<i64> = (0..d).map(|a| n_box.axis_range(a).0).collect();
    let mut values = Vec::with_capacity(n_box.len());
    for _ in 0..n_box.len() {
        let mut bin = 0usize;
        let mut phase = Complex64::new(1.0, 0.0);
        for a in 0..d {
            bin = bin * n + (nv[a].rem_euclid(n as i64)) as usize;
            phase *= phase_tabs[a][(nv[a] - n_box.axis_range(a).0) as usize];
        }
        values.push(vol * y[bin] * phase);
        for a in (0..d).rev() {
            nv[a] += 1;
            if nv[a] <= n_box.axis_range(a).1 {
                break;
            }
            nv[a] = n_box.axis_range(a).0;
        }
    }
    values
}

/// The product chirp e^{-2 pi i m |x_j|^2} at every grid point, in
/// sample order.
fn unit_chirp_vector(g: &GridFunction, m: i64) -> Vec<Complex64> {
    let chirp = chirp_tables(g, m);
    let d = g.dim();
    let n = g.resolution();
    let mut idx = vec![0usize; d];
    let mut out = Vec::with_capacity(g.samples().len());
    for _ in 0..g.samples().len() {
        let mut w = Complex64::new(1.0, 0.0);
        for a in 0..d {
            w *= chirp[a][idx[a]];
        }
        out.push(w);
        for a in (0..d).rev() {
            idx[a] += 1;
            if idx[a] < n {
                break;
            }
            idx[a] = 0;
        }
    }
    out
}

// Unimodular drift per recurrence step is a few ulp, so refresh the
// chirped samples from scratch often enough to keep the accumulated
// error far below every quadrature tolerance.
const CHIRP_RESEED_INTERVAL: i64 = 64;

/// [`coefficient_slab`] for every m in an inclusive range, sharing the
/// FFT plan, the bin phases, and the chirp recurrence
/// e^{-2 pi i (m+1) |x|^2} = e^{-2 pi i m |x|^2} e^{-2 pi i |x|^2}
/// across the range. Slabs come back in increasing m order. Cubes with
/// a non-unit side fall back to per-m direct evaluation.
pub fn coefficient_slab_range(
    g: &GridFunction,
    m_range: (i64, i64),
    n_box: &FrequencyBox,
) -> Result<Vec<CoefficientSlab>, PacketError> {
    let (m_lo, m_hi) = m_range;
    if m_lo > m_hi {
        return Err(PacketError::ReversedRange { lo: m_lo, hi: m_hi });
    }
    if n_box.dim() != g.dim() {
        return Err(PacketError::DimensionMismatch {
            expected: g.dim(),
            got: n_box.dim(),
        });
    }
    let max_allowed = (g.resolution() / 2) as i64;
    if n_box.max_abs() > max_allowed {
        return Err(PacketError::FrequencyBoxTooWide {
            requested: n_box.max_abs(),
            max_allowed,
        });
    }
    let unit_sides = (0..g.dim()).all(|a| {
        let proj = g.cube().projection(a);
        (proj.hi() - proj.lo()).is_one()
    });
    if !unit_sides {
        return (m_lo..=m_hi).map(|m| coefficient_slab(g, m, n_box)).collect();
    }

    let n = g.resolution();
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    let mut line = vec![Complex64::new(0.0, 0.0); n];
    let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
    let phase_tabs = offset_phase_tabs(g, n_box);
    let step = unit_chirp_vector(g, 1);

    let mut chirped = chirped_samples(g, &chirp_tables(g, m_lo));
    let mut slabs = Vec::with_capacity((m_hi - m_lo + 1) as usize);
    for m in m_lo..=m_hi {
        if m > m_lo && (m - m_lo) % CHIRP_RESEED_INTERVAL == 0 {
            chirped = chirped_samples(g, &chirp_tables(g, m));
        }
        let mut y = chirped.clone();
        fft_axes(&mut y, g.dim(), n, fft.as_ref(), &mut line, &mut scratch);
        slabs.push(CoefficientSlab {
            m,
            n_box: n_box.clone(),
            values: extract_box(&y, g, n_box, &phase_tabs),
            resolution_warning: !resolution_is_adequate(g.resolution(), n_box.max_abs(), m),
        });
        if m < m_hi {
            for (c, s) in chirped.iter_mut().zip(&step) {
                *c *= s;
            }
        }
    }
    Ok(slabs)
}

fn slab_direct(g: &GridFunction, m: i64, n_box: &FrequencyBox) -> Vec<Complex64> {
    let d = g.dim();
    let chirp = chirp_tables(g, m);
    // mode_tabs[a][n_index][i] = chirp_a(x_i) e^{-2 pi i n_a x_i}
    let mode_tabs: Vec<Vec<Vec<Complex64>>> = (0..d)
        .map(|a| {
            let centers = g.axis_centers(a);
            let (lo, hi) = n_box.axis_range(a);
            (lo..=hi)
                .map(|na| {
                    centers
                        .iter()
                        .zip(&chirp[a])
                        .map(|(&c, &ch)| ch * Complex64::from_polar(1.0, -TAU * na as f64 * c))
                        .collect()
                })
                .collect()
        })
        .collect();

    let vol = g.cell_volume();
    let mut values = Vec::with_capacity(n_box.len());
    for flat in 0..n_box.len() {
        let nv = n_box.decode(flat);
        let tabs: Vec<&[Complex64]> = (0..d)
            .map(|a| mode_tabs[a][(nv[a] - n_box.axis_range(a).0) as usize].as_slice())
            .collect();
        values.push(vol * contracted_sum(g.samples(), &tabs, g.resolution()));
    }
    values
}

/// sum_j samples[j] prod_a tabs[a][j_a] with j running row-major, axis 0
/// slowest, every axis of length n.
fn contracted_sum(samples: &[Complex64], tabs: &[&[Complex64]], n: usize) -> Complex64 {
    let d = tabs.len();
    let mut idx = vec![0usize; d];
    let mut sum = Complex64::new(0.0, 0.0);
    for &s in samples {
        let mut w = s;
        for a in 0..d {
            w *= tabs[a][idx[a]];
        }
        sum += w;
        for a in (0..d).rev() {
            idx[a] += 1;
            if idx[a] < n {
                break;
            }
            idx[a] = 0;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::BumpProfile;
    use extlab_geometry::{ratio, Interval, RationalCube};

    fn cube1(lo: i64, hi: i64, den: i64) -> RationalCube {
        RationalCube::new(vec![Interval::new(ratio(lo, den), ratio(hi, den)).unwrap()]).unwrap()
    }

    fn unit_cube(d: usize) -> RationalCube {
        RationalCube::new(
            (0..d)
                .map(|_| Interval::new(ratio(0, 1), ratio(1, 1)).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn trig_grid(d: usize, resolution: usize) -> GridFunction {
        GridFunction::from_fn(unit_cube(d), resolution, |x| {
            let s: f64 = x.iter().sum();
            Complex64::from_polar(1.0, TAU * (2.0 * s)) + Complex64::new(0.3 * x[0], -0.1)
        })
        .unwrap()
    }

    #[test]
    fn frequency_boxes_index_both_ways() {
        let b = FrequencyBox::new(vec![(-2, 1), (0, 2)]).unwrap();
        assert_eq!(b.len(), 12);
        assert_eq!(b.decode(0), vec![-2, 0]);
        assert_eq!(b.decode(11), vec![1, 2]);
        for flat in 0..b.len() {
            assert_eq!(b.position(&b.decode(flat)), Some(flat));
        }
        assert_eq!(b.position(&[2, 0]), None);
        assert!(matches!(
            FrequencyBox::new(vec![(3, 1)]),
            Err(PacketError::ReversedRange { lo: 3, hi: 1 })
        ));
    }

    #[test]
    fn full_bin_boxes_have_exactly_n_entries_per_axis() {
        let even = FrequencyBox::full_bins(1, 4);
        assert_eq!(even.axis_range(0), (-2, 1));
        let odd = FrequencyBox::full_bins(1, 5);
        assert_eq!(odd.axis_range(0), (-2, 2));
        assert_eq!(FrequencyBox::full_bins(2, 8).len(), 64);
    }

    #[test]
    fn adequacy_rule_boundary() {
        assert!(resolution_is_adequate(16, 1, 0));
        assert!(!resolution_is_adequate(15, 1, 0));
        assert!(!resolution_is_adequate(16, 1, 1));
    }

    #[test]
    fn constant_function_has_a_single_delta_coefficient() {
        let g = GridFunction::from_fn(unit_cube(1), 32, |_| Complex64::new(1.0, 0.0)).unwrap();
        let slab = coefficient_slab(&g, 0, &FrequencyBox::centered(1, 3)).unwrap();
        for (n, v) in slab.iter() {
            if n[0] == 0 {
                assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12, "c_0 = {v}");
            } else {
                assert!(v.norm() < 1e-12, "c_{} = {v}", n[0]);
            }
        }
        assert!(!slab.resolution_warning());
    }

    #[test]
    fn slab_agrees_with_single_inner_products() {
        let g = trig_grid(2, 32);
        let slab = coefficient_slab(&g, 1, &FrequencyBox::centered(2, 2)).unwrap();
        for (n, v) in slab.iter() {
            let wp = WavePacket::new(BumpProfile::sharp(unit_cube(2)), n.clone(), 1).unwrap();
            let direct = inner_product(&g, &wp).unwrap();
            assert!((v - direct.value).norm() < 1e-9, "n = {n:?}");
            assert!(!direct.resolution_warning);
        }
    }

    #[test]
    fn full_bin_sum_reproduces_the_grid_norm() {
        let g = trig_grid(1, 64);
        for m in [-3i64, 0, 5] {
            let slab = coefficient_slab(&g, m, &FrequencyBox::full_bins(1, 64)).unwrap();
            let lhs = slab.sum_squared_moduli();
            let rhs = g.l2_norm_squared();
            assert!((lhs - rhs).abs() < 1e-12 * rhs, "m = {m}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn modulating_the_samples_shifts_the_slab() {
        let g = trig_grid(1, 64);
        let k = 3i64;
        let modulated = GridFunction::from_fn(unit_cube(1), 64, |x| {
            let s: f64 = x.iter().sum();
            (Complex64::from_polar(1.0, TAU * (2.0 * s)) + Complex64::new(0.3 * x[0], -0.1))
                * Complex64::from_polar(1.0, TAU * k as f64 * x[0])
        })
        .unwrap();
        let base = coefficient_slab(&g, 2, &FrequencyBox::centered(1, 8)).unwrap();
        let shifted = coefficient_slab(&modulated, 2, &FrequencyBox::centered(1, 4)).unwrap();
        for (n, v) in shifted.iter() {
            let expect = base.get(&[n[0] - k]).unwrap();
            assert!((v - expect).norm() < 1e-10, "n = {}", n[0]);
        }
    }

    #[test]
    fn slab_ranges_match_per_m_slabs() {
        let g = trig_grid(1, 128);
        let b = FrequencyBox::centered(1, 6);
        // Straddle a reseed boundary so the recurrence is exercised on
        // both sides of a refresh.
        let slabs = coefficient_slab_range(&g, (-70, 70), &b).unwrap();
        assert_eq!(slabs.len(), 141);
        for slab in &slabs {
            let single = coefficient_slab(&g, slab.m(), &b).unwrap();
            assert_eq!(slab.resolution_warning(), single.resolution_warning());
            for (a, b) in slab.values().iter().zip(single.values()) {
                assert!((a - b).norm() < 1e-12, "m = {}", slab.m());
            }
        }
    }

    #[test]
    fn slab_ranges_match_on_non_unit_cubes_too() {
        let g = GridFunction::from_fn(cube1(0, 2, 1), 24, |x| {
            Complex64::new(x[0], -0.5 * x[0])
        })
        .unwrap();
        let b = FrequencyBox::centered(1, 2);
        let slabs = coefficient_slab_range(&g, (-2, 2), &b).unwrap();
        for slab in &slabs {
            let single = coefficient_slab(&g, slab.m(), &b).unwrap();
            for (a, b) in slab.values().iter().zip(single.values()) {
                assert!((a - b).norm() < 1e-12);
            }
        }
        assert!(matches!(
            coefficient_slab_range(&g, (1, 0), &b),
            Err(PacketError::ReversedRange { lo: 1, hi: 0 })
        ));
    }

    #[test]
    fn real_samples_have_conjugate_symmetric_coefficients() {
        let g = GridFunction::from_fn(unit_cube(1), 32, |x| {
            Complex64::new((TAU * x[0]).sin() + 0.25, 0.0)
        })
        .unwrap();
        let pos = coefficient_slab(&g, 2, &FrequencyBox::centered(1, 3)).unwrap();
        let neg = coefficient_slab(&g, -2, &FrequencyBox::centered(1, 3)).unwrap();
        for (n, v) in pos.iter() {
            let mirror = neg.get(&[-n[0]]).unwrap();
            assert!((mirror - v.conj()).norm() < 1e-12);
        }
    }

    #[test]
    fn non_unit_cubes_take_the_direct_path_and_still_match() {
        let g = GridFunction::from_fn(cube1(0, 2, 1), 40, |x| {
            Complex64::from_polar(1.0, TAU * 1.5 * x[0]) + Complex64::new(0.0, 0.2)
        })
        .unwrap();
        let slab = coefficient_slab(&g, 1, &FrequencyBox::centered(1, 2)).unwrap();
        for (n, v) in slab.iter() {
            let wp = WavePacket::new(BumpProfile::sharp(cube1(0, 2, 1)), n.clone(), 1).unwrap();
            let direct = inner_product(&g, &wp).unwrap();
            assert!((v - direct.value).norm() < 1e-9);
        }
    }

    #[test]
    fn too_wide_boxes_and_mismatched_profiles_error() {
        let g = GridFunction::from_fn(unit_cube(1), 8, |_| Complex64::new(1.0, 0.0)).unwrap();
        let err = coefficient_slab(&g, 0, &FrequencyBox::centered(1, 5));
        assert!(matches!(
            err,
            Err(PacketError::FrequencyBoxTooWide { requested: 5, max_allowed: 4 })
        ));
        let off = WavePacket::new(BumpProfile::sharp(cube1(1, 2, 1)), vec![0], 0).unwrap();
        assert!(matches!(
            inner_product(&g, &off),
            Err(PacketError::SupportMismatch)
        ));
    }

    #[test]
    fn coarse_grids_raise_the_resolution_warning() {
        let g = GridFunction::from_fn(unit_cube(1), 8, |_| Complex64::new(1.0, 0.0)).unwrap();
        let slab = coefficient_slab(&g, 3, &FrequencyBox::centered(1, 1)).unwrap();
        assert!(slab.resolution_warning());
        let wp = WavePacket::new(BumpProfile::sharp(unit_cube(1)), vec![1], 3).unwrap();
        assert!(inner_product(&g, &wp).unwrap().resolution_warning);
    }
}
