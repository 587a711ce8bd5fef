//! Wave packets: a bump profile carrying the linear phase e^{2 pi i x.n}
//! and the quadratic phase e^{2 pi i |x|^2 m}.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::PacketError;
use crate::profile::BumpProfile;
use crate::quadrature::{gauss_legendre, integrate_panels_c};

#[derive(Debug, Clone, PartialEq)]
pub struct WavePacket {
    pub profile: BumpProfile,
    pub n: Vec<i64>,
    pub m: i64,
}

impl WavePacket {
    pub fn new(profile: BumpProfile, n: Vec<i64>, m: i64) -> Result<Self, PacketError> {
        if n.len() != profile.dim() {
            return Err(PacketError::DimensionMismatch {
                expected: profile.dim(),
                got: n.len(),
            });
        }
        Ok(WavePacket { profile, n, m })
    }

    pub fn dim(&self) -> usize {
        self.n.len()
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        eval_wavepacket(self, x)
    }
}

/// profile(x) e^{2 pi i x.n} e^{2 pi i |x|^2 m}. The point must match the
/// packet dimension.
pub fn eval_wavepacket(wp: &WavePacket, x: &[f64]) -> Complex64 {
    assert_eq!(x.len(), wp.dim(), "point dimension mismatch");
    let amp = wp.profile.eval(x);
    if amp == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let mut phase = 0.0;
    for (a, &xa) in x.iter().enumerate() {
        phase += wp.n[a] as f64 * xa + wp.m as f64 * xa * xa;
    }
    amp * Complex64::from_polar(1.0, TAU * phase)
}

/// <wp1, wp2> = integral of wp1 . conj(wp2). Both phases and both windows
/// factor over axes, so the overlap is a product of 1-D oscillatory
/// integrals; each is resolved with panel counts tied to the phase
/// variation of the frequency differences and to the window margins.
pub fn packet_overlap(wp1: &WavePacket, wp2: &WavePacket) -> Complex64 {
    assert_eq!(wp1.dim(), wp2.dim(), "packet dimension mismatch");
    let dm = (wp1.m - wp2.m) as f64;
    let rule = gauss_legendre(16);
    let mut total = Complex64::new(1.0, 0.0);
    for axis in 0..wp1.dim() {
        let (lo1, hi1) = wp1.profile.support(axis);
        let (lo2, hi2) = wp2.profile.support(axis);
        let lo = lo1.max(lo2);
        let hi = hi1.min(hi2);
        if lo >= hi {
            return Complex64::new(0.0, 0.0);
        }
        let dn = (wp1.n[axis] - wp2.n[axis]) as f64;
        let len = hi - lo;
        let reach = lo.abs().max(hi.abs());
        let phase_var = TAU * (dn.abs() * len + 2.0 * dm.abs() * reach * len);
        let mut panels = (phase_var / 4.0).ceil() as usize + 8;
        // Smooth edges need panels no wider than half the margin.
        for margin in [wp1.profile.margin(), wp2.profile.margin()].into_iter().flatten() {
            panels = panels.max((2.0 * len / margin).ceil() as usize);
        }
        let p1 = &wp1.profile;
        let p2 = &wp2.profile;
        let factor = integrate_panels_c(&rule, lo, hi, panels, |x| {
            let w = p1.window(axis, x) * p2.window(axis, x);
            if w == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            w * Complex64::from_polar(1.0, TAU * (dn * x + dm * x * x))
        });
        total *= factor;
    }
    total
}
