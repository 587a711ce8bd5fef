//! Phase-space atoms of the unit chirp: e^{2 pi i t x^2} splits over a
//! partition of unity in the rescaled variable u = sqrt(t) x, and each
//! piece occupies one unit-area Heisenberg box.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::PacketError;
use crate::profile::smooth_step;

/// Partition bump: psi(v) = step(v+1) - step(v), supported in (-1, 1),
/// equal to 1 at v = 0, with sum_n psi(v - n) = 1 by telescoping.
pub fn partition_bump(v: f64) -> f64 {
    smooth_step(v + 1.0) - smooth_step(v)
}

/// One atom of the decomposition, indexed by the integer n at scale t > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChirpAtom {
    pub n: i64,
    pub t: f64,
}

impl ChirpAtom {
    pub fn new(n: i64, t: f64) -> Result<Self, PacketError> {
        if !t.is_finite() {
            return Err(PacketError::NonFinite { what: "chirp scale" });
        }
        if t <= 0.0 {
            return Err(PacketError::NonPositiveScale { t });
        }
        Ok(ChirpAtom { n, t })
    }

    /// psi(u - n) e^{i (4 pi n u + 2 pi ((u-n)^2 - n^2))} at u = sqrt(t) x.
    /// The phases recombine to 2 pi u^2, so the atoms sum to the chirp.
    pub fn eval(&self, x: f64) -> Complex64 {
        let u = self.t.sqrt() * x;
        let r = u - self.n as f64;
        let w = partition_bump(r);
        if w == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let n = self.n as f64;
        let phase = TAU * (2.0 * n * u + r * r - n * n);
        w * Complex64::from_polar(1.0, phase)
    }

    /// ([space interval], [frequency interval]): the atom lives on
    /// [n, n+1] in u, which is [n, n+1]/sqrt(t) in x, and its instantaneous
    /// frequency 2 t x starts the sweep at 2 n sqrt(t) there.
    pub fn heisenberg_box(&self) -> ([f64; 2], [f64; 2]) {
        let s = self.t.sqrt();
        let n = self.n as f64;
        ([n / s, (n + 1.0) / s], [2.0 * n * s, (2.0 * n + 1.0) * s])
    }
}

/// Atom values (n, Phi_{n,t}(x)) for n in [n_lo, n_hi]. Their sum
/// reconstructs e^{2 pi i t x^2} once the range covers the at most two
/// atoms with |sqrt(t) x - n| < 1.
pub fn chirp_unit_decomposition(
    t: f64,
    x: f64,
    n_lo: i64,
    n_hi: i64,
) -> Result<Vec<(i64, Complex64)>, PacketError> {
    if !x.is_finite() {
        return Err(PacketError::NonFinite { what: "evaluation point" });
    }
    if n_lo > n_hi {
        return Err(PacketError::ReversedRange { lo: n_lo, hi: n_hi });
    }
    let mut atoms = Vec::with_capacity((n_hi - n_lo + 1) as usize);
    for n in n_lo..=n_hi {
        let atom = ChirpAtom::new(n, t)?;
        atoms.push((n, atom.eval(x)));
    }
    Ok(atoms)
}
