//! Bump profiles: sharp cube indicators and smooth windows whose edges are
//! driven by the normalized integral of the mollifier exp(-1/(1-s^2)).

use extlab_geometry::{to_f64, RationalCube};
use once_cell::sync::Lazy;

use crate::error::PacketError;
use crate::quadrature::{gauss_legendre, integrate_panels};

pub const DEFAULT_SMOOTH_MARGIN: f64 = 0.1;

fn mollifier(s: f64) -> f64 {
    if s.abs() < 1.0 {
        (-1.0 / (1.0 - s * s)).exp()
    } else {
        0.0
    }
}

static MOLLIFIER_MASS: Lazy<f64> = Lazy::new(|| {
    let rule = gauss_legendre(64);
    integrate_panels(&rule, -1.0, 1.0, 4, mollifier)
});

/// C-infinity step: 0 for u <= 0, 1 for u >= 1, in between the mollifier
/// mass on [-1, 2u-1] over the total mass.
pub fn smooth_step(u: f64) -> f64 {
    if u <= 0.0 {
        0.0
    } else if u >= 1.0 {
        1.0
    } else {
        let rule = gauss_legendre(64);
        let v = 2.0 * u - 1.0;
        integrate_panels(&rule, -1.0, v, 2, mollifier) / *MOLLIFIER_MASS
    }
}

/// Window profile of a wave packet: 1 on the cube. Sharp mode is the exact
/// indicator; smooth mode decays to 0 across a margin of the given width on
/// each side, infinitely differentiably.
#[derive(Debug, Clone, PartialEq)]
pub enum BumpProfile {
    Sharp { cube: RationalCube },
    Smooth { cube: RationalCube, margin: f64 },
}

impl BumpProfile {
    pub fn sharp(cube: RationalCube) -> Self {
        BumpProfile::Sharp { cube }
    }

    pub fn smooth(cube: RationalCube, margin: f64) -> Result<Self, PacketError> {
        if !margin.is_finite() || margin <= 0.0 {
            return Err(PacketError::BadMargin { margin });
        }
        Ok(BumpProfile::Smooth { cube, margin })
    }

    pub fn smooth_default(cube: RationalCube) -> Self {
        BumpProfile::Smooth {
            cube,
            margin: DEFAULT_SMOOTH_MARGIN,
        }
    }

    pub fn cube(&self) -> &RationalCube {
        match self {
            BumpProfile::Sharp { cube } | BumpProfile::Smooth { cube, .. } => cube,
        }
    }

    pub fn dim(&self) -> usize {
        self.cube().dim()
    }

    pub fn margin(&self) -> Option<f64> {
        match self {
            BumpProfile::Sharp { .. } => None,
            BumpProfile::Smooth { margin, .. } => Some(*margin),
        }
    }

    /// Support along one axis: the cube edge, margin-enlarged in smooth mode.
    pub fn support(&self, axis: usize) -> (f64, f64) {
        let proj = self.cube().projection(axis);
        let lo = to_f64(proj.lo());
        let hi = to_f64(proj.hi());
        match self {
            BumpProfile::Sharp { .. } => (lo, hi),
            BumpProfile::Smooth { margin, .. } => (lo - margin, hi + margin),
        }
    }

    /// Whether the profile's support contains the cube, axis by axis.
    pub fn covers(&self, cube: &RationalCube) -> bool {
        if cube.dim() != self.dim() {
            return false;
        }
        (0..self.dim()).all(|a| {
            let (lo, hi) = self.support(a);
            let proj = cube.projection(a);
            lo <= to_f64(proj.lo()) && to_f64(proj.hi()) <= hi
        })
    }

    /// One axis factor of the window.
    pub fn window(&self, axis: usize, x: f64) -> f64 {
        let proj = self.cube().projection(axis);
        let lo = to_f64(proj.lo());
        let hi = to_f64(proj.hi());
        match self {
            BumpProfile::Sharp { .. } => {
                if (lo..=hi).contains(&x) {
                    1.0
                } else {
                    0.0
                }
            }
            BumpProfile::Smooth { margin, .. } => {
                if x <= lo - margin || x >= hi + margin {
                    0.0
                } else if x < lo {
                    smooth_step((x - (lo - margin)) / margin)
                } else if x > hi {
                    smooth_step(((hi + margin) - x) / margin)
                } else {
                    1.0
                }
            }
        }
    }

    /// Product of the axis windows.
    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.dim());
        let mut value = 1.0;
        for (axis, &xa) in x.iter().enumerate() {
            value *= self.window(axis, xa);
            if value == 0.0 {
                return 0.0;
            }
        }
        value
    }
}
