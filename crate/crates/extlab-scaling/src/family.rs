//! Sharp example families: small boxes placed inside the standard caps so
//! that the product of their extensions concentrates on an explicit dual
//! box, together with the dual boxes themselves and the closed-form
//! exponents the measured ratios are compared against.

use std::fmt;
use std::str::FromStr;

use extlab_geometry::{from_int, ratio, CubeCollection, Interval, Rational, RationalCube};

use crate::error::ScalingError;

/// Largest admissible box scale. The families are asymptotic objects; above
/// 1/8 the boxes are no longer small against their caps and the dual-box
/// phase analysis loses its margin.
pub const MAX_DELTA: f64 = 0.125;

/// Default dual-box shrink factor. On the shrunk box every phase condition
/// of the form |xi_a - c t| <= shrink * scale holds with a fixed margin, so
/// the accumulated phase across any input box stays below one radian and
/// the extension product is uniformly comparable to its peak.
pub const DEFAULT_SHRINK: f64 = 1.0 / 64.0;

/// Which sharp example a family instantiates.
///
/// Cube places k = d+1 congruent delta-cubes; slab places k <= d boxes with
/// edges at two scales (delta^2 on the first k-1 axes, delta on the rest);
/// rhombus is the planar trilinear family whose supports are delta^2 x delta
/// boxes on the diagonal, carried onto the caps by a quarter turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Cube,
    Slab,
    Rhombus,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyKind::Cube => "cube",
            FamilyKind::Slab => "slab",
            FamilyKind::Rhombus => "rhombus",
        };
        write!(f, "{name}")
    }
}

impl FromStr for FamilyKind {
    type Err = ScalingError;

    fn from_str(s: &str) -> Result<Self, ScalingError> {
        match s {
            "cube" => Ok(FamilyKind::Cube),
            "slab" => Ok(FamilyKind::Slab),
            "rhombus" => Ok(FamilyKind::Rhombus),
            other => Err(ScalingError::UnknownKind {
                name: other.to_string(),
            }),
        }
    }
}

/// Axis-aligned input box, in the frame where its edges are axis-parallel.
/// Endpoints are plain floats because the rhombus boxes sit at sqrt(2)
/// multiples; dyadic deltas keep the cube and slab endpoints exact.
#[derive(Clone, Debug, PartialEq)]
pub struct SupportBox {
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl SupportBox {
    fn new(axes: Vec<(f64, f64)>) -> Self {
        let (lo, hi) = axes.into_iter().unzip();
        SupportBox { lo, hi }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    /// Endpoints (lo, hi) of the given axis.
    pub fn axis(&self, a: usize) -> (f64, f64) {
        (self.lo[a], self.hi[a])
    }

    pub fn volume(&self) -> f64 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(lo, hi)| hi - lo)
            .product()
    }

    /// L2 norm of the box indicator.
    pub fn l2_norm(&self) -> f64 {
        self.volume().sqrt()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }
}

/// Quadrature domain dual to a family at its scale. Coordinates are
/// (u_1, ..., u_d, t) with xi_a = u_a - shear_a * t; the shear is measure
/// preserving, so Lp masses over the box need no Jacobian. Cube and slab
/// duals have zero shear; the rhombus dual shears the first frequency axis
/// along the line traced by its box centers.
#[derive(Clone, Debug, PartialEq)]
pub struct DualBox {
    xi_half: Vec<f64>,
    t_half: f64,
    shear: Vec<f64>,
}

impl DualBox {
    pub fn dim(&self) -> usize {
        self.xi_half.len()
    }

    pub fn xi_half_widths(&self) -> &[f64] {
        &self.xi_half
    }

    pub fn t_half_width(&self) -> f64 {
        self.t_half
    }

    /// Per-axis shear coefficients: the frequency evaluated at grid point
    /// (u, t) is xi_a = u_a - shear_a * t.
    pub fn shear(&self) -> &[f64] {
        &self.shear
    }

    pub fn volume(&self) -> f64 {
        let xi: f64 = self.xi_half.iter().map(|w| 2.0 * w).product();
        xi * 2.0 * self.t_half
    }
}

/// One sharp example at a fixed scale delta: k input boxes inside the
/// standard caps, with closed-form input norms and a predicted dual box.
#[derive(Clone, Debug)]
pub struct ExampleFamily {
    kind: FamilyKind,
    d: usize,
    k: usize,
    delta: f64,
}

impl ExampleFamily {
    pub fn new(kind: FamilyKind, d: usize, k: usize, delta: f64) -> Result<Self, ScalingError> {
        let admissible = match kind {
            FamilyKind::Cube => d >= 1 && k == d + 1,
            FamilyKind::Slab => d >= 2 && 2 <= k && k <= d,
            FamilyKind::Rhombus => d == 2 && k == 3,
        };
        if !admissible {
            return Err(ScalingError::InvalidFamily { kind, d, k });
        }
        if !delta.is_finite() || delta <= 0.0 || delta > MAX_DELTA {
            return Err(ScalingError::BadDelta { delta });
        }
        Ok(ExampleFamily { kind, d, k, delta })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// The caps the inputs live on. Cube and slab kinds use the standard
    /// staircase caps; the rhombus caps are the three diagonal unit squares
    /// that a common line crosses.
    pub fn caps(&self) -> CubeCollection {
        let cubes = match self.kind {
            FamilyKind::Cube | FamilyKind::Slab => (1..=self.k)
                .map(|j| {
                    let axes = (0..self.d)
                        .map(|a| cap_interval(j, a))
                        .collect::<Result<_, _>>()
                        .expect("unit cap endpoints are ordered");
                    RationalCube::new(axes).expect("caps have full dimension")
                })
                .collect::<Vec<_>>(),
            FamilyKind::Rhombus => [0, 2, 4]
                .iter()
                .map(|&lo| {
                    let side = Interval::new(from_int(lo), from_int(lo + 1))
                        .expect("unit cap endpoints are ordered");
                    RationalCube::new(vec![side.clone(), side])
                        .expect("caps have full dimension")
                })
                .collect(),
        };
        CubeCollection::new(cubes).expect("caps share one dimension")
    }

    /// The k input boxes, in the frame where they are axis-aligned. For the
    /// rhombus kind this is the unrotated frame; `rotate_quarter_turn`
    /// carries these boxes onto the caps.
    pub fn support_boxes(&self) -> Vec<SupportBox> {
        let delta = self.delta;
        match self.kind {
            FamilyKind::Cube => self.staircase_boxes(delta, delta),
            FamilyKind::Slab => self.staircase_boxes(delta * delta, delta),
            FamilyKind::Rhombus => {
                let half_long = delta * delta / 2.0;
                let half_short = delta / 2.0;
                rhombus_centers()
                    .iter()
                    .map(|&c| {
                        SupportBox::new(vec![
                            (c - half_long, c + half_long),
                            (-half_short, half_short),
                        ])
                    })
                    .collect()
            }
        }
    }

    /// Staircase boxes: box 1 sits at the origin corner, box j >= 2 has its
    /// distinguished axis at 4 and the j-2 axes before it at 2. The first
    /// k-1 axes get the narrow width, the rest the wide one; the cube kind
    /// passes equal widths.
    fn staircase_boxes(&self, narrow: f64, wide: f64) -> Vec<SupportBox> {
        (1..=self.k)
            .map(|j| {
                let axes = (0..self.d)
                    .map(|a| {
                        let width = if a < self.k - 1 { narrow } else { wide };
                        let base = staircase_base(j, a);
                        (base, base + width)
                    })
                    .collect();
                SupportBox::new(axes)
            })
            .collect()
    }

    /// The box the extension product concentrates on, shrunk by the given
    /// factor so the concentration is uniform across the sweep. Frequency
    /// axes are reciprocal to their box widths; the time half-width is
    /// 1/delta for the cube kind (the staircase conditions pin t an octave
    /// tighter than the box widths alone) and 1/delta^2 otherwise.
    pub fn dual_box(&self, shrink: f64) -> Result<DualBox, ScalingError> {
        if !shrink.is_finite() || shrink <= 0.0 || shrink > 1.0 {
            return Err(ScalingError::BadShrink { shrink });
        }
        let delta = self.delta;
        let (xi_half, t_half, shear) = match self.kind {
            FamilyKind::Cube => (
                vec![shrink / delta; self.d],
                shrink / delta,
                vec![0.0; self.d],
            ),
            FamilyKind::Slab => {
                let xi = (0..self.d)
                    .map(|a| {
                        if a < self.k - 1 {
                            shrink / (delta * delta)
                        } else {
                            shrink / delta
                        }
                    })
                    .collect();
                (xi, shrink / (delta * delta), vec![0.0; self.d])
            }
            FamilyKind::Rhombus => (
                vec![shrink / (delta * delta), shrink / delta],
                shrink / (delta * delta),
                // each box pins xi_1 near -2 c_j t; shearing along the
                // middle center keeps all three conditions inside the box
                vec![2.0 * rhombus_centers()[1], 0.0],
            ),
        };
        Ok(DualBox {
            xi_half,
            t_half,
            shear,
        })
    }

    /// Closed-form L2 norms of the input indicators, one per box. Every box
    /// in a family has the same volume.
    pub fn input_l2_norms(&self) -> Vec<f64> {
        let delta = self.delta;
        let volume = match self.kind {
            FamilyKind::Cube => delta.powi(self.d as i32),
            FamilyKind::Slab => {
                (delta * delta).powi((self.k - 1) as i32) * delta.powi((self.d - self.k + 1) as i32)
            }
            FamilyKind::Rhombus => delta.powi(3),
        };
        vec![volume.sqrt(); self.k]
    }

    /// Product of the input L2 norms, the denominator of the scaling ratio.
    pub fn l2_product(&self) -> f64 {
        self.input_l2_norms().iter().product()
    }
}

fn cap_interval(j: usize, a: usize) -> Result<Interval, extlab_geometry::GeomError> {
    let lo = if j >= 2 { staircase_base(j, a) as i64 } else { 0 };
    Interval::new(from_int(lo), from_int(lo + 1))
}

/// Left endpoint of axis a (0-based) of staircase box j (1-based): 2 before
/// the distinguished axis, 4 on it, 0 after; box 1 is all zeros.
fn staircase_base(j: usize, a: usize) -> f64 {
    if j < 2 {
        0.0
    } else if a + 2 < j {
        2.0
    } else if a + 2 == j {
        4.0
    } else {
        0.0
    }
}

/// First-axis centers of the rhombus boxes: odd multiples of sqrt(2)/2
/// spaced so the quarter turn lands each box in its own cap.
fn rhombus_centers() -> [f64; 3] {
    let s = std::f64::consts::SQRT_2 / 2.0;
    [s, 5.0 * s, 9.0 * s]
}

/// The quarter turn sending the rhombus supports onto their caps:
/// (x, y) -> ((x - y)/sqrt2, (x + y)/sqrt2). Rotations preserve Lp norms
/// and the quadratic phase, so the rotated family has the same scaling
/// ratio as the axis-aligned one.
pub fn rotate_quarter_turn(x: [f64; 2]) -> [f64; 2] {
    let c = std::f64::consts::FRAC_1_SQRT_2;
    [c * (x[0] - x[1]), c * (x[0] + x[1])]
}

/// Exponent of delta in the lower bound for the ratio
/// ||prod E f_j||_p / prod ||f_j||_2 of a family. Pure formula in (d, k, p):
/// the family constructors enforce the geometric invariants, this evaluates
/// anywhere the expression makes sense. p must be nonzero.
pub fn predicted_exponent(kind: FamilyKind, d: usize, k: usize, p: &Rational) -> Rational {
    match kind {
        FamilyKind::Cube => {
            ratio((d * (d + 1)) as i64, 2) - from_int((d + 1) as i64) / p.clone()
        }
        FamilyKind::Slab => {
            ratio((k * (d + k - 1)) as i64, 2) - from_int((d + k + 1) as i64) / p.clone()
        }
        FamilyKind::Rhombus => ratio(9, 2) - from_int(5) / p.clone(),
    }
}

#[cfg(test)]
mod tests {
    use extlab_geometry::to_f64;
    use num::Zero;

    use super::*;

    #[test]
    fn family_invariants_are_enforced() {
        assert!(ExampleFamily::new(FamilyKind::Cube, 2, 3, 0.125).is_ok());
        assert!(matches!(
            ExampleFamily::new(FamilyKind::Cube, 2, 2, 0.125),
            Err(ScalingError::InvalidFamily { .. })
        ));
        assert!(ExampleFamily::new(FamilyKind::Slab, 2, 2, 0.0625).is_ok());
        assert!(matches!(
            ExampleFamily::new(FamilyKind::Slab, 1, 2, 0.0625),
            Err(ScalingError::InvalidFamily { .. })
        ));
        assert!(matches!(
            ExampleFamily::new(FamilyKind::Slab, 3, 4, 0.0625),
            Err(ScalingError::InvalidFamily { .. })
        ));
        assert!(ExampleFamily::new(FamilyKind::Rhombus, 2, 3, 0.125).is_ok());
        assert!(matches!(
            ExampleFamily::new(FamilyKind::Rhombus, 3, 3, 0.125),
            Err(ScalingError::InvalidFamily { .. })
        ));
        assert!(matches!(
            ExampleFamily::new(FamilyKind::Cube, 2, 3, 0.2),
            Err(ScalingError::BadDelta { .. })
        ));
        assert!(matches!(
            ExampleFamily::new(FamilyKind::Cube, 2, 3, 0.0),
            Err(ScalingError::BadDelta { .. })
        ));
    }

    #[test]
    fn cube_boxes_follow_the_staircase() {
        let delta = 0.0625;
        let fam = ExampleFamily::new(FamilyKind::Cube, 2, 3, delta).unwrap();
        let boxes = fam.support_boxes();
        assert_eq!(boxes.len(), 3);
        assert_eq!(boxes[0].axis(0), (0.0, delta));
        assert_eq!(boxes[0].axis(1), (0.0, delta));
        // second box: distinguished first axis at 4
        assert_eq!(boxes[1].axis(0), (4.0, 4.0 + delta));
        assert_eq!(boxes[1].axis(1), (0.0, delta));
        // third box: one axis at 2, distinguished second axis at 4
        assert_eq!(boxes[2].axis(0), (2.0, 2.0 + delta));
        assert_eq!(boxes[2].axis(1), (4.0, 4.0 + delta));
    }

    #[test]
    fn slab_boxes_use_two_scales() {
        let delta = 0.0625;
        let fam = ExampleFamily::new(FamilyKind::Slab, 2, 2, delta).unwrap();
        let boxes = fam.support_boxes();
        assert_eq!(boxes[0].axis(0), (0.0, delta * delta));
        assert_eq!(boxes[0].axis(1), (0.0, delta));
        assert_eq!(boxes[1].axis(0), (4.0, 4.0 + delta * delta));
        assert_eq!(boxes[1].axis(1), (0.0, delta));
    }

    #[test]
    fn rhombus_boxes_sit_on_the_diagonal_centers() {
        let delta = 0.125;
        let fam = ExampleFamily::new(FamilyKind::Rhombus, 2, 3, delta).unwrap();
        let boxes = fam.support_boxes();
        let c = std::f64::consts::SQRT_2 / 2.0;
        let (lo, hi) = boxes[0].axis(0);
        assert!((0.5 * (lo + hi) - c).abs() < 1e-15);
        assert!((hi - lo - delta * delta).abs() < 1e-18);
        assert_eq!(boxes[0].axis(1), (-delta / 2.0, delta / 2.0));
        let (lo2, hi2) = boxes[2].axis(0);
        assert!((0.5 * (lo2 + hi2) - 9.0 * c).abs() < 1e-14);
        assert!((hi2 - lo2 - delta * delta).abs() < 1e-18);
    }

    #[test]
    fn caps_contain_their_boxes() {
        for (kind, d, k) in [
            (FamilyKind::Cube, 1, 2),
            (FamilyKind::Cube, 3, 4),
            (FamilyKind::Slab, 3, 2),
            (FamilyKind::Slab, 4, 3),
        ] {
            let fam = ExampleFamily::new(kind, d, k, 0.125).unwrap();
            let caps = fam.caps();
            assert_eq!(caps.len(), k);
            for (j, b) in fam.support_boxes().iter().enumerate() {
                let cap = caps.cube(j).unwrap();
                for a in 0..d {
                    let (lo, hi) = b.axis(a);
                    let side = cap.projection(a);
                    assert!(to_f64(side.lo()) <= lo && hi <= to_f64(side.hi()));
                }
            }
        }
    }

    #[test]
    fn rotated_rhombus_boxes_land_in_their_caps() {
        let fam = ExampleFamily::new(FamilyKind::Rhombus, 2, 3, 0.125).unwrap();
        let caps = fam.caps();
        for (j, b) in fam.support_boxes().iter().enumerate() {
            let cap = caps.cube(j).unwrap();
            let (lo0, hi0) = b.axis(0);
            let (lo1, hi1) = b.axis(1);
            for corner in [
                [lo0, lo1],
                [lo0, hi1],
                [hi0, lo1],
                [hi0, hi1],
            ] {
                let r = rotate_quarter_turn(corner);
                for (a, coord) in r.iter().enumerate() {
                    let side = cap.projection(a);
                    assert!(to_f64(side.lo()) <= *coord && *coord <= to_f64(side.hi()));
                }
            }
        }
    }

    #[test]
    fn input_norms_match_box_volumes() {
        let delta = 0.0625;
        for (kind, d, k) in [
            (FamilyKind::Cube, 2, 3),
            (FamilyKind::Slab, 3, 2),
            (FamilyKind::Rhombus, 2, 3),
        ] {
            let fam = ExampleFamily::new(kind, d, k, delta).unwrap();
            for (b, n) in fam.support_boxes().iter().zip(fam.input_l2_norms()) {
                assert!((b.volume() - n * n).abs() < 1e-18);
            }
        }
        // closed forms: delta^d, delta^(2(k-1)) * delta^(d-k+1), delta^3
        let cube = ExampleFamily::new(FamilyKind::Cube, 2, 3, delta).unwrap();
        assert_eq!(cube.input_l2_norms()[0], delta);
        let slab = ExampleFamily::new(FamilyKind::Slab, 3, 2, delta).unwrap();
        assert_eq!(slab.input_l2_norms()[0], delta * delta);
        let rhombus = ExampleFamily::new(FamilyKind::Rhombus, 2, 3, delta).unwrap();
        assert!((rhombus.input_l2_norms()[0] - delta.powi(3).sqrt()).abs() < 1e-18);
    }

    #[test]
    fn dual_boxes_are_reciprocal_to_the_box_scales() {
        let delta = 0.0625;
        let shrink = DEFAULT_SHRINK;
        let cube = ExampleFamily::new(FamilyKind::Cube, 2, 3, delta).unwrap();
        let dual = cube.dual_box(shrink).unwrap();
        assert_eq!(dual.xi_half_widths(), &[shrink / delta; 2]);
        assert_eq!(dual.t_half_width(), shrink / delta);
        assert_eq!(dual.shear(), &[0.0, 0.0]);

        let slab = ExampleFamily::new(FamilyKind::Slab, 3, 2, delta).unwrap();
        let dual = slab.dual_box(shrink).unwrap();
        assert_eq!(
            dual.xi_half_widths(),
            &[
                shrink / (delta * delta),
                shrink / delta,
                shrink / delta
            ]
        );
        assert_eq!(dual.t_half_width(), shrink / (delta * delta));

        let rhombus = ExampleFamily::new(FamilyKind::Rhombus, 2, 3, delta).unwrap();
        let dual = rhombus.dual_box(shrink).unwrap();
        assert_eq!(dual.t_half_width(), shrink / (delta * delta));
        assert!((dual.shear()[0] - 5.0 * std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(dual.shear()[1], 0.0);

        assert!(matches!(
            cube.dual_box(0.0),
            Err(ScalingError::BadShrink { .. })
        ));
    }

    #[test]
    fn predicted_exponents_match_the_worked_values() {
        // rhombus at p = 10/9 sits exactly on the threshold
        let p = ratio(10, 9);
        assert!(predicted_exponent(FamilyKind::Rhombus, 2, 3, &p).is_zero());
        // bilinear slab endpoint at p = 2
        let two = from_int(2);
        assert!(predicted_exponent(FamilyKind::Slab, 1, 2, &two).is_zero());
        // cube, d = 1: exponent 1 - 2/p
        assert!(predicted_exponent(FamilyKind::Cube, 1, 2, &two).is_zero());
        assert_eq!(
            predicted_exponent(FamilyKind::Cube, 1, 2, &from_int(4)),
            ratio(1, 2)
        );
        // slab d = 2, k = 2: 3 - 5/p
        assert_eq!(
            predicted_exponent(FamilyKind::Slab, 2, 2, &from_int(2)),
            ratio(1, 2)
        );
        assert!(predicted_exponent(FamilyKind::Slab, 2, 2, &ratio(5, 3)).is_zero());
    }

    #[test]
    fn quarter_turn_is_an_isometry_onto_the_caps() {
        // corners of the first ideal rhombus map onto the unit square
        let s = std::f64::consts::SQRT_2;
        let pairs = [
            ([0.0, 0.0], [0.0, 0.0]),
            ([s / 2.0, s / 2.0], [0.0, 1.0]),
            ([s / 2.0, -s / 2.0], [1.0, 0.0]),
            ([s, 0.0], [1.0, 1.0]),
        ];
        for (x, want) in pairs {
            let r = rotate_quarter_turn(x);
            assert!((r[0] - want[0]).abs() < 1e-15 && (r[1] - want[1]).abs() < 1e-15);
        }
        // lengths are preserved
        let v = rotate_quarter_turn([0.3, -0.7]);
        let before = (0.3f64 * 0.3 + 0.7 * 0.7).sqrt();
        let after = (v[0] * v[0] + v[1] * v[1]).sqrt();
        assert!((before - after).abs() < 1e-15);
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in [FamilyKind::Cube, FamilyKind::Slab, FamilyKind::Rhombus] {
            assert_eq!(kind.to_string().parse::<FamilyKind>().unwrap(), kind);
        }
        assert!(matches!(
            "wedge".parse::<FamilyKind>(),
            Err(ScalingError::UnknownKind { .. })
        ));
    }
}
