//! Axis-aligned boxes with rational corners and same-dimension families of
//! them. "Cube" means any rectangular box; side lengths need not agree and
//! zero-width sides are allowed.

use num::Zero;
use serde_json::{json, Value};

use crate::error::GeomError;
use crate::interval::Interval;
use crate::rational::{format_endpoint, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalCube {
    intervals: Vec<Interval>,
}

impl RationalCube {
    pub fn new(intervals: Vec<Interval>) -> Result<Self, GeomError> {
        if intervals.is_empty() {
            return Err(GeomError::Empty { what: "cube (dimension 0)" });
        }
        Ok(RationalCube { intervals })
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    /// Projection onto the canonical axis; panics if out of range (callers
    /// validate axis indices at the API boundary).
    pub fn projection(&self, axis: usize) -> &Interval {
        &self.intervals[axis]
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn center(&self) -> Vec<Rational> {
        self.intervals.iter().map(Interval::midpoint).collect()
    }

    pub fn volume(&self) -> Rational {
        self.intervals
            .iter()
            .fold(Rational::from_integer(1.into()), |acc, iv| acc * iv.length())
    }

    pub fn is_degenerate(&self) -> bool {
        self.intervals.iter().any(Interval::is_point)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeCollection {
    d: usize,
    cubes: Vec<RationalCube>,
}

impl CubeCollection {
    pub fn new(cubes: Vec<RationalCube>) -> Result<Self, GeomError> {
        let first = cubes.first().ok_or(GeomError::Empty { what: "cube collection" })?;
        let d = first.dim();
        for c in &cubes {
            if c.dim() != d {
                return Err(GeomError::DimensionMismatch { expected: d, got: c.dim() });
            }
        }
        Ok(CubeCollection { d, cubes })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn cube(&self, index: usize) -> Result<&RationalCube, GeomError> {
        self.cubes.get(index).ok_or(GeomError::CubeIndexOutOfRange {
            index,
            len: self.cubes.len(),
        })
    }

    pub fn cubes(&self) -> &[RationalCube] {
        &self.cubes
    }

    /// True when the family is too large for k-1 pairwise-distinct axis
    /// assignments to exist; transversality queries still run, callers may
    /// warn.
    pub fn oversized(&self) -> bool {
        self.cubes.len() > self.d + 1
    }

    /// Sub-collection at the given sorted member indices, order preserved.
    pub fn subset(&self, members: &[usize]) -> Result<CubeCollection, GeomError> {
        let cubes = members
            .iter()
            .map(|&j| self.cube(j).cloned())
            .collect::<Result<Vec<_>, _>>()?;
        CubeCollection::new(cubes)
    }

    /// Smallest positive separation realized between disjoint projections,
    /// over all axes and cube pairs; None when no pair is disjoint anywhere.
    /// Reported as metadata; no floor is enforced.
    pub fn min_disjoint_gap(&self) -> Option<Rational> {
        let mut best: Option<Rational> = None;
        for axis in 0..self.d {
            for (i, a) in self.cubes.iter().enumerate() {
                for b in &self.cubes[i + 1..] {
                    let (pa, pb) = (a.projection(axis), b.projection(axis));
                    if pa.disjoint(pb) {
                        let g = pa.gap(pb);
                        debug_assert!(g > Rational::zero());
                        best = Some(match best {
                            Some(cur) => cur.min(g),
                            None => g,
                        });
                    }
                }
            }
        }
        best
    }

    /// Reads {"d": int, "cubes": [[["lo","hi"], ...], ...]} with endpoints
    /// as decimal or "p/q" strings (integer JSON numbers also accepted).
    pub fn from_json_str(s: &str) -> Result<Self, GeomError> {
        let v: Value = serde_json::from_str(s)
            .map_err(|e| GeomError::parse("document", e.to_string()))?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self, GeomError> {
        let obj = v
            .as_object()
            .ok_or_else(|| GeomError::parse("document", "expected a JSON object"))?;
        let d = obj
            .get("d")
            .and_then(Value::as_u64)
            .ok_or_else(|| GeomError::parse("d", "expected a positive integer"))? as usize;
        if d == 0 {
            return Err(GeomError::parse("d", "dimension must be at least 1"));
        }
        let cubes_v = obj
            .get("cubes")
            .and_then(Value::as_array)
            .ok_or_else(|| GeomError::parse("cubes", "expected an array"))?;
        if cubes_v.is_empty() {
            return Err(GeomError::parse("cubes", "empty cube list"));
        }
        let mut cubes = Vec::with_capacity(cubes_v.len());
        for (j, cube_v) in cubes_v.iter().enumerate() {
            let ivs = cube_v
                .as_array()
                .ok_or_else(|| GeomError::parse(format!("cubes[{j}]"), "expected an array of intervals"))?;
            if ivs.len() != d {
                return Err(GeomError::parse(
                    format!("cubes[{j}]"),
                    format!("expected {d} intervals, got {}", ivs.len()),
                ));
            }
            let mut intervals = Vec::with_capacity(d);
            for (axis, iv) in ivs.iter().enumerate() {
                let ctx = format!("cubes[{j}][{axis}]");
                let pair = iv
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| GeomError::parse(&ctx, "expected [lo, hi]"))?;
                let lo = endpoint(&pair[0], &format!("{ctx}[0]"))?;
                let hi = endpoint(&pair[1], &format!("{ctx}[1]"))?;
                intervals.push(Interval::new(lo, hi)?);
            }
            cubes.push(RationalCube::new(intervals)?);
        }
        CubeCollection::new(cubes)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "cubes": self
                .cubes
                .iter()
                .map(|c| {
                    c.intervals()
                        .iter()
                        .map(|iv| vec![format_endpoint(iv.lo()), format_endpoint(iv.hi())])
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        })
    }
}

fn endpoint(v: &Value, ctx: &str) -> Result<Rational, GeomError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| GeomError::parse(ctx, e.to_string())),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else {
                Err(GeomError::parse(
                    ctx,
                    "non-integer numeric endpoint; use a string for exactness",
                ))
            }
        }
        _ => Err(GeomError::parse(ctx, "expected a string or integer endpoint")),
    }
}
