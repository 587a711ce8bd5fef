//! Brascamp-Lieb data and the two finiteness conditions of the
//! Bennett-Carbery-Christ-Tao criterion: exact scaling and the dimension
//! inequality on a given subspace.

use extlab_geometry::{format_rational, parse_rational, Rational, RationalMatrix};
use num::{One, Zero};
use serde_json::Value;

use crate::error::BlError;
use crate::subspace::Subspace;

/// A Brascamp-Lieb datum (L_j, p_j) on Q^ambient: surjections are not
/// assumed, only that every map has `ambient` columns and p_j >= 0.
#[derive(Debug, Clone, PartialEq)]
pub struct BLDatum {
    ambient: usize,
    maps: Vec<RationalMatrix>,
    exponents: Vec<Rational>,
}

impl BLDatum {
    pub fn new(
        ambient: usize,
        maps: Vec<RationalMatrix>,
        exponents: Vec<Rational>,
    ) -> Result<Self, BlError> {
        if maps.len() != exponents.len() {
            return Err(BlError::CountMismatch {
                maps: maps.len(),
                exponents: exponents.len(),
            });
        }
        for m in &maps {
            if m.cols() != ambient {
                return Err(BlError::AmbientMismatch {
                    expected: ambient,
                    got: m.cols(),
                });
            }
        }
        if let Some(index) = exponents.iter().position(|p| p < &Rational::zero()) {
            return Err(BlError::NegativeExponent { index });
        }
        Ok(BLDatum {
            ambient,
            maps,
            exponents,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn num_maps(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[RationalMatrix] {
        &self.maps
    }

    pub fn map(&self, j: usize) -> &RationalMatrix {
        &self.maps[j]
    }

    pub fn exponents(&self) -> &[Rational] {
        &self.exponents
    }

    /// JSON form with exact rational entries:
    /// `{"ambient": n, "maps": [[[..row..], ..], ..], "exponents": [..]}`.
    pub fn to_json(&self) -> Value {
        let maps: Vec<Value> = self
            .maps
            .iter()
            .map(|m| {
                Value::Array(
                    (0..m.rows())
                        .map(|i| {
                            Value::Array(
                                m.row(i)
                                    .iter()
                                    .map(|x| Value::String(format_rational(x)))
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect();
        let exps: Vec<Value> = self
            .exponents
            .iter()
            .map(|p| Value::String(format_rational(p)))
            .collect();
        serde_json::json!({
            "ambient": self.ambient,
            "maps": maps,
            "exponents": exps,
        })
    }

    pub fn from_json_str(text: &str) -> Result<Self, BlError> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| BlError::parse("datum", e.to_string()))?;
        Self::from_json(&value)
    }

    pub fn from_json(value: &Value) -> Result<Self, BlError> {
        let obj = value
            .as_object()
            .ok_or_else(|| BlError::parse("datum", "expected a JSON object"))?;
        let ambient = obj
            .get("ambient")
            .and_then(Value::as_u64)
            .ok_or_else(|| BlError::parse("datum.ambient", "expected a positive integer"))?
            as usize;
        let maps_value = obj
            .get("maps")
            .and_then(Value::as_array)
            .ok_or_else(|| BlError::parse("datum.maps", "expected an array of matrices"))?;
        let mut maps = Vec::with_capacity(maps_value.len());
        for (j, mv) in maps_value.iter().enumerate() {
            let rows_value = mv.as_array().ok_or_else(|| {
                BlError::parse(format!("datum.maps[{j}]"), "expected an array of rows")
            })?;
            let mut rows = Vec::with_capacity(rows_value.len());
            for (i, rv) in rows_value.iter().enumerate() {
                let entries = rv.as_array().ok_or_else(|| {
                    BlError::parse(
                        format!("datum.maps[{j}][{i}]"),
                        "expected an array of rational entries",
                    )
                })?;
                let mut row = Vec::with_capacity(entries.len());
                for (c, ev) in entries.iter().enumerate() {
                    row.push(rational_from_value(
                        ev,
                        &format!("datum.maps[{j}][{i}][{c}]"),
                    )?);
                }
                rows.push(row);
            }
            maps.push(RationalMatrix::from_rows(rows)?);
        }
        let exps_value = obj
            .get("exponents")
            .and_then(Value::as_array)
            .ok_or_else(|| BlError::parse("datum.exponents", "expected an array"))?;
        let mut exponents = Vec::with_capacity(exps_value.len());
        for (j, ev) in exps_value.iter().enumerate() {
            exponents.push(rational_from_value(ev, &format!("datum.exponents[{j}]"))?);
        }
        BLDatum::new(ambient, maps, exponents)
    }
}

fn rational_from_value(value: &Value, context: &str) -> Result<Rational, BlError> {
    match value {
        Value::String(s) => {
            parse_rational(s).map_err(|e| BlError::parse(context, e.to_string()))
        }
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else {
                Err(BlError::parse(
                    context,
                    "non-integer numeric entry; use a string for exactness",
                ))
            }
        }
        _ => Err(BlError::parse(context, "expected a rational string")),
    }
}

/// d+1 rational points on the base of the paraboloid cap construction in
/// dimension d. The first point is distinguished: the d coordinate row maps
/// are evaluated at it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapPointSet {
    d: usize,
    points: Vec<Vec<Rational>>,
}

impl CapPointSet {
    pub fn new(d: usize, points: Vec<Vec<Rational>>) -> Result<Self, BlError> {
        if points.len() != d + 1 || points.iter().any(|p| p.len() != d) {
            return Err(BlError::BadPointCount {
                expected: d + 1,
                got: points.len(),
                dim: d,
            });
        }
        Ok(CapPointSet { d, points })
    }

    pub fn base_dim(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    pub fn to_json(&self) -> Value {
        let pts: Vec<Value> = self
            .points
            .iter()
            .map(|p| {
                Value::Array(
                    p.iter()
                        .map(|x| Value::String(format_rational(x)))
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({ "d": self.d, "points": pts })
    }

    pub fn from_json(value: &Value) -> Result<Self, BlError> {
        let obj = value
            .as_object()
            .ok_or_else(|| BlError::parse("points", "expected a JSON object"))?;
        let d = obj
            .get("d")
            .and_then(Value::as_u64)
            .ok_or_else(|| BlError::parse("points.d", "expected a positive integer"))?
            as usize;
        let pts_value = obj
            .get("points")
            .and_then(Value::as_array)
            .ok_or_else(|| BlError::parse("points.points", "expected an array"))?;
        let mut points = Vec::with_capacity(pts_value.len());
        for (i, pv) in pts_value.iter().enumerate() {
            let coords = pv.as_array().ok_or_else(|| {
                BlError::parse(format!("points.points[{i}]"), "expected a coordinate array")
            })?;
            let mut p = Vec::with_capacity(coords.len());
            for (c, cv) in coords.iter().enumerate() {
                p.push(rational_from_value(
                    cv,
                    &format!("points.points[{i}][{c}]"),
                )?);
            }
            points.push(p);
        }
        CapPointSet::new(d, points)
    }
}

/// Brascamp-Lieb datum of the paraboloid cap construction at the given base
/// points: d rank-one maps (x, s) -> x_l + 2 x0_l s evaluated at the first
/// point, then one projection [I_d | 2 x^j] for each remaining point, all
/// with exponent 1/d. The ambient space is Q^(d+1).
pub fn bl_datum_from_caps(points: &CapPointSet) -> BLDatum {
    let d = points.base_dim();
    let n = d + 1;
    let two = Rational::from_integer(2.into());
    let mut maps = Vec::with_capacity(2 * d);
    for l in 0..d {
        let mut row = vec![Rational::zero(); n];
        row[l] = Rational::one();
        row[d] = &two * &points.point(0)[l];
        maps.push(RationalMatrix::from_rows(vec![row]).expect("row map is well formed"));
    }
    for j in 1..=d {
        let x = points.point(j);
        let mut rows = Vec::with_capacity(d);
        for l in 0..d {
            let mut row = vec![Rational::zero(); n];
            row[l] = Rational::one();
            row[d] = &two * &x[l];
            rows.push(row);
        }
        maps.push(RationalMatrix::from_rows(rows).expect("projection map is well formed"));
    }
    let p = Rational::new(1.into(), (d as i64).into());
    let exponents = vec![p; 2 * d];
    BLDatum::new(n, maps, exponents).expect("cap datum is well formed")
}

/// Result of the exact scaling identity sum_j p_j n_j = n.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingCheck {
    pub holds: bool,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Checks sum_j p_j * (codomain dimension of L_j) = ambient dimension,
/// exactly.
pub fn scaling_condition(datum: &BLDatum) -> ScalingCheck {
    let lhs: Rational = datum
        .maps()
        .iter()
        .zip(datum.exponents())
        .map(|(m, p)| p * Rational::from_integer((m.rows() as i64).into()))
        .sum();
    let rhs = Rational::from_integer((datum.ambient_dim() as i64).into());
    ScalingCheck {
        holds: lhs == rhs,
        lhs,
        rhs,
    }
}

/// dim L(V): rank of the image of the subspace under the map.
pub fn image_dim(map: &RationalMatrix, subspace: &Subspace) -> Result<usize, BlError> {
    if map.cols() != subspace.ambient_dim() {
        return Err(BlError::AmbientMismatch {
            expected: map.cols(),
            got: subspace.ambient_dim(),
        });
    }
    if subspace.is_zero() {
        return Ok(0);
    }
    let rows: Vec<Vec<Rational>> = subspace
        .basis()
        .iter()
        .map(|b| map.mul_vec(b))
        .collect::<Result<_, _>>()?;
    Ok(RationalMatrix::from_rows(rows)?.rank())
}

/// Outcome of the dimension inequality dim V <= sum_j p_j dim(L_j V) on one
/// subspace, with both sides reported exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionCheck {
    pub holds: bool,
    pub lhs: usize,
    pub rhs: Rational,
    pub image_dims: Vec<usize>,
}

pub fn dimension_condition_on(
    datum: &BLDatum,
    subspace: &Subspace,
) -> Result<DimensionCheck, BlError> {
    if subspace.ambient_dim() != datum.ambient_dim() {
        return Err(BlError::AmbientMismatch {
            expected: datum.ambient_dim(),
            got: subspace.ambient_dim(),
        });
    }
    let mut image_dims = Vec::with_capacity(datum.num_maps());
    let mut rhs = Rational::zero();
    for (m, p) in datum.maps().iter().zip(datum.exponents()) {
        let dim = image_dim(m, subspace)?;
        image_dims.push(dim);
        rhs += p * Rational::from_integer((dim as i64).into());
    }
    let lhs = subspace.dim();
    let holds = Rational::from_integer((lhs as i64).into()) <= rhs;
    Ok(DimensionCheck {
        holds,
        lhs,
        rhs,
        image_dims,
    })
}
