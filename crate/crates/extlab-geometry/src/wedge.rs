//! Wedge volumes of cap normals. A point x in R^d determines the (scaled)
//! upward normal (-2x, 1) of the paraboloid at x; transversality of a cube
//! family asks how far from degenerate these normals can get, jointly over
//! one point per cube. The exact semialgebraic minimum is out of scope; the
//! grid estimate below is a deterministic upper bound on it.

use num::{One, Zero};

use crate::cube::CubeCollection;
use crate::error::GeomError;
use crate::matrix::gram_det;
use crate::rational::{to_f64, Rational};

/// |u_1 ^ ... ^ u_k| for the unit normals u_j = (-2 x^j, 1)/|(-2 x^j, 1)|,
/// computed as sqrt(det G / prod |v_j|^2) with an exact rational Gram
/// determinant. Lies in [0,1]; 0 exactly when the normals are dependent
/// (duplicate points included). More than d+1 points are always dependent.
pub fn wedge_volume(points: &[Vec<Rational>]) -> Result<f64, GeomError> {
    if points.is_empty() {
        return Err(GeomError::Empty { what: "point list" });
    }
    let d = points[0].len();
    for p in points {
        if p.len() != d {
            return Err(GeomError::DimensionMismatch { expected: d, got: p.len() });
        }
    }
    if points.len() > d + 1 {
        return Ok(0.0);
    }
    let vectors: Vec<Vec<Rational>> = points.iter().map(|p| normal_vector(p)).collect();
    let det = gram_det(&vectors)?;
    if det.is_zero() {
        return Ok(0.0);
    }
    let mut denom = Rational::one();
    for v in &vectors {
        denom *= v.iter().fold(Rational::zero(), |acc, x| acc + x * x);
    }
    Ok(to_f64(&(det / denom)).max(0.0).sqrt())
}

fn normal_vector(x: &[Rational]) -> Vec<Rational> {
    let minus_two = Rational::from_integer((-2).into());
    let mut v: Vec<Rational> = x.iter().map(|c| c * &minus_two).collect();
    v.push(Rational::one());
    v
}

/// Minimum of wedge_volume over the tensor grid that samples each cube at
/// the corner-and-interior lattice with `subdivisions` parts per axis.
/// An upper bound on the true transversality constant; runs in floating
/// point (the grid is a heuristic, exactness buys nothing here).
pub fn min_wedge_grid_estimate(
    coll: &CubeCollection,
    subdivisions: usize,
) -> Result<f64, GeomError> {
    if subdivisions < 1 {
        return Err(GeomError::BadSubdivisions);
    }
    let k = coll.len();
    let d = coll.dim();
    if k > d + 1 {
        return Ok(0.0);
    }

    // Unit normals at every grid node, one list per cube.
    let unit_normals: Vec<Vec<Vec<f64>>> = coll
        .cubes()
        .iter()
        .map(|cube| {
            let axis_values: Vec<Vec<f64>> = cube
                .intervals()
                .iter()
                .map(|iv| {
                    if iv.is_point() {
                        vec![to_f64(iv.lo())]
                    } else {
                        let lo = to_f64(iv.lo());
                        let step = to_f64(&iv.length()) / subdivisions as f64;
                        (0..=subdivisions).map(|i| lo + step * i as f64).collect()
                    }
                })
                .collect();
            tensor_points(&axis_values)
                .map(|x| {
                    let mut v: Vec<f64> = x.iter().map(|&c| -2.0 * c).collect();
                    v.push(1.0);
                    let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
                    v.iter().map(|c| c / norm).collect()
                })
                .collect()
        })
        .collect();

    let mut choice = vec![0usize; k];
    let mut gram = vec![0.0f64; k * k];
    let mut min = f64::INFINITY;
    loop {
        let selected: Vec<&[f64]> = (0..k)
            .map(|j| unit_normals[j][choice[j]].as_slice())
            .collect();
        for i in 0..k {
            for j in i..k {
                let dot: f64 = selected[i].iter().zip(selected[j]).map(|(a, b)| a * b).sum();
                gram[i * k + j] = dot;
                gram[j * k + i] = dot;
            }
        }
        let det = det_in_place(&mut gram, k);
        let w = det.max(0.0).sqrt();
        if w < min {
            min = w;
        }
        // Odometer over the per-cube node choices.
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(min);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < unit_normals[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

fn tensor_points(axis_values: &[Vec<f64>]) -> impl Iterator<Item = Vec<f64>> + '_ {
    let total: usize = axis_values.iter().map(Vec::len).product();
    let mut index = vec![0usize; axis_values.len()];
    let mut emitted = 0usize;
    std::iter::from_fn(move || {
        if emitted == total {
            return None;
        }
        let point: Vec<f64> = index.iter().zip(axis_values).map(|(&i, vals)| vals[i]).collect();
        emitted += 1;
        for pos in (0..index.len()).rev() {
            index[pos] += 1;
            if index[pos] < axis_values[pos].len() {
                break;
            }
            index[pos] = 0;
        }
        Some(point)
    })
}

/// Destroys its input; partial-pivot LU determinant for a small symmetric
/// positive semidefinite matrix.
fn det_in_place(a: &mut [f64], n: usize) -> f64 {
    let mut det = 1.0;
    for c in 0..n {
        let mut p = c;
        for i in c + 1..n {
            if a[i * n + c].abs() > a[p * n + c].abs() {
                p = i;
            }
        }
        if a[p * n + c] == 0.0 {
            return 0.0;
        }
        if p != c {
            for j in 0..n {
                a.swap(c * n + j, p * n + j);
            }
            det = -det;
        }
        let piv = a[c * n + c];
        det *= piv;
        for i in c + 1..n {
            let f = a[i * n + c] / piv;
            if f == 0.0 {
                continue;
            }
            for j in c..n {
                a[i * n + j] -= f * a[c * n + j];
            }
        }
    }
    det
}
