//! Functions sampled at the cell centers of a uniform grid on a rational
//! cube. Samples are row-major with axis 0 slowest. The binary container
//! keeps cube endpoints as exact decimal strings so geometry survives a
//! round trip; sample values are little-endian f64 pairs.

use std::io::{Read, Write};

use extlab_geometry::{format_endpoint, parse_rational, to_f64, Interval, RationalCube};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::PacketError;

#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    cube: RationalCube,
    resolution: usize,
    samples: Vec<Complex64>,
}

impl GridFunction {
    pub fn from_samples(
        cube: RationalCube,
        resolution: usize,
        samples: Vec<Complex64>,
    ) -> Result<Self, PacketError> {
        if resolution == 0 {
            return Err(PacketError::ZeroResolution);
        }
        let expected = resolution.pow(cube.dim() as u32);
        if samples.len() != expected {
            return Err(PacketError::BadSampleCount {
                expected,
                got: samples.len(),
            });
        }
        for (index, s) in samples.iter().enumerate() {
            if !s.re.is_finite() || !s.im.is_finite() {
                return Err(PacketError::NonFiniteSample { index });
            }
        }
        Ok(GridFunction { cube, resolution, samples })
    }

    /// Sample a closure at every cell center.
    pub fn from_fn<F: FnMut(&[f64]) -> Complex64>(
        cube: RationalCube,
        resolution: usize,
        mut f: F,
    ) -> Result<Self, PacketError> {
        if resolution == 0 {
            return Err(PacketError::ZeroResolution);
        }
        let d = cube.dim();
        let centers: Vec<Vec<f64>> = (0..d)
            .map(|a| axis_centers_of(&cube, a, resolution))
            .collect();
        let total = resolution.pow(d as u32);
        let mut samples = Vec::with_capacity(total);
        let mut idx = vec![0usize; d];
        let mut point = vec![0.0; d];
        for _ in 0..total {
            for a in 0..d {
                point[a] = centers[a][idx[a]];
            }
            samples.push(f(&point));
            for a in (0..d).rev() {
                idx[a] += 1;
                if idx[a] < resolution {
                    break;
                }
                idx[a] = 0;
            }
        }
        GridFunction::from_samples(cube, resolution, samples)
    }

    pub fn dim(&self) -> usize {
        self.cube.dim()
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn cube(&self) -> &RationalCube {
        &self.cube
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    /// Cell-center coordinates along one axis: lo + (i + 1/2) h.
    pub fn axis_centers(&self, axis: usize) -> Vec<f64> {
        axis_centers_of(&self.cube, axis, self.resolution)
    }

    pub fn axis_length(&self, axis: usize) -> f64 {
        let proj = self.cube.projection(axis);
        to_f64(proj.hi()) - to_f64(proj.lo())
    }

    pub fn cell_volume(&self) -> f64 {
        (0..self.dim())
            .map(|a| self.axis_length(a) / self.resolution as f64)
            .product()
    }

    /// Midpoint-rule squared L^2 norm: cell volume times the sum of
    /// squared moduli.
    pub fn l2_norm_squared(&self) -> f64 {
        let sum: f64 = self.samples.iter().map(|s| s.norm_sqr()).sum();
        self.cell_volume() * sum
    }

    pub fn write_binary<W: Write>(&self, w: &mut W) -> Result<(), PacketError> {
        w.write_all(&(self.dim() as u32).to_le_bytes())?;
        w.write_all(&(self.resolution as u32).to_le_bytes())?;
        for a in 0..self.dim() {
            let proj = self.cube.projection(a);
            for end in [proj.lo(), proj.hi()] {
                let s = format_endpoint(end);
                w.write_all(&(s.len() as u32).to_le_bytes())?;
                w.write_all(s.as_bytes())?;
            }
        }
        for s in &self.samples {
            w.write_all(&s.re.to_le_bytes())?;
            w.write_all(&s.im.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_binary<R: Read>(r: &mut R) -> Result<Self, PacketError> {
        let d = read_u32(r)? as usize;
        let resolution = read_u32(r)? as usize;
        if d == 0 {
            return Err(PacketError::parse("grid container", "dimension 0"));
        }
        let mut intervals = Vec::with_capacity(d);
        for _ in 0..d {
            let lo = read_endpoint(r)?;
            let hi = read_endpoint(r)?;
            let iv = Interval::new(lo, hi)
                .map_err(|e| PacketError::parse("grid container", e.to_string()))?;
            intervals.push(iv);
        }
        let cube = RationalCube::new(intervals)
            .map_err(|e| PacketError::parse("grid container", e.to_string()))?;
        let total = resolution
            .checked_pow(d as u32)
            .ok_or_else(|| PacketError::parse("grid container", "sample count overflow"))?;
        let mut samples = Vec::with_capacity(total);
        let mut buf = [0u8; 16];
        for _ in 0..total {
            r.read_exact(&mut buf)?;
            let re = f64::from_le_bytes(buf[..8].try_into().unwrap());
            let im = f64::from_le_bytes(buf[8..].try_into().unwrap());
            samples.push(Complex64::new(re, im));
        }
        GridFunction::from_samples(cube, resolution, samples)
    }

    pub fn to_json(&self) -> Value {
        let cube: Vec<Value> = (0..self.dim())
            .map(|a| {
                let proj = self.cube.projection(a);
                json!([format_endpoint(proj.lo()), format_endpoint(proj.hi())])
            })
            .collect();
        let samples: Vec<Value> = self.samples.iter().map(|s| json!([s.re, s.im])).collect();
        json!({
            "d": self.dim(),
            "resolution": self.resolution,
            "cube": cube,
            "samples": samples,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, PacketError> {
        let ctx = "grid JSON";
        let resolution = v["resolution"]
            .as_u64()
            .ok_or_else(|| PacketError::parse(ctx, "missing resolution"))?
            as usize;
        let cube_arr = v["cube"]
            .as_array()
            .ok_or_else(|| PacketError::parse(ctx, "missing cube"))?;
        let mut intervals = Vec::with_capacity(cube_arr.len());
        for pair in cube_arr {
            let ends = pair
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| PacketError::parse(ctx, "cube entries must be [lo, hi]"))?;
            let parse = |u: &Value| -> Result<_, PacketError> {
                let s = u
                    .as_str()
                    .ok_or_else(|| PacketError::parse(ctx, "endpoints must be strings"))?;
                parse_rational(s).map_err(|e| PacketError::parse(ctx, e.to_string()))
            };
            let iv = Interval::new(parse(&ends[0])?, parse(&ends[1])?)
                .map_err(|e| PacketError::parse(ctx, e.to_string()))?;
            intervals.push(iv);
        }
        let cube = RationalCube::new(intervals)
            .map_err(|e| PacketError::parse(ctx, e.to_string()))?;
        let sample_arr = v["samples"]
            .as_array()
            .ok_or_else(|| PacketError::parse(ctx, "missing samples"))?;
        let mut samples = Vec::with_capacity(sample_arr.len());
        for entry in sample_arr {
            let pair = entry
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| PacketError::parse(ctx, "samples must be [re, im]"))?;
            let re = pair[0]
                .as_f64()
                .ok_or_else(|| PacketError::parse(ctx, "sample parts must be numbers"))?;
            let im = pair[1]
                .as_f64()
                .ok_or_else(|| PacketError::parse(ctx, "sample parts must be numbers"))?;
            samples.push(Complex64::new(re, im));
        }
        GridFunction::from_samples(cube, resolution, samples)
    }
}

fn axis_centers_of(cube: &RationalCube, axis: usize, resolution: usize) -> Vec<f64> {
    let proj = cube.projection(axis);
    let lo = to_f64(proj.lo());
    let h = (to_f64(proj.hi()) - lo) / resolution as f64;
    (0..resolution).map(|i| lo + (i as f64 + 0.5) * h).collect()
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32, PacketError> {
    let mut buf = [0u8; 4];
    r.read_exact(&mut buf)?;
    Ok(u32::from_le_bytes(buf))
}

fn read_endpoint<R: Read>(r: &mut R) -> Result<extlab_geometry::Rational, PacketError> {
    let len = read_u32(r)? as usize;
    if len > 4096 {
        return Err(PacketError::parse("grid container", "endpoint string too long"));
    }
    let mut buf = vec![0u8; len];
    r.read_exact(&mut buf)?;
    let s = String::from_utf8(buf)
        .map_err(|_| PacketError::parse("grid container", "endpoint is not UTF-8"))?;
    parse_rational(&s).map_err(|e| PacketError::parse("grid container", e.to_string()))
}
