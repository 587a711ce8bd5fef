//! Coefficient fields: one complex number per lattice point (n, m) with
//! n in a frequency box and m in an inclusive range. Values are stored
//! m-slowest, then in the box's row-major n order, so a fixed-m slice is
//! contiguous.

use std::io::{Read, Write};

use num_complex::Complex64;
use serde_json::{json, Value};

use extlab_packets::FrequencyBox;

use crate::error::ModelError;

/// Dense table of packet coefficients over a finite (n, m) window.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientField {
    n_box: FrequencyBox,
    m_range: (i64, i64),
    values: Vec<Complex64>,
    resolution_warning: bool,
}

impl CoefficientField {
    pub fn from_values(
        n_box: FrequencyBox,
        m_range: (i64, i64),
        values: Vec<Complex64>,
    ) -> Result<Self, ModelError> {
        let (lo, hi) = m_range;
        if lo > hi {
            return Err(ModelError::ReversedRange { lo, hi });
        }
        let expected = n_box.len() * (hi - lo + 1) as usize;
        if values.len() != expected {
            return Err(ModelError::BadValueCount {
                expected,
                got: values.len(),
            });
        }
        if let Some(index) = values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(ModelError::NonFiniteValue { index });
        }
        Ok(CoefficientField {
            n_box,
            m_range,
            values,
            resolution_warning: false,
        })
    }

    pub fn zeros(n_box: FrequencyBox, m_range: (i64, i64)) -> Result<Self, ModelError> {
        let (lo, hi) = m_range;
        if lo > hi {
            return Err(ModelError::ReversedRange { lo, hi });
        }
        let len = n_box.len() * (hi - lo + 1) as usize;
        Ok(CoefficientField {
            n_box,
            m_range,
            values: vec![Complex64::new(0.0, 0.0); len],
            resolution_warning: false,
        })
    }

    pub(crate) fn with_warning(mut self, warning: bool) -> Self {
        self.resolution_warning = warning;
        self
    }

    pub fn dim(&self) -> usize {
        self.n_box.dim()
    }

    pub fn n_box(&self) -> &FrequencyBox {
        &self.n_box
    }

    pub fn m_range(&self) -> (i64, i64) {
        self.m_range
    }

    pub fn m_count(&self) -> usize {
        (self.m_range.1 - self.m_range.0 + 1) as usize
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// True when any contributing slab was assembled below the sampling
    /// rule of thumb, or inherited from such a field.
    pub fn resolution_warning(&self) -> bool {
        self.resolution_warning
    }

    /// Contiguous values of one m slice.
    pub fn m_slice(&self, m: i64) -> Option<&[Complex64]> {
        if m < self.m_range.0 || m > self.m_range.1 {
            return None;
        }
        let w = self.n_box.len();
        let start = (m - self.m_range.0) as usize * w;
        Some(&self.values[start..start + w])
    }

    pub fn get(&self, n: &[i64], m: i64) -> Option<Complex64> {
        let slice = self.m_slice(m)?;
        Some(slice[self.n_box.position(n)?])
    }

    pub fn set(&mut self, n: &[i64], m: i64, value: Complex64) -> Result<(), ModelError> {
        let out_of_range = || ModelError::IndexOutOfRange {
            n: n.to_vec(),
            m,
        };
        if m < self.m_range.0 || m > self.m_range.1 {
            return Err(out_of_range());
        }
        let pos = self.n_box.position(n).ok_or_else(out_of_range)?;
        let w = self.n_box.len();
        self.values[(m - self.m_range.0) as usize * w + pos] = value;
        Ok(())
    }

    /// (n, m, value) triples in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<i64>, i64, Complex64)> + '_ {
        let w = self.n_box.len();
        self.values.iter().enumerate().map(move |(flat, &v)| {
            let m = self.m_range.0 + (flat / w) as i64;
            (self.n_box.decode(flat % w), m, v)
        })
    }

    /// Entrywise product, defined only when both fields share the exact
    /// same index window.
    pub fn entrywise_product(&self, other: &CoefficientField) -> Result<CoefficientField, ModelError> {
        if self.n_box != other.n_box || self.m_range != other.m_range {
            return Err(ModelError::RangeMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        Ok(CoefficientField {
            n_box: self.n_box.clone(),
            m_range: self.m_range,
            values,
            resolution_warning: self.resolution_warning || other.resolution_warning,
        })
    }

    /// CSV rows n_0,..,n_{d-1},m,re,im with a header line.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), ModelError> {
        let mut out = csv::Writer::from_writer(w);
        let mut header: Vec<String> = (0..self.dim()).map(|a| format!("n{a}")).collect();
        header.extend(["m".to_string(), "re".to_string(), "im".to_string()]);
        out.write_record(&header)
            .map_err(|e| ModelError::parse("field csv", e.to_string()))?;
        for (n, m, v) in self.iter() {
            let mut row: Vec<String> = n.iter().map(|x| x.to_string()).collect();
            row.extend([m.to_string(), v.re.to_string(), v.im.to_string()]);
            out.write_record(&row)
                .map_err(|e| ModelError::parse("field csv", e.to_string()))?;
        }
        out.flush()?;
        Ok(())
    }

    /// Binary container in the grid container's style: u32 dimension,
    /// then little-endian i64 index bounds (per-axis n, then m), then
    /// interleaved re/im f64 values in storage order.
    pub fn write_binary<W: Write>(&self, w: &mut W) -> Result<(), ModelError> {
        w.write_all(&(self.dim() as u32).to_le_bytes())?;
        for a in 0..self.dim() {
            let (lo, hi) = self.n_box.axis_range(a);
            w.write_all(&lo.to_le_bytes())?;
            w.write_all(&hi.to_le_bytes())?;
        }
        w.write_all(&self.m_range.0.to_le_bytes())?;
        w.write_all(&self.m_range.1.to_le_bytes())?;
        for v in &self.values {
            w.write_all(&v.re.to_le_bytes())?;
            w.write_all(&v.im.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_binary<R: Read>(r: &mut R) -> Result<Self, ModelError> {
        let mut four = [0u8; 4];
        r.read_exact(&mut four)?;
        let d = u32::from_le_bytes(four) as usize;
        if d == 0 {
            return Err(ModelError::parse("field container", "dimension 0"));
        }
        let mut ranges = Vec::with_capacity(d);
        for _ in 0..d {
            ranges.push((read_i64(r)?, read_i64(r)?));
        }
        let n_box = FrequencyBox::new(ranges)?;
        let m_range = (read_i64(r)?, read_i64(r)?);
        if m_range.0 > m_range.1 {
            return Err(ModelError::ReversedRange {
                lo: m_range.0,
                hi: m_range.1,
            });
        }
        let len = n_box.len() * (m_range.1 - m_range.0 + 1) as usize;
        let mut values = Vec::with_capacity(len);
        let mut buf = [0u8; 16];
        for _ in 0..len {
            r.read_exact(&mut buf)?;
            let re = f64::from_le_bytes(buf[..8].try_into().unwrap());
            let im = f64::from_le_bytes(buf[8..].try_into().unwrap());
            values.push(Complex64::new(re, im));
        }
        CoefficientField::from_values(n_box, m_range, values)
    }

    /// Index window metadata as JSON, for experiment manifests.
    pub fn window_json(&self) -> Value {
        let n: Vec<Value> = (0..self.dim())
            .map(|a| {
                let (lo, hi) = self.n_box.axis_range(a);
                json!([lo, hi])
            })
            .collect();
        json!({
            "d": self.dim(),
            "n_ranges": n,
            "m_range": [self.m_range.0, self.m_range.1],
            "resolution_warning": self.resolution_warning,
        })
    }
}

fn read_i64<R: Read>(r: &mut R) -> Result<i64, ModelError> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(i64::from_le_bytes(buf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_field() -> CoefficientField {
        let b = FrequencyBox::new(vec![(-1, 1)]).unwrap();
        let values: Vec<Complex64> = (0..9)
            .map(|i| Complex64::new(i as f64, -(i as f64) / 2.0))
            .collect();
        CoefficientField::from_values(b, (-1, 1), values).unwrap()
    }

    #[test]
    fn indexing_round_trips() {
        let f = small_field();
        assert_eq!(f.dim(), 1);
        assert_eq!(f.m_count(), 3);
        assert_eq!(f.get(&[-1], -1), Some(Complex64::new(0.0, 0.0)));
        assert_eq!(f.get(&[1], 1), Some(Complex64::new(8.0, -4.0)));
        assert_eq!(f.get(&[2], 0), None);
        assert_eq!(f.get(&[0], 2), None);
        let collected: Vec<_> = f.iter().collect();
        assert_eq!(collected.len(), 9);
        assert_eq!(collected[4], (vec![0], 0, Complex64::new(4.0, -2.0)));
        assert_eq!(f.m_slice(0).unwrap().len(), 3);
    }

    #[test]
    fn set_respects_the_window() {
        let mut f = CoefficientField::zeros(FrequencyBox::new(vec![(0, 1)]).unwrap(), (0, 0)).unwrap();
        f.set(&[1], 0, Complex64::new(2.0, 0.0)).unwrap();
        assert_eq!(f.get(&[1], 0), Some(Complex64::new(2.0, 0.0)));
        assert!(matches!(
            f.set(&[1], 1, Complex64::new(0.0, 0.0)),
            Err(ModelError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn construction_validates_shape_and_values() {
        let b = FrequencyBox::new(vec![(-1, 1)]).unwrap();
        assert!(matches!(
            CoefficientField::from_values(b.clone(), (1, -1), vec![]),
            Err(ModelError::ReversedRange { lo: 1, hi: -1 })
        ));
        assert!(matches!(
            CoefficientField::from_values(b.clone(), (0, 0), vec![Complex64::new(1.0, 0.0)]),
            Err(ModelError::BadValueCount { expected: 3, got: 1 })
        ));
        let bad = vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(f64::NAN, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        assert!(matches!(
            CoefficientField::from_values(b, (0, 0), bad),
            Err(ModelError::NonFiniteValue { index: 1 })
        ));
    }

    #[test]
    fn products_need_identical_windows() {
        let f = small_field();
        let g = small_field();
        let p = f.entrywise_product(&g).unwrap();
        assert_eq!(p.get(&[1], 1), Some(Complex64::new(8.0, -4.0) * Complex64::new(8.0, -4.0)));
        let other = CoefficientField::zeros(FrequencyBox::new(vec![(-1, 1)]).unwrap(), (0, 1)).unwrap();
        assert!(matches!(
            f.entrywise_product(&other),
            Err(ModelError::RangeMismatch)
        ));
    }

    #[test]
    fn binary_container_round_trips() {
        let f = small_field();
        let mut buf = Vec::new();
        f.write_binary(&mut buf).unwrap();
        let back = CoefficientField::read_binary(&mut buf.as_slice()).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn csv_export_lists_every_entry() {
        let f = small_field();
        let mut buf = Vec::new();
        f.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n0,m,re,im"));
        assert_eq!(lines.count(), 9);
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let first = reader.records().next().unwrap().unwrap();
        assert_eq!(&first[0], "-1");
        assert_eq!(&first[1], "-1");
        assert_eq!(&first[2], "0");
    }
}
