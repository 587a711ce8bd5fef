//! Dense exact-rational matrices: rank, reduced row echelon form, kernel,
//! determinant. Sizes here are tiny (at most a dozen rows), so plain
//! fraction arithmetic with full pivoting-by-first-nonzero is fine.

use num::{One, Signed, Zero};

use crate::error::GeomError;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, GeomError> {
        if entries.len() != rows * cols {
            return Err(GeomError::BadMatrixShape { rows, cols, len: entries.len() });
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, GeomError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(GeomError::DimensionMismatch { expected: c, got: row.len() });
            }
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix, GeomError> {
        if self.cols != rhs.rows {
            return Err(GeomError::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs.get(k, j);
                    *out.get_mut(i, j) += add;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, GeomError> {
        if v.len() != self.cols {
            return Err(GeomError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, x)| acc + a * x)
            })
            .collect())
    }

    /// Reduced row echelon form and the pivot column indices.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).clone();
            for j in c..m.cols {
                let v = m.get(r, j) / &inv;
                *m.get_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let sub = &f * m.get(r, j);
                        *m.get_mut(i, j) -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {v : Mv = 0}, one vector per free column,
    /// in ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for c in 0..self.cols {
            if piv_iter.peek() == Some(&c) {
                piv_iter.next();
            } else {
                free_cols.push(c);
            }
        }
        for &f in &free_cols {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> Result<Rational, GeomError> {
        if self.rows != self.cols {
            return Err(GeomError::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m.get(c, c).clone();
            let inv = m.get(c, c).clone();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) / &inv;
                for j in c..n {
                    let sub = &f * m.get(c, j);
                    *m.get_mut(i, j) -= sub;
                }
            }
        }
        Ok(det)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Exact dot product.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Gram determinant det(<v_i, v_j>)_{ij}; exact, and nonnegative for any
/// real vector family.
pub fn gram_det(vectors: &[Vec<Rational>]) -> Result<Rational, GeomError> {
    let k = vectors.len();
    let mut g = RationalMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            if vectors[j].len() != vectors[i].len() {
                return Err(GeomError::DimensionMismatch {
                    expected: vectors[i].len(),
                    got: vectors[j].len(),
                });
            }
            let d = dot(&vectors[i], &vectors[j]);
            *g.get_mut(i, j) = d.clone();
            *g.get_mut(j, i) = d;
        }
    }
    let det = g.det()?;
    debug_assert!(!det.is_negative());
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int, ratio};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| from_int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_and_rref() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let (r, pivots) = a.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(*r.get(0, 0), from_int(1));
        assert_eq!(*r.get(0, 2), from_int(1));
        assert_eq!(*r.get(1, 2), from_int(1));
        assert!(r.row(2).iter().all(Zero::is_zero));
    }

    #[test]
    fn kernel_annihilates() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let basis = a.kernel_basis();
        assert_eq!(basis.len(), 1);
        for v in &basis {
            assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn det_values() {
        assert_eq!(m(&[&[2, 0], &[0, 3]]).det().unwrap(), from_int(6));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), from_int(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), from_int(0));
        let half = RationalMatrix::new(1, 1, vec![ratio(1, 2)]).unwrap();
        assert_eq!(half.det().unwrap(), ratio(1, 2));
    }

    #[test]
    fn gram_det_examples() {
        // v1=(0,1), v2=(-4,1): det G = 17 - 16 = ... G = [[1,1],[1,17]] -> 16.
        let v1 = vec![from_int(0), from_int(1)];
        let v2 = vec![from_int(-4), from_int(1)];
        assert_eq!(gram_det(&[v1.clone(), v2]).unwrap(), from_int(16));
        assert_eq!(gram_det(&[v1.clone(), v1]).unwrap(), from_int(0));
    }
}
