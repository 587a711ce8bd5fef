//! Linear subspaces of Q^n in a canonical form.
//!
//! A subspace is stored as the reduced row echelon basis of its span, so two
//! subspaces are equal as sets iff their stored bases are componentwise equal.
//! That makes deduplication in the candidate lattice a hash lookup.

use extlab_geometry::{Rational, RationalMatrix};
use num::{One, Zero};

use crate::error::BlError;

/// Subspace of Q^n with an RREF-canonical basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    /// Span of `vectors` inside Q^ambient. Zero vectors are allowed and
    /// dropped; an empty list gives the zero subspace.
    pub fn from_spanning(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self, BlError> {
        for v in vectors {
            if v.len() != ambient {
                return Err(BlError::AmbientMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
        }
        if vectors.is_empty() {
            return Ok(Subspace {
                ambient,
                basis: Vec::new(),
            });
        }
        let m = RationalMatrix::from_rows(vectors.to_vec())?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient, basis })
    }

    /// Kernel of a matrix, as a subspace of the domain Q^cols.
    pub fn from_kernel_of(m: &RationalMatrix) -> Self {
        let vectors = m.kernel_basis();
        Subspace::from_spanning(m.cols(), &vectors)
            .expect("kernel vectors have the domain dimension")
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::one();
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    /// Span of the coordinate axes listed in `axes` (0-based, deduplicated).
    pub fn coordinate_span(ambient: usize, axes: &[usize]) -> Result<Self, BlError> {
        let mut vectors = Vec::new();
        for &a in axes {
            if a >= ambient {
                return Err(BlError::AmbientMismatch {
                    expected: ambient,
                    got: a,
                });
            }
            let mut v = vec![Rational::zero(); ambient];
            v[a] = Rational::one();
            vectors.push(v);
        }
        Subspace::from_spanning(ambient, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// RREF basis rows; empty for the zero subspace.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Exact membership test by reduction against the canonical basis.
    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut residue = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("canonical basis rows are nonzero");
            if !residue[pivot].is_zero() {
                let c = residue[pivot].clone();
                for (r, b) in residue.iter_mut().zip(row.iter()) {
                    *r -= &c * b;
                }
            }
        }
        residue.iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains_vector(v))
    }

    /// Sum V + W.
    pub fn sum(&self, other: &Subspace) -> Result<Self, BlError> {
        if self.ambient != other.ambient {
            return Err(BlError::AmbientMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient, &vectors)
    }

    /// Intersection V ∩ W, via the kernel of [V^T | -W^T].
    pub fn intersect(&self, other: &Subspace) -> Result<Self, BlError> {
        if self.ambient != other.ambient {
            return Err(BlError::AmbientMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let v = self.basis.len();
        let w = other.basis.len();
        let mut rows = Vec::with_capacity(self.ambient);
        for i in 0..self.ambient {
            let mut row = Vec::with_capacity(v + w);
            for b in &self.basis {
                row.push(b[i].clone());
            }
            for b in &other.basis {
                row.push(-b[i].clone());
            }
            rows.push(row);
        }
        let m = RationalMatrix::from_rows(rows)?;
        let mut vectors = Vec::new();
        for coeffs in m.kernel_basis() {
            let mut x = vec![Rational::zero(); self.ambient];
            for (a, b) in coeffs[..v].iter().zip(self.basis.iter()) {
                for (xi, bi) in x.iter_mut().zip(b.iter()) {
                    *xi += a * bi;
                }
            }
            vectors.push(x);
        }
        Subspace::from_spanning(self.ambient, &vectors)
    }

    /// JSON form: `{"ambient": n, "basis": [["1","0"], ...]}` with exact
    /// rational entries.
    pub fn to_json(&self) -> serde_json::Value {
        let basis: Vec<serde_json::Value> = self
            .basis
            .iter()
            .map(|row| {
                serde_json::Value::Array(
                    row.iter()
                        .map(|x| {
                            serde_json::Value::String(extlab_geometry::format_rational(x))
                        })
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({
            "ambient": self.ambient,
            "dim": self.dim(),
            "basis": basis,
        })
    }
}
