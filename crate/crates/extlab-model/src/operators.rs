//! Discretized extension operators. The linear operator maps a grid
//! function to its table of packet coefficients over an (n, m) window;
//! the multilinear variant takes one input per cube of a collection and
//! multiplies the per-cube tables entrywise at matched (n, m).

use rayon::prelude::*;

use extlab_geometry::CubeCollection;
use extlab_packets::{coefficient_slab_range, BumpProfile, FrequencyBox, GridFunction};

use crate::error::ModelError;
use crate::field::CoefficientField;

// Work unit for the parallel m sweep. Each chunk seeds its own chirp
// recurrence, so splitting also bounds the recurrence drift.
const M_CHUNK: i64 = 32;

/// Coefficient table of one input over the window: entry (n, m) is the
/// midpoint inner product against the sharp packet at (n, m) on the
/// input's own cube.
pub fn e_d_coefficients(
    g: &GridFunction,
    n_box: &FrequencyBox,
    m_range: (i64, i64),
) -> Result<CoefficientField, ModelError> {
    if n_box.dim() != g.dim() {
        return Err(ModelError::DimensionMismatch {
            expected: g.dim(),
            got: n_box.dim(),
        });
    }
    let (m_lo, m_hi) = m_range;
    if m_lo > m_hi {
        return Err(ModelError::ReversedRange { lo: m_lo, hi: m_hi });
    }
    let mut chunks = Vec::new();
    let mut lo = m_lo;
    while lo <= m_hi {
        let hi = (lo + M_CHUNK - 1).min(m_hi);
        chunks.push((lo, hi));
        lo = hi + 1;
    }
    let per_chunk: Vec<_> = chunks
        .par_iter()
        .map(|&chunk| coefficient_slab_range(g, chunk, n_box))
        .collect::<Result<_, _>>()?;

    let width = n_box.len();
    let mut values = Vec::with_capacity(width * (m_hi - m_lo + 1) as usize);
    let mut warning = false;
    for slabs in per_chunk {
        for slab in slabs {
            warning |= slab.resolution_warning();
            values.extend_from_slice(slab.values());
        }
    }
    Ok(CoefficientField::from_values(n_box.clone(), m_range, values)?.with_warning(warning))
}

/// One input per cube of a disjoint collection, with a window profile
/// attached to each cube. Every profile equals 1 on its closed cube and
/// the inputs vanish off their cubes, so either profile mode yields the
/// same coefficient sums; assembly always uses the sharp kernel.
#[derive(Debug, Clone)]
pub struct MultilinearSpec {
    cubes: CubeCollection,
    inputs: Vec<GridFunction>,
    profiles: Vec<BumpProfile>,
}

impl MultilinearSpec {
    /// Sharp profiles on each cube.
    pub fn new(cubes: CubeCollection, inputs: Vec<GridFunction>) -> Result<Self, ModelError> {
        let profiles = cubes.cubes().iter().cloned().map(BumpProfile::sharp).collect();
        MultilinearSpec::with_profiles(cubes, inputs, profiles)
    }

    pub fn with_profiles(
        cubes: CubeCollection,
        inputs: Vec<GridFunction>,
        profiles: Vec<BumpProfile>,
    ) -> Result<Self, ModelError> {
        if inputs.len() != cubes.len() {
            return Err(ModelError::CountMismatch {
                cubes: cubes.len(),
                inputs: inputs.len(),
            });
        }
        if profiles.len() != cubes.len() {
            return Err(ModelError::CountMismatch {
                cubes: cubes.len(),
                inputs: profiles.len(),
            });
        }
        for (index, cube) in cubes.cubes().iter().enumerate() {
            if inputs[index].cube() != cube || profiles[index].cube() != cube {
                return Err(ModelError::CubeMismatch { index });
            }
        }
        Ok(MultilinearSpec {
            cubes,
            inputs,
            profiles,
        })
    }

    pub fn k(&self) -> usize {
        self.cubes.len()
    }

    pub fn d(&self) -> usize {
        self.cubes.dim()
    }

    pub fn cubes(&self) -> &CubeCollection {
        &self.cubes
    }

    pub fn input(&self, j: usize) -> &GridFunction {
        &self.inputs[j]
    }

    pub fn profile(&self, j: usize) -> &BumpProfile {
        &self.profiles[j]
    }
}

/// Entrywise product over j of the per-cube coefficient tables at the
/// shared window. With one cube this is exactly [`e_d_coefficients`];
/// a vanishing input annihilates the whole product.
pub fn me_kd_coefficients(
    spec: &MultilinearSpec,
    n_box: &FrequencyBox,
    m_range: (i64, i64),
) -> Result<CoefficientField, ModelError> {
    let mut product: Option<CoefficientField> = None;
    for j in 0..spec.k() {
        let factor = e_d_coefficients(spec.input(j), n_box, m_range)?;
        product = Some(match product {
            None => factor,
            Some(acc) => acc.entrywise_product(&factor)?,
        });
    }
    // CubeCollection is never empty, so the fold ran at least once.
    Ok(product.expect("nonempty collection"))
}

/// Check every slab of the window against the sampling rule of thumb.
pub fn window_is_resolved(g: &GridFunction, n_box: &FrequencyBox, m_range: (i64, i64)) -> bool {
    let worst_m = m_range.0.abs().max(m_range.1.abs());
    extlab_packets::resolution_is_adequate(g.resolution(), n_box.max_abs(), worst_m)
}
