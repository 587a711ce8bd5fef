//! Dyadic level sets of a coefficient field: bucket l collects the
//! coefficients with 2^{-l-1} < |c| <= 2^{-l}, so l = floor(-log2 |c|)
//! and larger l means smaller coefficients. Entries at or below the
//! floor are not counted.

use std::collections::BTreeMap;

use crate::error::ModelError;
use crate::field::CoefficientField;

/// Counts per dyadic level, keyed by l (negative for moduli above 1).
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSetHistogram {
    floor: f64,
    counts: BTreeMap<i64, usize>,
}

impl LevelSetHistogram {
    pub fn floor(&self) -> f64 {
        self.floor
    }

    pub fn counts(&self) -> &BTreeMap<i64, usize> {
        &self.counts
    }

    pub fn count(&self, level: i64) -> usize {
        self.counts.get(&level).copied().unwrap_or(0)
    }

    /// Number of coefficients above the floor.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// sum over buckets of 4^{-l} count(l), the dyadic stand-in for the
    /// squared l2 mass of the counted coefficients.
    pub fn dyadic_square_mass(&self) -> f64 {
        self.counts
            .iter()
            .map(|(&l, &c)| (c as f64) * 2f64.powi(-2 * l as i32))
            .sum()
    }
}

/// The level of one modulus.
pub fn dyadic_level(modulus: f64) -> i64 {
    (-modulus.log2()).floor() as i64
}

/// Bucket the field's moduli above a positive floor.
pub fn level_set_histogram(
    field: &CoefficientField,
    floor: f64,
) -> Result<LevelSetHistogram, ModelError> {
    if !floor.is_finite() || floor <= 0.0 {
        return Err(ModelError::BadFloor { floor });
    }
    let mut counts = BTreeMap::new();
    for v in field.values() {
        let r = v.norm();
        if r > floor {
            *counts.entry(dyadic_level(r)).or_insert(0) += 1;
        }
    }
    Ok(LevelSetHistogram { floor, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use extlab_packets::FrequencyBox;
    use num_complex::Complex64;

    fn field_of(moduli: &[f64]) -> CoefficientField {
        let b = FrequencyBox::new(vec![(0, moduli.len() as i64 - 1)]).unwrap();
        let values = moduli.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        CoefficientField::from_values(b, (0, 0), values).unwrap()
    }

    #[test]
    fn unit_modulus_lands_at_level_zero() {
        let h = level_set_histogram(&field_of(&[1.0]), 1e-9).unwrap();
        assert_eq!(h.count(0), 1);
        assert_eq!(h.total(), 1);
    }

    #[test]
    fn the_three_reference_moduli_spread_over_three_levels() {
        let h = level_set_histogram(&field_of(&[0.9, 0.4, 0.2]), 1e-9).unwrap();
        assert_eq!(h.count(0), 1);
        assert_eq!(h.count(1), 1);
        assert_eq!(h.count(2), 1);
        assert_eq!(h.total(), 3);
    }

    #[test]
    fn dyadic_boundaries_and_large_moduli() {
        // 1/2 sits in bucket 1 (its bucket is (1/4, 1/2]), 1 in bucket
        // 0, and 1.5 in bucket -1.
        assert_eq!(dyadic_level(0.5), 1);
        assert_eq!(dyadic_level(1.0), 0);
        assert_eq!(dyadic_level(1.5), -1);
        let h = level_set_histogram(&field_of(&[0.5, 1.5]), 1e-9).unwrap();
        assert_eq!(h.count(1), 1);
        assert_eq!(h.count(-1), 1);
    }

    #[test]
    fn floor_excludes_and_validates() {
        let h = level_set_histogram(&field_of(&[0.9, 0.001]), 0.01).unwrap();
        assert_eq!(h.total(), 1);
        assert!(matches!(
            level_set_histogram(&field_of(&[1.0]), 0.0),
            Err(ModelError::BadFloor { .. })
        ));
        assert!(matches!(
            level_set_histogram(&field_of(&[1.0]), -1.0),
            Err(ModelError::BadFloor { .. })
        ));
    }

    #[test]
    fn dyadic_mass_sandwiches_the_true_square_mass() {
        let moduli = [0.9, 0.4, 0.2, 0.07, 0.6, 1.3];
        let h = level_set_histogram(&field_of(&moduli), 1e-9).unwrap();
        let true_mass: f64 = moduli.iter().map(|r| r * r).sum();
        let dyadic = h.dyadic_square_mass();
        // 4^{-l} >= |c|^2 > 4^{-l-1} per bucket entry.
        assert!(dyadic >= true_mass);
        assert!(dyadic < 4.0 * true_mass);
    }
}
