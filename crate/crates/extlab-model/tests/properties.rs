//! Property tests for the norm layer and the level-set histogram.

use num_complex::Complex64;
use proptest::prelude::*;

use extlab_model::{
    level_set_histogram, lp_norm, lq_quasinorm, mixed_norm, CoefficientField,
};
use extlab_packets::FrequencyBox;

fn small_field() -> impl Strategy<Value = CoefficientField> {
    // d = 2 window with 9 modes and 3 m slices: 27 entries.
    let entry = (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im));
    proptest::collection::vec(entry, 27).prop_map(|values| {
        CoefficientField::from_values(
            FrequencyBox::new(vec![(-1, 1), (-1, 1)]).unwrap(),
            (-1, 1),
            values,
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn outer_exponents_are_monotone(field in small_field(), split in 0usize..4) {
        let axes: &[usize] = match split {
            0 => &[],
            1 => &[0],
            2 => &[1],
            _ => &[0, 1],
        };
        let mut previous = f64::INFINITY;
        for q in [1.0, 2.0, 3.0, 6.0] {
            let value = mixed_norm(&field, axes, q).unwrap();
            prop_assert!(value <= previous * (1.0 + 1e-12));
            previous = value;
        }
        let sup = mixed_norm(&field, axes, f64::INFINITY).unwrap();
        for q in [1.0, 2.0, 3.0, 6.0] {
            prop_assert!(sup <= mixed_norm(&field, axes, q).unwrap() * (1.0 + 1e-12));
        }
    }

    #[test]
    fn mixed_norm_degenerates_to_plain_norms(field in small_field()) {
        let all = mixed_norm(&field, &[0, 1], 2.0).unwrap();
        prop_assert!((all - lp_norm(&field, 2.0).unwrap()).abs() < 1e-10);
        for q in [0.7, 1.5, 4.0] {
            let none = mixed_norm(&field, &[], q).unwrap();
            let plain = lq_quasinorm(&field, q).unwrap();
            prop_assert!((none - plain).abs() < 1e-10 * (1.0 + plain));
        }
    }

    #[test]
    fn dyadic_mass_sandwiches_the_square_mass(field in small_field()) {
        let floor = 1e-6;
        let histogram = level_set_histogram(&field, floor).unwrap();
        let counted: Vec<f64> = field
            .values()
            .iter()
            .map(|v| v.norm())
            .filter(|&r| r > floor)
            .collect();
        prop_assert_eq!(histogram.total(), counted.len());
        let square_mass: f64 = counted.iter().map(|r| r * r).sum();
        let dyadic = histogram.dyadic_square_mass();
        if counted.is_empty() {
            prop_assert_eq!(dyadic, 0.0);
        } else {
            prop_assert!(dyadic >= square_mass * (1.0 - 1e-12));
            prop_assert!(dyadic < 4.0 * square_mass * (1.0 + 1e-12));
        }
    }
}
