//! Property tests for the generic spectral identities.

mod common;

use common::{direct_coeffs, direct_entropy, direct_influence, rel};
use hyperspec::spectrum::{
    conjugate, entropy, influence, inverse_transform, lift_zero_mean, scale, stats, walsh_transform,
};
use hyperspec::verify::extend_with_coordinate;
use hyperspec::{Complex64, HypercubeFunction, TableLimit};
use proptest::prelude::*;

const LIM: TableLimit = TableLimit::new(26);

fn function(max_n: usize) -> impl Strategy<Value = HypercubeFunction> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1usize << n).prop_map(move |v| {
            HypercubeFunction::new(
                n,
                v.into_iter()
                    .map(|(re, im)| Complex64::new(re, im))
                    .collect(),
            )
            .unwrap()
        })
    })
}

fn pair(max_n: usize) -> impl Strategy<Value = (HypercubeFunction, HypercubeFunction)> {
    (0..=max_n).prop_flat_map(|n| {
        let side = proptest::collection::vec(-2.0f64..2.0, 1usize << n)
            .prop_map(move |v| HypercubeFunction::from_real(n, v).unwrap());
        (side.clone(), side)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn butterfly_agrees_with_direct_sum(f in function(6)) {
        let fast = walsh_transform(&f, LIM).unwrap();
        let slow = direct_coeffs(&f);
        for (a, b) in fast.coeffs().iter().zip(&slow) {
            prop_assert!((a - b).norm() < 1e-12);
        }
        prop_assert!(rel(influence(&fast), direct_influence(&slow)) < 1e-12);
        prop_assert!(rel(entropy(&fast), direct_entropy(&slow)) < 1e-12);
    }

    #[test]
    fn parseval(f in function(12)) {
        let st = stats(&f, LIM).unwrap();
        let norm_sq = st.l2_norm * st.l2_norm;
        prop_assert!((norm_sq - st.total_weight).abs() <= 1e-12 * norm_sq.max(1.0));
    }

    #[test]
    fn round_trip(f in function(12)) {
        let back = inverse_transform(&walsh_transform(&f, LIM).unwrap(), LIM).unwrap();
        for (a, b) in back.values().iter().zip(f.values()) {
            prop_assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn scaling_law(f in function(10), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let a = Complex64::new(re, im);
        let m = a.norm_sqr();
        prop_assume!(m > 1e-6);
        let base = stats(&f, LIM).unwrap();
        let scaled = stats(&scale(&f, a), LIM).unwrap();
        prop_assert!(rel(scaled.influence, m * base.influence) < 1e-9);
        let expected = m * base.entropy - m * m.log2() * base.l2_norm * base.l2_norm;
        prop_assert!(rel(scaled.entropy, expected) < 1e-9);
    }

    #[test]
    fn conjugation_preserves_magnitudes(f in function(8)) {
        let s = walsh_transform(&f, LIM).unwrap();
        let sc = walsh_transform(&conjugate(&f), LIM).unwrap();
        for (a, b) in s.coeffs().iter().zip(sc.coeffs()) {
            prop_assert!((a.norm() - b.norm()).abs() < 1e-12);
        }
        prop_assert!((entropy(&s) - entropy(&sc)).abs() < 1e-12);
    }

    #[test]
    fn lift_adds_norm_to_influence(f in function(10)) {
        let g = lift_zero_mean(&f, LIM).unwrap();
        let sf = stats(&f, LIM).unwrap();
        let sg = stats(&g, LIM).unwrap();
        prop_assert!((sg.influence - (sf.influence + sf.l2_norm * sf.l2_norm)).abs()
            <= 1e-12 * sg.influence.max(1.0));
        prop_assert!(g.mean().norm() < 1e-12);
        prop_assert!((sg.entropy - sf.entropy).abs() < 1e-12);
        prop_assert!((sg.l2_norm - sf.l2_norm).abs() < 1e-12);
        prop_assert_eq!(sg.linf_norm, sf.linf_norm);
    }

    #[test]
    fn influence_additivity((r, s) in pair(8), a in -2.0f64..2.0) {
        let t = extend_with_coordinate(&r, &s, a, LIM).unwrap();
        let it = stats(&t, LIM).unwrap().influence;
        let ir = stats(&r, LIM).unwrap().influence;
        let ss = stats(&s, LIM).unwrap();
        let expected = ir + a * a * (ss.influence + ss.l2_norm * ss.l2_norm);
        prop_assert!(rel(it, expected) < 1e-9);
    }

    #[test]
    fn probability_spectra_have_nonnegative_entropy(f in function(8)) {
        let l2 = f.l2_norm();
        prop_assume!(l2 > 1e-3);
        let unit = scale(&f, Complex64::new(1.0 / l2, 0.0));
        let st = stats(&unit, LIM).unwrap();
        prop_assert!(st.entropy >= -1e-12);
    }
}

#[test]
fn real_function_conjugate_is_unchanged() {
    let f =
        HypercubeFunction::from_real(3, vec![0.5, -1.0, 2.0, 0.0, 1.0, 1.0, -3.0, 0.25]).unwrap();
    assert_eq!(conjugate(&f), f);
}

#[test]
fn scaled_unnormalized_worked_example() {
    // n = 2, weights (1/2, 1/4, 1/4, 0) scaled by 1/2
    let coeffs = vec![
        Complex64::new(0.5f64.sqrt(), 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 0.5),
        Complex64::new(0.0, 0.0),
    ];
    let s = hyperspec::FourierSpectrum::new(2, coeffs).unwrap();
    let f = inverse_transform(&s, LIM).unwrap();
    let h = stats(&f, LIM).unwrap().entropy;
    assert!((h - 1.5).abs() < 1e-15);
    let g = scale(&f, Complex64::new(0.5, 0.0));
    let direct = direct_entropy(&direct_coeffs(&g));
    // (1/4)(3/2) - (1/4) log2(1/4)
    assert!((direct - 0.875).abs() < 1e-15);
    assert!((stats(&g, LIM).unwrap().entropy - 0.875).abs() < 1e-15);
}
