mod common;

use common::{equivalent, random_angles};
use proptest::prelude::*;
use qhsynth_core::metrics::cnot_count;
use qhsynth_core::sim::{
    equivalent_up_to_phase, run, states_equal_up_to_phase, unitary_of, StateVector,
};
use qhsynth_core::tradeoff::{
    granularity_instance, predicted_cnot_count, prior_cnot_count, savings_vs_prior,
    synthesize_tradeoff, synthesize_tradeoff_phase, TradeoffPlan, Variant,
};
use qhsynth_core::ucr::{synthesize_ucr, ucr_macro};
use qhsynth_core::{Axis, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn feasible(n: usize, variant: Variant) -> impl Iterator<Item = usize> {
    let top = n.checked_sub(TradeoffPlan::slack(variant));
    (0..=top.unwrap_or(0)).filter(move |_| top.is_some())
}

#[test]
fn built_counts_match_the_closed_forms_from_one_level() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for n in 5..=9 {
        for variant in [Variant::General, Variant::Phase] {
            for k in feasible(n, variant) {
                let plan = TradeoffPlan::new(n, k, Axis::Z, variant).unwrap();
                let rep = synthesize_tradeoff(&plan, &random_angles(&mut rng, n - 1)).unwrap();
                let predicted = predicted_cnot_count(&plan).unwrap();
                // Without a splitting level there is no Gray-cycle CNOT to count.
                let expected = if k == 0 { predicted - 1 } else { predicted };
                assert_eq!(
                    cnot_count(&rep.circuit).unwrap() as u64,
                    expected,
                    "n={n} k={k} {variant:?}"
                );
            }
        }
    }
}

#[test]
fn predictor_spot_values() {
    let general = |n, k| {
        predicted_cnot_count(&TradeoffPlan::new(n, k, Axis::Z, Variant::General).unwrap()).unwrap()
    };
    let phase = |n, k| {
        predicted_cnot_count(&TradeoffPlan::new(n, k, Axis::Z, Variant::Phase).unwrap()).unwrap()
    };
    assert_eq!(general(10, 5), 3 * 32 + 1024 * (12 * 5 - 49));
    assert_eq!(general(10, 5), 11360);
    assert_eq!(phase(10, 4), 16 * (24 * 6 - 75) + 512 * (12 * 6 - 61));
    assert_eq!(phase(10, 4), 6736);
    assert_eq!(general(7, 2), 1420);
    assert_eq!(
        TradeoffPlan::new(10, 6, Axis::Z, Variant::General),
        Err(Error::BoundViolation {
            n: 10,
            k: 6,
            slack: 5
        })
    );
    assert_eq!(
        TradeoffPlan::new(6, 0, Axis::Y, Variant::Phase),
        Err(Error::AxisNotSupported)
    );
}

#[test]
fn predictor_is_non_increasing_in_k() {
    for n in 7..=20 {
        for variant in [Variant::General, Variant::Phase] {
            let counts: Vec<u64> = feasible(n, variant)
                .map(|k| {
                    predicted_cnot_count(&TradeoffPlan::new(n, k, Axis::Z, variant).unwrap())
                        .unwrap()
                })
                .collect();
            assert!(counts.windows(2).all(|w| w[1] <= w[0]), "n={n} {variant:?}");
        }
    }
}

#[test]
fn savings_over_the_prior_bound() {
    for log_d in 7..=9usize {
        let d = 1i128 << log_d;
        for k in 0..=log_d - 5 {
            let plan = TradeoffPlan::new(log_d + 1, k, Axis::Z, Variant::General).unwrap();
            let prior = (1i128 << k) + d * (96 * (log_d as i128 - k as i128) - 384);
            assert_eq!(prior_cnot_count(&plan).unwrap(), prior);
            let savings = savings_vs_prior(&plan).unwrap();
            assert_eq!(
                savings,
                prior - predicted_cnot_count(&plan).unwrap() as i128
            );
            assert!(16 * savings >= 799 * d, "d={d} k={k}");
        }
        let tight = TradeoffPlan::new(log_d + 1, log_d - 5, Axis::Z, Variant::General).unwrap();
        assert_eq!(16 * savings_vs_prior(&tight).unwrap(), 799 * d);
    }
}

#[test]
fn general_variant_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 5..=7 {
        for k in feasible(n, Variant::General) {
            for axis in [Axis::Z, Axis::Y] {
                for _ in 0..3 {
                    let angles = random_angles(&mut rng, n - 1);
                    let plan = TradeoffPlan::new(n, k, axis, Variant::General).unwrap();
                    let rep = synthesize_tradeoff(&plan, &angles).unwrap();
                    assert!(
                        equivalent(&rep.circuit, &ucr_macro(axis, &angles), 1e-9),
                        "n={n} k={k} {axis:?}"
                    );
                }
            }
        }
    }
}

/// Compares the phase variant with the multiplexor on the inputs whose target
/// is |1>, with one common phase for all of them.
fn phase_variant_matches(n: usize, k: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let angles = random_angles(&mut rng, n - 1);
    let plan = TradeoffPlan::new(n, k, Axis::Z, Variant::Phase).unwrap();
    let rep = synthesize_tradeoff_phase(&plan, &angles).unwrap();
    let built = unitary_of(&rep.circuit).unwrap();
    let oracle = unitary_of(&ucr_macro(Axis::Z, &angles)).unwrap();
    let block = |u: &qhsynth_core::sim::UnitaryMatrix| {
        let cols: Vec<_> = (0..1usize << (n - 1))
            .flat_map(|c| u.column(2 * c + 1).to_vec())
            .collect();
        StateVector::from_amplitudes(cols).unwrap()
    };
    states_equal_up_to_phase(&block(&built), &block(&oracle), 1e-9).unwrap()
}

#[test]
fn phase_variant_is_sound_without_decomposition1() {
    for n in 6..=8 {
        assert!(phase_variant_matches(n, 0, n as u64));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let angles = random_angles(&mut rng, 5);
    let rep = synthesize_tradeoff_phase(
        &TradeoffPlan::new(6, 0, Axis::Z, Variant::Phase).unwrap(),
        &angles,
    )
    .unwrap();
    let mut oracle = ucr_macro(Axis::Z, &angles);
    oracle.initial_state = rep.circuit.initial_state.clone();
    let reference = run(&oracle).unwrap();
    assert!(states_equal_up_to_phase(&run(&rep.circuit).unwrap(), &reference, 1e-9).unwrap());
}

#[test]
fn phase_variant_breaks_once_decomposition1_flips_the_target() {
    for (n, k) in [(7, 1), (8, 1), (8, 2)] {
        assert!(!phase_variant_matches(n, k, 7), "n={n} k={k}");
    }
}

#[test]
fn granularity_grows_one_bit_per_level() {
    for n in 6..=10 {
        let angles = granularity_instance(n - 1);
        assert_eq!(angles.max_den_exp(), 0);
        let full = synthesize_ucr(Axis::Z, n - 1, &angles).unwrap();
        assert_eq!(full.max_den_exp, Some(n as u32 - 1));
        for variant in [Variant::General, Variant::Phase] {
            let measured: Vec<u32> = feasible(n, variant)
                .map(|k| {
                    let plan = TradeoffPlan::new(n, k, Axis::Z, variant).unwrap();
                    synthesize_tradeoff(&plan, &angles)
                        .unwrap()
                        .max_den_exp
                        .unwrap()
                })
                .collect();
            assert!(
                measured.windows(2).all(|w| w[1] == w[0] + 1),
                "n={n} {variant:?} {measured:?}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn general_variant_matches_the_macro(seed in any::<u64>(), k in 0usize..=1) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let angles = random_angles(&mut rng, 5);
        let plan = TradeoffPlan::new(6, k, Axis::Y, Variant::General).unwrap();
        let rep = synthesize_tradeoff(&plan, &angles).unwrap();
        let oracle = unitary_of(&ucr_macro(Axis::Y, &angles)).unwrap();
        prop_assert!(equivalent_up_to_phase(&oracle, &unitary_of(&rep.circuit).unwrap(), 1e-9).unwrap());
    }
}
