#![allow(dead_code)]

use proptest::prelude::*;
use qhsynth_core::sim::{equivalent_up_to_phase, unitary_of};
use qhsynth_core::{AngleVector, Circuit, ExactAngle};
use rand::Rng;

const BASES: [u64; 6] = [1, 3, 5, 7, 9, 11];

/// `a * pi / (b * 2^e)` with `|a| <= 1000`, odd `b <= 11`, `e < 4`.
pub fn random_angle(rng: &mut impl Rng) -> ExactAngle {
    let num: i64 = rng.gen_range(-1000..=1000);
    ExactAngle::new(
        num,
        BASES[rng.gen_range(0..BASES.len())],
        rng.gen_range(0..4),
    )
    .unwrap()
}

pub fn random_angles(rng: &mut impl Rng, m: usize) -> AngleVector {
    AngleVector::new((0..1usize << m).map(|_| random_angle(rng)).collect()).unwrap()
}

pub fn arb_angle() -> impl Strategy<Value = ExactAngle> {
    (-1000i64..=1000, 0..BASES.len(), 0u32..4)
        .prop_map(|(n, b, e)| ExactAngle::new(n, BASES[b], e).unwrap())
}

pub fn arb_angles(m: usize) -> impl Strategy<Value = AngleVector> {
    proptest::collection::vec(arb_angle(), 1usize << m).prop_map(|v| AngleVector::new(v).unwrap())
}

pub fn equivalent(a: &Circuit, b: &Circuit, tol: f64) -> bool {
    equivalent_up_to_phase(&unitary_of(a).unwrap(), &unitary_of(b).unwrap(), tol).unwrap()
}
