use alloc::vec::Vec;

use rand::Rng;

use crate::angle::{AngleVector, ExactAngle};

const BASES: [u64; 6] = [1, 3, 5, 7, 9, 11];

/// `2^m` angles `a * pi / (b * 2^e)` with small random `a`, odd `b` and `e < 4`.
pub fn random_angles(rng: &mut impl Rng, m: usize) -> AngleVector {
    let v: Vec<ExactAngle> = (0..1usize << m)
        .map(|_| {
            let num: i64 = rng.gen_range(-1000..=1000);
            let base = BASES[rng.gen_range(0..BASES.len())];
            ExactAngle::new(num, base, rng.gen_range(0..4)).expect("nonzero base")
        })
        .collect();
    AngleVector::new(v).expect("power of two")
}
