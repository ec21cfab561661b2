//! Reflected binary Gray code and the sign exponents of the rotation-angle transform.

/// The `i`-th reflected Gray codeword.
pub fn gray_code(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Parity of `popcount(i & gray_code(j))`.
pub fn binary_gray_dot(i: u64, j: u64) -> u8 {
    ((i & gray_code(j)).count_ones() & 1) as u8
}

/// 1-based label (1 = least significant control) of the bit that flips between
/// `gray_code(j - 1)` and `gray_code(j)`, with the closing step assigned to the top line.
pub fn flipped_bit_label(j: u64, m: u32) -> u32 {
    (j.trailing_zeros() + 1).min(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn gray_code_values() {
        assert_eq!(gray_code(0), 0);
        // 3-bit reflected sequence built by mirroring.
        let mut seq: Vec<u64> = alloc::vec![0, 1];
        for bit in 1..3 {
            let mirrored: Vec<u64> = seq.iter().rev().map(|g| g | (1 << bit)).collect();
            seq.extend(mirrored);
        }
        for (i, g) in seq.iter().enumerate() {
            assert_eq!(gray_code(i as u64), *g);
        }
        assert_eq!(gray_code(3), seq[3]);
        assert_eq!(gray_code(7), seq[7]);
    }

    #[test]
    fn adjacent_codewords_differ_in_one_bit() {
        for i in 0..(1u64 << 16) {
            assert!((gray_code(i) ^ gray_code(i + 1)).is_power_of_two());
        }
    }

    fn dot_by_bits(i: u64, j: u64) -> u8 {
        let g = gray_code(j);
        let mut parity = 0u8;
        for bit in 0..64 {
            parity ^= (((i >> bit) & 1) & ((g >> bit) & 1)) as u8;
        }
        parity
    }

    #[test]
    fn binary_gray_dot_matches_bitwise_oracle() {
        for j in 0..16 {
            assert_eq!(binary_gray_dot(0, j), 0);
        }
        assert_eq!(binary_gray_dot(1, 1), 1);
        assert_eq!(binary_gray_dot(3, 2), dot_by_bits(3, 2));
        for i in 0..64 {
            for j in 0..64 {
                assert_eq!(binary_gray_dot(i, j), dot_by_bits(i, j));
            }
        }
    }

    #[test]
    fn sign_matrix_is_orthogonal_up_to_scale() {
        for m in 1..=5 {
            let d = 1u64 << m;
            let sign = |i: u64, j: u64| if binary_gray_dot(i, j) == 0 { 1i64 } else { -1 };
            for r in 0..d {
                for c in 0..d {
                    let dot: i64 = (0..d).map(|j| sign(r, j) * sign(c, j)).sum();
                    assert_eq!(dot, if r == c { d as i64 } else { 0 });
                }
            }
        }
    }

    #[test]
    fn flipped_bits_follow_the_ruler() {
        let labels: Vec<u32> = (1..=8).map(|j| flipped_bit_label(j, 3)).collect();
        assert_eq!(labels, alloc::vec![1, 2, 1, 3, 1, 2, 1, 3]);
        for j in 1..8u64 {
            let flipped = gray_code(j - 1) ^ gray_code(j);
            assert_eq!(1 << (flipped_bit_label(j, 3) - 1), flipped);
        }
    }
}
