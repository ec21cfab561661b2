//! Gray-code lowering of uniformly controlled rotations.

use alloc::vec::Vec;

use crate::angle::{AngleVector, ExactAngle};
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::{Axis, Gate};
use crate::gray::{binary_gray_dot, flipped_bit_label};
use crate::report::SynthesisReport;

/// Splits on the most significant control: `first[i] = (t[i] + t[r+i]) / 2`,
/// `second[i] = (t[i] - t[r+i]) / 2` with `r = len / 2`.
pub fn split_angles(angles: &AngleVector) -> Result<(AngleVector, AngleVector)> {
    let r = angles.len() / 2;
    if r == 0 {
        return Err(Error::TooFewControls {
            needed: 1,
            found: 0,
        });
    }
    let mut first = Vec::with_capacity(r);
    let mut second = Vec::with_capacity(r);
    for i in 0..r {
        first.push(angles[i].half_sum(&angles[r + i])?);
        second.push(angles[i].half_diff(&angles[r + i])?);
    }
    Ok((AngleVector::new(first)?, AngleVector::new(second)?))
}

/// One recursion step: `[UCR(first), CNOT(top -> target), UCR(second), CNOT(top -> target)]`.
pub fn decomposition_step(u: &Gate) -> Result<Vec<Gate>> {
    let Gate::Ucr {
        axis,
        controls,
        target,
        angles,
    } = u
    else {
        return Err(Error::UnexpectedGate(alloc::format!("{u:?}")));
    };
    if controls.is_empty() {
        return Err(Error::TooFewControls {
            needed: 1,
            found: 0,
        });
    }
    let (first, second) = split_angles(angles)?;
    let rest = controls[1..].to_vec();
    let sub = |angles| Gate::Ucr {
        axis: *axis,
        controls: rest.clone(),
        target: *target,
        angles,
    };
    Ok(alloc::vec![
        sub(first),
        Gate::cnot(controls[0], *target),
        sub(second),
        Gate::cnot(controls[0], *target),
    ])
}

/// Applies the sign transform to the top `k` bits of the index: block `j`
/// holds `(1/2^k) * sum_h (-1)^{binary_gray_dot(h, j)} * t[h * R + i]` for
/// every low index `i < R = len / 2^k`.
pub fn gray_blocks(angles: &AngleVector, k: usize) -> Result<Vec<AngleVector>> {
    let m = angles.control_count();
    if k > m {
        return Err(Error::DepthExceedsControls { k, m });
    }
    let blocks = 1usize << k;
    let low = angles.len() >> k;
    let mut out = Vec::with_capacity(blocks);
    for j in 0..blocks {
        let mut block = Vec::with_capacity(low);
        for i in 0..low {
            let mut acc = ExactAngle::zero();
            for h in 0..blocks {
                let term = &angles[h * low + i];
                acc = if binary_gray_dot(h as u64, j as u64) == 0 {
                    acc.checked_add(term)?
                } else {
                    acc.checked_sub(term)?
                };
            }
            block.push(acc.div_pow2(k as u32)?);
        }
        out.push(AngleVector::new(block)?);
    }
    Ok(out)
}

/// `t' = (1/d) * M^T * t` with `M[i][j] = (-1)^{binary_gray_dot(i, j)}`.
pub fn mottonen_angles(angles: &AngleVector) -> Result<AngleVector> {
    let blocks = gray_blocks(angles, angles.control_count())?;
    AngleVector::new(blocks.into_iter().map(|b| b.into_vec().remove(0)).collect())
}

/// Labels (1 = least significant control, `m` = top line) of the CNOT controls.
pub fn cnot_control_sequence(m: usize) -> Result<Vec<usize>> {
    if m == 0 {
        return Err(Error::TooFewControls {
            needed: 1,
            found: 0,
        });
    }
    Ok((1..=1u64 << m)
        .map(|j| flipped_bit_label(j, m as u32) as usize)
        .collect())
}

/// Maps a label from [`cnot_control_sequence`] onto a control list given most significant first.
pub(crate) fn control_for_label(controls: &[usize], label: usize) -> usize {
    controls[controls.len() - label]
}

/// Lowers a UCR to alternating rotations and CNOTs, each rotation preceding its CNOT.
pub fn lower_ucr(
    axis: Axis,
    controls: &[usize],
    target: usize,
    angles: &AngleVector,
) -> Result<Vec<Gate>> {
    if angles.len() != 1 << controls.len() {
        return Err(Error::LengthMismatch {
            expected: 1 << controls.len(),
            found: angles.len(),
        });
    }
    if controls.is_empty() {
        return Ok(alloc::vec![Gate::rotation(axis, target, angles[0].clone())]);
    }
    let rotated = mottonen_angles(angles)?;
    let labels = cnot_control_sequence(controls.len())?;
    let mut gates = Vec::with_capacity(2 * angles.len());
    for (angle, label) in rotated.into_vec().into_iter().zip(labels) {
        gates.push(Gate::rotation(axis, target, angle));
        gates.push(Gate::cnot(control_for_label(controls, label), target));
    }
    Ok(gates)
}

/// The UCR macro on `m + 1` qubits: controls `0..m`, target `m`.
pub fn ucr_macro(axis: Axis, angles: &AngleVector) -> Circuit {
    let m = angles.control_count();
    Circuit::from_gates(
        m + 1,
        alloc::vec![Gate::Ucr {
            axis,
            controls: (0..m).collect(),
            target: m,
            angles: angles.clone()
        }],
    )
}

/// Lowered UCR with `2^m` rotations and `2^m` CNOTs on the layout of [`ucr_macro`].
pub fn synthesize_ucr(axis: Axis, m: usize, angles: &AngleVector) -> Result<SynthesisReport> {
    if m == 0 {
        return Err(Error::TooFewControls {
            needed: 1,
            found: 0,
        });
    }
    if angles.len() != 1 << m {
        return Err(Error::LengthMismatch {
            expected: 1 << m,
            found: angles.len(),
        });
    }
    let controls: Vec<usize> = (0..m).collect();
    let gates = lower_ucr(axis, &controls, m, angles)?;
    SynthesisReport::new(
        Circuit::from_gates(m + 1, gates),
        ExactAngle::zero(),
        1 << m,
    )
}
