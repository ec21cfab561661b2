//! Ancilla elimination for the phase-form hash.
//!
//! The circuit rewrites are standalone passes: a controlled `Rz` splits into
//! two phase gates on its last control, a phase gate is an `Rz` up to global
//! phase, and an X on the target flips the sign of a controlled `Rz`.
//!
//! [`synthesize_phase_hash`] is the one-stage construction with `d/2` CNOTs:
//! `H` on every qubit, a UCR of the reduced angles on the last qubit, then X.
//! It drops the phase `(t[2i] + t[2i+1])/4` attached to control value `i`,
//! which is global only when that sum does not depend on `i`.
//! [`synthesize_phase_hash_exact`] applies the same stage recursively to those
//! residual phases and reproduces the hash state for every input.

use alloc::vec::Vec;

use crate::angle::{AngleVector, ExactAngle};
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::{Axis, Gate};
use crate::report::SynthesisReport;
use crate::ucr::lower_ucr;

/// A phase-form hash instance on `m` register qubits, `d = 2^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseHashCircuitSpec {
    pub m: usize,
    pub angles: AngleVector,
    /// Describe the form with a |1> ancilla on qubit `m`.
    pub includes_ancilla: bool,
}

impl PhaseHashCircuitSpec {
    pub fn new(angles: AngleVector, includes_ancilla: bool) -> Self {
        PhaseHashCircuitSpec {
            m: angles.control_count(),
            angles,
            includes_ancilla,
        }
    }

    /// The ancilla form as a macro circuit: `H` on the register, `X` on the
    /// ancilla, then the z-axis UCR onto the ancilla.
    pub fn ancilla_circuit(&self) -> Circuit {
        let m = self.m;
        let mut gates: Vec<Gate> = (0..m).map(|q| Gate::H { target: q }).collect();
        gates.push(Gate::X { target: m });
        gates.push(Gate::Ucr {
            axis: Axis::Z,
            controls: (0..m).collect(),
            target: m,
            angles: self.angles.clone(),
        });
        Circuit::from_gates(m + 1, gates)
    }
}

fn phase_target(g: &Gate) -> Result<(Vec<usize>, usize, &ExactAngle)> {
    match g {
        Gate::Mcr {
            axis: Axis::Z,
            controls,
            pattern,
            target,
            angle,
        } if pattern.iter().all(|&b| b) => Ok((controls.clone(), *target, angle)),
        _ => Err(Error::UnexpectedGate(alloc::format!("{g:?}"))),
    }
}

/// Splits an all-ones-controlled `Rz(theta)` into two phase gates on its last
/// control: `P(-theta)` when the old target reads 0, then `P(theta)` when it reads 1.
pub fn split_controlled_rz(g: &Gate) -> Result<Vec<Gate>> {
    let (controls, target, angle) = phase_target(g)?;
    let Some((&last, others)) = controls.split_last() else {
        return Err(Error::TooFewControls {
            needed: 1,
            found: 0,
        });
    };
    let mut new_controls = others.to_vec();
    new_controls.push(target);
    let pattern = |t: bool| {
        let mut p = alloc::vec![true; others.len()];
        p.push(t);
        p
    };
    Ok(alloc::vec![
        Gate::Mcp {
            controls: new_controls.clone(),
            pattern: pattern(false),
            target: last,
            angle: -angle
        },
        Gate::Mcp {
            controls: new_controls,
            pattern: pattern(true),
            target: last,
            angle: angle.clone()
        },
    ])
}

/// `P(theta) = e^{i theta/4} Rz(theta/2)`: returns the rotation and the global phase.
pub fn phase_to_rz(g: &Gate) -> Result<(Gate, ExactAngle)> {
    match g {
        Gate::Phase { target, angle } => Ok((
            Gate::Rz {
                target: *target,
                angle: angle.half()?,
            },
            angle.div_pow2(2)?,
        )),
        _ => Err(Error::UnexpectedGate(alloc::format!("{g:?}"))),
    }
}

/// Rewrites the time-ordered pair `[C(Rz(theta)), X(target)]` as `[X(target), C(Rz(-theta))]`.
pub fn conjugate_rz_by_x(rotation: &Gate, x: &Gate) -> Result<(Gate, Gate)> {
    let Gate::Mcr {
        axis: Axis::Z,
        target,
        ..
    } = rotation
    else {
        return Err(Error::UnexpectedGate(alloc::format!("{rotation:?}")));
    };
    let Gate::X { target: xt } = x else {
        return Err(Error::UnexpectedGate(alloc::format!("{x:?}")));
    };
    if xt != target {
        return Err(Error::XNotOnTarget {
            x: *xt,
            target: *target,
        });
    }
    Ok((x.clone(), rotation.inverse()))
}

/// `t'[i] = (t[2i] - t[2i+1]) / 2`.
pub fn reduce_phase_angles(angles: &AngleVector) -> Result<AngleVector> {
    pairwise(angles, ExactAngle::half_diff)
}

/// `(t[2i] + t[2i+1]) / 2`: twice the phase the one-stage construction drops on control value `i`.
pub fn residual_phase_angles(angles: &AngleVector) -> Result<AngleVector> {
    pairwise(angles, ExactAngle::half_sum)
}

fn pairwise(
    angles: &AngleVector,
    op: fn(&ExactAngle, &ExactAngle) -> Result<ExactAngle>,
) -> Result<AngleVector> {
    if angles.len() % 2 != 0 {
        return Err(Error::OddLength(angles.len()));
    }
    let out = angles
        .as_slice()
        .chunks(2)
        .map(|p| op(&p[0], &p[1]))
        .collect::<Result<Vec<_>>>()?;
    AngleVector::new(out)
}

/// One stage on qubits `0..r`: the UCR of the reduced angles onto qubit `r - 1`, then X on it.
fn stage(angles: &AngleVector, r: usize) -> Result<Vec<Gate>> {
    let controls: Vec<usize> = (0..r - 1).collect();
    let mut gates = lower_ucr(Axis::Z, &controls, r - 1, &reduce_phase_angles(angles)?)?;
    gates.push(Gate::X { target: r - 1 });
    Ok(gates)
}

fn validate(spec: &PhaseHashCircuitSpec) -> Result<()> {
    if spec.angles.len() != 1 << spec.m {
        return Err(Error::LengthMismatch {
            expected: 1 << spec.m,
            found: spec.angles.len(),
        });
    }
    if spec.m == 0 {
        return Err(Error::TooFewControls {
            needed: 1,
            found: 0,
        });
    }
    Ok(())
}

fn hadamards(m: usize) -> Vec<Gate> {
    (0..m).map(|q| Gate::H { target: q }).collect()
}

/// The one-stage construction on `m` qubits with `d/2` CNOTs.
///
/// `global_phase` is half the mean angle, the phase relating the output to
/// the hash state whenever the dropped phases coincide.
pub fn synthesize_phase_hash(spec: &PhaseHashCircuitSpec) -> Result<SynthesisReport> {
    validate(spec)?;
    let m = spec.m;
    let mut gates = hadamards(m);
    gates.extend(stage(&spec.angles, m)?);
    let predicted = 1u64 << (m - 1);
    SynthesisReport::new(
        Circuit::from_gates(m, gates),
        mean_half(&spec.angles)?,
        predicted,
    )
}

/// Recursive construction with `d - 2` CNOTs that prepares the hash state exactly.
///
/// The stage for register size `r` uses the reduced angles of level `r`;
/// level `r - 1` holds the residual angles of level `r`. Stages run from the
/// smallest register up; every stage is diagonal on the qubits above it.
pub fn synthesize_phase_hash_exact(spec: &PhaseHashCircuitSpec) -> Result<SynthesisReport> {
    validate(spec)?;
    let m = spec.m;
    let mut levels = alloc::vec![spec.angles.clone()];
    for _ in 1..m {
        let next = residual_phase_angles(levels.last().expect("nonempty"))?;
        levels.push(next);
    }
    let mut gates = hadamards(m);
    for r in 1..=m {
        gates.extend(stage(&levels[m - r], r)?);
    }
    let predicted = (1u64 << m) - 2;
    SynthesisReport::new(
        Circuit::from_gates(m, gates),
        mean_half(&spec.angles)?,
        predicted,
    )
}

/// `(sum of angles) / (2 d)`.
fn mean_half(angles: &AngleVector) -> Result<ExactAngle> {
    let mut acc = ExactAngle::zero();
    for a in angles {
        acc = acc.checked_add(a)?;
    }
    acc.div_pow2(angles.control_count() as u32 + 1)
}
