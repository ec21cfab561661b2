//! Cost metrics over lowered circuits.

use alloc::vec::Vec;

use crate::angle::ExactAngle;
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;

fn require_lowered(c: &Circuit) -> Result<()> {
    match c.first_macro() {
        Some(pos) => Err(Error::NotLowered(pos)),
        None => Ok(()),
    }
}

pub fn cnot_count(c: &Circuit) -> Result<usize> {
    require_lowered(c)?;
    Ok(c.gates.iter().filter(|g| g.is_cnot()).count())
}

pub fn rotation_count(c: &Circuit) -> Result<usize> {
    require_lowered(c)?;
    Ok(c.gates
        .iter()
        .filter(|g| matches!(g, Gate::Rz { .. } | Gate::Ry { .. } | Gate::Phase { .. }))
        .count())
}

/// ASAP layering: a gate sits one layer after the latest gate sharing a qubit with it.
pub fn circuit_depth(c: &Circuit) -> Result<usize> {
    require_lowered(c)?;
    let mut front: Vec<usize> = alloc::vec![0; c.width];
    let mut depth = 0;
    for gate in &c.gates {
        let qubits = gate.qubits();
        let layer = 1 + qubits.iter().map(|&q| front[q]).max().unwrap_or(0);
        for q in qubits {
            front[q] = layer;
        }
        depth = depth.max(layer);
    }
    Ok(depth)
}

/// Smallest nonzero `|angle|` over all gates.
pub fn min_nonzero_angle(c: &Circuit) -> Option<ExactAngle> {
    c.gates
        .iter()
        .flat_map(Gate::angles)
        .filter(|a| !a.is_zero())
        .map(ExactAngle::abs)
        .min()
}

/// Largest `den_exp` over all nonzero angles.
pub fn max_den_exp(c: &Circuit) -> Option<u32> {
    c.gates
        .iter()
        .flat_map(Gate::angles)
        .filter(|a| !a.is_zero())
        .map(ExactAngle::den_exp)
        .max()
}
