use alloc::vec::Vec;

use crate::angle::{AngleVector, ExactAngle};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Z,
    Y,
}

/// One gate of the IR. Controls of macro gates are listed most significant first.
///
/// `P(theta)` is `diag(1, e^{i theta / 2})`, so `P(theta) = e^{i theta / 4} Rz(theta / 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    X {
        target: usize,
    },
    H {
        target: usize,
    },
    Rz {
        target: usize,
        angle: ExactAngle,
    },
    Ry {
        target: usize,
        angle: ExactAngle,
    },
    Phase {
        target: usize,
        angle: ExactAngle,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    /// Rotation fired when the controls read `pattern`.
    Mcr {
        axis: Axis,
        controls: Vec<usize>,
        pattern: Vec<bool>,
        target: usize,
        angle: ExactAngle,
    },
    /// X fired when every control reads 1.
    Mcx {
        controls: Vec<usize>,
        target: usize,
    },
    /// Phase gate fired when the controls read `pattern`.
    Mcp {
        controls: Vec<usize>,
        pattern: Vec<bool>,
        target: usize,
        angle: ExactAngle,
    },
    /// Applies the rotation `angles[c]` where `c` is the control register value.
    Ucr {
        axis: Axis,
        controls: Vec<usize>,
        target: usize,
        angles: AngleVector,
    },
}

impl Gate {
    pub fn rotation(axis: Axis, target: usize, angle: ExactAngle) -> Gate {
        match axis {
            Axis::Z => Gate::Rz { target, angle },
            Axis::Y => Gate::Ry { target, angle },
        }
    }

    pub fn cnot(control: usize, target: usize) -> Gate {
        Gate::Cnot { control, target }
    }

    /// All-ones controlled rotation.
    pub fn controlled_rotation(
        axis: Axis,
        controls: Vec<usize>,
        target: usize,
        angle: ExactAngle,
    ) -> Gate {
        let pattern = alloc::vec![true; controls.len()];
        Gate::Mcr {
            axis,
            controls,
            pattern,
            target,
            angle,
        }
    }

    pub fn is_lowered(&self) -> bool {
        matches!(
            self,
            Gate::X { .. }
                | Gate::H { .. }
                | Gate::Rz { .. }
                | Gate::Ry { .. }
                | Gate::Phase { .. }
                | Gate::Cnot { .. }
        )
    }

    pub fn is_cnot(&self) -> bool {
        matches!(self, Gate::Cnot { .. })
    }

    pub fn target(&self) -> usize {
        match self {
            Gate::X { target }
            | Gate::H { target }
            | Gate::Rz { target, .. }
            | Gate::Ry { target, .. }
            | Gate::Phase { target, .. }
            | Gate::Cnot { target, .. }
            | Gate::Mcr { target, .. }
            | Gate::Mcx { target, .. }
            | Gate::Mcp { target, .. }
            | Gate::Ucr { target, .. } => *target,
        }
    }

    pub fn controls(&self) -> &[usize] {
        match self {
            Gate::Cnot { control, .. } => core::slice::from_ref(control),
            Gate::Mcr { controls, .. }
            | Gate::Mcx { controls, .. }
            | Gate::Mcp { controls, .. }
            | Gate::Ucr { controls, .. } => controls,
            _ => &[],
        }
    }

    /// Controls followed by the target.
    pub fn qubits(&self) -> Vec<usize> {
        let mut q = self.controls().to_vec();
        q.push(self.target());
        q
    }

    /// Angles carried by the gate, in storage order.
    pub fn angles(&self) -> Vec<&ExactAngle> {
        match self {
            Gate::Rz { angle, .. }
            | Gate::Ry { angle, .. }
            | Gate::Phase { angle, .. }
            | Gate::Mcr { angle, .. }
            | Gate::Mcp { angle, .. } => alloc::vec![angle],
            Gate::Ucr { angles, .. } => angles.iter().collect(),
            _ => Vec::new(),
        }
    }

    pub fn validate(&self, width: usize) -> Result<()> {
        let qubits = self.qubits();
        for (i, &q) in qubits.iter().enumerate() {
            if q >= width {
                return Err(Error::QubitOutOfRange { qubit: q, width });
            }
            if qubits[..i].contains(&q) {
                return Err(Error::DuplicateQubit(q));
            }
        }
        match self {
            Gate::Mcr {
                controls, pattern, ..
            }
            | Gate::Mcp {
                controls, pattern, ..
            } if pattern.len() != controls.len() => Err(Error::PatternMismatch {
                pattern: pattern.len(),
                controls: controls.len(),
            }),
            Gate::Ucr {
                controls, angles, ..
            } if angles.len() != 1 << controls.len() => Err(Error::LengthMismatch {
                expected: 1 << controls.len(),
                found: angles.len(),
            }),
            _ => Ok(()),
        }
    }

    pub fn inverse(&self) -> Gate {
        match self {
            Gate::Rz { target, angle } => Gate::Rz {
                target: *target,
                angle: -angle,
            },
            Gate::Ry { target, angle } => Gate::Ry {
                target: *target,
                angle: -angle,
            },
            Gate::Phase { target, angle } => Gate::Phase {
                target: *target,
                angle: -angle,
            },
            Gate::Mcr {
                axis,
                controls,
                pattern,
                target,
                angle,
            } => Gate::Mcr {
                axis: *axis,
                controls: controls.clone(),
                pattern: pattern.clone(),
                target: *target,
                angle: -angle,
            },
            Gate::Mcp {
                controls,
                pattern,
                target,
                angle,
            } => Gate::Mcp {
                controls: controls.clone(),
                pattern: pattern.clone(),
                target: *target,
                angle: -angle,
            },
            Gate::Ucr {
                axis,
                controls,
                target,
                angles,
            } => Gate::Ucr {
                axis: *axis,
                controls: controls.clone(),
                target: *target,
                angles: angles.negated(),
            },
            other => other.clone(),
        }
    }

    /// Renames every qubit `q` to `perm[q]`.
    pub fn relabel(&self, perm: &[usize]) -> Gate {
        let map = |qs: &[usize]| qs.iter().map(|&q| perm[q]).collect::<Vec<_>>();
        match self {
            Gate::X { target } => Gate::X {
                target: perm[*target],
            },
            Gate::H { target } => Gate::H {
                target: perm[*target],
            },
            Gate::Rz { target, angle } => Gate::Rz {
                target: perm[*target],
                angle: angle.clone(),
            },
            Gate::Ry { target, angle } => Gate::Ry {
                target: perm[*target],
                angle: angle.clone(),
            },
            Gate::Phase { target, angle } => Gate::Phase {
                target: perm[*target],
                angle: angle.clone(),
            },
            Gate::Cnot { control, target } => Gate::Cnot {
                control: perm[*control],
                target: perm[*target],
            },
            Gate::Mcr {
                axis,
                controls,
                pattern,
                target,
                angle,
            } => Gate::Mcr {
                axis: *axis,
                controls: map(controls),
                pattern: pattern.clone(),
                target: perm[*target],
                angle: angle.clone(),
            },
            Gate::Mcx { controls, target } => Gate::Mcx {
                controls: map(controls),
                target: perm[*target],
            },
            Gate::Mcp {
                controls,
                pattern,
                target,
                angle,
            } => Gate::Mcp {
                controls: map(controls),
                pattern: pattern.clone(),
                target: perm[*target],
                angle: angle.clone(),
            },
            Gate::Ucr {
                axis,
                controls,
                target,
                angles,
            } => Gate::Ucr {
                axis: *axis,
                controls: map(controls),
                target: perm[*target],
                angles: angles.clone(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::pi_frac;

    #[test]
    fn validation_rejects_bad_indices() {
        assert_eq!(
            Gate::cnot(0, 2).validate(2),
            Err(Error::QubitOutOfRange { qubit: 2, width: 2 })
        );
        assert_eq!(Gate::cnot(1, 1).validate(2), Err(Error::DuplicateQubit(1)));
        let mcr = Gate::Mcr {
            axis: Axis::Z,
            controls: alloc::vec![0, 1],
            pattern: alloc::vec![true],
            target: 2,
            angle: pi_frac(1, 3),
        };
        assert_eq!(
            mcr.validate(3),
            Err(Error::PatternMismatch {
                pattern: 1,
                controls: 2
            })
        );
        let ucr = Gate::Ucr {
            axis: Axis::Y,
            controls: alloc::vec![0],
            target: 1,
            angles: AngleVector::zeros(2),
        };
        assert_eq!(
            ucr.validate(2),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 4
            })
        );
    }

    #[test]
    fn inverse_negates_angles() {
        let g = Gate::Phase {
            target: 0,
            angle: pi_frac(3, 5),
        };
        assert_eq!(
            g.inverse(),
            Gate::Phase {
                target: 0,
                angle: pi_frac(-3, 5)
            }
        );
        assert_eq!(Gate::cnot(0, 1).inverse(), Gate::cnot(0, 1));
    }
}
