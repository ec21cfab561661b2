use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gate::Gate;

/// An ordered gate list over `width` qubits. Qubit 0 is the most significant
/// bit of a basis label.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Circuit {
    pub width: usize,
    pub gates: Vec<Gate>,
    /// Basis state the circuit expects as input; `None` means all zeros.
    pub initial_state: Option<Vec<bool>>,
}

impl Circuit {
    pub fn new(width: usize) -> Self {
        Circuit {
            width,
            gates: Vec::new(),
            initial_state: None,
        }
    }

    pub fn from_gates(width: usize, gates: Vec<Gate>) -> Self {
        Circuit {
            width,
            gates,
            initial_state: None,
        }
    }

    pub fn push(&mut self, gate: Gate) {
        self.gates.push(gate);
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) {
        self.gates.extend(gates);
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(bits) = &self.initial_state {
            if bits.len() != self.width {
                return Err(Error::LengthMismatch {
                    expected: self.width,
                    found: bits.len(),
                });
            }
        }
        self.gates.iter().try_for_each(|g| g.validate(self.width))
    }

    pub fn is_lowered(&self) -> bool {
        self.gates.iter().all(Gate::is_lowered)
    }

    /// Position of the first macro gate, if any.
    pub fn first_macro(&self) -> Option<usize> {
        self.gates.iter().position(|g| !g.is_lowered())
    }

    /// Reversed order with every gate inverted.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            initial_state: None,
        }
    }

    /// Renames every qubit `q` to `perm[q]`.
    pub fn relabel(&self, perm: &[usize]) -> Circuit {
        let initial_state = self.initial_state.as_ref().map(|bits| {
            let mut out = alloc::vec![false; bits.len()];
            for (q, &b) in bits.iter().enumerate() {
                out[perm[q]] = b;
            }
            out
        });
        Circuit {
            width: self.width,
            gates: self.gates.iter().map(|g| g.relabel(perm)).collect(),
            initial_state,
        }
    }

    /// `self` followed by `next`.
    pub fn concat(&self, next: &Circuit) -> Result<Circuit> {
        if self.width != next.width {
            return Err(Error::DimensionMismatch {
                left: self.width,
                right: next.width,
            });
        }
        let mut gates = self.gates.clone();
        gates.extend(next.gates.iter().cloned());
        Ok(Circuit {
            width: self.width,
            gates,
            initial_state: self.initial_state.clone(),
        })
    }

    /// Index of the initial basis state (qubit 0 most significant).
    pub fn initial_index(&self) -> usize {
        self.initial_state.as_deref().map_or(0, basis_index)
    }
}

pub fn basis_index(bits: &[bool]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
}

pub fn basis_label(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn parse_basis_label(label: &str) -> Result<Vec<bool>> {
    label
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::InvalidBasisLabel(label.to_string())),
        })
        .collect()
}
