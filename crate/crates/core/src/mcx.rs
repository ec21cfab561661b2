//! Multi-controlled X over one borrowed (dirty) ancilla.
//!
//! For `c >= 3` controls the construction uses exactly `24c - 52` CNOTs:
//! the controls split into halves `C1` (size `ceil(c/2)`) and `C2`, and the
//! circuit is `A, B, A^-1, B` where `A` flips the ancilla on `AND(C1)` up to a
//! diagonal phase, and `B` is an exact `|C2| + 1`-controlled X onto the target.
//! Both halves are linear chains of Toffolis that borrow the other half's
//! qubits. A diagonal phase left by `A` cancels against `A^-1` because `B`
//! never touches the qubits that phase depends on except as controls.

use alloc::vec::Vec;

use crate::angle::{pi_frac, ExactAngle};
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;

fn quarter() -> ExactAngle {
    pi_frac(1, 4)
}

/// Exact Toffoli with 6 CNOTs; `P(pi/2)` is the T gate.
pub fn toffoli(a: usize, b: usize, t: usize) -> Vec<Gate> {
    let p = |q, sign: i64| Gate::Phase {
        target: q,
        angle: pi_frac(sign, 2),
    };
    alloc::vec![
        Gate::H { target: t },
        Gate::cnot(b, t),
        p(t, -1),
        Gate::cnot(a, t),
        p(t, 1),
        Gate::cnot(b, t),
        p(t, -1),
        Gate::cnot(a, t),
        p(b, 1),
        p(t, 1),
        Gate::H { target: t },
        Gate::cnot(a, b),
        p(a, 1),
        p(b, -1),
        Gate::cnot(a, b),
    ]
}

/// Toffoli up to a diagonal phase, 3 CNOTs.
pub fn relative_toffoli_3cx(a: usize, b: usize, t: usize) -> Vec<Gate> {
    let ry = |angle| Gate::Ry { target: t, angle };
    alloc::vec![
        ry(quarter()),
        Gate::cnot(b, t),
        ry(quarter()),
        Gate::cnot(a, t),
        ry(-quarter()),
        Gate::cnot(b, t),
        ry(-quarter()),
    ]
}

/// Toffoli up to a phase that depends on the controls only, 4 CNOTs.
pub fn relative_toffoli_4cx(a: usize, b: usize, t: usize) -> Vec<Gate> {
    let rz = |angle| Gate::Rz { target: t, angle };
    alloc::vec![
        Gate::H { target: t },
        rz(quarter()),
        Gate::cnot(a, t),
        rz(-quarter()),
        Gate::cnot(b, t),
        rz(quarter()),
        Gate::cnot(a, t),
        rz(-quarter()),
        Gate::cnot(b, t),
        Gate::H { target: t },
    ]
}

fn invert(gates: &[Gate]) -> Vec<Gate> {
    gates.iter().rev().map(Gate::inverse).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Chain {
    /// Exact outer Toffolis; the result is an exact multi-controlled X.
    Exact,
    /// Four-CNOT gadgets on the outside; the result is correct up to a diagonal phase.
    Relative,
}

/// `m`-controlled X onto `target` borrowing `ancillas[..m - 2]`:
/// `[top, V, top, V^-1]` where `V` walks the ancilla ladder down and back up.
fn chain(xs: &[usize], target: usize, ancillas: &[usize], kind: Chain) -> Vec<Gate> {
    let m = xs.len();
    let outer = |a, b, t| match kind {
        Chain::Exact => toffoli(a, b, t),
        Chain::Relative => relative_toffoli_4cx(a, b, t),
    };
    match m {
        0 => return alloc::vec![Gate::X { target }],
        1 => return alloc::vec![Gate::cnot(xs[0], target)],
        2 => return outer(xs[0], xs[1], target),
        _ => {}
    }
    debug_assert!(ancillas.len() >= m - 2);
    let top = outer(xs[m - 1], ancillas[m - 3], target);
    let mut ladder = Vec::new();
    for j in (2..=m - 2).rev() {
        ladder.extend(relative_toffoli_3cx(
            xs[j],
            ancillas[j - 2],
            ancillas[j - 1],
        ));
    }
    ladder.extend(match kind {
        Chain::Exact => relative_toffoli_3cx(xs[0], xs[1], ancillas[0]),
        Chain::Relative => relative_toffoli_4cx(xs[0], xs[1], ancillas[0]),
    });
    for j in 2..=m - 2 {
        ladder.extend(relative_toffoli_3cx(
            xs[j],
            ancillas[j - 2],
            ancillas[j - 1],
        ));
    }
    let mut gates = top.clone();
    gates.extend(ladder.iter().cloned());
    gates.extend(top);
    gates.extend(invert(&ladder));
    gates
}

/// CNOT cost of [`mcx`] for `c` controls.
pub fn mcx_cost(c: usize) -> u64 {
    match c {
        0 => 0,
        1 => 1,
        2 => 6,
        _ => 24 * c as u64 - 52,
    }
}

/// Lowered all-ones-controlled X. Three or more controls borrow `ancilla`,
/// which may hold any state and is returned unchanged.
pub fn mcx(controls: &[usize], target: usize, ancilla: Option<usize>) -> Result<Vec<Gate>> {
    let c = controls.len();
    if c < 3 {
        return Ok(chain(controls, target, &[], Chain::Exact));
    }
    let anc = ancilla.ok_or(Error::MissingAncilla { controls: c })?;
    if anc == target || controls.contains(&anc) {
        return Err(Error::DuplicateQubit(anc));
    }
    let (first, second) = controls.split_at(c.div_ceil(2));
    let a = chain(first, anc, second, Chain::Relative);
    let mut b_controls = second.to_vec();
    b_controls.push(anc);
    let b = chain(&b_controls, target, first, Chain::Exact);
    let mut gates = a.clone();
    gates.extend(b.iter().cloned());
    gates.extend(invert(&a));
    gates.extend(b);
    Ok(gates)
}

/// [`mcx`] on its own register: controls `0..c`, target `c`, ancilla `c + 1` when needed.
pub fn mcx_circuit(c: usize) -> Result<Circuit> {
    let controls: Vec<usize> = (0..c).collect();
    let (width, ancilla) = if c >= 3 {
        (c + 2, Some(c + 1))
    } else {
        (c + 1, None)
    };
    Ok(Circuit::from_gates(width, mcx(&controls, c, ancilla)?))
}
