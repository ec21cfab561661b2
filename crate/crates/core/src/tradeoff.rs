//! CNOT count versus angle granularity: `k` levels of the Gray recursion,
//! then every remaining UCR is rebuilt from multi-controlled rotations whose
//! X conjugations borrow the last control as a dirty ancilla.

use alloc::vec::Vec;

use crate::angle::{AngleVector, ExactAngle};
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::{Axis, Gate};
use crate::gray::gray_code;
use crate::mcx::mcx;
use crate::report::SynthesisReport;
use crate::ucr::{cnot_control_sequence, control_for_label, gray_blocks, lower_ucr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    General,
    /// Target fixed to |1>, z axis only.
    Phase,
}

/// A trade-off instance on `n` qubits: `n - 1` controls and one target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TradeoffPlan {
    pub n: usize,
    pub k: usize,
    pub axis: Axis,
    pub variant: Variant,
}

impl TradeoffPlan {
    pub fn new(n: usize, k: usize, axis: Axis, variant: Variant) -> Result<Self> {
        let plan = TradeoffPlan {
            n,
            k,
            axis,
            variant,
        };
        plan.validate()?;
        Ok(plan)
    }

    /// Smallest allowed `n - k`.
    pub fn slack(variant: Variant) -> usize {
        match variant {
            Variant::General => 5,
            Variant::Phase => 6,
        }
    }

    /// `k <= n - 5` (general) or `k <= n - 6` (phase, z axis only).
    pub fn validate(&self) -> Result<()> {
        let slack = Self::slack(self.variant);
        if self.n < slack || self.k > self.n - slack {
            return Err(Error::BoundViolation {
                n: self.n,
                k: self.k,
                slack,
            });
        }
        if self.variant == Variant::Phase && self.axis != Axis::Z {
            return Err(Error::AxisNotSupported);
        }
        Ok(())
    }

    /// Hash dimension `d = 2^(n-1)`.
    pub fn dimension(&self) -> usize {
        1 << (self.n - 1)
    }
}

/// `k` recursion levels: `2^k` UCRs on the last `m - k` controls, each followed by a CNOT
/// from one of the first `k` controls. A block with no controls left is a plain rotation.
pub fn decomposition1(u: &Gate, k: usize) -> Result<Vec<Gate>> {
    let Gate::Ucr {
        axis,
        controls,
        target,
        angles,
    } = u
    else {
        return Err(Error::UnexpectedGate(alloc::format!("{u:?}")));
    };
    let m = controls.len();
    if k > m {
        return Err(Error::DepthExceedsControls { k, m });
    }
    if k == 0 {
        return Ok(alloc::vec![u.clone()]);
    }
    let (top, rest) = controls.split_at(k);
    let labels = cnot_control_sequence(k)?;
    let mut gates = Vec::with_capacity(2 << k);
    for (block, label) in gray_blocks(angles, k)?.into_iter().zip(labels) {
        gates.push(if rest.is_empty() {
            Gate::rotation(*axis, *target, block[0].clone())
        } else {
            Gate::Ucr {
                axis: *axis,
                controls: rest.to_vec(),
                target: *target,
                angles: block,
            }
        });
        gates.push(Gate::cnot(control_for_label(top, label), *target));
    }
    Ok(gates)
}

/// `C^1(R(theta))` as `[R(theta/2), CNOT, R(-theta/2), CNOT]`.
pub fn controlled_rotation_2q(
    axis: Axis,
    control: usize,
    target: usize,
    theta: &ExactAngle,
) -> Result<Vec<Gate>> {
    let half = theta.half()?;
    Ok(alloc::vec![
        Gate::rotation(axis, target, half.clone()),
        Gate::cnot(control, target),
        Gate::rotation(axis, target, -half),
        Gate::cnot(control, target),
    ])
}

/// All-ones-controlled rotation as `[R(theta/2), MCX, R(-theta/2), MCX]`.
pub fn mcr_via_abxc(
    axis: Axis,
    controls: &[usize],
    target: usize,
    theta: &ExactAngle,
    ancilla: Option<usize>,
) -> Result<Vec<Gate>> {
    if controls.len() < 2 {
        return Err(Error::TooFewControls {
            needed: 2,
            found: controls.len(),
        });
    }
    let half = theta.half()?;
    let flip = mcx(controls, target, ancilla)?;
    let mut gates = alloc::vec![Gate::rotation(axis, target, half.clone())];
    gates.extend(flip.iter().cloned());
    gates.push(Gate::rotation(axis, target, -half));
    gates.extend(flip);
    Ok(gates)
}

/// Two-CNOT rotation multiplexed on one control: `alpha[b]` fires when the control reads `b`.
fn multiplexed_pair(
    axis: Axis,
    control: usize,
    target: usize,
    alpha: &[ExactAngle; 2],
) -> Result<Vec<Gate>> {
    lower_ucr(axis, &[control], target, &AngleVector::new(alpha.to_vec())?)
}

/// One pair of the Gray walk over a UCR's patterns. The pair shares the rest
/// pattern and differs in the last control.
struct Pair {
    rest_pattern: usize,
    /// Last-control value and angle of the first and second member.
    first: (usize, ExactAngle),
    second: (usize, ExactAngle),
}

fn gray_pairs(angles: &AngleVector) -> Vec<Pair> {
    (0..angles.len() / 2)
        .map(|i| {
            let j1 = gray_code(2 * i as u64) as usize;
            let j2 = gray_code(2 * i as u64 + 1) as usize;
            Pair {
                rest_pattern: j1 >> 1,
                first: (j1 & 1, angles[j1].clone()),
                second: (j2 & 1, angles[j2].clone()),
            }
        })
        .collect()
}

fn ucr_parts(u: &Gate, min_controls: usize) -> Result<(Axis, &[usize], usize, &AngleVector)> {
    let Gate::Ucr {
        axis,
        controls,
        target,
        angles,
    } = u
    else {
        return Err(Error::UnexpectedGate(alloc::format!("{u:?}")));
    };
    if controls.len() < min_controls {
        return Err(Error::TooFewControls {
            needed: min_controls,
            found: controls.len(),
        });
    }
    Ok((*axis, controls, *target, angles))
}

/// Tracks which rest controls currently carry an X so that all-ones MCXs fire on a chosen pattern.
struct PatternMask<'a> {
    rest: &'a [usize],
    flipped: Vec<bool>,
}

impl<'a> PatternMask<'a> {
    fn new(rest: &'a [usize]) -> Self {
        PatternMask {
            rest,
            flipped: alloc::vec![false; rest.len()],
        }
    }

    /// X gates moving the mask to `pattern` (rest[0] is the most significant bit).
    fn retarget(&mut self, pattern: usize, out: &mut Vec<Gate>) {
        let len = self.rest.len();
        for (q, &line) in self.rest.iter().enumerate() {
            let want = (pattern >> (len - 1 - q)) & 1 == 0;
            if self.flipped[q] != want {
                out.push(Gate::X { target: line });
                self.flipped[q] = want;
            }
        }
    }

    fn restore(&mut self, out: &mut Vec<Gate>) {
        for (q, &line) in self.rest.iter().enumerate() {
            if self.flipped[q] {
                out.push(Gate::X { target: line });
                self.flipped[q] = false;
            }
        }
    }
}

fn add_half(slot: &mut ExactAngle, theta: &ExactAngle) -> Result<()> {
    *slot = slot.checked_add(&theta.half()?)?;
    Ok(())
}

/// Rebuilds a UCR with `m >= 4` controls from Gray-ordered pairs of
/// multi-controlled rotations. Each pair costs two MCXs on the first `m - 1`
/// controls (borrowing the last control) and one two-CNOT multiplexed rotation;
/// the outer `C^1` halves of consecutive pairs merge into one two-CNOT rotation.
pub fn decomposition2(u: &Gate) -> Result<Vec<Gate>> {
    let (axis, controls, target, angles) = ucr_parts(u, 4)?;
    let (rest, last) = controls.split_at(controls.len() - 1);
    let last = last[0];
    let flip = |gates: &mut Vec<Gate>| -> Result<()> {
        gates.extend(mcx(rest, target, Some(last))?);
        Ok(())
    };
    let mut mask = PatternMask::new(rest);
    let mut gates = Vec::new();
    let mut outer = [ExactAngle::zero(), ExactAngle::zero()];
    for pair in gray_pairs(angles) {
        add_half(&mut outer[pair.first.0], &pair.first.1)?;
        gates.extend(multiplexed_pair(axis, last, target, &outer)?);
        outer = [ExactAngle::zero(), ExactAngle::zero()];
        mask.retarget(pair.rest_pattern, &mut gates);
        flip(&mut gates)?;
        let mut inner = [ExactAngle::zero(), ExactAngle::zero()];
        add_half(&mut inner[pair.first.0], &-&pair.first.1)?;
        add_half(&mut inner[pair.second.0], &-&pair.second.1)?;
        gates.extend(multiplexed_pair(axis, last, target, &inner)?);
        flip(&mut gates)?;
        add_half(&mut outer[pair.second.0], &pair.second.1)?;
    }
    gates.extend(multiplexed_pair(axis, last, target, &outer)?);
    mask.restore(&mut gates);
    Ok(gates)
}

/// Phase-form variant of [`decomposition2`] for `m >= 5` controls, valid when
/// the target holds |1> at every outer rotation. The outer multiplexed pair
/// `(a0, a1)` becomes `Rz((a1 - a0)/2)` on the last control with global phase
/// `(a0 + a1)/4`, and each adjacent MCX pair merges into one MCX that skips
/// the control whose pattern bit changes. Returns the gates and the global phase.
pub fn decomposition2_phase(u: &Gate) -> Result<(Vec<Gate>, ExactAngle)> {
    let (axis, controls, target, angles) = ucr_parts(u, 5)?;
    if axis != Axis::Z {
        return Err(Error::AxisNotSupported);
    }
    let (rest, last) = controls.split_at(controls.len() - 1);
    let last = last[0];
    let mut phase = ExactAngle::zero();
    let mut outer_rotation = |outer: &[ExactAngle; 2], gates: &mut Vec<Gate>| -> Result<()> {
        phase = phase.checked_add(&outer[0].checked_add(&outer[1])?.div_pow2(2)?)?;
        gates.push(Gate::Rz {
            target: last,
            angle: outer[1].half_diff(&outer[0])?,
        });
        Ok(())
    };
    let pairs = gray_pairs(angles);
    let mut mask = PatternMask::new(rest);
    let mut gates = Vec::new();
    let mut outer = [ExactAngle::zero(), ExactAngle::zero()];
    for (i, pair) in pairs.iter().enumerate() {
        add_half(&mut outer[pair.first.0], &pair.first.1)?;
        if i == 0 {
            outer_rotation(&outer, &mut gates)?;
            mask.retarget(pair.rest_pattern, &mut gates);
            gates.extend(mcx(rest, target, Some(last))?);
        } else {
            let changed = pairs[i - 1].rest_pattern ^ pair.rest_pattern;
            let skip = rest.len() - 1 - changed.trailing_zeros() as usize;
            let kept: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != skip)
                .map(|(_, &l)| l)
                .collect();
            gates.extend(mcx(&kept, target, Some(last))?);
            outer_rotation(&outer, &mut gates)?;
            mask.retarget(pair.rest_pattern, &mut gates);
        }
        outer = [ExactAngle::zero(), ExactAngle::zero()];
        let mut inner = [ExactAngle::zero(), ExactAngle::zero()];
        add_half(&mut inner[pair.first.0], &-&pair.first.1)?;
        add_half(&mut inner[pair.second.0], &-&pair.second.1)?;
        gates.extend(multiplexed_pair(axis, last, target, &inner)?);
        add_half(&mut outer[pair.second.0], &pair.second.1)?;
    }
    gates.extend(mcx(rest, target, Some(last))?);
    outer_rotation(&outer, &mut gates)?;
    mask.restore(&mut gates);
    Ok((gates, phase))
}

fn plan_ucr(plan: &TradeoffPlan, angles: &AngleVector) -> Result<Gate> {
    plan.validate()?;
    if angles.len() != plan.dimension() {
        return Err(Error::LengthMismatch {
            expected: plan.dimension(),
            found: angles.len(),
        });
    }
    Ok(Gate::Ucr {
        axis: plan.axis,
        controls: (0..plan.n - 1).collect(),
        target: plan.n - 1,
        angles: angles.clone(),
    })
}

/// The general pipeline on `n` qubits: controls `0..n-1`, target `n - 1`.
pub fn synthesize_tradeoff(plan: &TradeoffPlan, angles: &AngleVector) -> Result<SynthesisReport> {
    if plan.variant != Variant::General {
        return synthesize_tradeoff_phase(plan, angles);
    }
    let u = plan_ucr(plan, angles)?;
    let mut gates = Vec::new();
    for g in decomposition1(&u, plan.k)? {
        match g {
            Gate::Ucr { .. } => gates.extend(decomposition2(&g)?),
            other => gates.push(other),
        }
    }
    SynthesisReport::new(
        Circuit::from_gates(plan.n, gates),
        ExactAngle::zero(),
        predicted_cnot_count(plan)?,
    )
}

/// The phase pipeline. The circuit declares the target as |1> in its initial state.
pub fn synthesize_tradeoff_phase(
    plan: &TradeoffPlan,
    angles: &AngleVector,
) -> Result<SynthesisReport> {
    if plan.variant != Variant::Phase {
        return synthesize_tradeoff(plan, angles);
    }
    let u = plan_ucr(plan, angles)?;
    let mut gates = Vec::new();
    let mut phase = ExactAngle::zero();
    for g in decomposition1(&u, plan.k)? {
        match g {
            Gate::Ucr { .. } => {
                let (block, block_phase) = decomposition2_phase(&g)?;
                gates.extend(block);
                phase = phase.checked_add(&block_phase)?;
            }
            other => gates.push(other),
        }
    }
    let mut circuit = Circuit::from_gates(plan.n, gates);
    let mut initial = alloc::vec![false; plan.n];
    initial[plan.n - 1] = true;
    circuit.initial_state = Some(initial);
    SynthesisReport::new(circuit, phase, predicted_cnot_count(plan)?)
}

fn pow2(e: usize) -> Result<i128> {
    if e >= 120 {
        return Err(Error::CountOverflow);
    }
    Ok(1i128 << e)
}

fn formula(plan: &TradeoffPlan) -> Result<i128> {
    plan.validate()?;
    let (n, k) = (plan.n as i128, plan.k as i128);
    let value = match plan.variant {
        Variant::General => 3 * pow2(plan.k)? + pow2(plan.n)? * (12 * (n - k) - 49),
        Variant::Phase => {
            pow2(plan.k)? * (24 * (n - k) - 75) + pow2(plan.n - 1)? * (12 * (n - k) - 61)
        }
    };
    Ok(value)
}

/// `3*2^k + 2^n*(12(n-k) - 49)` (general) or
/// `2^k*(24(n-k) - 75) + 2^(n-1)*(12(n-k) - 61)` (phase).
pub fn predicted_cnot_count(plan: &TradeoffPlan) -> Result<u64> {
    u64::try_from(formula(plan)?).map_err(|_| Error::CountOverflow)
}

/// Count of the earlier trade-off construction: `2^k + d*(96(log d - k) - 384)`.
pub fn prior_cnot_count(plan: &TradeoffPlan) -> Result<i128> {
    plan.validate()?;
    let log_d = plan.n as i128 - 1;
    Ok(pow2(plan.k)? + pow2(plan.n - 1)? * (96 * (log_d - plan.k as i128) - 384))
}

/// `prior_cnot_count - predicted_cnot_count`.
pub fn savings_vs_prior(plan: &TradeoffPlan) -> Result<i128> {
    Ok(prior_cnot_count(plan)? - formula(plan)?)
}

/// `2^m` angles `pi * n_j / 251` with `n_0 = 1` and every other `n_j` even.
/// Every signed sum then has an odd numerator, so each halving level shows up
/// as exactly one more factor of two in the rotation denominators.
pub fn granularity_instance(m: usize) -> AngleVector {
    let v = (0..1u64 << m)
        .map(|j| {
            let n = if j == 0 {
                1
            } else {
                2 * ((7 * j * j + 3) % 125) as i64
            };
            ExactAngle::frac_pi(n, 251).expect("nonzero denominator")
        })
        .collect();
    AngleVector::new(v).expect("power of two")
}
