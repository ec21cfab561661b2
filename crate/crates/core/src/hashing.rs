//! Quantum hashing over `Z_q`: epsilon-biased parameter sets, hash angles,
//! reference states and the synthesis pipelines that prepare them.
//!
//! The phase-form hash of `x` is `(1/sqrt d) sum_j e^{i 2 pi s_j x / q} |j>`; the
//! amplitude form carries `cos(2 pi s_j x / q)|0> + sin(2 pi s_j x / q)|1>` on
//! an extra target line. Both are driven by the angles `4 pi s_j x / q`.
//!
//! When `|S|` is not a power of two the register has `d = 2^m > |S|` slots.
//! [`reference_hash_state`] keeps its support on the first `|S|` states with
//! norm `1/sqrt|S|`; circuits prepare [`padded_hash_state`], which treats the
//! extra slots as parameters with angle 0. The two agree when `|S| = 2^m`.

use alloc::vec::Vec;

use core::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Float;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::angle::{AngleVector, ExactAngle};
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::{Axis, Gate};
use crate::phase_opt::{synthesize_phase_hash, synthesize_phase_hash_exact, PhaseHashCircuitSpec};
use crate::report::SynthesisReport;
use crate::sim::{fidelity, run, StateVector};
use crate::tradeoff::{synthesize_tradeoff, TradeoffPlan, Variant};
use crate::ucr::lower_ucr;

/// Largest modulus [`bias`] tabulates.
pub const MAX_BIAS_MODULUS: u64 = 1 << 24;
/// Largest modulus [`collision_audit`] enumerates all pairs for.
pub const MAX_AUDIT_MODULUS: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HashForm {
    Phase,
    Amplitude,
}

/// Distinct elements of `Z_q` with their bias.
///
/// `certified` means `epsilon` is the exact maximum over every nonzero `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiasedSet {
    pub q: u64,
    pub elements: Vec<u64>,
    pub epsilon: f64,
    pub certified: bool,
    pub seed: Option<u64>,
}

impl BiasedSet {
    /// Validates `elements` and certifies them by exhaustive evaluation.
    pub fn certify(q: u64, elements: Vec<u64>, seed: Option<u64>) -> Result<Self> {
        let epsilon = bias(&elements, q)?;
        Ok(BiasedSet {
            q,
            elements,
            epsilon,
            certified: true,
            seed,
        })
    }

    pub fn d(&self) -> usize {
        self.elements.len()
    }

    pub fn validate(&self) -> Result<()> {
        validate_set(&self.elements, self.q)
    }

    /// Register qubits needed for the padded parameter list.
    pub fn register_width(&self) -> usize {
        self.d().next_power_of_two().trailing_zeros() as usize
    }
}

fn validate_set(elements: &[u64], q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::ModulusTooSmall(q));
    }
    if elements.is_empty() {
        return Err(Error::EmptySet);
    }
    if elements.len() as u64 > q {
        return Err(Error::SetTooLarge {
            d: elements.len(),
            q,
        });
    }
    let mut seen = alloc::collections::BTreeSet::new();
    for &s in elements {
        if s >= q {
            return Err(Error::ElementOutOfRange { element: s, q });
        }
        if !seen.insert(s) {
            return Err(Error::DuplicateElement(s));
        }
    }
    Ok(())
}

/// `e^{i 2 pi r / q}` for `r < q`.
fn roots_of_unity(q: u64) -> Vec<Complex64> {
    (0..q)
        .map(|r| Complex64::cis(2.0 * PI * r as f64 / q as f64))
        .collect()
}

fn mul_mod(a: u64, b: u64, q: u64) -> usize {
    ((a as u128 * b as u128) % q as u128) as usize
}

/// `max_{x != 0} (1/d) |sum_j e^{i 2 pi s_j x / q}|`, clamped to `[0, 1]`.
pub fn bias(elements: &[u64], q: u64) -> Result<f64> {
    validate_set(elements, q)?;
    if q > MAX_BIAS_MODULUS {
        return Err(Error::AuditTooLarge {
            q,
            limit: MAX_BIAS_MODULUS,
        });
    }
    // Every nonzero character sums to zero over the whole group.
    if elements.len() as u64 == q {
        return Ok(0.0);
    }
    let table = roots_of_unity(q);
    let d = elements.len() as f64;
    let mut worst: f64 = 0.0;
    for x in 1..q {
        let sum: Complex64 = elements.iter().map(|&s| table[mul_mod(s, x, q)]).sum();
        worst = worst.max(sum.norm() / d);
    }
    Ok(worst.min(1.0))
}

/// Outcome of [`find_biased_set`]; running out of budget is not an error.
#[derive(Clone, Debug, PartialEq)]
pub enum SearchResult {
    Found(BiasedSet),
    Exhausted { tried: u64, best_bias: Option<f64> },
    Infeasible(&'static str),
}

/// Samples uniform `d`-subsets of `Z_q` from a seeded stream until one has bias
/// at most `epsilon_target`, trying at most `budget` candidates.
pub fn find_biased_set(
    q: u64,
    d: usize,
    epsilon_target: f64,
    budget: u64,
    seed: u64,
) -> SearchResult {
    if q < 2 {
        return SearchResult::Infeasible("modulus must be at least 2");
    }
    if d == 0 {
        return SearchResult::Infeasible("set size must be positive");
    }
    if d as u64 > q {
        return SearchResult::Infeasible("set size exceeds the modulus");
    }
    if q > MAX_BIAS_MODULUS {
        return SearchResult::Infeasible("modulus too large to certify");
    }
    if d as u64 == q {
        let full = BiasedSet {
            q,
            elements: (0..q).collect(),
            epsilon: 0.0,
            certified: true,
            seed: Some(seed),
        };
        return if epsilon_target >= 0.0 {
            SearchResult::Found(full)
        } else {
            SearchResult::Exhausted {
                tried: 1,
                best_bias: Some(0.0),
            }
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<f64> = None;
    for _ in 0..budget {
        let mut elements: Vec<u64> = index::sample(&mut rng, q as usize, d)
            .into_iter()
            .map(|i| i as u64)
            .collect();
        elements.sort_unstable();
        let b = bias(&elements, q).expect("sampled set is valid");
        if b <= epsilon_target {
            return SearchResult::Found(BiasedSet {
                q,
                elements,
                epsilon: b,
                certified: true,
                seed: Some(seed),
            });
        }
        best = Some(best.map_or(b, |v: f64| v.min(b)));
    }
    SearchResult::Exhausted {
        tried: budget,
        best_bias: best,
    }
}

/// A hash input: the parameter set, the value to hash and the output form.
#[derive(Clone, Debug, PartialEq)]
pub struct HashSpec {
    pub set: BiasedSet,
    pub x: u64,
    pub form: HashForm,
}

impl HashSpec {
    pub fn new(set: BiasedSet, x: u64, form: HashForm) -> Result<Self> {
        set.validate()?;
        if x >= set.q {
            return Err(Error::InputOutOfRange { x, q: set.q });
        }
        Ok(HashSpec { set, x, form })
    }

    /// Hash-register qubits `m`; the padded register has `2^m` slots.
    pub fn register_width(&self) -> usize {
        self.set.register_width()
    }
}

/// `t_j = 4 pi s_j x / q`, then zeros up to the next power of two.
/// Returns the angles and the number of padded slots.
pub fn hash_angles(spec: &HashSpec) -> Result<(AngleVector, usize)> {
    let q = spec.set.q;
    let mut angles = spec
        .set
        .elements
        .iter()
        .map(|&s| ExactAngle::frac_pi(BigInt::from(4u8) * s * spec.x, q))
        .collect::<Result<Vec<_>>>()?;
    let padding = angles.len().next_power_of_two() - angles.len();
    angles.resize(angles.len() + padding, ExactAngle::zero());
    Ok((AngleVector::new(angles)?, padding))
}

/// Amplitudes `(alpha_j, beta_j)` with `alpha_j = cos(2 pi s_j x / q)`,
/// `beta_j = sin(2 pi s_j x / q)` for the amplitude form and
/// `alpha_j = e^{i 2 pi s_j x / q}`, `beta_j = 0` for the phase form.
fn slot_amplitudes(spec: &HashSpec, angles: &AngleVector) -> Vec<(Complex64, Complex64)> {
    angles
        .iter()
        .map(|a| {
            let half = a.to_f64() / 2.0;
            match spec.form {
                HashForm::Phase => (Complex64::cis(half), Complex64::new(0.0, 0.0)),
                HashForm::Amplitude => (
                    Complex64::new(Float::cos(half), 0.0),
                    Complex64::new(Float::sin(half), 0.0),
                ),
            }
        })
        .collect()
}

fn assemble(
    form: HashForm,
    slots: &[(Complex64, Complex64)],
    support: usize,
    norm: f64,
) -> StateVector {
    let zero = Complex64::new(0.0, 0.0);
    let amps: Vec<Complex64> = match form {
        HashForm::Phase => (0..slots.len())
            .map(|j| if j < support { slots[j].0 * norm } else { zero })
            .collect(),
        HashForm::Amplitude => (0..slots.len())
            .flat_map(|j| {
                if j < support {
                    [slots[j].0 * norm, slots[j].1 * norm]
                } else {
                    [zero, zero]
                }
            })
            .collect(),
    };
    StateVector::from_amplitudes(amps).expect("power-of-two register")
}

/// The hash state with support on the first `|S|` basis states and norm `1/sqrt|S|`.
/// The amplitude form has one more qubit, the least significant.
pub fn reference_hash_state(spec: &HashSpec) -> Result<StateVector> {
    let (angles, padding) = hash_angles(spec)?;
    let support = angles.len() - padding;
    let slots = slot_amplitudes(spec, &angles);
    Ok(assemble(
        spec.form,
        &slots,
        support,
        1.0 / Float::sqrt(support as f64),
    ))
}

/// The state the circuits prepare: every slot populated, padded slots with angle 0.
pub fn padded_hash_state(spec: &HashSpec) -> Result<StateVector> {
    let (angles, _) = hash_angles(spec)?;
    let slots = slot_amplitudes(spec, &angles);
    Ok(assemble(
        spec.form,
        &slots,
        slots.len(),
        1.0 / Float::sqrt(slots.len() as f64),
    ))
}

/// `max_{x != y} |<psi(x)|psi(y)>|` over every pair of inputs.
pub fn collision_audit(set: &BiasedSet, form: HashForm) -> Result<f64> {
    set.validate()?;
    let q = set.q;
    if q > MAX_AUDIT_MODULUS {
        return Err(Error::AuditTooLarge {
            q,
            limit: MAX_AUDIT_MODULUS,
        });
    }
    let table = roots_of_unity(q);
    let d = set.d() as f64;
    // rows[x][j] = e^{i 2 pi s_j x / q}
    let rows: Vec<Vec<Complex64>> = (0..q)
        .map(|x| {
            set.elements
                .iter()
                .map(|&s| table[mul_mod(s, x, q)])
                .collect()
        })
        .collect();
    let mut worst: f64 = 0.0;
    for x in 0..rows.len() {
        for y in x + 1..rows.len() {
            let overlap = match form {
                HashForm::Phase => rows[x]
                    .iter()
                    .zip(&rows[y])
                    .map(|(a, b)| a.conj() * b)
                    .sum::<Complex64>()
                    .norm(),
                HashForm::Amplitude => rows[x]
                    .iter()
                    .zip(&rows[y])
                    .map(|(a, b)| a.re * b.re + a.im * b.im)
                    .sum::<f64>()
                    .abs(),
            };
            worst = worst.max(overlap / d);
        }
    }
    Ok(worst.min(1.0))
}

/// A circuit construction for the hash state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    /// Gray-code UCR onto a target line: `|1>` for the phase form, `|0>` for the amplitude form.
    Baseline,
    /// One-stage ancilla-free phase construction with `d/2` CNOTs.
    PhaseOpt,
    /// Recursive ancilla-free phase construction with `d - 2` CNOTs.
    PhaseExact,
    Tradeoff {
        k: usize,
        variant: Variant,
    },
}

fn axis_for(form: HashForm) -> Axis {
    match form {
        HashForm::Phase => Axis::Z,
        HashForm::Amplitude => Axis::Y,
    }
}

/// `H` on the register and, for the phase form, `X` on the target.
fn preparation(m: usize, form: HashForm) -> Vec<Gate> {
    let mut gates: Vec<Gate> = (0..m).map(|q| Gate::H { target: q }).collect();
    if form == HashForm::Phase {
        gates.push(Gate::X { target: m });
    }
    gates
}

/// Builds a lowered circuit preparing [`padded_hash_state`] from the all-zero state.
///
/// The phase-form pipelines with a target line leave it in `|1>`.
pub fn synthesize_hash(spec: &HashSpec, pipeline: Pipeline) -> Result<SynthesisReport> {
    let (angles, _) = hash_angles(spec)?;
    let m = angles.control_count();
    let axis = axis_for(spec.form);
    match pipeline {
        Pipeline::Baseline => {
            let mut gates = preparation(m, spec.form);
            let controls: Vec<usize> = (0..m).collect();
            gates.extend(lower_ucr(axis, &controls, m, &angles)?);
            SynthesisReport::new(
                Circuit::from_gates(m + 1, gates),
                ExactAngle::zero(),
                1 << m,
            )
        }
        Pipeline::PhaseOpt | Pipeline::PhaseExact => {
            if spec.form != HashForm::Phase {
                return Err(Error::AxisNotSupported);
            }
            let phase_spec = PhaseHashCircuitSpec::new(angles, false);
            if pipeline == Pipeline::PhaseOpt {
                synthesize_phase_hash(&phase_spec)
            } else {
                synthesize_phase_hash_exact(&phase_spec)
            }
        }
        Pipeline::Tradeoff { k, variant } => {
            if variant == Variant::Phase && spec.form != HashForm::Phase {
                return Err(Error::AxisNotSupported);
            }
            let plan = TradeoffPlan::new(m + 1, k, axis, variant)?;
            let inner = synthesize_tradeoff(&plan, &angles)?;
            let mut gates = preparation(m, spec.form);
            gates.extend(inner.circuit.gates);
            SynthesisReport::new(
                Circuit::from_gates(m + 1, gates),
                inner.global_phase,
                inner.predicted_cnots,
            )
        }
    }
}

/// The state `circuit` is compared against: [`padded_hash_state`], with the
/// phase-form target line in `|1>` appended when the circuit carries one.
pub fn expected_output(spec: &HashSpec, circuit: &Circuit) -> Result<StateVector> {
    let reference = padded_hash_state(spec)?;
    if spec.form == HashForm::Phase && circuit.width == reference.width() + 1 {
        return Ok(reference.tensor_bit(true));
    }
    if circuit.width != reference.width() {
        return Err(Error::WidthMismatch {
            circuit: circuit.width,
            state: reference.width(),
        });
    }
    Ok(reference)
}

/// `|<expected|output>|` for the circuit run from its declared initial state.
pub fn hash_fidelity(spec: &HashSpec, circuit: &Circuit) -> Result<f64> {
    let expected = expected_output(spec, circuit)?;
    fidelity(&expected, &run(circuit)?)
}

/// Largest amplitude error of `e^{i global_phase} * output` against the expected state.
pub fn hash_state_error(spec: &HashSpec, report: &SynthesisReport) -> Result<f64> {
    let expected = expected_output(spec, &report.circuit)?;
    let out = run(&report.circuit)?.scaled(Complex64::cis(report.global_phase.to_f64()));
    Ok(out
        .amplitudes()
        .iter()
        .zip(expected.amplitudes())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::pi_frac;

    fn set(q: u64, elements: &[u64]) -> BiasedSet {
        BiasedSet::certify(q, elements.to_vec(), None).unwrap()
    }

    /// Direct summation with `cos`/`sin` evaluated per term.
    fn bias_oracle(elements: &[u64], q: u64) -> f64 {
        (1..q)
            .map(|x| {
                let (mut re, mut im) = (0.0f64, 0.0f64);
                for &s in elements {
                    let t = 2.0 * PI * ((s * x) % q) as f64 / q as f64;
                    re += t.cos();
                    im += t.sin();
                }
                (re * re + im * im).sqrt() / elements.len() as f64
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn bias_examples() {
        assert_eq!(bias(&(0..13).collect::<Vec<_>>(), 13).unwrap(), 0.0);
        assert_eq!(bias(&[0], 11).unwrap(), 1.0);
        let b = bias(&[1, 2, 4], 7).unwrap();
        assert!((b - bias_oracle(&[1, 2, 4], 7)).abs() < 1e-14);
        // Quadratic residues: each nonzero sum is a Gauss period (-1 +- i sqrt 7)/2.
        assert!((b - 2f64.sqrt() / 3.0).abs() < 1e-12, "{b}");
        assert_eq!(bias(&[], 7), Err(Error::EmptySet));
        assert_eq!(bias(&[0], 1), Err(Error::ModulusTooSmall(1)));
        assert_eq!(bias(&[1, 1], 7), Err(Error::DuplicateElement(1)));
        assert_eq!(
            bias(&[9], 7),
            Err(Error::ElementOutOfRange { element: 9, q: 7 })
        );
    }

    #[test]
    fn search_is_certified_and_reproducible() {
        let found = |r| match r {
            SearchResult::Found(s) => s,
            other => panic!("{other:?}"),
        };
        let a = found(find_biased_set(101, 8, 0.75, 500, 42));
        let b = found(find_biased_set(101, 8, 0.75, 500, 42));
        assert_eq!(a, b);
        assert!(a.certified && a.epsilon <= 0.75);
        assert!((a.epsilon - bias_oracle(&a.elements, 101)).abs() < 1e-12);
        let full = found(find_biased_set(17, 17, 0.0, 1, 1));
        assert_eq!((full.epsilon, full.elements.len()), (0.0, 17));
        assert!(matches!(
            find_biased_set(50, 5, 1.0, 1, 3),
            SearchResult::Found(_)
        ));
        assert!(matches!(
            find_biased_set(7, 8, 1.0, 10, 0),
            SearchResult::Infeasible(_)
        ));
        match find_biased_set(101, 8, 0.01, 5, 0) {
            SearchResult::Exhausted {
                tried: 5,
                best_bias: Some(b),
            } => assert!(b > 0.01),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn angle_examples() {
        let spec = |x| HashSpec::new(set(7, &[1, 2, 4]), x, HashForm::Phase).unwrap();
        let (zero, padding) = hash_angles(&spec(0)).unwrap();
        assert_eq!(padding, 1);
        assert!(zero.iter().all(ExactAngle::is_zero));
        let (one, _) = hash_angles(&spec(1)).unwrap();
        let want: Vec<ExactAngle> = [4, 8, 16, 0].iter().map(|&n| pi_frac(n, 7)).collect();
        assert_eq!(one.as_slice(), &want[..]);
        let (three, _) = hash_angles(&spec(3)).unwrap();
        let want: Vec<ExactAngle> = [12, 24, 48, 0].iter().map(|&n| pi_frac(n, 7)).collect();
        assert_eq!(three.as_slice(), &want[..]);
        assert!(HashSpec::new(set(7, &[1]), 7, HashForm::Phase).is_err());
    }

    #[test]
    fn angles_are_linear_in_the_input() {
        let s = set(29, &[0, 3, 7, 11, 20]);
        let angles = |x| {
            hash_angles(&HashSpec::new(s.clone(), x, HashForm::Phase).unwrap())
                .unwrap()
                .0
        };
        for x1 in 0..29 {
            for x2 in [0, 5, 17, 28] {
                let sum = angles((x1 + x2) % 29);
                for ((a, b), c) in angles(x1).iter().zip(angles(x2).iter()).zip(sum.iter()) {
                    assert!(a
                        .checked_add(b)
                        .unwrap()
                        .checked_sub(c)
                        .unwrap()
                        .is_multiple_of_pi(4));
                }
            }
        }
    }

    #[test]
    fn reference_states() {
        let s = set(7, &[1, 2, 4]);
        let phase =
            reference_hash_state(&HashSpec::new(s.clone(), 0, HashForm::Phase).unwrap()).unwrap();
        let r = 1.0 / 3f64.sqrt();
        let expect = [r, r, r, 0.0];
        for (a, e) in phase.amplitudes().iter().zip(expect) {
            assert!((a - Complex64::new(e, 0.0)).norm() < 1e-15);
        }
        let amp = reference_hash_state(&HashSpec::new(s.clone(), 0, HashForm::Amplitude).unwrap())
            .unwrap();
        let expect = [r, 0.0, r, 0.0, r, 0.0, 0.0, 0.0];
        for (a, e) in amp.amplitudes().iter().zip(expect) {
            assert!((a - Complex64::new(e, 0.0)).norm() < 1e-15);
        }
        let three = reference_hash_state(&HashSpec::new(s, 3, HashForm::Phase).unwrap()).unwrap();
        for (j, k) in [3u64, 6, 12].iter().enumerate() {
            let want = Complex64::cis(2.0 * PI * (k % 7) as f64 / 7.0) * r;
            assert!((three.amplitudes()[j] - want).norm() < 1e-14);
        }
    }

    /// Exhaustive pairs over explicitly built reference states.
    fn audit_oracle(s: &BiasedSet, form: HashForm) -> f64 {
        let states: Vec<StateVector> = (0..s.q)
            .map(|x| reference_hash_state(&HashSpec::new(s.clone(), x, form).unwrap()).unwrap())
            .collect();
        let mut worst: f64 = 0.0;
        for x in 0..states.len() {
            for y in x + 1..states.len() {
                worst = worst.max(fidelity(&states[x], &states[y]).unwrap());
            }
        }
        worst
    }

    #[test]
    fn audits() {
        let full = set(5, &[0, 1, 2, 3, 4]);
        assert!(collision_audit(&full, HashForm::Phase).unwrap() < 1e-15);
        for (q, elements) in [
            (7u64, &[1u64, 2, 4][..]),
            (31, &[2, 3, 5, 17]),
            (64, &[1, 9, 20, 33, 40, 51, 63, 0]),
        ] {
            let s = set(q, elements);
            let audit = collision_audit(&s, HashForm::Phase).unwrap();
            assert!((audit - s.epsilon).abs() < 1e-12);
            assert!((audit - audit_oracle(&s, HashForm::Phase)).abs() < 1e-12);
            let amp = collision_audit(&s, HashForm::Amplitude).unwrap();
            assert!((amp - audit_oracle(&s, HashForm::Amplitude)).abs() < 1e-12);
        }
        let big = BiasedSet {
            q: 5000,
            elements: alloc::vec![1],
            epsilon: 1.0,
            certified: false,
            seed: None,
        };
        assert_eq!(
            collision_audit(&big, HashForm::Phase),
            Err(Error::AuditTooLarge {
                q: 5000,
                limit: 4096
            })
        );
    }

    #[test]
    fn pipelines_prepare_the_hash_state() {
        let s = set(101, &[3, 10, 22, 41, 57, 64, 80, 99]);
        for x in [0, 1, 37] {
            let phase = HashSpec::new(s.clone(), x, HashForm::Phase).unwrap();
            let amp = HashSpec::new(s.clone(), x, HashForm::Amplitude).unwrap();
            for (spec, pipeline) in [
                (&phase, Pipeline::Baseline),
                (&phase, Pipeline::PhaseExact),
                (&amp, Pipeline::Baseline),
            ] {
                let rep = synthesize_hash(spec, pipeline).unwrap();
                assert!(rep.prediction_matches);
                assert!(hash_fidelity(spec, &rep.circuit).unwrap() > 1.0 - 1e-9);
                assert!(hash_state_error(spec, &rep).unwrap() < 1e-9, "{pipeline:?}");
            }
        }
        let padded = HashSpec::new(set(7, &[1, 2, 4]), 3, HashForm::Phase).unwrap();
        let rep = synthesize_hash(&padded, Pipeline::Baseline).unwrap();
        assert!(hash_fidelity(&padded, &rep.circuit).unwrap() > 1.0 - 1e-12);
    }

    #[test]
    fn tradeoff_pipelines() {
        let s = set(
            97,
            &(0..32).map(|i| (i * i * 7 + 3) % 97).collect::<Vec<_>>(),
        );
        for form in [HashForm::Phase, HashForm::Amplitude] {
            let spec = HashSpec::new(s.clone(), 11, form).unwrap();
            for k in [0, 1] {
                let rep = synthesize_hash(
                    &spec,
                    Pipeline::Tradeoff {
                        k,
                        variant: Variant::General,
                    },
                )
                .unwrap();
                assert!(hash_fidelity(&spec, &rep.circuit).unwrap() > 1.0 - 1e-9);
                assert_eq!(rep.prediction_matches, k > 0);
            }
        }
    }

    #[test]
    fn phase_only_pipelines_reject_the_amplitude_form() {
        let spec = HashSpec::new(set(7, &[1, 2]), 1, HashForm::Amplitude).unwrap();
        assert_eq!(
            synthesize_hash(&spec, Pipeline::PhaseOpt),
            Err(Error::AxisNotSupported)
        );
    }
}
