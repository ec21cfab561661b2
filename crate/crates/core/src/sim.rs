//! Dense state-vector and unitary oracle.
//!
//! Macro gates act through their defining matrices, never through a lowering
//! pass, so the oracle stays independent of the synthesis code it checks.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{Float, Zero};

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::{Axis, Gate};

/// Widest circuit `unitary_of` accepts.
pub const MAX_SIM_WIDTH: usize = 12;
/// Default entrywise tolerance for unitary comparison.
pub const UNITARY_TOL: f64 = 1e-10;
/// Default tolerance for norms.
pub const NORM_TOL: f64 = 1e-12;

type Mat2 = [[Complex64; 2]; 2];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn expi(theta: f64) -> Complex64 {
    Complex64::cis(theta)
}

/// `Rz(t) = diag(e^{-it/2}, e^{it/2})`.
pub fn rz_matrix(theta: f64) -> Mat2 {
    [
        [expi(-theta / 2.0), c(0.0, 0.0)],
        [c(0.0, 0.0), expi(theta / 2.0)],
    ]
}

/// `Ry(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]`.
pub fn ry_matrix(theta: f64) -> Mat2 {
    let (s, co) = (Float::sin(theta / 2.0), Float::cos(theta / 2.0));
    [[c(co, 0.0), c(-s, 0.0)], [c(s, 0.0), c(co, 0.0)]]
}

/// `P(t) = diag(1, e^{it/2})`.
pub fn phase_matrix(theta: f64) -> Mat2 {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), expi(theta / 2.0)]]
}

pub fn rotation_matrix(axis: Axis, theta: f64) -> Mat2 {
    match axis {
        Axis::Z => rz_matrix(theta),
        Axis::Y => ry_matrix(theta),
    }
}

fn x_matrix() -> Mat2 {
    [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
}

fn h_matrix() -> Mat2 {
    let r = core::f64::consts::FRAC_1_SQRT_2;
    [[c(r, 0.0), c(r, 0.0)], [c(r, 0.0), c(-r, 0.0)]]
}

/// A gate compiled to bit masks and numeric matrices.
enum Kernel {
    Single {
        tmask: usize,
        m: Mat2,
    },
    Diag {
        tmask: usize,
        d0: Complex64,
        d1: Complex64,
    },
    /// Swaps the target pair wherever `i & cmask == cval`.
    Flip {
        cmask: usize,
        cval: usize,
        tmask: usize,
    },
    Controlled {
        cmask: usize,
        cval: usize,
        tmask: usize,
        m: Mat2,
    },
    Multiplexed {
        cmasks: Vec<usize>,
        tmask: usize,
        mats: Vec<Mat2>,
    },
}

fn mask(width: usize, q: usize) -> usize {
    1 << (width - 1 - q)
}

fn pattern_masks(width: usize, controls: &[usize], pattern: &[bool]) -> (usize, usize) {
    controls
        .iter()
        .zip(pattern)
        .fold((0, 0), |(cm, cv), (&q, &b)| {
            let bit = mask(width, q);
            (cm | bit, if b { cv | bit } else { cv })
        })
}

fn compile(gate: &Gate, width: usize) -> Kernel {
    match gate {
        Gate::X { target } => Kernel::Single {
            tmask: mask(width, *target),
            m: x_matrix(),
        },
        Gate::H { target } => Kernel::Single {
            tmask: mask(width, *target),
            m: h_matrix(),
        },
        Gate::Rz { target, angle } => {
            let m = rz_matrix(angle.to_f64());
            Kernel::Diag {
                tmask: mask(width, *target),
                d0: m[0][0],
                d1: m[1][1],
            }
        }
        Gate::Phase { target, angle } => Kernel::Diag {
            tmask: mask(width, *target),
            d0: c(1.0, 0.0),
            d1: expi(angle.to_f64() / 2.0),
        },
        Gate::Ry { target, angle } => Kernel::Single {
            tmask: mask(width, *target),
            m: ry_matrix(angle.to_f64()),
        },
        Gate::Cnot { control, target } => {
            let cm = mask(width, *control);
            Kernel::Flip {
                cmask: cm,
                cval: cm,
                tmask: mask(width, *target),
            }
        }
        Gate::Mcx { controls, target } => {
            let (cmask, cval) = pattern_masks(width, controls, &alloc::vec![true; controls.len()]);
            Kernel::Flip {
                cmask,
                cval,
                tmask: mask(width, *target),
            }
        }
        Gate::Mcr {
            axis,
            controls,
            pattern,
            target,
            angle,
        } => {
            let (cmask, cval) = pattern_masks(width, controls, pattern);
            Kernel::Controlled {
                cmask,
                cval,
                tmask: mask(width, *target),
                m: rotation_matrix(*axis, angle.to_f64()),
            }
        }
        Gate::Mcp {
            controls,
            pattern,
            target,
            angle,
        } => {
            let (cmask, cval) = pattern_masks(width, controls, pattern);
            Kernel::Controlled {
                cmask,
                cval,
                tmask: mask(width, *target),
                m: phase_matrix(angle.to_f64()),
            }
        }
        Gate::Ucr {
            axis,
            controls,
            target,
            angles,
        } => Kernel::Multiplexed {
            cmasks: controls.iter().map(|&q| mask(width, q)).collect(),
            tmask: mask(width, *target),
            mats: angles
                .iter()
                .map(|a| rotation_matrix(*axis, a.to_f64()))
                .collect(),
        },
    }
}

fn mix(amps: &mut [Complex64], i: usize, j: usize, m: &Mat2) {
    let (a, b) = (amps[i], amps[j]);
    amps[i] = m[0][0] * a + m[0][1] * b;
    amps[j] = m[1][0] * a + m[1][1] * b;
}

fn run_kernel(amps: &mut [Complex64], k: &Kernel) {
    let len = amps.len();
    match k {
        Kernel::Single { tmask, m } => {
            let mut base = 0;
            while base < len {
                for i in base..base + tmask {
                    mix(amps, i, i | tmask, m);
                }
                base += 2 * tmask;
            }
        }
        Kernel::Diag { tmask, d0, d1 } => {
            for (i, a) in amps.iter_mut().enumerate() {
                *a *= if i & tmask == 0 { *d0 } else { *d1 };
            }
        }
        Kernel::Flip { cmask, cval, tmask } => {
            for i in 0..len {
                if i & tmask == 0 && i & cmask == *cval {
                    amps.swap(i, i | tmask);
                }
            }
        }
        Kernel::Controlled {
            cmask,
            cval,
            tmask,
            m,
        } => {
            for i in 0..len {
                if i & tmask == 0 && i & cmask == *cval {
                    mix(amps, i, i | tmask, m);
                }
            }
        }
        Kernel::Multiplexed {
            cmasks,
            tmask,
            mats,
        } => {
            for i in 0..len {
                if i & tmask == 0 {
                    let sel = cmasks
                        .iter()
                        .fold(0, |acc, &cm| (acc << 1) | usize::from(i & cm != 0));
                    mix(amps, i, i | tmask, &mats[sel]);
                }
            }
        }
    }
}

fn compile_circuit(c: &Circuit) -> Result<Vec<Kernel>> {
    c.validate()?;
    Ok(c.gates.iter().map(|g| compile(g, c.width)).collect())
}

/// Amplitudes of `2^width` basis states; qubit 0 is the most significant bit.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    width: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn basis(width: usize, index: usize) -> Result<Self> {
        let dim = 1usize << width;
        if index >= dim {
            return Err(Error::QubitOutOfRange {
                qubit: index,
                width: dim,
            });
        }
        let mut amps = alloc::vec![Complex64::zero(); dim];
        amps[index] = c(1.0, 0.0);
        Ok(StateVector { width, amps })
    }

    pub fn zero_state(width: usize) -> Self {
        Self::basis(width, 0).expect("index 0 exists")
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        if !amps.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo(amps.len()));
        }
        Ok(StateVector {
            width: amps.len().trailing_zeros() as usize,
            amps,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm(&self) -> f64 {
        Float::sqrt(self.amps.iter().map(Complex64::norm_sqr).sum::<f64>())
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                circuit: self.width,
                state: other.width,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Appends one qubit in basis state `bit` as the new least significant line.
    pub fn tensor_bit(&self, bit: bool) -> StateVector {
        let mut amps = alloc::vec![Complex64::zero(); self.amps.len() * 2];
        for (i, a) in self.amps.iter().enumerate() {
            amps[2 * i + usize::from(bit)] = *a;
        }
        StateVector {
            width: self.width + 1,
            amps,
        }
    }

    pub fn scaled(&self, factor: Complex64) -> StateVector {
        StateVector {
            width: self.width,
            amps: self.amps.iter().map(|a| a * factor).collect(),
        }
    }
}

/// `|<a|b>|`, clamped to `[0, 1]`.
pub fn fidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    Ok(a.inner(b)?.norm().min(1.0))
}

pub fn apply(c: &Circuit, s: &StateVector) -> Result<StateVector> {
    if c.width != s.width {
        return Err(Error::WidthMismatch {
            circuit: c.width,
            state: s.width,
        });
    }
    let kernels = compile_circuit(c)?;
    let mut out = s.clone();
    for k in &kernels {
        run_kernel(&mut out.amps, k);
    }
    Ok(out)
}

/// Applies `c` to its declared initial basis state.
pub fn run(c: &Circuit) -> Result<StateVector> {
    apply(c, &StateVector::basis(c.width, c.initial_index())?)
}

/// Dense `2^width x 2^width` matrix stored column by column.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryMatrix {
    width: usize,
    cols: Vec<Complex64>,
}

impl UnitaryMatrix {
    pub fn identity(width: usize) -> Self {
        let dim = 1usize << width;
        let mut cols = alloc::vec![Complex64::zero(); dim * dim];
        for i in 0..dim {
            cols[i * dim + i] = c(1.0, 0.0);
        }
        UnitaryMatrix { width, cols }
    }

    /// Row-major entries of a `dim x dim` matrix.
    pub fn from_rows(width: usize, rows: &[Complex64]) -> Result<Self> {
        let dim = 1usize << width;
        if rows.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim * dim,
                right: rows.len(),
            });
        }
        let mut cols = alloc::vec![Complex64::zero(); dim * dim];
        for r in 0..dim {
            for col in 0..dim {
                cols[col * dim + r] = rows[r * dim + col];
            }
        }
        Ok(UnitaryMatrix { width, cols })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        1 << self.width
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.cols[col * self.dim() + row]
    }

    pub fn column(&self, col: usize) -> &[Complex64] {
        let dim = self.dim();
        &self.cols[col * dim..(col + 1) * dim]
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &UnitaryMatrix) -> Result<UnitaryMatrix> {
        if self.width != rhs.width {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: rhs.dim(),
            });
        }
        let dim = self.dim();
        let mut cols = alloc::vec![Complex64::zero(); dim * dim];
        for j in 0..dim {
            for k in 0..dim {
                let b = rhs.cols[j * dim + k];
                if b.is_zero() {
                    continue;
                }
                for i in 0..dim {
                    cols[j * dim + i] += self.cols[k * dim + i] * b;
                }
            }
        }
        Ok(UnitaryMatrix {
            width: self.width,
            cols,
        })
    }

    pub fn apply_state(&self, s: &StateVector) -> Result<StateVector> {
        if self.width != s.width {
            return Err(Error::WidthMismatch {
                circuit: self.width,
                state: s.width,
            });
        }
        let dim = self.dim();
        let mut amps = alloc::vec![Complex64::zero(); dim];
        for (k, a) in s.amps.iter().enumerate() {
            for (i, out) in amps.iter_mut().enumerate() {
                *out += self.cols[k * dim + i] * a;
            }
        }
        Ok(StateVector {
            width: self.width,
            amps,
        })
    }

    /// Largest entrywise deviation of `U^dagger U` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        let dim = self.dim();
        let mut worst: f64 = 0.0;
        for a in 0..dim {
            for b in 0..dim {
                let dot: Complex64 = self
                    .column(a)
                    .iter()
                    .zip(self.column(b))
                    .map(|(x, y)| x.conj() * y)
                    .sum();
                let expect = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - c(expect, 0.0)).norm());
            }
        }
        worst
    }
}

pub fn unitary_of(c: &Circuit) -> Result<UnitaryMatrix> {
    if c.width > MAX_SIM_WIDTH {
        return Err(Error::WidthTooLarge {
            width: c.width,
            limit: MAX_SIM_WIDTH,
        });
    }
    let kernels = compile_circuit(c)?;
    let mut u = UnitaryMatrix::identity(c.width);
    let dim = u.dim();
    for col in u.cols.chunks_mut(dim) {
        for k in &kernels {
            run_kernel(col, k);
        }
    }
    Ok(u)
}

/// The scalar `lambda` with `v = lambda * u`, read off at the largest-modulus entry of `u`.
///
/// For unitaries `v = lambda * u` holds exactly when `u^dagger v = lambda * I`.
pub fn phase_between(u: &UnitaryMatrix, v: &UnitaryMatrix) -> Result<Complex64> {
    if u.width != v.width {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    let (pivot, _) = u.cols.iter().enumerate().fold((0, -1.0), |best, (i, a)| {
        if a.norm() > best.1 {
            (i, a.norm())
        } else {
            best
        }
    });
    Ok(v.cols[pivot] / u.cols[pivot])
}

/// True iff `v = lambda * u` entrywise within `tol` for a unit-modulus `lambda`.
pub fn equivalent_up_to_phase(u: &UnitaryMatrix, v: &UnitaryMatrix, tol: f64) -> Result<bool> {
    let lambda = phase_between(u, v)?;
    if (lambda.norm() - 1.0).abs() > tol {
        return Ok(false);
    }
    Ok(u.cols
        .iter()
        .zip(&v.cols)
        .all(|(a, b)| (b - lambda * a).norm() <= tol))
}

/// Same test on states: `b = lambda * a` within `tol`.
pub fn states_equal_up_to_phase(a: &StateVector, b: &StateVector, tol: f64) -> Result<bool> {
    if a.width != b.width {
        return Err(Error::DimensionMismatch {
            left: a.amps.len(),
            right: b.amps.len(),
        });
    }
    let (pivot, _) = a.amps.iter().enumerate().fold((0, -1.0), |best, (i, x)| {
        if x.norm() > best.1 {
            (i, x.norm())
        } else {
            best
        }
    });
    if a.amps[pivot].norm() <= tol {
        return Ok(b.amps.iter().all(|y| y.norm() <= tol));
    }
    let lambda = b.amps[pivot] / a.amps[pivot];
    if (lambda.norm() - 1.0).abs() > tol {
        return Ok(false);
    }
    Ok(a.amps
        .iter()
        .zip(&b.amps)
        .all(|(x, y)| (y - lambda * x).norm() <= tol))
}
