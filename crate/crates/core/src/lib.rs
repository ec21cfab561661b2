//! Exact-angle circuit synthesis for quantum hashing.
//!
//! Uniformly controlled rotations are lowered to one-qubit rotations and CNOTs
//! by three pipelines: the Gray-code baseline, an ancilla-free phase-form
//! construction, and a recursion-depth `k` trade-off between CNOT count and
//! angle granularity. A dense simulator checks every pass.
//!
//! Qubit 0 is the most significant bit of every basis label.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod angle;
pub mod circuit;
pub mod error;
pub mod gate;
pub mod gray;
pub mod hashing;
pub mod mcx;
pub mod metrics;
pub mod phase_opt;
pub mod report;
pub mod sim;
pub mod tradeoff;
pub mod ucr;

#[cfg(test)]
mod testutil;

pub use angle::{AngleVector, ExactAngle};
pub use circuit::Circuit;
pub use error::{Error, Result};
pub use gate::{Axis, Gate};
pub use report::SynthesisReport;
