//! File formats, QASM, benchmarks and the command layer behind the `qhsynth` binary.

pub mod bench;
pub mod commands;
pub mod error;
pub mod fsio;
pub mod json;
pub mod qasm;
