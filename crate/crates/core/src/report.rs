use crate::angle::ExactAngle;
use crate::circuit::Circuit;
use crate::error::Result;
use crate::metrics;

/// A lowered circuit with its cost metrics.
///
/// `global_phase` is the angle `phi` with `reference = e^{i phi} * circuit`,
/// where the reference is the object the pipeline was asked to implement.
#[derive(Clone, Debug, PartialEq)]
pub struct SynthesisReport {
    pub circuit: Circuit,
    pub cnot_count: usize,
    pub depth: usize,
    pub min_angle: Option<ExactAngle>,
    pub max_den_exp: Option<u32>,
    pub global_phase: ExactAngle,
    pub predicted_cnots: u64,
    pub prediction_matches: bool,
}

impl SynthesisReport {
    pub fn new(circuit: Circuit, global_phase: ExactAngle, predicted_cnots: u64) -> Result<Self> {
        let cnot_count = metrics::cnot_count(&circuit)?;
        let depth = metrics::circuit_depth(&circuit)?;
        Ok(SynthesisReport {
            cnot_count,
            depth,
            min_angle: metrics::min_nonzero_angle(&circuit),
            max_den_exp: metrics::max_den_exp(&circuit),
            global_phase,
            predicted_cnots,
            prediction_matches: cnot_count as u64 == predicted_cnots,
            circuit,
        })
    }
}
