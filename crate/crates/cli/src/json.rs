//! Serde mirrors of the core types. Numerators travel as decimal strings.

use num_bigint::BigInt;
use qhsynth_core::circuit::{basis_label, parse_basis_label};
use qhsynth_core::hashing::BiasedSet;
use qhsynth_core::{AngleVector, Axis, Circuit, Error, ExactAngle, Gate, Result, SynthesisReport};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngleJson {
    pub num: String,
    pub den_base: u64,
    pub den_exp: u32,
}

impl From<&ExactAngle> for AngleJson {
    fn from(a: &ExactAngle) -> Self {
        AngleJson {
            num: a.numerator().to_string(),
            den_base: a.den_base(),
            den_exp: a.den_exp(),
        }
    }
}

impl TryFrom<&AngleJson> for ExactAngle {
    type Error = Error;

    fn try_from(a: &AngleJson) -> Result<Self> {
        let num: BigInt = a
            .num
            .trim()
            .parse()
            .map_err(|_| Error::InvalidAngle(a.num.clone()))?;
        ExactAngle::new(num, a.den_base, a.den_exp)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisJson {
    Z,
    Y,
}

impl From<Axis> for AxisJson {
    fn from(a: Axis) -> Self {
        match a {
            Axis::Z => AxisJson::Z,
            Axis::Y => AxisJson::Y,
        }
    }
}

impl From<AxisJson> for Axis {
    fn from(a: AxisJson) -> Self {
        match a {
            AxisJson::Z => Axis::Z,
            AxisJson::Y => Axis::Y,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GateJson {
    X {
        target: usize,
    },
    H {
        target: usize,
    },
    Rz {
        target: usize,
        angle: AngleJson,
    },
    Ry {
        target: usize,
        angle: AngleJson,
    },
    P {
        target: usize,
        angle: AngleJson,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    Mcr {
        axis: AxisJson,
        controls: Vec<usize>,
        pattern: String,
        target: usize,
        angle: AngleJson,
    },
    Mcx {
        controls: Vec<usize>,
        target: usize,
    },
    Mcp {
        controls: Vec<usize>,
        pattern: String,
        target: usize,
        angle: AngleJson,
    },
    Ucr {
        axis: AxisJson,
        controls: Vec<usize>,
        target: usize,
        angles: Vec<AngleJson>,
    },
}

impl From<&Gate> for GateJson {
    fn from(g: &Gate) -> Self {
        match g {
            Gate::X { target } => GateJson::X { target: *target },
            Gate::H { target } => GateJson::H { target: *target },
            Gate::Rz { target, angle } => GateJson::Rz {
                target: *target,
                angle: angle.into(),
            },
            Gate::Ry { target, angle } => GateJson::Ry {
                target: *target,
                angle: angle.into(),
            },
            Gate::Phase { target, angle } => GateJson::P {
                target: *target,
                angle: angle.into(),
            },
            Gate::Cnot { control, target } => GateJson::Cnot {
                control: *control,
                target: *target,
            },
            Gate::Mcr {
                axis,
                controls,
                pattern,
                target,
                angle,
            } => GateJson::Mcr {
                axis: (*axis).into(),
                controls: controls.clone(),
                pattern: basis_label(pattern),
                target: *target,
                angle: angle.into(),
            },
            Gate::Mcx { controls, target } => GateJson::Mcx {
                controls: controls.clone(),
                target: *target,
            },
            Gate::Mcp {
                controls,
                pattern,
                target,
                angle,
            } => GateJson::Mcp {
                controls: controls.clone(),
                pattern: basis_label(pattern),
                target: *target,
                angle: angle.into(),
            },
            Gate::Ucr {
                axis,
                controls,
                target,
                angles,
            } => GateJson::Ucr {
                axis: (*axis).into(),
                controls: controls.clone(),
                target: *target,
                angles: angles.iter().map(AngleJson::from).collect(),
            },
        }
    }
}

impl TryFrom<&GateJson> for Gate {
    type Error = Error;

    fn try_from(g: &GateJson) -> Result<Self> {
        let angle = ExactAngle::try_from;
        Ok(match g {
            GateJson::X { target } => Gate::X { target: *target },
            GateJson::H { target } => Gate::H { target: *target },
            GateJson::Rz { target, angle: a } => Gate::Rz {
                target: *target,
                angle: angle(a)?,
            },
            GateJson::Ry { target, angle: a } => Gate::Ry {
                target: *target,
                angle: angle(a)?,
            },
            GateJson::P { target, angle: a } => Gate::Phase {
                target: *target,
                angle: angle(a)?,
            },
            GateJson::Cnot { control, target } => Gate::Cnot {
                control: *control,
                target: *target,
            },
            GateJson::Mcr {
                axis,
                controls,
                pattern,
                target,
                angle: a,
            } => Gate::Mcr {
                axis: (*axis).into(),
                controls: controls.clone(),
                pattern: parse_basis_label(pattern)?,
                target: *target,
                angle: angle(a)?,
            },
            GateJson::Mcx { controls, target } => Gate::Mcx {
                controls: controls.clone(),
                target: *target,
            },
            GateJson::Mcp {
                controls,
                pattern,
                target,
                angle: a,
            } => Gate::Mcp {
                controls: controls.clone(),
                pattern: parse_basis_label(pattern)?,
                target: *target,
                angle: angle(a)?,
            },
            GateJson::Ucr {
                axis,
                controls,
                target,
                angles,
            } => Gate::Ucr {
                axis: (*axis).into(),
                controls: controls.clone(),
                target: *target,
                angles: AngleVector::new(angles.iter().map(angle).collect::<Result<_>>()?)?,
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitJson {
    pub width: usize,
    pub initial_state: Option<String>,
    pub gates: Vec<GateJson>,
}

impl From<&Circuit> for CircuitJson {
    fn from(c: &Circuit) -> Self {
        CircuitJson {
            width: c.width,
            initial_state: c.initial_state.as_deref().map(basis_label),
            gates: c.gates.iter().map(GateJson::from).collect(),
        }
    }
}

impl TryFrom<&CircuitJson> for Circuit {
    type Error = Error;

    /// Rejects gates outside the register and initial states of the wrong length.
    fn try_from(c: &CircuitJson) -> Result<Self> {
        let circuit = Circuit {
            width: c.width,
            gates: c.gates.iter().map(Gate::try_from).collect::<Result<_>>()?,
            initial_state: c
                .initial_state
                .as_deref()
                .map(parse_basis_label)
                .transpose()?,
        };
        circuit.validate()?;
        Ok(circuit)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationJson {
    /// `state` or `unitary`.
    pub mode: String,
    pub fidelity: f64,
    pub phase: Option<f64>,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub cnot_count: usize,
    pub depth: usize,
    pub min_angle: Option<AngleJson>,
    pub global_phase: AngleJson,
    pub predicted_cnots: u64,
    pub prediction_matches: bool,
    pub method: String,
    pub width: usize,
    pub max_den_exp: Option<u32>,
    pub verification: Option<VerificationJson>,
}

impl ReportJson {
    pub fn new(
        report: &SynthesisReport,
        method: &str,
        verification: Option<VerificationJson>,
    ) -> Self {
        ReportJson {
            cnot_count: report.cnot_count,
            depth: report.depth,
            min_angle: report.min_angle.as_ref().map(AngleJson::from),
            global_phase: (&report.global_phase).into(),
            predicted_cnots: report.predicted_cnots,
            prediction_matches: report.prediction_matches,
            method: method.to_string(),
            width: report.circuit.width,
            max_den_exp: report.max_den_exp,
            verification,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BiasedSetJson {
    pub q: u64,
    #[serde(rename = "S")]
    pub elements: Vec<u64>,
    pub epsilon: f64,
    pub certified: bool,
    pub seed: Option<u64>,
}

impl From<&BiasedSet> for BiasedSetJson {
    fn from(s: &BiasedSet) -> Self {
        BiasedSetJson {
            q: s.q,
            elements: s.elements.clone(),
            epsilon: s.epsilon,
            certified: s.certified,
            seed: s.seed,
        }
    }
}

impl TryFrom<&BiasedSetJson> for BiasedSet {
    type Error = Error;

    fn try_from(s: &BiasedSetJson) -> Result<Self> {
        let set = BiasedSet {
            q: s.q,
            elements: s.elements.clone(),
            epsilon: s.epsilon,
            certified: s.certified,
            seed: s.seed,
        };
        set.validate()?;
        Ok(set)
    }
}
