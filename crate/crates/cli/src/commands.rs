//! Command-line surface. Every command returns its stdout payload plus an
//! optional failure that decides the exit code; payloads are deterministic.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use qhsynth_core::hashing::{
    expected_output, find_biased_set, hash_fidelity, synthesize_hash, BiasedSet, HashForm,
    HashSpec, Pipeline, SearchResult,
};
use qhsynth_core::metrics::{
    circuit_depth, cnot_count, max_den_exp, min_nonzero_angle, rotation_count,
};
use qhsynth_core::sim::{equivalent_up_to_phase, run, unitary_of, UnitaryMatrix, MAX_SIM_WIDTH};
use qhsynth_core::tradeoff::{
    predicted_cnot_count, prior_cnot_count, savings_vs_prior, TradeoffPlan, Variant,
};
use qhsynth_core::{Axis, Circuit};
use serde::Serialize;

use crate::bench::{bench_rows, variant_name, write_csv, BenchConfig};
use crate::error::{CliError, CliResult};
use crate::fsio::{atomic_write, catalog_path, read_json, read_text, to_json, write_json};
use crate::json::{AngleJson, BiasedSetJson, CircuitJson, ReportJson, VerificationJson};
use crate::qasm;

/// Exact-angle synthesis of quantum hashing circuits.
#[derive(Debug, Parser)]
#[command(name = "qhsynth", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a lowered hash circuit and its report.
    Synthesize(SynthesizeArgs),
    /// Check a circuit against the identity, another circuit or a hash state.
    Verify(VerifyArgs),
    /// Count gates of a circuit, or evaluate the trade-off predictor.
    Count(CountArgs),
    /// Search for a certified epsilon-biased set.
    Epsbias(EpsbiasArgs),
    /// Tabulate predicted and built trade-off counts as CSV.
    Bench(BenchArgs),
    /// Print a lowered circuit as OpenQASM 2.0.
    EmitQasm(EmitQasmArgs),
    /// Read OpenQASM 2.0 written by emit-qasm back into circuit JSON.
    ImportQasm(ImportQasmArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Baseline,
    PhaseOpt,
    PhaseExact,
    Tradeoff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    General,
    Phase,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::General => Variant::General,
            VariantArg::Phase => Variant::Phase,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Phase,
    Amplitude,
}

#[derive(Clone, Debug, Args)]
pub struct HashArgs {
    /// BiasedSet JSON file.
    #[arg(long, conflicts_with = "elements")]
    pub set: Option<PathBuf>,
    /// Comma-separated set elements (certified on the fly; needs --q).
    #[arg(long)]
    pub elements: Option<String>,
    #[arg(long)]
    pub q: Option<u64>,
    /// Input to hash.
    #[arg(long)]
    pub x: Option<u64>,
    #[arg(long, value_enum, default_value = "phase")]
    pub form: FormArg,
}

impl HashArgs {
    fn given(&self) -> bool {
        self.set.is_some() || self.elements.is_some() || self.x.is_some()
    }

    fn resolve(&self) -> CliResult<HashSpec> {
        let set = match (&self.set, &self.elements) {
            (Some(path), _) => {
                let set = BiasedSet::try_from(&read_json::<BiasedSetJson>(path)?)?;
                if self.q.is_some_and(|q| q != set.q) {
                    return Err(CliError::Usage(format!(
                        "--q disagrees with q = {} in {}",
                        set.q,
                        path.display()
                    )));
                }
                set
            }
            (None, Some(list)) => {
                let q = self
                    .q
                    .ok_or_else(|| CliError::Usage("--elements needs --q".into()))?;
                let elements = list
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<u64>()
                            .map_err(|_| CliError::Usage(format!("bad element `{s}`")))
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                BiasedSet::certify(q, elements, None)?
            }
            (None, None) => {
                return Err(CliError::Usage(
                    "a hash spec needs --set or --elements".into(),
                ))
            }
        };
        let x = self
            .x
            .ok_or_else(|| CliError::Usage("a hash spec needs --x".into()))?;
        let form = match self.form {
            FormArg::Phase => HashForm::Phase,
            FormArg::Amplitude => HashForm::Amplitude,
        };
        Ok(HashSpec::new(set, x, form)?)
    }
}

#[derive(Clone, Debug, Args)]
pub struct SynthesizeArgs {
    #[arg(long, value_enum)]
    pub method: Method,
    /// Trade-off variant (tradeoff only).
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// Multiplexor splitting levels (tradeoff only).
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub hash: HashArgs,
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
    /// Directory receiving circuit.json and report.json.
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CompareMode {
    Unitary,
    State,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub circuit: PathBuf,
    /// Compare with the identity.
    #[arg(long, conflicts_with = "against")]
    pub identity: bool,
    /// Compare with another circuit.
    #[arg(long)]
    pub against: Option<PathBuf>,
    /// Comparison used with --against.
    #[arg(long, value_enum, default_value = "unitary")]
    pub mode: CompareMode,
    #[command(flatten)]
    pub hash: HashArgs,
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
}

#[derive(Clone, Debug, Args)]
pub struct CountArgs {
    #[arg(long, conflicts_with_all = ["n", "k"])]
    pub circuit: Option<PathBuf>,
    #[arg(long, requires = "k")]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value = "general")]
    pub variant: VariantArg,
}

#[derive(Clone, Debug, Args)]
pub struct EpsbiasArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 1000)]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Catalog directory; the set is stored as q<q>d<d>.json.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 6)]
    pub n_min: usize,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long, default_value_t = 0)]
    pub k_min: usize,
    /// Defaults to n - 5 for each n.
    #[arg(long)]
    pub k_max: Option<usize>,
    /// Restrict to one variant.
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// Largest n whose circuits are built and counted.
    #[arg(long, default_value_t = 10)]
    pub build_max_n: usize,
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct EmitQasmArgs {
    #[arg(long)]
    pub circuit: PathBuf,
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct ImportQasmArgs {
    #[arg(long)]
    pub qasm: PathBuf,
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
}

/// A command's stdout payload and, when it failed after producing output, the failure.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub failure: Option<CliError>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            failure: None,
        }
    }
}

pub fn run_command(cmd: &Command) -> CliResult<Outcome> {
    match cmd {
        Command::Synthesize(a) => synthesize(a),
        Command::Verify(a) => verify(a),
        Command::Count(a) => count(a),
        Command::Epsbias(a) => epsbias(a),
        Command::Bench(a) => bench(a),
        Command::EmitQasm(a) => emit_qasm(a),
        Command::ImportQasm(a) => import_qasm(a),
    }
}

fn load_circuit(path: &Path) -> CliResult<Circuit> {
    Ok(Circuit::try_from(&read_json::<CircuitJson>(path)?)?)
}

fn method_name(m: Method, variant: Variant, k: usize) -> String {
    match m {
        Method::Baseline => "baseline".into(),
        Method::PhaseOpt => "phase-opt".into(),
        Method::PhaseExact => "phase-exact".into(),
        Method::Tradeoff => format!("tradeoff-{}-k{k}", variant_name(variant)),
    }
}

fn synthesize(a: &SynthesizeArgs) -> CliResult<Outcome> {
    if a.method != Method::Tradeoff && (a.k.is_some() || a.variant.is_some()) {
        return Err(CliError::Usage(
            "--k and --variant apply only to --method tradeoff".into(),
        ));
    }
    let variant: Variant = a.variant.unwrap_or(VariantArg::General).into();
    let pipeline = match a.method {
        Method::Baseline => Pipeline::Baseline,
        Method::PhaseOpt => Pipeline::PhaseOpt,
        Method::PhaseExact => Pipeline::PhaseExact,
        Method::Tradeoff => {
            let k =
                a.k.ok_or_else(|| CliError::Usage("--method tradeoff needs --k".into()))?;
            Pipeline::Tradeoff { k, variant }
        }
    };
    let spec = a.hash.resolve()?;
    let report = synthesize_hash(&spec, pipeline)?;
    let verification = if report.circuit.width <= MAX_SIM_WIDTH {
        let expected = expected_output(&spec, &report.circuit)?;
        let overlap = expected.inner(&run(&report.circuit)?)?;
        let fidelity = hash_fidelity(&spec, &report.circuit)?;
        Some(VerificationJson {
            mode: "state".into(),
            fidelity,
            phase: Some(overlap.arg()),
            tolerance: a.tolerance,
            passed: fidelity >= 1.0 - a.tolerance,
        })
    } else {
        None
    };
    let json = ReportJson::new(
        &report,
        &method_name(a.method, variant, a.k.unwrap_or(0)),
        verification.clone(),
    );
    if let Some(dir) = &a.out {
        write_json(
            &dir.join("circuit.json"),
            &CircuitJson::from(&report.circuit),
        )?;
        write_json(&dir.join("report.json"), &json)?;
    }
    let failure = if !report.prediction_matches {
        Some(CliError::Verification(format!(
            "built {} CNOTs, predicted {}",
            report.cnot_count, report.predicted_cnots
        )))
    } else {
        verification.filter(|v| !v.passed).map(|v| {
            CliError::Verification(format!(
                "fidelity {} is below 1 - {:e}",
                v.fidelity, v.tolerance
            ))
        })
    };
    Ok(Outcome {
        stdout: to_json(&json),
        failure,
    })
}

#[derive(Debug, Serialize)]
struct Verdict {
    passed: bool,
    mode: &'static str,
    fidelity: f64,
    phase: Option<f64>,
    tolerance: f64,
    width: usize,
}

/// `tr(a^dagger b) / dim`.
fn normalized_trace(a: &UnitaryMatrix, b: &UnitaryMatrix) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for col in 0..a.dim() {
        for (x, y) in a.column(col).iter().zip(b.column(col)) {
            acc += x.conj() * y;
        }
    }
    acc / a.dim() as f64
}

fn verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let circuit = load_circuit(&a.circuit)?;
    let modes =
        usize::from(a.identity) + usize::from(a.against.is_some()) + usize::from(a.hash.given());
    if modes != 1 {
        return Err(CliError::Usage(
            "choose exactly one of --identity, --against or a hash spec".into(),
        ));
    }
    if circuit.width > MAX_SIM_WIDTH {
        return Err(CliError::Unverifiable {
            width: circuit.width,
            limit: MAX_SIM_WIDTH,
        });
    }
    let unitary_verdict = |reference: &UnitaryMatrix, mode| -> CliResult<Verdict> {
        let u = unitary_of(&circuit)?;
        if reference.dim() != u.dim() {
            return Err(CliError::Usage("circuits have different widths".into()));
        }
        let overlap = normalized_trace(reference, &u);
        Ok(Verdict {
            passed: equivalent_up_to_phase(reference, &u, a.tolerance)?,
            mode,
            fidelity: overlap.norm().min(1.0),
            phase: Some(overlap.arg()),
            tolerance: a.tolerance,
            width: circuit.width,
        })
    };
    let state_verdict = |expected: &qhsynth_core::sim::StateVector| -> CliResult<Verdict> {
        let out = run(&circuit)?;
        if out.width() != expected.width() {
            return Err(CliError::Usage("state widths differ".into()));
        }
        let overlap = expected.inner(&out)?;
        let fidelity = overlap.norm().min(1.0);
        Ok(Verdict {
            passed: fidelity >= 1.0 - a.tolerance,
            mode: "state",
            fidelity,
            phase: Some(overlap.arg()),
            tolerance: a.tolerance,
            width: circuit.width,
        })
    };
    let verdict = if a.identity {
        unitary_verdict(&UnitaryMatrix::identity(circuit.width), "unitary")?
    } else if let Some(path) = &a.against {
        let other = load_circuit(path)?;
        if other.width > MAX_SIM_WIDTH {
            return Err(CliError::Unverifiable {
                width: other.width,
                limit: MAX_SIM_WIDTH,
            });
        }
        match a.mode {
            CompareMode::Unitary => unitary_verdict(&unitary_of(&other)?, "unitary")?,
            CompareMode::State => state_verdict(&run(&other)?)?,
        }
    } else {
        let spec = a.hash.resolve()?;
        state_verdict(&expected_output(&spec, &circuit)?)?
    };
    let failure = (!verdict.passed).then(|| {
        CliError::Verification(format!(
            "{} fidelity {} fails tolerance {:e}",
            verdict.mode, verdict.fidelity, a.tolerance
        ))
    });
    Ok(Outcome {
        stdout: to_json(&verdict),
        failure,
    })
}

#[derive(Debug, Serialize)]
struct CircuitCounts {
    width: usize,
    gates: usize,
    cnot_count: usize,
    rotation_count: usize,
    depth: usize,
    min_angle: Option<AngleJson>,
    max_den_exp: Option<u32>,
}

#[derive(Debug, Serialize)]
struct Prediction {
    n: usize,
    k: usize,
    variant: &'static str,
    predicted_cnots: u64,
    prior_cnots: i128,
    savings_vs_prior: i128,
}

fn count(a: &CountArgs) -> CliResult<Outcome> {
    if let Some(path) = &a.circuit {
        let c = load_circuit(path)?;
        let counts = CircuitCounts {
            width: c.width,
            gates: c.len(),
            cnot_count: cnot_count(&c)?,
            rotation_count: rotation_count(&c)?,
            depth: circuit_depth(&c)?,
            min_angle: min_nonzero_angle(&c).as_ref().map(AngleJson::from),
            max_den_exp: max_den_exp(&c),
        };
        return Ok(Outcome::ok(to_json(&counts)));
    }
    let (Some(n), Some(k)) = (a.n, a.k) else {
        return Err(CliError::Usage(
            "count needs --circuit or --n with --k".into(),
        ));
    };
    let variant: Variant = a.variant.into();
    let plan = TradeoffPlan::new(n, k, Axis::Z, variant)?;
    let p = Prediction {
        n,
        k,
        variant: variant_name(variant),
        predicted_cnots: predicted_cnot_count(&plan)?,
        prior_cnots: prior_cnot_count(&plan)?,
        savings_vs_prior: savings_vs_prior(&plan)?,
    };
    Ok(Outcome::ok(to_json(&p)))
}

#[derive(Debug, Serialize)]
struct SearchFailure {
    found: bool,
    q: u64,
    d: usize,
    epsilon: f64,
    tried: u64,
    best_bias: Option<f64>,
    reason: String,
}

fn epsbias(a: &EpsbiasArgs) -> CliResult<Outcome> {
    let failure = |tried, best_bias, reason: String| {
        let report = SearchFailure {
            found: false,
            q: a.q,
            d: a.d,
            epsilon: a.epsilon,
            tried,
            best_bias,
            reason,
        };
        Outcome {
            stdout: to_json(&report),
            failure: Some(CliError::Infeasible(report.reason.clone())),
        }
    };
    match find_biased_set(a.q, a.d, a.epsilon, a.budget, a.seed) {
        SearchResult::Found(set) => {
            let json = BiasedSetJson::from(&set);
            if let Some(dir) = &a.catalog {
                write_json(&catalog_path(dir, set.q, set.d()), &json)?;
            }
            if let Some(path) = &a.out {
                write_json(path, &json)?;
            }
            Ok(Outcome::ok(to_json(&json)))
        }
        SearchResult::Exhausted { tried, best_bias } => Ok(failure(
            tried,
            best_bias,
            format!("no set with bias <= {} in {tried} candidates", a.epsilon),
        )),
        SearchResult::Infeasible(reason) => Ok(failure(0, None, reason.to_string())),
    }
}

fn bench(a: &BenchArgs) -> CliResult<Outcome> {
    if a.n_min > a.n_max {
        return Err(CliError::Usage("--n-min exceeds --n-max".into()));
    }
    let variants = match a.variant {
        Some(v) => vec![v.into()],
        None => vec![Variant::General, Variant::Phase],
    };
    let mut rows = Vec::new();
    for n in a.n_min..=a.n_max {
        let k_max = a.k_max.unwrap_or(n.saturating_sub(5));
        let cfg = BenchConfig {
            n_min: n,
            n_max: n,
            k_min: a.k_min,
            k_max,
            variants: variants.clone(),
            build_max_n: a.build_max_n,
        };
        rows.extend(bench_rows(&cfg));
    }
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).map_err(|e| CliError::Usage(e.to_string()))?;
    if let Some(path) = &a.out {
        atomic_write(path, &buf)?;
    }
    Ok(Outcome::ok(String::from_utf8(buf).expect("csv is utf-8")))
}

fn emit_qasm(a: &EmitQasmArgs) -> CliResult<Outcome> {
    let text = qasm::emit(&load_circuit(&a.circuit)?)?;
    if let Some(path) = &a.out {
        atomic_write(path, text.as_bytes())?;
    }
    Ok(Outcome::ok(text))
}

fn import_qasm(a: &ImportQasmArgs) -> CliResult<Outcome> {
    let circuit = qasm::parse(&read_text(&a.qasm)?).map_err(|e| CliError::parse(&a.qasm, e))?;
    let json = CircuitJson::from(&circuit);
    if let Some(path) = &a.out {
        write_json(path, &json)?;
    }
    Ok(Outcome::ok(to_json(&json)))
}
