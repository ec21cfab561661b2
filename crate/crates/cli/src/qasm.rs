//! OpenQASM 2.0 text for lowered circuits.
//!
//! Angles print as 17-significant-digit decimals followed by a `// <angle>`
//! comment holding the exact value, which is what the reader uses. A phase
//! gate `P(t) = diag(1, e^{i t/2})` is written `u1(t/2)` with `t` in the comment.

use std::fmt::Write as _;

use qhsynth_core::circuit::{basis_label, parse_basis_label};
use qhsynth_core::{Circuit, Error, ExactAngle, Gate};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct QasmError {
    pub line: usize,
    pub message: String,
}

fn float(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn emit(c: &Circuit) -> Result<String, Error> {
    if let Some(pos) = c.first_macro() {
        return Err(Error::NotLowered(pos));
    }
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(out, "qreg q[{}];", c.width);
    if let Some(bits) = &c.initial_state {
        let _ = writeln!(out, "// initial_state {}", basis_label(bits));
    }
    for g in &c.gates {
        let _ = match g {
            Gate::X { target } => writeln!(out, "x q[{target}];"),
            Gate::H { target } => writeln!(out, "h q[{target}];"),
            Gate::Cnot { control, target } => writeln!(out, "cx q[{control}],q[{target}];"),
            Gate::Rz { target, angle } => {
                writeln!(out, "rz({}) q[{target}]; // {angle}", float(angle.to_f64()))
            }
            Gate::Ry { target, angle } => {
                writeln!(out, "ry({}) q[{target}]; // {angle}", float(angle.to_f64()))
            }
            Gate::Phase { target, angle } => {
                writeln!(
                    out,
                    "u1({}) q[{target}]; // {angle}",
                    float(angle.to_f64() / 2.0)
                )
            }
            _ => unreachable!("lowered circuits hold only primitive gates"),
        };
    }
    Ok(out)
}

fn qubit(operand: &str, width: Option<usize>, line: usize) -> Result<usize, QasmError> {
    let err = |message: String| QasmError { line, message };
    let inner = operand
        .trim()
        .strip_prefix("q[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| err(format!("expected q[<index>], found `{operand}`")))?;
    let q: usize = inner
        .trim()
        .parse()
        .map_err(|_| err(format!("bad qubit index `{inner}`")))?;
    match width {
        None => Err(err("gate before qreg declaration".into())),
        Some(w) if q >= w => Err(err(format!("qubit {q} outside qreg of size {w}"))),
        Some(_) => Ok(q),
    }
}

/// Reads text produced by [`emit`]. Rotation gates must carry the exact-angle comment,
/// and the printed decimal must agree with it.
pub fn parse(text: &str) -> Result<Circuit, QasmError> {
    let mut width: Option<usize> = None;
    let mut initial = None;
    let mut gates = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| QasmError { line, message };
        let (code, comment) = match raw.split_once("//") {
            Some((c, m)) => (c.trim(), Some(m.trim())),
            None => (raw.trim(), None),
        };
        if code.is_empty() {
            if let Some(label) = comment.and_then(|m| m.strip_prefix("initial_state")) {
                initial = Some(parse_basis_label(label.trim()).map_err(|e| err(e.to_string()))?);
            }
            continue;
        }
        let stmt = code
            .strip_suffix(';')
            .ok_or_else(|| err("missing `;`".into()))?
            .trim();
        if stmt.starts_with("OPENQASM") || stmt.starts_with("include") {
            continue;
        }
        if let Some(decl) = stmt.strip_prefix("qreg") {
            let n = decl
                .trim()
                .strip_prefix("q[")
                .and_then(|s| s.strip_suffix(']'))
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| err(format!("unsupported register declaration `{stmt}`")))?;
            if width.replace(n).is_some() {
                return Err(err("only one qreg is supported".into()));
            }
            continue;
        }
        let (head, operands) = stmt
            .split_once(char::is_whitespace)
            .ok_or_else(|| err(format!("cannot parse statement `{stmt}`")))?;
        let (name, param) = match head.split_once('(') {
            Some((n, p)) => (
                n,
                Some(
                    p.strip_suffix(')')
                        .ok_or_else(|| err("unclosed parameter list".into()))?,
                ),
            ),
            None => (head, None),
        };
        let exact = || -> Result<(ExactAngle, f64), QasmError> {
            let printed: f64 = param
                .ok_or_else(|| err(format!("`{name}` needs an angle")))?
                .trim()
                .parse()
                .map_err(|_| err("bad angle literal".into()))?;
            let text = comment.ok_or_else(|| err("missing exact angle comment".into()))?;
            let angle: ExactAngle = text.parse().map_err(|e: Error| err(e.to_string()))?;
            Ok((angle, printed))
        };
        let check = |expected: f64, printed: f64| {
            if (expected - printed).abs() > 1e-12 * expected.abs().max(1.0) {
                Err(err(format!(
                    "decimal {printed} disagrees with exact angle comment"
                )))
            } else {
                Ok(())
            }
        };
        let ops: Vec<&str> = operands.split(',').collect();
        let one = || -> Result<usize, QasmError> {
            match ops.as_slice() {
                [q] => qubit(q, width, line),
                _ => Err(err(format!("`{name}` takes one qubit"))),
            }
        };
        let gate = match name {
            "x" => Gate::X { target: one()? },
            "h" => Gate::H { target: one()? },
            "cx" => match ops.as_slice() {
                [c, t] => Gate::cnot(qubit(c, width, line)?, qubit(t, width, line)?),
                _ => return Err(err("`cx` takes two qubits".into())),
            },
            "rz" | "ry" => {
                let (angle, printed) = exact()?;
                check(angle.to_f64(), printed)?;
                let target = one()?;
                if name == "rz" {
                    Gate::Rz { target, angle }
                } else {
                    Gate::Ry { target, angle }
                }
            }
            "u1" => {
                let (angle, printed) = exact()?;
                check(angle.to_f64() / 2.0, printed)?;
                Gate::Phase {
                    target: one()?,
                    angle,
                }
            }
            other => return Err(err(format!("unsupported gate `{other}`"))),
        };
        gates.push(gate);
    }
    let width = width.ok_or(QasmError {
        line: 0,
        message: "no qreg declaration".into(),
    })?;
    let mut c = Circuit::from_gates(width, gates);
    c.initial_state = initial;
    c.validate().map_err(|e| QasmError {
        line: 0,
        message: e.to_string(),
    })?;
    Ok(c)
}
