use std::path::Path;
use std::process::{Command, Output};

use qhsynth::json::{BiasedSetJson, CircuitJson, ReportJson};
use serde_json::Value;

fn qhsynth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhsynth"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_set(dir: &Path) -> String {
    let set = dir.join("set.json");
    let out = qhsynth(&[
        "epsbias",
        "--q",
        "193",
        "--d",
        "32",
        "--epsilon",
        "0.5",
        "--seed",
        "2",
        "--budget",
        "5000",
        "-o",
        path(&set),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    set.display().to_string()
}

#[test]
fn synthesize_writes_circuit_and_report() {
    let tmp = tempfile::tempdir().unwrap();
    let set = write_set(tmp.path());
    let dir = tmp.path().join("run");
    let out = qhsynth(&[
        "synthesize",
        "--method",
        "tradeoff",
        "--k",
        "1",
        "--set",
        &set,
        "--x",
        "11",
        "-o",
        path(&dir),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report: ReportJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.cnot_count as u64, report.predicted_cnots);
    assert_eq!(report.width, 6);
    assert!(report.verification.as_ref().unwrap().passed);
    let on_disk: ReportJson =
        serde_json::from_str(&std::fs::read_to_string(dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(on_disk, report);
    let circuit: CircuitJson =
        serde_json::from_str(&std::fs::read_to_string(dir.join("circuit.json")).unwrap()).unwrap();
    assert_eq!(circuit.width, 6);
    assert!(out.stderr.is_empty());
}

#[test]
fn synthesize_reports_failed_checks_with_exit_seven() {
    let tmp = tempfile::tempdir().unwrap();
    let set = write_set(tmp.path());
    let out = qhsynth(&[
        "synthesize",
        "--method",
        "phase-opt",
        "--set",
        &set,
        "--x",
        "3",
    ]);
    assert_eq!(code(&out), 7);
    assert_eq!(json(&out)["verification"]["passed"], false);
    let out = qhsynth(&[
        "synthesize",
        "--method",
        "phase-exact",
        "--set",
        &set,
        "--x",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["cnot_count"], 30);
}

#[test]
fn synthesize_flag_errors() {
    let base = [
        "synthesize",
        "--elements",
        "1,2,4,8",
        "--q",
        "17",
        "--x",
        "3",
    ];
    let with = |extra: &[&str]| qhsynth(&[&base[..], extra].concat());
    assert_eq!(code(&with(&["--method", "baseline", "--k", "1"])), 2);
    assert_eq!(code(&with(&["--method", "tradeoff"])), 2);
    assert_eq!(code(&with(&["--method", "tradeoff", "--k", "1"])), 3);
    assert_eq!(
        code(&with(&["--method", "phase-opt", "--form", "amplitude"])),
        2
    );
    assert_eq!(
        code(&qhsynth(&[
            "synthesize",
            "--method",
            "baseline",
            "--elements",
            "1,2",
            "--x",
            "1"
        ])),
        2
    );
    assert_eq!(
        code(&qhsynth(&[
            "synthesize",
            "--method",
            "baseline",
            "--set",
            "/nonexistent/set.json",
            "--x",
            "1"
        ])),
        1
    );
}

#[test]
fn amplitude_baseline_on_a_padded_set() {
    let out = qhsynth(&[
        "synthesize",
        "--method",
        "baseline",
        "--elements",
        "1,2,4",
        "--q",
        "7",
        "--x",
        "3",
        "--form",
        "amplitude",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["width"], 3);
    assert_eq!(v["cnot_count"], 4);
    assert_eq!(v["method"], "baseline");
}

#[test]
fn verify_modes() {
    let tmp = tempfile::tempdir().unwrap();
    let set = write_set(tmp.path());
    let dir = tmp.path().join("run");
    assert_eq!(
        code(&qhsynth(&[
            "synthesize",
            "--method",
            "baseline",
            "--set",
            &set,
            "--x",
            "5",
            "-o",
            path(&dir)
        ])),
        0
    );
    let circuit = dir.join("circuit.json");
    let c = path(&circuit);

    let out = qhsynth(&["verify", "--circuit", c, "--set", &set, "--x", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["mode"], "state");
    let out = qhsynth(&["verify", "--circuit", c, "--set", &set, "--x", "6"]);
    assert_eq!(code(&out), 7);
    assert_eq!(json(&out)["passed"], false);

    let out = qhsynth(&["verify", "--circuit", c, "--against", c]);
    assert_eq!(code(&out), 0);
    assert!((json(&out)["fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(code(&qhsynth(&["verify", "--circuit", c, "--identity"])), 7);
    assert_eq!(code(&qhsynth(&["verify", "--circuit", c])), 2);
    assert_eq!(
        code(&qhsynth(&[
            "verify",
            "--circuit",
            c,
            "--identity",
            "--x",
            "5",
            "--set",
            &set
        ])),
        2
    );

    let empty = tmp.path().join("empty.json");
    std::fs::write(&empty, r#"{"width":2,"initial_state":null,"gates":[{"kind":"cnot","control":0,"target":1},{"kind":"cnot","control":0,"target":1}]}"#).unwrap();
    assert_eq!(
        code(&qhsynth(&[
            "verify",
            "--circuit",
            path(&empty),
            "--identity"
        ])),
        0
    );
}

#[test]
fn wide_circuits_are_unverifiable() {
    let tmp = tempfile::tempdir().unwrap();
    let wide = tmp.path().join("wide.json");
    std::fs::write(
        &wide,
        r#"{"width":13,"initial_state":null,"gates":[{"kind":"h","target":12}]}"#,
    )
    .unwrap();
    let out = qhsynth(&["verify", "--circuit", path(&wide), "--identity"]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unverifiable at desk scale"));
    assert!(out.stdout.is_empty());
}

#[test]
fn count_both_modes() {
    let out = qhsynth(&["count", "--n", "10", "--k", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["predicted_cnots"], 11360);
    let out = qhsynth(&["count", "--n", "10", "--k", "4", "--variant", "phase"]);
    assert_eq!(json(&out)["predicted_cnots"], 6736);
    assert_eq!(
        code(&qhsynth(&[
            "count",
            "--n",
            "10",
            "--k",
            "5",
            "--variant",
            "phase"
        ])),
        3
    );
    assert_eq!(code(&qhsynth(&["count"])), 2);

    let tmp = tempfile::tempdir().unwrap();
    let macro_circuit = tmp.path().join("macro.json");
    std::fs::write(
        &macro_circuit,
        r#"{"width":3,"initial_state":null,"gates":[{"kind":"mcx","controls":[0,1],"target":2}]}"#,
    )
    .unwrap();
    let out = qhsynth(&["count", "--circuit", path(&macro_circuit)]);
    assert_eq!(code(&out), 6);
    let out = qhsynth(&["emit-qasm", "--circuit", path(&macro_circuit)]);
    assert_eq!(code(&out), 6);
}

#[test]
fn epsbias_catalog_and_failure() {
    let tmp = tempfile::tempdir().unwrap();
    let out = qhsynth(&[
        "epsbias",
        "--q",
        "101",
        "--d",
        "16",
        "--epsilon",
        "0.6",
        "--seed",
        "1",
        "--catalog",
        path(tmp.path()),
    ]);
    assert_eq!(code(&out), 0);
    let stored: BiasedSetJson =
        serde_json::from_str(&std::fs::read_to_string(tmp.path().join("q101d16.json")).unwrap())
            .unwrap();
    let printed: BiasedSetJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(stored, printed);
    assert!(printed.certified && printed.epsilon <= 0.6);

    let out = qhsynth(&[
        "epsbias",
        "--q",
        "7",
        "--d",
        "3",
        "--epsilon",
        "0.1",
        "--budget",
        "20",
    ]);
    assert_eq!(code(&out), 5);
    assert_eq!(json(&out)["found"], false);
    assert_eq!(code(&qhsynth(&["epsbias", "--q", "7", "--d", "9"])), 5);
}

#[test]
fn bench_csv() {
    let tmp = tempfile::tempdir().unwrap();
    let file = tmp.path().join("bench.csv");
    let out = qhsynth(&[
        "bench",
        "--n-min",
        "6",
        "--n-max",
        "7",
        "--variant",
        "general",
        "-o",
        path(&file),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&file).unwrap();
    assert_eq!(text.as_bytes(), &out.stdout[..]);
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("n,k,variant,predicted_cnots,actual_cnots,depth,min_angle_num"));
    assert!(text.contains("7,2,general,1420,1420,"));
    assert_eq!(text.lines().count(), 1 + 2 + 3);
}

#[test]
fn qasm_round_trip_through_the_cli() {
    let tmp = tempfile::tempdir().unwrap();
    let set = write_set(tmp.path());
    let dir = tmp.path().join("run");
    assert_eq!(
        code(&qhsynth(&[
            "synthesize",
            "--method",
            "phase-exact",
            "--set",
            &set,
            "--x",
            "9",
            "-o",
            path(&dir)
        ])),
        0
    );
    let qasm = tmp.path().join("c.qasm");
    let out = qhsynth(&[
        "emit-qasm",
        "--circuit",
        path(&dir.join("circuit.json")),
        "-o",
        path(&qasm),
    ]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout)
        .starts_with("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[5];\n"));
    let out = qhsynth(&["import-qasm", "--qasm", path(&qasm)]);
    assert_eq!(code(&out), 0);
    let original = std::fs::read(dir.join("circuit.json")).unwrap();
    assert_eq!(out.stdout, original);

    std::fs::write(&qasm, "OPENQASM 2.0;\nqreg q[1];\nrz(0.3) q[0];\n").unwrap();
    let out = qhsynth(&["import-qasm", "--qasm", path(&qasm)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}
