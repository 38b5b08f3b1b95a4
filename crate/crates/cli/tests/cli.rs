use std::process::{Command, Output};

use clifford_lie::dims::DimReport;
use num_bigint::BigInt;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clifford-lie")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn dims_text() {
    let out = run(&["dims", "--r", "2", "--s", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for line in ["G        = 10", "K        = 4", "P        = 6"] {
        assert!(text.contains(line), "{text}");
    }
}

#[test]
fn dims_json_uses_decimal_strings_and_round_trips() {
    let out = run(&["dims", "--r", "1", "--s", "1", "--json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["G"], "3");
    assert_eq!(value["K"], "1");
    assert_eq!(value["P"], "2");
    let report: DimReport = serde_json::from_value(value).unwrap();
    assert_eq!(report.k, BigInt::from(1));
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", stdout(&out));
}

#[test]
fn dims_large_values_are_exact() {
    let out = run(&["dims", "--r", "100", "--s", "101", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let report: DimReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.g.bits() > 190);
    assert_eq!(&report.k + &report.p, report.g);
}

#[test]
fn dims_rejects_empty_signature() {
    let out = run(&["dims", "--r", "0", "--s", "0"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
}

#[test]
fn classify_in_range() {
    let out = run(&["classify", "--r", "4", "--s", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("so(8,8)"));
    assert!(text.contains("dim=true max_compact=true center=true"), "{text}");

    let json = run(&["classify", "--r", "4", "--s", "4", "--json"]);
    let value: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(value["algebra"], "so(8,8)");
    assert_eq!(value["status"], "proven");
    assert_eq!(value["checks"]["dim"], true);
}

#[test]
fn classify_refuses_outside_range() {
    let out = run(&["classify", "--r", "2", "--s", "2"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("(2,2)") || err.contains("r, s >= 3") || err.contains("range"), "{err}");
}

#[test]
fn classify_extrapolates_on_request() {
    let out = run(&["classify", "--r", "2", "--s", "2", "--extrapolate", "--json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["status"], "unproven");
    assert_eq!(value["algebra"], "sp(2,R)");
}

#[test]
fn table_csv_k1() {
    let out = run(&["table", "--k", "1", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[1], r#"r+s = 8k,"so(8,8)","so(8,8)",so*(16),so*(16)"#);
    assert_eq!(rows[4], r#"r+s = 8k+3,"sp(8,8)+sp(8,8)","sp(16,C)_R","sp(16,R)+sp(16,R)","sp(16,C)_R""#);
}

#[test]
fn basis_dump() {
    let out = run(&["basis", "--r", "1", "--s", "1", "--space", "K"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let blades: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(blades, ["e1"]);

    let g = run(&["basis", "--r", "1", "--s", "1", "--space", "G"]);
    let blades: Vec<String> = stdout(&g).lines().filter(|l| !l.starts_with('#')).map(String::from).collect();
    assert_eq!(blades, ["e1", "e2", "e12"]);

    assert_eq!(code(&run(&["basis", "--r", "1", "--s", "1", "--space", "Q"])), 2);
}

#[test]
fn bracket_of_generators() {
    let out = run(&["bracket", "--r", "2", "--s", "1", "--x", "e1", "--y", "e2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "2*e12");

    let out = run(&["bracket", "--r", "2", "--s", "1", "--x", "-e1 + 3/2*e3", "--y", "e1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "-3*e13");
}

#[test]
fn bracket_rejects_bad_input() {
    assert_eq!(code(&run(&["bracket", "--r", "2", "--s", "1", "--x", "e4", "--y", "e1"])), 2);
    assert_eq!(code(&run(&["bracket", "--r", "2", "--s", "1", "--x", "e1 +", "--y", "e1"])), 2);
}

#[test]
fn verify_full_and_subset() {
    let out = run(&["verify", "--max-n", "8"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 6, "{text}");

    let out = run(&["verify", "--max-n", "8", "--sections", "dims,centers"]);
    assert_eq!(code(&out), 0);
    let names: Vec<String> =
        stdout(&out).lines().map(|l| l.split_whitespace().nth(1).unwrap().to_string()).collect();
    assert_eq!(names, ["dims", "centers"]);
}

#[test]
fn verify_caps() {
    assert_eq!(code(&run(&["verify", "--max-n", "20"])), 2);
    assert_eq!(code(&run(&["verify", "--max-n", "1"])), 2);
    assert_eq!(code(&run(&["verify", "--sections", "bogus"])), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["dims", "--r", "1"])), 2);
    assert_eq!(code(&run(&["dims", "--r", "-1", "--s", "2"])), 2);
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["table", "--k", "2"],
        &["table", "--k", "0", "--extrapolate", "--format", "json"],
        &["classify", "--r", "7", "--s", "8", "--json"],
        &["verify", "--max-n", "6"],
    ];
    for args in cases {
        let (a, b) = (run(args), run(args));
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
