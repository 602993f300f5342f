//! End-to-end checks of the `monoquartic` binary: subcommands, output
//! formats, and exit codes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_monoquartic"))
}

#[test]
fn classify_text_output() {
    let out = bin()
        .args(["classify", "--A", "9", "--B", "19", "--oracle"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("f(x) = x^4 + 9*x^3 + 19*x^2 + 9*x + 1"));
    assert!(text.contains("disc = 19773"));
    assert!(text.contains("monogenic: yes"));
    assert!(text.contains("galois: C4"));
    assert!(text.contains("family: F5"));
    assert!(text.contains("oracle monogenic: Monogenic"));
}

#[test]
fn classify_json_explain() {
    let out = bin()
        .args(["classify", "--A", "8", "--B", "0", "--json", "--explain"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    assert_eq!(value["A"], 8);
    assert_eq!(value["monogenic"], "no");
    assert_eq!(value["witness_prime"], 3);
    assert_eq!(value["galois"], "D4");
    let dedekind = value["explain"]["dedekind"].as_array().unwrap();
    assert!(dedekind.iter().any(|r| r["prime"] == 3
        && r["p_divides_index"] == true));
}

#[test]
fn classify_accepts_polynomial_text() {
    let out = bin()
        .args([
            "classify",
            "--poly",
            "x^4 + 9*x^3 + 19*x^2 + 9*x + 1",
            "--json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["A"], 9);
    assert_eq!(value["B"], 19);

    let out = bin()
        .args(["classify", "--poly", "x^4 + 2*x^3 + 1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_negative_coefficients() {
    let out = bin()
        .args(["classify", "--A", "-9", "--B", "19", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["A"], -9);
    assert_eq!(value["disc"], 19773);
    assert_eq!(value["family"], "F5");
}

#[test]
fn scan_writes_csv_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("grid.csv");
    let out = bin()
        .args([
            "scan",
            "--A-min",
            "-6",
            "--A-max",
            "6",
            "--B-min",
            "-6",
            "--B-max",
            "6",
            "--oracle",
            "--out",
            out_path.to_str().unwrap(),
            "--format",
            "csv",
            "--workers",
            "2",
            "--seed",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("mismatches: 0"));
    let body = std::fs::read_to_string(&out_path).unwrap();
    let mut lines = body.lines();
    assert_eq!(
        lines.next().unwrap(),
        "A,B,W1,W2,W3,W,disc,irreducible,monogenic,witness_prime,galois,family"
    );
    assert_eq!(body.lines().count(), 1 + 13 * 13);
    assert!(body.contains("\n1,1,1,5,5,25,125,true,yes,,C4,F5\n"));
}

#[test]
fn scan_jsonl_records_parse() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("grid.jsonl");
    let out = bin()
        .args([
            "scan", "--A-min", "0", "--A-max", "2", "--B-min", "0", "--B-max", "2", "--out",
            out_path.to_str().unwrap(),
            "--format", "jsonl",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let body = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(body.lines().count(), 9);
    for line in body.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["A"].is_i64());
    }
}

#[test]
fn scan_json_array_parses() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("grid.json");
    let status = bin()
        .args([
            "scan", "--A-min", "1", "--A-max", "2", "--B-min", "1", "--B-max", "2", "--out",
            out_path.to_str().unwrap(),
            "--format", "json",
        ])
        .status()
        .unwrap();
    assert!(status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn config_errors_exit_one() {
    // inverted range
    let out = bin()
        .args([
            "scan", "--A-min", "5", "--A-max", "-5", "--B-min", "0", "--B-max", "0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // unknown format
    let out = bin()
        .args([
            "scan", "--A-min", "0", "--A-max", "1", "--B-min", "0", "--B-max", "1", "--format",
            "xml",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // missing required flag
    let out = bin().args(["find-f5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // unknown audit family
    let out = bin()
        .args(["audit", "--family", "F9", "--k-min", "1", "--k-max", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn find_f5_lists_six() {
    let out = bin().args(["find-f5", "--bound", "40"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total: 6"));
    assert!(text.contains("(A=-11, B=31)"));
    assert!(text.contains("(A=1, B=1)"));
}

#[test]
fn audit_reports_clean_family() {
    let out = bin()
        .args(["audit", "--family", "F3", "--k-min", "5", "--k-max", "60"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("inconclusive (non-mirror): 0"));
    assert!(text.contains("k=5: (A=11, B=10)"));
}

#[test]
fn witness_command() {
    let out = bin()
        .args(["witness", "--family", "1", "--k", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("admissible: (A=8, B=4)"));

    let out = bin()
        .args(["witness", "--family", "1", "--k", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("inadmissible"));

    let out = bin()
        .args(["witness", "--family", "1", "--k", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_and_version_exit_zero() {
    assert!(bin().arg("--help").status().unwrap().success());
    assert!(bin().arg("--version").status().unwrap().success());
}
