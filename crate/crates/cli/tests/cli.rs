//! End-to-end checks of the command surface: exit codes, report format,
//! and the printed examples.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charident"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_gessel_holds() {
    let out = run(&["verify", "--case", "gessel", "--k", "2", "--degree", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("EQUAL"));
}

#[test]
fn verify_display_plus_fails_at_degree_one() {
    let out = run(&[
        "verify", "--case", "sym-odd", "--k", "1", "--degree", "4", "--variant", "plus-sign",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("MISMATCH"), "{}", text);
    // the first differing monomial has x-degree 1
    assert!(text.contains("first mismatch at x"), "{}", text);
}

#[test]
fn verify_k0_empty_determinant() {
    let out = run(&["verify", "--case", "gessel", "--k", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["verify", "--case", "no-such-case"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--case", "gessel", "--k", "1", "--lambda", "1/3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["complex", "--case", "gessel", "--k", "2", "--parity", "+"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_report_roundtrips() {
    let out = run(&[
        "verify", "--case", "skew", "--k", "1", "--degree", "4", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["case"], "skew");
    assert_eq!(v["equal"], true);
    assert_eq!(v["first_mismatch"], serde_json::Value::Null);
    assert_eq!(v["faithful"], true);
    // parse → reserialize → parse is stable
    let again: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
}

#[test]
fn complex_examples() {
    let out = run(&["complex", "--case", "gessel", "--k", "2"]);
    assert_eq!(stdout(&out).trim(), "F1: L_1⊗L_-1 → F0: L_0⊗L_0");
    let out = run(&["complex", "--case", "sym-odd", "--k", "1", "--parity", "+"]);
    assert_eq!(stdout(&out).trim(), "F1: M_1⊗L_1 → F0: M_0⊗L_0");
}

#[test]
fn table_skew_theorem_shape() {
    let out = run(&["table", "--case", "skew", "--k", "2"]);
    let text = stdout(&out);
    assert!(text.contains("L[0]−L[2]"), "{}", text);
    assert!(text.contains("L[1]−L[3]"), "{}", text);
    assert!(text.contains("L[0]−L[4]"), "{}", text);
    let out = run(&["table", "--case", "skew", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["entries"][0][0][0][1], 0);
    assert_eq!(v["entries"][0][0][1][1], 2);
    assert_eq!(v["entries"][0][0][1][0], -1);
}

#[test]
fn decompose_skew_k1() {
    let out = run(&["decompose", "--case", "skew", "--k", "1", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("()  x1"), "{}", text);
    assert!(text.contains("(1,1)  x1"), "{}", text);
    assert!(text.contains("(2,2)  x1"), "{}", text);
}

#[test]
fn oracle_flag_and_output_file() {
    let dir = std::env::temp_dir();
    let report = dir.join("charident-cli-test-report.json");
    let cache = dir.join("charident-cli-test-cache.txt");
    let out = run(&[
        "verify", "--case", "skew", "--k", "1", "--degree", "3", "--oracle",
        "--format", "json",
        "--output", report.to_str().unwrap(),
        "--cache", cache.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["equal"], true);
    assert!(v["timings"]["oracle_ms"].is_number());
    let cache_text = std::fs::read_to_string(&cache).unwrap();
    assert!(cache_text.starts_with("charident-cache v1"));
    std::fs::remove_file(&report).ok();
    std::fs::remove_file(&cache).ok();
}

#[test]
fn jacobi_trudi_case() {
    let out = run(&["verify", "--case", "jacobi-trudi", "--lambda", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("EQUAL"));
}
