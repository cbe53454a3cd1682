//! End-to-end checks of the binary: exit codes, stdout/stderr split, and
//! output formats.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilbrace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).trim().to_string()
}

#[test]
fn eval_prints_canonical_text() {
    let out = run(&["eval", "-r", "2", "x1 . x1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2 x1 + x1.1");
    assert!(stderr(&out).is_empty());
}

#[test]
fn eval_errors_exit_2_on_stderr_only() {
    let out = run(&["eval", "-r", "1", "x2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("x2"));

    let out = run(&["eval", "-r", "2", "x1 +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse error at byte"));
}

#[test]
fn eval_json_matches_the_schema() {
    let out = run(&["eval", "-r", "2", "--json", "2 x1 - x1.1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["rank"], 2);
    assert_eq!(v["coords"][0]["idx"], serde_json::json!(["g", 1]));
    assert_eq!(v["coords"][0]["c"], "2");
    assert_eq!(v["coords"][1]["idx"], serde_json::json!(["p", 1, 1]));
    assert_eq!(v["coords"][1]["c"], "-1");
}

#[test]
fn eq_exit_codes() {
    let out = run(&["eq", "-r", "1", "0", "x1 . x1^-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "equal");

    let out = run(&["eq", "-r", "2", "x1 . x2", "x2 . x1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "not equal");

    let out = run(&["eq", "-r", "1", "x1", "x2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dim_values_and_errors() {
    for (r, want) in [("1", "3"), ("2", "12"), ("3", "30"), ("6", "168")] {
        let out = run(&["dim", "-r", r]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), want);
    }
    let out = run(&["dim", "-r", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
}

#[test]
fn axioms_reports_are_line_delimited_json() {
    let out = run(&[
        "axioms", "-r", "2", "--trials", "20", "--bound", "5", "--seed", "42", "--suite", "star",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).expect("one JSON object per line");
    assert_eq!(v["suite"], "star");
    assert_eq!(v["trials"], 20);
    assert_eq!(v["config"]["seed"], 42);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn axioms_default_runs_every_suite() {
    let out = run(&[
        "axioms", "-r", "2", "--trials", "5", "--bound", "3", "--seed", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), nilbrace::verify::SUITE_NAMES.len());
    for (line, name) in lines.iter().zip(nilbrace::verify::SUITE_NAMES) {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON line");
        assert_eq!(v["suite"], name);
    }
}

#[test]
fn axioms_rejects_unknown_suites() {
    let out = run(&["axioms", "-r", "2", "--suite", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn quotient_annotates_the_modulus() {
    let out = run(&["quotient", "-r", "1", "-m", "5", "x1^7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2 x1 + x1.1 (mod 5)");

    let out = run(&["quotient", "-r", "1", "-m", "3", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 (mod 3)");

    let out = run(&["quotient", "-r", "1", "-m", "5", "--json", "x1^7"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["mod"], 5);
    assert_eq!(v["rank"], 1);
}

#[test]
fn quotient_rejects_even_moduli_with_the_explanation() {
    let out = run(&["quotient", "-r", "1", "-m", "2", "x1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("not well-defined"));
}

#[test]
fn homcheck_paths() {
    let out = run(&[
        "homcheck",
        "-r",
        "2",
        "--permute",
        "2,1",
        "--trials",
        "50",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["suite"], "hom");

    // images need not be distinct
    let out = run(&[
        "homcheck",
        "-r",
        "2",
        "--permute",
        "1,1",
        "--trials",
        "30",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "homcheck", "-r", "3", "-m", "7", "--trials", "30", "--seed", "7",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["homcheck", "-r", "2", "--identity", "--trials", "20"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn homcheck_usage_errors() {
    let out = run(&["homcheck", "-r", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["homcheck", "-r", "2", "--permute", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("2 comma-separated"));

    let out = run(&["homcheck", "-r", "2", "--permute", "1,3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["homcheck", "-r", "2", "-m", "6"]);
    assert_eq!(out.status.code(), Some(2));

    // mutually exclusive selectors are a usage error
    let out = run(&["homcheck", "-r", "2", "-m", "5", "--identity"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
