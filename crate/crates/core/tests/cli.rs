//! End-to-end checks of the CLI surface: output format, exit codes, and
//! the parser round trip on printed elements.

use std::process::{Command, Output};

fn sdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn det_identity() {
    let out = sdet(&["det", "--group", "sd16", "1,0,0,0,0,0,0,0;0,0,0,0,0,0,0,0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn det_factored_45() {
    let out = sdet(&[
        "det",
        "--group",
        "sd16",
        "--factored",
        "0,1,1,0,0,0,0,0;1,1,1,0,0,0,0,0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("D=45"));
    assert!(text.contains("M=5"));
    assert!(text.contains("A2=1"));
    assert!(text.contains("A3=3"));
}

#[test]
fn det_m16_identity() {
    let out = sdet(&["det", "--group", "m16", "1,0,0,0,0,0,0,0;0,0,0,0,0,0,0,0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn det_parse_error_exit_2() {
    let out = sdet(&["det", "--group", "sd16", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_exit_codes() {
    assert_eq!(sdet(&["classify", "45"]).status.code(), Some(0));
    assert_eq!(sdet(&["classify", "5"]).status.code(), Some(1));
    assert_eq!(sdet(&["classify", "1048576"]).status.code(), Some(0));
    assert_eq!(sdet(&["classify", "abc"]).status.code(), Some(2));
}

#[test]
fn classify_json_mirrors_text() {
    let out = sdet(&["classify", "45", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n"], "45");
    assert_eq!(v["achievable"], true);
    assert!(v["reason"].as_str().unwrap().contains("p=3"));
}

#[test]
fn witness_17_verify() {
    let out = sdet(&["witness", "17", "--verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2,1,1,1,1,1,1,1;1,1,1,1,1,1,1,1"));
    assert!(text.contains("verified"));
}

#[test]
fn witness_minus_27() {
    let out = sdet(&["witness", "-27", "--verify"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1,1,0,0,0,0,0,0;0,1,0,0,0,0,0,0"));
}

#[test]
fn witness_13_not_achievable_exit_1() {
    let out = sdet(&["witness", "13"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn witness_output_round_trips_through_det() {
    let out = sdet(&["witness", "1024"]);
    assert!(out.status.success());
    let element = stdout(&out).lines().next().unwrap().trim().to_string();
    let det = sdet(&["det", "--group", "sd16", &element]);
    assert!(det.status.success());
    assert_eq!(stdout(&det).trim(), "1024");
}

#[test]
fn census_small_enumeration() {
    let out = sdet(&[
        "census",
        "--lo",
        "0",
        "--hi",
        "1",
        "--max-nonzero",
        "2",
        "--jobs",
        "2",
    ]);
    assert!(out.status.success());
    // achieved-value records: value <TAB> element <TAB> count
    let text = stdout(&out);
    let first = text.lines().next().unwrap();
    assert_eq!(first.split('\t').count(), 3);
}

#[test]
fn table_sd16() {
    let out = sdet(&["table", "--group", "sd16"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("sd16"));
    assert_eq!(text.lines().filter(|l| l.contains(':')).count(), 16);
}

#[test]
fn factor_examples() {
    let out = sdet(&["factor", "45"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3^2 * 5");
    let out = sdet(&["factor", "-27"]);
    assert_eq!(stdout(&out).trim(), "-1 * 3^3");
}

#[test]
fn d8_direct_input() {
    let out = sdet(&["det", "--group", "d8", "2,0,0,0;0,0,0,0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "256");
}
