//! End-to-end CLI checks: golden outputs, exit codes, and format switches.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfevac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn apply_evacuate_involution() {
    let out = run(&["apply", "evacuate", "32146578"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "12435876\n");
}

#[test]
fn apply_descents() {
    let out = run(&["apply", "descents", "32146578"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,2,5\n");
}

#[test]
fn apply_self_evac_check() {
    let out = run(&["apply", "self-evac-check", "1234"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "true\n");

    let out = run(&["apply", "self-evac-check", "2134"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "false\n");
}

#[test]
fn apply_rsk_renders_tableau_rows() {
    let out = run(&["apply", "rsk", "x=1,2,2,3,3,3,4,4,4,4;y=1,2,2,3,3,3,4,4,4,4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 2 3 4\n2 3 4\n3 4\n4\n");
}

#[test]
fn apply_polarize_biword() {
    let out = run(&["apply", "polarize", "x=1,1,2,3,4,4,4,6;y=4,3,2,1,6,4,1,4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "74328615\n");
}

#[test]
fn apply_evacuate_biword_respects_alphabet() {
    let out = run(&["apply", "evacuate", "m=3;x=1;y=1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n3\n");
}

#[test]
fn apply_json_format() {
    let out = run(&["apply", "evacuate", "32146578", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["operation"], "evacuate");
    assert_eq!(value["result"], "12435876");
}

#[test]
fn apply_rejects_bad_input_with_exit_2() {
    let out = run(&["apply", "descents", "2314"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["apply", "polarize", "1234"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["apply", "rsk", "x=1,2;y=1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_family_is_a_usage_error() {
    let out = run(&["table", "T", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_cap_exceeded_exits_3() {
    let out = run(&["table", "S", "--max-n", "40", "--source", "both"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn table_single_row() {
    let out = run(&["table", "S", "--max-n", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "| n/d | 0 |\n| --- | --- |\n| 0 | 1 |\n");
}

#[test]
fn table_formula_only_can_exceed_enumeration_caps() {
    // The pair-free family is pure formula, so large sizes render fine.
    let out = run(&["table", "S_star", "--max-n", "24", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row0 = text.lines().find(|l| l.starts_with("0,")).unwrap();
    assert_eq!(row0.split(',').nth(1).unwrap(), "1");
}

#[test]
fn table_output_is_deterministic() {
    let a = run(&["table", "c", "--max-n", "6", "--max-m", "4", "--source", "both"]);
    let b = run(&["table", "c", "--max-n", "6", "--max-m", "4", "--source", "both"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn table_json_counts_are_strings() {
    let out = run(&["table", "s_totals", "--max-n", "8", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["rows"][8]["cells"][0], "76");
}

#[test]
fn verify_witnesses_passes() {
    let out = run(&["verify", "witnesses"]);
    assert!(out.status.success(), "stdout: {}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("log_concavity_failure_witness"));
    assert!(text.contains("2 of 2 identities match"));
}

#[test]
fn verify_literal_coefficient_fails_with_counterexample() {
    let out = run(&[
        "verify",
        "formulas",
        "--eq9-literal",
        "--caps",
        "max_enumeration_n=8",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("k=3: 13 != 7"), "report:\n{text}");
}

#[test]
fn verify_report_file() {
    let dir = std::env::temp_dir().join(format!("selfevac-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "verify",
        "witnesses",
        "--out",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["suite"], "witnesses");
    std::fs::remove_dir_all(&dir).ok();
}
