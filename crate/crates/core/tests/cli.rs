//! End-to-end checks of the command-line binary: exit codes, output
//! determinism, and the report header digest.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foliations"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn count_agrees_with_the_closed_forms() {
    let path = fixture("degree2.fol");
    let out = run(&["count", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("isolated total: 3"));
    assert!(text.contains("exceptional total: 6"));
    assert!(text.contains("blow-up total: 9"));
    assert!(text.contains("agreement: yes"));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let path = fixture("degree2.fol");
    let args = ["count", "--input", path.to_str().unwrap(), "--output", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout_of(&first).contains("\"input_sha256\""));
}

#[test]
fn the_report_embeds_the_input_digest() {
    let path = fixture("degree3.fol");
    let text = std::fs::read_to_string(&path).unwrap();
    let digest = foliations::driver::sha256_hex(&text);
    let out = run(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains(&digest));
}

#[test]
fn a_missing_input_file_exits_one() {
    let out = run(&["count", "--input", "/nonexistent/input.fol"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("error:"));
}

#[test]
fn unknown_flags_exit_one() {
    let out = run(&["count", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("blowup"));
}

#[test]
fn the_axis_chart_is_rejected() {
    let path = fixture("degree2.fol");
    let out = run(&["blowup", "--input", path.to_str().unwrap(), "--chart", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("chart"));
}

#[test]
fn a_wrong_declared_twist_exits_two() {
    let text = std::fs::read_to_string(fixture("degree2.fol")).unwrap();
    let tampered = text.replace("ell = 1", "ell = 2");
    assert_ne!(text, tampered, "the fixture declares ell = 1");
    let path = std::env::temp_dir().join("foliations_cli_tampered.fol");
    std::fs::write(&path, tampered).unwrap();
    let out = run(&["count", "--input", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("mismatch"));
}

#[test]
fn the_seed_flag_is_accepted_and_changes_nothing() {
    let path = fixture("degree2.fol");
    let plain = run(&["count", "--input", path.to_str().unwrap()]);
    let seeded = run(&["count", "--input", path.to_str().unwrap(), "--seed", "7"]);
    assert_eq!(seeded.status.code(), Some(0));
    assert_eq!(plain.stdout, seeded.stdout);
}

#[test]
fn analyze_classifies_a_dicritical_field() {
    let path = fixture("dicritical.fol");
    let out = run(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("case: D-i"));
}

#[test]
fn grid_verification_runs_without_an_input_file() {
    let out = run(&["chow-verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("grid points: 960"));
    assert!(text.contains("failures: 0"));
}

#[test]
fn deform_reports_on_the_family_block() {
    let path = fixture("degree2.fol");
    let out = run(&["deform", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("linear system solved: yes"));
    assert!(text.contains("base member matches the unperturbed family: yes"));
}

#[test]
fn formulas_warn_on_unrealizable_data() {
    let path = fixture("formulas.fol");
    let out = run(&["formulas", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("grand total: -79"));
    assert!(text.contains("warning:"));
}
