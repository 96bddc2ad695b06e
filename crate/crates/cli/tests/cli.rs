//! End-to-end tests of the exroot binary: output text, JSON schemas, and
//! exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn exroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exroot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn assert_exit(output: &Output, code: i32) {
    assert_eq!(output.status.code(), Some(code), "stderr: {}", String::from_utf8_lossy(&output.stderr));
}

#[test]
fn root_perfect_fifth_power() {
    let out = exroot(&["root", "3200000", "--exp", "5"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "20 (perfect 5th power, remainder 0)");
}

#[test]
fn root_not_perfect() {
    let out = exroot(&["root", "126", "--exp", "3"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "5 (not a perfect 3rd power, remainder 1)");
}

#[test]
fn root_oracle_methods_agree() {
    for method in ["bisect", "newton"] {
        let out = exroot(&["root", "12321", "--exp", "2", "--method", method]);
        assert_exit(&out, 0);
        assert!(stdout_of(&out).starts_with("111 "));
    }
}

#[test]
fn root_trace_with_oracle_method_is_rejected() {
    let out = exroot(&["root", "12321", "--exp", "2", "--method", "newton", "--trace"]);
    assert_exit(&out, 2);
}

#[test]
fn sqrt_ten_digits() {
    let out = exroot(&["sqrt", "2", "--digits", "10"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "1.4142135623");
}

#[test]
fn sqrt_radicand_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_exroot"))
        .args(["sqrt", "-", "--digits", "3"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(b"2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "1.414");
}

#[test]
fn radicand_from_file() {
    let path = std::env::temp_dir().join("exroot_cli_radicand.txt");
    std::fs::write(&path, "12321\n").unwrap();
    let arg = format!("@{}", path.display());
    let out = exroot(&["root", &arg, "--exp", "2"]);
    assert_exit(&out, 0);
    assert!(stdout_of(&out).starts_with("111 "));
}

#[test]
fn frac_root_seventh_of_two() {
    let out = exroot(&["frac-root", "2", "--exp", "7", "--digits", "10"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "1.1040895136");
}

#[test]
fn check_power_exit_codes_and_messages() {
    let yes = exroot(&["check-power", "125", "--exp", "3"]);
    assert_exit(&yes, 0);
    assert_eq!(stdout_of(&yes).trim(), "yes: root 5");

    let no = exroot(&["check-power", "126", "--exp", "3"]);
    assert_exit(&no, 1);
    assert_eq!(stdout_of(&no).trim(), "no: floor root 5, remainder 1");
}

#[test]
fn scan_power_variants() {
    let hit = exroot(&["scan-power", "64"]);
    assert_exit(&hit, 0);
    assert_eq!(stdout_of(&hit).trim(), "2^6");

    let all = exroot(&["scan-power", "64", "--all"]);
    assert_exit(&all, 0);
    assert_eq!(stdout_of(&all).trim(), "2^6\n4^3\n8^2");

    let miss = exroot(&["scan-power", "7"]);
    assert_exit(&miss, 1);
    assert_eq!(stdout_of(&miss).trim(), "none");
}

#[test]
fn invalid_inputs_exit_2_with_stderr_message() {
    for args in [
        &["root", "abc", "--exp", "2"][..],
        &["root", "5", "--exp", "1"][..],
        &["root", "5"][..],
        &["root", "5", "--exp", "2", "--bogus"][..],
        &["frac-root", "5", "--exp", "0", "--digits", "2"][..],
        &["nonsense"][..],
    ] {
        let out = exroot(args);
        assert_exit(&out, 2);
        assert!(!out.stderr.is_empty(), "expected a message for {args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let out = exroot(&["--help"]);
    assert_exit(&out, 0);
    assert!(stdout_of(&out).contains("check-power"));
}

#[test]
fn json_outputs_reparse_with_string_bignats() {
    let out = exroot(&["root", "3200000", "--exp", "5", "--json"]);
    assert_exit(&out, 0);
    let value: Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(value["root"], Value::String("20".into()));
    assert_eq!(value["remainder"], Value::String("0".into()));
    assert_eq!(value["radicand"], Value::String("3200000".into()));
    assert_eq!(value["perfect"], Value::Bool(true));

    // A value beyond 2^53 must still arrive as a string.
    let big = exroot(&["root", "123456789012345678901234567890", "--exp", "2", "--json"]);
    let value: Value = serde_json::from_str(&stdout_of(&big)).unwrap();
    assert!(value["root"].is_string());
    assert!(value["remainder"].is_string());
}

#[test]
fn json_trace_field_names() {
    let out = exroot(&["sqrt", "12321", "--trace", "--json"]);
    assert_exit(&out, 0);
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let rows = value["trace"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let last = rows.last().unwrap().as_object().unwrap();
    for key in ["step", "block", "scaled_remainder", "digit", "increment", "remainder", "root"] {
        assert!(last.contains_key(key), "missing {key}");
    }
    assert_eq!(last["root"], Value::String("111".into()));
}

#[test]
fn identical_requests_are_byte_identical() {
    let first = exroot(&["sqrt", "99", "--digits", "25", "--json"]);
    let second = exroot(&["sqrt", "99", "--digits", "25", "--json"]);
    assert_eq!(first.stdout, second.stdout);

    let a = exroot(&["root", "999999999999999999999999", "--exp", "3", "--trace"]);
    let b = exroot(&["root", "999999999999999999999999", "--exp", "3", "--trace"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bench_csv_shape_and_stable_checksums() {
    let args = ["bench", "--exp", "2", "--sizes", "10,20", "--reps", "1", "--seed", "7"];
    let out = exroot(&args);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "method,e,L,k,median_ns,reps,checksum");
    assert_eq!(lines.len(), 1 + 2 * 3); // two sizes, three methods

    // Timings vary between runs; checksums must not.
    let again = exroot(&args);
    let checksum_column = |s: &str| -> Vec<String> {
        s.lines().skip(1).map(|l| l.split(',').next_back().unwrap().to_string()).collect()
    };
    assert_eq!(checksum_column(&text), checksum_column(&stdout_of(&again)));
}

#[test]
fn bench_json_report() {
    let out = exroot(&[
        "bench", "--exp", "3", "--sizes", "10,20,40", "--reps", "1", "--methods", "newton", "--fit",
        "--json",
    ]);
    assert_exit(&out, 0);
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["records"].as_array().unwrap().len(), 3);
    let growth = value["growth"].as_array().unwrap();
    assert_eq!(growth.len(), 1);
    assert_eq!(growth[0]["method"], Value::String("newton".into()));
}
