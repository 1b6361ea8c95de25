use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn egyptpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_egyptpoly"))
        .args(args)
        .output()
        .expect("spawn egyptpoly")
}

fn with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_egyptpoly"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn egyptpoly");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn decide_golden_json() {
    let out = egyptpoly(&["--format", "json", "decide", "--m", "5", "--n0", "7", "--n1", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["status"], "solvable");
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 1);
    assert_eq!(sols[0]["x"], serde_json::json!(["14", "18"]));
    assert_eq!(sols[0]["y"], serde_json::json!(["7", "16", "9"]));
    assert_eq!(sols[0]["z"], serde_json::json!(["2", "2"]));
    assert_eq!(
        sols[0]["params"],
        serde_json::json!({"k": "2", "l": "1", "s": "1", "r": "1"})
    );
}

#[test]
fn decide_unsolvable_carries_evidence() {
    let out = egyptpoly(&["--format", "json", "decide", "--m", "5", "--n0", "7", "--n1", "19"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "unsolvable");
    assert_eq!(v["evidence"][0]["family"], "s=5+7t, r=13+19t");
    assert_eq!(v["evidence"][0]["failure"], "no_base_triple_with_member");
    assert_eq!(v["family_search"][0]["found"], Value::Null);
}

#[test]
fn decide_output_round_trips_through_verify() {
    let decided = egyptpoly(&["--format", "json", "decide", "--m", "5", "--n0", "23", "--n1", "29"]);
    let out = with_stdin(&["--format", "json", "verify", "--file", "-"], &decided.stdout);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["verified"], true);
    assert_eq!(v["triples"][0]["degrees"], serde_json::json!([1, 1, 2]));
}

#[test]
fn verify_reads_a_triple_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triple.json");
    std::fs::write(&path, r#"{"x": ["14", "18"], "y": ["7", "16", "9"], "z": ["2", "2"]}"#).unwrap();
    let out = egyptpoly(&[
        "verify",
        "--m",
        "5",
        "--n0",
        "7",
        "--n1",
        "9",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("verified\n"));
}

#[test]
fn perturbed_coefficient_fails_verification() {
    let input = br#"{"x": ["14", "18"], "y": ["7", "17", "9"], "z": ["2", "2"]}"#;
    let out = with_stdin(
        &[
            "--format", "json", "verify", "--m", "5", "--n0", "7", "--n1", "9", "--file", "-",
        ],
        input,
    );
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verified"], false);
    assert_eq!(v["triples"][0]["identity"], false);
    assert!(v["triples"][0]["residual"].as_array().is_some_and(|r| !r.is_empty()));
}

#[test]
fn zero_polynomial_is_rejected() {
    let input = br#"{"x": ["14", "18"], "y": [], "z": ["2", "2"]}"#;
    let out = with_stdin(&["verify", "--m", "5", "--n0", "7", "--n1", "9", "--file", "-"], input);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("field y: zero polynomial"), "{}", stderr(&out));
}

#[test]
fn malformed_input_names_the_location() {
    let out = with_stdin(
        &["verify", "--m", "5", "--n0", "7", "--n1", "9", "--file", "-"],
        b"{\n\"x\": [\"1\",\n",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line"), "{}", stderr(&out));

    let out = with_stdin(
        &["verify", "--m", "5", "--n0", "7", "--n1", "9", "--file", "-"],
        br#"{"x": ["1"], "y": ["1/0"], "z": ["1"]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("field y"), "{}", stderr(&out));

    let out = with_stdin(&["verify", "--file", "-"], br#"{"x": ["1"], "y": ["1"], "z": ["1"]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--m"), "{}", stderr(&out));
}

#[test]
fn precondition_failures_exit_2() {
    let out = egyptpoly(&["decide", "--m", "5", "--n0", "3", "--n1", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("gcd(n1, m)"), "{err}");

    let out = egyptpoly(&["decide", "--m", "3", "--n0", "1", "--n1", "7"]);
    assert_eq!(out.status.code(), Some(2));

    let out = egyptpoly(&[
        "family", "--m", "5", "--n0", "7", "--n1", "9", "--base", "2,4,29", "--branch", "plus",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn audit_discrepancy_exits_3() {
    let out = egyptpoly(&[
        "--format",
        "json",
        "audit",
        "--corollary",
        "3",
        "--m",
        "5",
        "--bound",
        "29",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    let inst = v["instances"]
        .as_array()
        .unwrap()
        .iter()
        .find(|i| i["p"] == "29")
        .expect("p = 29 audited");
    assert_eq!(inst["verdict"], "discrepancy");

    let out = egyptpoly(&["audit", "--corollary", "4", "--m", "5", "--bound", "50"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn family_subcommand_builds_both_branches() {
    let plus = egyptpoly(&[
        "--format", "json", "family", "--m", "5", "--n0", "7", "--n1", "9", "--base", "2,7,14", "--roles", "14,7,2",
        "--branch", "plus",
    ]);
    assert_eq!(plus.status.code(), Some(0), "{}", stderr(&plus));
    let v = json(&plus);
    assert_eq!(v["identity"], true);
    assert_eq!(v["integral"], true);

    let minus = egyptpoly(&[
        "--format", "json", "family", "--m", "5", "--n0", "7", "--n1", "9", "--base", "2,7,14", "--roles", "14,7,2",
        "--branch", "minus",
    ]);
    assert_eq!(minus.status.code(), Some(0), "{}", stderr(&minus));
    let v = json(&minus);
    assert_eq!(v["identity"], true);
    assert_eq!(v["integral"], false);
}

#[test]
fn json_is_identical_across_thread_counts() {
    for args in [
        &["scan", "--m", "5", "--n1", "29"][..],
        &["audit", "--corollary", "i", "--m", "5", "--bound", "60"][..],
    ] {
        let run = |threads: &str| {
            let mut full = vec!["--format", "json", "--threads", threads];
            full.extend_from_slice(args);
            egyptpoly(&full).stdout
        };
        let one = run("1");
        assert!(!one.is_empty());
        assert_eq!(one, run("4"), "{args:?}");
    }
}

#[test]
fn scan_and_base_text_output() {
    let out = egyptpoly(&["scan", "--m", "5", "--n1", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("4, 7, 8") || text.contains("[4, 7, 8]"), "{text}");

    let out = egyptpoly(&["--format", "csv", "base", "--m", "4", "--n0", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("a,b,c\n"));
    assert!(text.contains("2,4,20\n"), "{text}");
}
