//! End-to-end checks of the command-line interface: frozen report texts,
//! byte-level determinism, JSON well-formedness, and the exit-code contract.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn scenario(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("scenarios")
        .join(name)
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/goldens")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equicut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 report")
}

fn assert_golden(args: &[&str], golden_name: &str) {
    let got = stdout_of(args);
    assert_eq!(got, golden(golden_name), "report drifted for {args:?}");
}

#[test]
fn reports_match_goldens_for_the_line_scenario() {
    let s = scenario("p1_reduction.json");
    let s = s.to_str().unwrap();
    assert_golden(&["stability", s], "stability_p1.txt");
    assert_golden(&["inventory", s], "inventory_p1.txt");
    assert_golden(&["kalkman", s], "kalkman_p1.txt");
    assert_golden(&["euler", s], "euler_p1.txt");
    assert_golden(&["todd", s], "todd_p1.txt");
    assert_golden(&["oracle", s], "oracle_p1.txt");
}

#[test]
fn reports_match_goldens_for_fixed_point_data() {
    let s = scenario("p1xp1_fixed_points.json");
    let s = s.to_str().unwrap();
    assert_golden(&["euler", s], "euler_p1xp1.txt");
    assert_golden(&["todd", s], "todd_p1xp1.txt");
    assert_golden(&["kalkman", s], "kalkman_p1xp1.txt");
}

#[test]
fn reports_match_goldens_for_special_quotients() {
    let low = scenario("p012_low_chamber.json");
    assert_golden(&["kalkman", low.to_str().unwrap()], "kalkman_p012_low.txt");

    let orbifold = scenario("p012_orbifold.json");
    let orbifold = orbifold.to_str().unwrap();
    assert_golden(&["kalkman", orbifold], "kalkman_p012_orbifold.txt");
    assert_golden(&["euler", orbifold], "euler_p012_orbifold.txt");
    assert_golden(&["oracle", orbifold], "oracle_p012_orbifold.txt");

    let empty = scenario("p123_empty_quotient.json");
    assert_golden(&["kalkman", empty.to_str().unwrap()], "kalkman_p123_empty.txt");

    let symmetric = scenario("pm11_symmetric.json");
    assert_golden(&["kalkman", symmetric.to_str().unwrap()], "kalkman_pm11.txt");
}

#[test]
fn orbifold_label_appears_exactly_when_the_action_is_not_free() {
    let orbifold = stdout_of(&["euler", scenario("p012_orbifold.json").to_str().unwrap()]);
    assert!(orbifold.contains("orbifold (non-free action; rational-coefficient value)"));
    let free = stdout_of(&["euler", scenario("p1_reduction.json").to_str().unwrap()]);
    assert!(!free.contains("orbifold"));
}

#[test]
fn empty_quotient_warning_appears() {
    let report = stdout_of(&["kalkman", scenario("p123_empty_quotient.json").to_str().unwrap()]);
    assert!(report.contains("warning: reduced space is empty"));
}

#[test]
fn json_format_matches_golden_and_parses() {
    let s = scenario("p1_reduction.json");
    let args = ["todd", s.to_str().unwrap(), "--format", "json"];
    let got = stdout_of(&args);
    assert_eq!(got, golden("todd_p1.json"));
    let value: serde_json::Value = serde_json::from_str(&got).expect("valid JSON");
    assert_eq!(value["todd"], "1");
    assert_eq!(value["order"], 3);
    assert_eq!(value["closed_form_agrees"], false);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let s = scenario("p012_orbifold.json");
    let s = s.to_str().unwrap();
    for args in [
        vec!["kalkman", s],
        vec!["oracle", s],
        vec!["stability", s, "--format", "json"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "nondeterministic output for {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

fn temp_scenario(contents: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::Builder::new()
        .suffix(".json")
        .tempfile()
        .expect("temp file");
    file.write_all(contents.as_bytes()).expect("write");
    file
}

#[test]
fn validation_failures_exit_2() {
    let missing_level =
        temp_scenario(r#"{"mode": "projective_space", "weights": [0, 1], "class_spec": "1"}"#);
    let out = run(&["kalkman", missing_level.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("level_q"));

    let malformed = temp_scenario("{ not json");
    let out = run(&["euler", malformed.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let unknown_field = temp_scenario(
        r#"{"mode": "projective_space", "weights": [0, 1], "level_q": "1/2", "extra": 1}"#,
    );
    let out = run(&["euler", unknown_field.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let repeated_level = temp_scenario(
        r#"{"mode": "projective_space", "weights": [0, 1], "level_q": "1"}"#,
    );
    let out = run(&["stability", repeated_level.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "level on a weight is not regular");

    let out = run(&["euler", "/nonexistent/scenario.json"]);
    assert_eq!(out.status.code(), Some(2));

    let s = scenario("p1_reduction.json");
    let out = run(&["euler", s.to_str().unwrap(), "--order", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["not-a-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn insufficient_series_precision_exits_4() {
    let s = scenario("p1_reduction.json");
    let out = run(&["todd", s.to_str().unwrap(), "--order", "2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("order"));
}

#[test]
fn oracle_respects_an_explicit_degree_cap() {
    let s = scenario("p1_reduction.json");
    let report = stdout_of(&["oracle", s.to_str().unwrap(), "--dmax", "1"]);
    assert!(report.contains("degree_cap = 1"));
    // The invariant witness has degree 2, so capping at 1 hides it.
    assert!(report.contains("pattern {1,2}: stable = true, invariant_monomial = none, agree = false"));
    assert!(report.contains("agreement = 2/3"));
}

#[test]
fn verify_passes_and_reports_every_suite() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).expect("utf-8");
    assert!(text.contains("suites_passed = 18/18"));
    assert!(!text.contains("FAIL"));

    let json_out = run(&["verify", "--seed", "7", "--format", "json"]);
    assert_eq!(json_out.status.code(), Some(0));
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8(json_out.stdout).expect("utf-8"))
            .expect("valid JSON");
    assert_eq!(value["seed"], 7);
    assert_eq!(value["suites_passed"], true);
    assert_eq!(value["suites"].as_array().map(|s| s.len()), Some(18));
}
