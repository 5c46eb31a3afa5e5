use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn coxkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxkit")).args(args).env("COXKIT_THREADS", "2").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn write_fixture(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).expect("fixture written");
    path
}

fn count(args: &[&str]) -> usize {
    let o = coxkit(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim().parse().expect("a count")
}

#[test]
fn a3_has_five_maximal_nested_sets() {
    assert_eq!(count(&["enumerate", "a3", "--maximal", "--count-only"]), 5);
    let o = coxkit(&["--format", "json", "enumerate", "a3", "--maximal"]);
    let v = json(&o);
    assert_eq!(v["count"], 5);
    assert_eq!(v["items"].as_array().unwrap().len(), 5);
    let text = stdout(&coxkit(&["enumerate", "a3", "--maximal"]));
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.contains("{1,2,3}")));
}

#[test]
fn equal_bounds_give_one_nested_set() {
    for b in ["1", "1,2", "2,3", "1,2,3"] {
        assert_eq!(count(&["enumerate", "a3", "--b", b, "--b-prime", b, "--count-only"]), 1);
    }
    assert_eq!(count(&["enumerate", "a3", "--b", "1,3", "--b-prime", "1,3", "--chains", "--count-only"]), 1);
}

#[test]
fn disconnected_diagram_multiplies_component_counts() {
    let two_a2 = write_fixture("two-a2.json", r#"{"kind": "diagram", "vertices": 4, "edges": [[1, 2], [3, 4]]}"#);
    let a2 = write_fixture("a2.json", r#"{"kind": "diagram", "vertices": 2, "edges": [[1, 2]]}"#);
    let a3_a1 = write_fixture("a3-a1.json", r#"{"kind": "diagram", "vertices": 4, "edges": [[1, 2], [2, 3]]}"#);
    let one = count(&["enumerate", a2.to_str().unwrap(), "--maximal", "--count-only"]);
    assert_eq!(count(&["enumerate", two_a2.to_str().unwrap(), "--maximal", "--count-only"]), one * one);
    let a3 = count(&["enumerate", "a3", "--maximal", "--count-only"]);
    assert_eq!(count(&["enumerate", a3_a1.to_str().unwrap(), "--maximal", "--count-only"]), a3);
    let all_a2 = count(&["enumerate", a2.to_str().unwrap(), "--count-only"]);
    assert_eq!(count(&["enumerate", two_a2.to_str().unwrap(), "--count-only"]), all_a2 * all_a2);
}

#[test]
fn maximal_chains_of_a_set_are_orderings() {
    assert_eq!(count(&["enumerate", "a3", "--chains", "--maximal", "--count-only"]), 6);
    assert_eq!(count(&["enumerate", "a3", "--chains", "--maximal", "--b-prime", "2", "--count-only"]), 2);
}

#[test]
fn counterexample_one_is_obstructed() {
    let o = coxkit(&["diagrammatic", "counterexample-1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict: obstructed"));
    assert!(text.contains("h_2 needs dim 2 but h_12 ∩ h_23 has dim 1"), "{text}");
    for k in 1..=3 {
        let v = json(&coxkit(&["--format", "json", "diagrammatic", &format!("counterexample-{k}")]));
        assert_eq!(v["verdict"], "obstructed");
        assert!(v["witness"]["required_dim"].as_u64() > v["witness"]["bound_dim"].as_u64());
    }
}

#[test]
fn rank_two_gcms_and_zero_matrix_are_diagrammatic() {
    for (a, b) in [(1, 1), (1, 2), (1, 3), (2, 2), (1, 4), (3, 3), (2, 5), (0, 0)] {
        let body = format!(r#"{{"kind": "matrix", "entries": [["2", "-{a}"], ["-{b}", "2"]]}}"#);
        let path = write_fixture(&format!("gcm-{a}-{b}.json"), &body);
        let v = json(&coxkit(&["--format", "json", "diagrammatic", path.to_str().unwrap()]));
        assert_eq!(v["verdict"], "diagrammatic_by_sufficient_condition", "a12 = -{a}, a21 = -{b}");
    }
    let v = json(&coxkit(&["--format", "json", "diagrammatic", "zero-3"]));
    assert_eq!(v["verdict"], "diagrammatic_by_sufficient_condition");
}

#[test]
fn bad_input_exits_with_two() {
    let non_square = write_fixture("non-square.json", r#"{"kind": "matrix", "entries": [["2", "-1", "0"]]}"#);
    let o = coxkit(&["diagrammatic", non_square.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not square"));
    let malformed = write_fixture("malformed.json", r#"{"kind": "diagram", "vertices": 2, "edges": [[1, 3]]}"#);
    assert_eq!(coxkit(&["enumerate", malformed.to_str().unwrap()]).status.code(), Some(2));
    let garbage = write_fixture("garbage.json", "not json");
    assert_eq!(coxkit(&["enumerate", garbage.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(coxkit(&["enumerate", "no-such-fixture"]).status.code(), Some(2));
    assert_eq!(coxkit(&["enumerate", "a3", "--b", "1", "--b-prime", "2"]).status.code(), Some(2));
    assert_eq!(coxkit(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(coxkit(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bundled_fixtures_round_trip_through_files() {
    let names = stdout(&coxkit(&["fixture"]));
    assert_eq!(names.lines().count(), 11);
    let a3 = stdout(&coxkit(&["fixture", "a3"]));
    let path = write_fixture("a3.json", &a3);
    assert_eq!(count(&["enumerate", path.to_str().unwrap(), "--maximal", "--count-only"]), 5);
    let m = stdout(&coxkit(&["fixture", "counterexample-2"]));
    let path = write_fixture("cx2.json", &m);
    assert!(stdout(&coxkit(&["diagrammatic", path.to_str().unwrap()])).contains("obstructed"));
}

#[test]
fn quantum_sl2_suite_passes() {
    let o = coxkit(&["verify", "quantum-sl2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    for part in ["coproduct/", "classical-limit/", "naturality/", "half-balance-literal/"] {
        assert!(text.contains(part), "missing {part}");
    }
}

#[test]
fn associator_suite_and_broken_control() {
    assert_eq!(coxkit(&["verify", "associator"]).status.code(), Some(0));
    let o = coxkit(&["--format", "json", "verify", "associator", "--break-coefficient"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let failures: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert!(!failures.is_empty());
    assert!(failures.iter().all(|c| c["witness"] == "sides differ at ħ^2"));
}

#[test]
fn reports_are_byte_identical() {
    let a = coxkit(&["--format", "json", "verify", "hopf"]);
    let b = Command::new(env!("CARGO_BIN_EXE_coxkit")).args(["--format", "json", "verify", "hopf"]).env("COXKIT_THREADS", "1").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["suite"], "hopf");
    assert!(v.get("elapsed_ms").is_none());
    let timed = json(&coxkit(&["--format", "json", "verify", "hopf", "--timing"]));
    assert!(timed["elapsed_ms"].is_u64());
}

#[test]
fn quantum_a2_fails_only_on_literal_half_balance() {
    let o = coxkit(&["--format", "json", "verify", "quantum-a2"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let checks = v["checks"].as_array().unwrap();
    let failures: Vec<&str> = checks.iter().filter(|c| c["status"] == "fail").map(|c| c["name"].as_str().unwrap()).collect();
    assert!(!failures.is_empty());
    assert!(failures.iter().all(|n| n.starts_with("balance/half-balance-literal/")), "{failures:?}");
    assert!(checks.iter().any(|c| c["name"].as_str().unwrap().starts_with("identities/braid/")));
}
