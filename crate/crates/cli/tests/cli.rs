use std::process::{Command, Output};

fn qgf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

#[test]
fn verify_all_as_json() {
    let o = qgf(&["verify", "all", "--order", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let errors: Vec<String> = schema().iter_errors(&report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
    assert!(report["suites"].as_array().unwrap().len() >= 12);
    assert_eq!(report["status"], "pass");

    let mut broken = report.clone();
    broken["suites"][0]["checks"][0] = serde_json::json!({ "name": "x", "status": "fail" });
    assert!(!schema().is_valid(&broken), "a failing check needs a witness");
}

#[test]
fn reports_are_byte_identical() {
    let a = qgf(&["verify", "sklyanin", "frt", "casimir", "--format", "json", "--jobs", "3"]);
    let b = qgf(&["verify", "casimir", "frt", "sklyanin", "--format", "json", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let t = qgf(&["verify", "casimir", "--timings", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&t)).unwrap();
    assert!(report["suites"][0]["millis"].is_u64());
    assert!(schema().is_valid(&report));
}

#[test]
fn exit_codes() {
    assert_eq!(qgf(&["verify", "hopf-axioms", "--order", "1"]).status.code(), Some(0));
    let o = qgf(&["verify", "no-such-suite"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no-such-suite"));
    assert_eq!(qgf(&["verify", "casimir", "--s", "2"]).status.code(), Some(2));
    assert_eq!(qgf(&["verify", "casimir", "--order", "0"]).status.code(), Some(2));
    assert_eq!(qgf(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn sign_selection_and_text() {
    let o = qgf(&["verify", "coaction", "--s", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("funv-ck-elliptic on"));
    assert!(!text.contains("funv-ck-hyperbolic"));
    assert!(text.lines().last().unwrap().starts_with("pass: 1 suites"));
}

#[test]
fn fail_fast_runs_in_order() {
    let o = qgf(&["verify", "frt", "casimir", "--fail-fast", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = report["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(names, ["casimir", "frt"]);
}

#[test]
fn listing() {
    let o = qgf(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 18);
    assert!(text.starts_with("hopf-axioms"));
    let poisson = stdout(&qgf(&["list", "--tag", "poisson"]));
    assert_eq!(poisson.lines().count(), 3);
    let none = qgf(&["list", "--tag", "nothing"]);
    assert_eq!(none.status.code(), Some(0));
    assert!(none.stdout.is_empty());
}

#[test]
fn tensor_dump() {
    let o = qgf(&["dump-tensor", "--cutoff", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "0 0 1 | 0 0 1 | 0 1 0 | 2·w"));
    assert_eq!(qgf(&["dump-tensor", "--cutoff", "0"]).status.code(), Some(2));
}
