//! The `stern-gf` binary: output formats and the exit-code contract.

mod common;

use std::io::Write;
use std::process::{Command, Output};

use serde_json::{json, Value};

use common::fixture_path;
use stern_gf::SpecFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stern-gf"))
        .args(args)
        .output()
        .unwrap()
}

fn fixture(name: &str) -> String {
    fixture_path(name).display().to_string()
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_spec(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn gf_base_u2() {
    let v = stdout_json(&run(&["gf", &fixture("base_u2")]));
    assert_eq!(v["num"], json!([1, -2]));
    assert_eq!(v["den"], json!([1, -5, 2]));
    assert_eq!(v["dim"], json!(2));
    assert_eq!(v["method"], json!("eliminate"));
}

#[test]
fn gf_methods_and_pretty() {
    let v = stdout_json(&run(&["gf", &fixture("base_u5"), "--method", "fit", "--pretty"]));
    assert_eq!(v["num"], json!([1, -11, -20]));
    assert_eq!(v["den"], json!([1, -14, -47]));
    assert_eq!(v["method"], json!("fit"));
    assert!(v["pretty"].as_str().unwrap().contains("t^2"));
}

#[test]
fn gf_limit_exceeded_exit_2() {
    let out = run(&["gf", &fixture("challenge_u2"), "--limit", "500"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(report["outcome"], json!("LimitExceeded"));
    assert_eq!(report["limit"], json!(500));
    assert_eq!(report["state_count"], json!(501));
}

#[test]
fn matrix_export() {
    let v = stdout_json(&run(&["matrix", &fixture("base_u2")]));
    assert_eq!(
        v,
        json!({"dim": 2, "rows": [[[0, 3], [1, 4]], [[0, 1], [1, 2]]], "v": [1, 0], "root": 0})
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let out = run(&["matrix", &fixture("base_u1"), "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m["dim"], json!(1));
    assert_eq!(m["rows"], json!([[[0, 3]]]));
}

#[test]
fn terms_and_digits() {
    let v = stdout_json(&run(&["terms", &fixture("base_u2"), "-n", "4"]));
    assert_eq!(v, json!([1, 3, 13, 59, 269]));
    let v = stdout_json(&run(&["terms", &fixture("base_u1"), "-n", "3"]));
    assert_eq!(v, json!([1, 3, 9, 27]));
    let v = stdout_json(&run(&["terms", &fixture("base_u2"), "-n", "30", "--digits-only"]));
    assert_eq!(v[0], json!(1));
    assert_eq!(v.as_array().unwrap().len(), 31);
}

#[test]
fn oracle_terms() {
    let v = stdout_json(&run(&["oracle", &fixture("base_u2"), "-n", "3"]));
    assert_eq!(v, json!([1, 3, 13, 59]));
    let v = stdout_json(&run(&["oracle", &fixture("base_u2"), "-n", "0"]));
    assert_eq!(v, json!([1]));
    let out = run(&["oracle", &fixture("base_u2"), "-n", "20", "--max-coefficients", "1000"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn guess_exit_codes() {
    let v = stdout_json(&run(&["guess", &fixture("base_u2"), "-n", "8"]));
    assert_eq!(v["num"], json!([1, -2]));
    let out = run(&["guess", &fixture("challenge_u2"), "-n", "25", "--max-deg", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&run(&["guess", &fixture("constant_one"), "-n", "6"]));
    assert_eq!(v, json!({"num": [1], "den": [1, -1]}));
}

#[test]
fn pv_verdicts() {
    let v = stdout_json(&run(&["pv", &fixture("fibonacci_u2")]));
    assert_eq!(v["pv"], json!(true));
    let v = stdout_json(&run(&["pv", &fixture("challenge_u2")]));
    assert_eq!(v["pv"], json!(false));
    assert!(v["reason"].as_str().unwrap().contains("root of modulus 1"));
    let v = stdout_json(&run(&["pv", &fixture("base_u2")]));
    assert_eq!(v["pv"], json!(true));
}

#[test]
fn invalid_specs_exit_4() {
    let cases = [
        "{not json",
        r#"{"P":[1],"seq":{"init":[1],"rec":[2]},"factor":[{"c":1,"e":[0]}]}"#,
        r#"{"P":[1],"seq":{"init":[1],"rec":[2]},"factor":[{"c":1,"e":[0,1]}],"alpha":[2]}"#,
        r#"{"P":[1],"seq":{"init":[1],"rec":[2]},"factor":[{"c":1,"e":[1]}],"alpha":[0,1]}"#,
        r#"{"P":[],"seq":{"init":[1],"rec":[2]},"factor":[{"c":1,"e":[1]}],"alpha":[1]}"#,
        r#"{"P":[1],"seq":{"init":[1],"rec":[-1]},"factor":[{"c":1,"e":[1]}],"alpha":[1]}"#,
    ];
    for text in cases {
        let f = temp_spec(text);
        let out = run(&["gf", f.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(4), "{text}");
        assert!(out.stdout.is_empty());
    }
    let f = temp_spec("{\n\"P\": [1],\n\"seq\": 3\n}");
    let out = run(&["gf", f.path().to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn usage_errors_do_not_use_reserved_codes() {
    assert_eq!(run(&["gf"]).status.code(), Some(1));
    assert_eq!(run(&["gf", "/nonexistent/spec.json"]).status.code(), Some(1));
}

#[test]
fn horizon_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_stern-gf"))
        .args(["gf", &fixture("base_u2")])
        .env("STERN_GF_HORIZON", "8")
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["den"], json!([1, -5, 2]));
    let out = Command::new(env!("CARGO_BIN_EXE_stern-gf"))
        .args(["gf", &fixture("base_u2")])
        .env("STERN_GF_HORIZON", "soon")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fixtures_round_trip() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut count = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let file = SpecFile::read(&path).unwrap();
        let spec = file.spec().unwrap();
        let alpha = file.alpha().unwrap();
        let again = SpecFile::parse(&SpecFile::from_spec(&spec, Some(&alpha)).to_json()).unwrap();
        assert_eq!(again.spec().unwrap(), spec, "{}", path.display());
        assert_eq!(again.alpha().unwrap(), alpha);
        count += 1;
    }
    assert!(count >= 15);
}
