use std::process::{Command, Output};

use qtflows::QTPolynomial;
use serde_json::Value;

fn qtflows(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtflows")).args(args).env_remove("QTFLOWS_SCAN_NMAX").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = qtflows(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn ehr_of_triangle() {
    assert_eq!(stdout(&["ehr", "--complete", "3", "--a", "1,1"]), "q + t + 1\n");
    assert_eq!(stdout(&["ehr", "--beta", "11"]), "q + t + 1\n");
    assert_eq!(stdout(&["ehr", "--degrees", "2,2,2", "--spec", "t0"]), "q + 1\n");
}

#[test]
fn t1_specialization_matches_tutte() {
    let ehr = stdout(&["ehr", "--degrees", "4,4,3,3,2", "--a", "1,1,1,1", "--spec", "t1"]);
    let tutte = stdout(&["tutte", "--degrees", "4,4,3,3,2", "--a", "1,1,1,1", "--at", "1,q"]);
    assert_eq!(ehr, tutte);
    let ehr = stdout(&["ehr", "--beta", "111", "--a", "1,2,1", "--spec", "t1"]);
    let tutte = stdout(&["tutte", "--beta", "111", "--a", "1,2,1", "--at", "1,q"]);
    assert_eq!(ehr, tutte);
}

#[test]
fn verify_qinv_exits_zero() {
    let out = qtflows(&["verify", "qinv", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("qinv: PASS"));
}

#[test]
fn argument_errors_exit_two_with_one_line() {
    for args in [
        &["ehr", "--beta", "1012"][..],
        &["ehr", "--complete", "3", "--a", "1"],
        &["ehr", "--complete", "3", "--a", "1,0"],
        &["ehr", "--beta", "11", "--complete", "3"],
        &["ehr"],
        &["ehr", "--degrees", "3,1,1,1,1,1"],
        &["tutte", "--beta", "11", "--at", "1"],
        &["parking", "--degrees", "3,3,2,2", "--stat", "pmaj"],
        &["frobnicate"],
        &["verify", "t7"],
    ] {
        let out = qtflows(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error"), "{args:?}: {err}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn json_polynomials_round_trip() {
    for args in [
        &["ehr", "--beta", "1010", "--json"][..],
        &["ehr", "--degrees", "4,4,3,3,2", "--a", "2,1,1,3", "--json"],
        &["tutte", "--beta", "111", "--a", "1,2,1", "--json"],
    ] {
        let v = json(args);
        let text = v["polynomial"].as_str().unwrap();
        let p: QTPolynomial = text.parse().unwrap();
        assert_eq!(p.to_string(), text);
    }
    let v = json(&["ehr", "--beta", "1010", "--json"]);
    assert_eq!(v["graph"]["degrees"], serde_json::json!([4, 3, 2, 2, 1]));
    assert_eq!(v["a"], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["ehr", "--degrees", "4,4,3,3,2", "--json"][..],
        &["trees", "--beta", "1101", "--list"],
        &["verify", "t0", "--n-max", "4", "--a-max", "3", "--seed", "7"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms").unwrap();
        v
    };
    let args = ["verify", "t1", "--n-max", "4", "--a-max", "3", "--json"];
    let (a, b) = (strip(json(&args)), strip(json(&args)));
    assert_eq!(a, b);
    assert_eq!(a["seed"], 0x5eed_0001);
    assert_eq!(a["failures"], serde_json::json!([]));
}

#[test]
fn report_schema() {
    let v = json(&["verify", "lemma-q", "--n-max", "3", "--a-max", "3", "--json"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["elapsed_ms", "failures", "instances", "theorem"]);
    assert_eq!(v["theorem"], "lemma-q");
    assert_eq!(v["instances"], 3 * 3 * 4);
}

#[test]
fn scan_budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qtflows"))
        .args(["scan", "positivity", "--json"])
        .env("QTFLOWS_SCAN_NMAX", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["instances"], 1 + 2 + 4);
    let v = json(&["scan", "k-minus-g", "--n-max", "4", "--json"]);
    assert_eq!(v["instances"], 1 + 2 + 4 + 8);
    let out = Command::new(env!("CARGO_BIN_EXE_qtflows"))
        .args(["scan", "poset"])
        .env("QTFLOWS_SCAN_NMAX", "six")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tesler_listing() {
    let text = stdout(&["tesler", "--complete", "4", "--a", "1,1,1", "--list"]);
    let rows: Vec<Vec<u64>> =
        text.lines().map(|l| l.split(' ').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r.len() == 9));
    assert_eq!(stdout(&["tesler", "--complete", "5"]), "40\n");
}

#[test]
fn tree_and_parking_statistics() {
    let v = json(&["trees", "--complete", "3", "--json"]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["inv_histogram"], serde_json::json!({"0": 2, "1": 1}));
    let v = json(&["parking", "--complete", "3", "--list", "--json"]);
    let values: Vec<Value> = v["parking_functions"].as_array().unwrap().iter().map(|p| p["values"].clone()).collect();
    assert_eq!(values, [serde_json::json!([0, 0]), serde_json::json!([0, 1]), serde_json::json!([1, 0])]);
    assert_eq!(v["codeg_histogram"], serde_json::json!({"0": 2, "1": 1}));
    let text = stdout(&["parking", "--complete", "4", "--stat", "pmaj"]);
    assert!(text.starts_with("parking functions: 16\n"));
}

#[test]
fn poset_listing() {
    let v = json(&["poset", "4", "--json"]);
    assert_eq!(v["elements"].as_array().unwrap().len(), 8);
    let covers = v["covers"].as_array().unwrap();
    assert!(covers.iter().all(|c| c.as_array().unwrap().len() == 2));
    assert_eq!(qtflows(&["poset", "0"]).status.code(), Some(2));
}
