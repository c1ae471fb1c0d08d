use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn lieschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieschur")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn catalog_file(dir: &Path, args: &[&str], name: &str) -> PathBuf {
    let p = dir.join(name);
    let mut all = vec!["catalog"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", p.to_str().unwrap()]);
    assert_eq!(code(&lieschur(&all)), 0);
    p
}

#[test]
fn multiplier_json_for_heisenberg_11() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(dir.path(), &["heisenberg-even", "--m", "1", "--n", "1"], "h11.json");
    let o = lieschur(&["multiplier", f.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["dim_M"].as_u64(), v["bound"].as_u64(), v["t"].as_i64()), (Some(3), Some(7), Some(4)));
    assert_eq!(v["rank_d2"], 1);
    assert_eq!(v["rank_d3"], 3);
    assert!(v["bounds"].is_object() && v["checks"].is_object());
}

#[test]
fn json_output_is_stable() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(dir.path(), &["heisenberg-odd", "--n", "2"], "h2.json");
    let a = stdout(&lieschur(&["multiplier", f.to_str().unwrap(), "--json"]));
    let b = stdout(&lieschur(&["multiplier", f.to_str().unwrap(), "--json"]));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["dim_M"], 7);
}

#[test]
fn catalog_to_stdout_round_trips() {
    let o = lieschur(&["catalog", "heisenberg-even", "--m", "1", "--n", "2"]);
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "h12.json", &stdout(&o));
    let v = lieschur(&["validate", f.to_str().unwrap()]);
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).contains("valid"));
    let m: Value = serde_json::from_str(&stdout(&lieschur(&["multiplier", f.to_str().unwrap(), "--json"]))).unwrap();
    assert_eq!(m["dim_M"], 7);
}

#[test]
fn conflicting_brackets_exit_2_with_both_locations() {
    let dir = TempDir::new().unwrap();
    let f = write(
        dir.path(),
        "bad.json",
        r#"{"name": "bad", "even": ["a", "b", "c"], "odd": [],
            "brackets": [{"left": "a", "right": "b", "value": {"c": "1/1"}},
                         {"left": "b", "right": "a", "value": {"c": "1/1"}}]}"#,
    );
    let o = lieschur(&["validate", f.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("brackets[0]") && err.contains("brackets[1]"), "{err}");
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "junk.json", "{ not json");
    assert_eq!(code(&lieschur(&["multiplier", f.to_str().unwrap()])), 2);
    let f = write(
        dir.path(),
        "frac.json",
        r#"{"name":"q","even":["a","b"],"odd":[],"brackets":[{"left":"a","right":"b","value":{"a":"1/0"}}]}"#,
    );
    assert_eq!(code(&lieschur(&["multiplier", f.to_str().unwrap()])), 2);
    assert_eq!(code(&lieschur(&["multiplier", "/nonexistent/file.json"])), 2);
    assert_eq!(code(&lieschur(&["catalog", "heisenberg-odd", "--n", "0"])), 2);
}

#[test]
fn jacobi_failure_exits_1() {
    let dir = TempDir::new().unwrap();
    let f = write(
        dir.path(),
        "nonjacobi.json",
        r#"{"name": "broken", "even": ["e1", "e2", "e3"], "odd": [],
            "brackets": [{"left": "e1", "right": "e2", "value": {"e1": "1"}},
                         {"left": "e1", "right": "e3", "value": {"e2": "1"}}]}"#,
    );
    let o = lieschur(&["validate", f.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("jacobi"));
    assert_eq!(code(&lieschur(&["multiplier", f.to_str().unwrap()])), 1);
}

#[test]
fn pair_without_complement_exits_3() {
    let dir = TempDir::new().unwrap();
    let f = write(
        dir.path(),
        "heis.json",
        r#"{"name": "H(1)", "even": ["x1", "x2", "z"], "odd": [],
            "brackets": [{"left": "x1", "right": "x2", "value": {"z": "1"}}],
            "ideal": ["z"]}"#,
    );
    assert_eq!(code(&lieschur(&["pair", f.to_str().unwrap()])), 3);
    let o = lieschur(&["analyze", f.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pair"]["pair_center"], serde_json::json!(["z"]));
    assert_eq!(v["nilpotency"], "class 2");
}

#[test]
fn pair_with_complement() {
    let dir = TempDir::new().unwrap();
    let f = write(
        dir.path(),
        "sum.json",
        r#"{"name": "H(1) + line", "even": ["x1", "x2", "z", "w"], "odd": [],
            "brackets": [{"left": "x1", "right": "x2", "value": {"z": "1"}}],
            "ideal": ["w"]}"#,
    );
    let o = lieschur(&["pair", f.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim_M"], 2);
    assert_eq!(v["t"], 1);
    assert_eq!(v["complement"], serde_json::json!(["x1", "x2", "z"]));
    assert_eq!(v["checks"]["pair_defect_one"]["status"], "pass");

    let o = lieschur(&["pair", f.to_str().unwrap(), "--complement", "x1,x2,z", "--json"]);
    assert_eq!(code(&o), 0);
    let o = lieschur(&["pair", f.to_str().unwrap(), "--complement", "x1,x2"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn quiet_prints_nothing() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(dir.path(), &["abelian", "--m", "2", "--n", "1"], "ab.json");
    let o = lieschur(&["multiplier", f.to_str().unwrap(), "--quiet"]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
}

#[test]
fn small_selftest() {
    let o = lieschur(&["selftest", "--max-dim", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);
    assert!(v.as_array().unwrap().iter().all(|r| r["passed"] == true));
}
