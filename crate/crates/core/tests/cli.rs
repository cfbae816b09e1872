//! End-to-end checks of the `ogroth` binary.

use std::process::{Command, Output};

fn ogroth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ogroth")).args(args).output().expect("spawn ogroth")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn compute_gco_and_groth() {
    let o = ogroth(&["compute", "gco", "--z", "(1,2)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "{213:2, 312:β}");
    let o = ogroth(&["compute", "groth", "--w", "132"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "x2 + x1 + b^1*x1*x2");
}

#[test]
fn compute_json_parses() {
    let o = ogroth(&["compute", "ortho", "--z", "(1,2)", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("json");
    assert!(v.is_object() || v.is_array());
}

#[test]
fn exit_codes() {
    assert_eq!(ogroth(&["compute", "gco", "--z", "(9,9)"]).status.code(), Some(2));
    assert_eq!(ogroth(&["verify", "no-such-sweep"]).status.code(), Some(2));
    assert_eq!(ogroth(&["compute", "gco", "--z", "(1,2)(3,4)"]).status.code(), Some(1));
    assert_eq!(ogroth(&["compute", "frobnicate"]).status.code(), Some(2));
}

#[test]
fn exports_are_deterministic() {
    for args in [
        ["export", "binv_plus_dot", "--z", "(1,4)(2,3)"],
        ["export", "binv_plus_json", "--z", "(1,4)(2,3)"],
        ["export", "shiftable_json", "--z", "(1,4)(2,3)"],
        ["export", "poly_json", "--w", "321"],
    ] {
        let a = ogroth(&args);
        let b = ogroth(&args);
        assert!(a.status.success(), "{args:?}");
        assert!(!a.stdout.is_empty(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let dot = stdout(&ogroth(&["export", "binv_plus_dot", "--z", "(1,2)"]));
    assert!(dot.starts_with("digraph"));
    let poly: serde_json::Value = serde_json::from_str(&stdout(&ogroth(&["export", "poly_json", "--w", "321"]))).unwrap();
    assert!(!poly.is_null());
}

#[test]
fn census_values_table() {
    let o = ogroth(&["census", "values_table", "--n", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.contains(':')));
}

#[test]
fn verify_text_and_json() {
    let o = ogroth(&["verify", "qd-thm", "--n-max", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS qd-thm n_max=3"));
    let o = ogroth(&["verify", "qd-thm", "--n-max", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("json");
    let r = &v[0];
    assert_eq!(r["theorem_id"], "qd-thm");
    assert_eq!(r["cases_checked"], 3);
    assert_eq!(r["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_list_names_every_sweep() {
    let text = stdout(&ogroth(&["verify", "list"]));
    for id in ["qd-thm", "b+conj", "stab", "connectivity"] {
        assert!(text.lines().any(|l| l.starts_with(id)), "{id}");
    }
}
