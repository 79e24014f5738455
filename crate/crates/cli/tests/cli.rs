use std::process::{Command, Output};

use macops::output::{to_json_line, Expansion};
use serde_json::Value;

fn macops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macops"))
        .args(args)
        .env_remove("MACOPS_MAX_WEIGHT")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json")
}

fn coeff<'a>(v: &'a Value, partition: &[u64]) -> &'a str {
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| {
            let p: Vec<u64> = c["partition"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect();
            p == partition
        })
        .map(|c| c["value"].as_str().unwrap())
        .expect("partition present")
}

#[test]
fn jpoly_single_column() {
    let v = json(&macops(&["jpoly", "--lambda", "1,1", "--nvars", "2"]));
    assert_eq!(coeff(&v, &[1, 1]), "1 - t - t^2 + t^3");
    assert_eq!(v["basis"], "monomial");
    assert_eq!(v["provenance"], "raising_kminus");
}

#[test]
fn jpoly_empty_partition() {
    let v = json(&macops(&["jpoly", "--lambda", "0"]));
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 1);
    assert_eq!(coeff(&v, &[]), "1");
}

#[test]
fn jpoly_checked() {
    let v = json(&macops(&["jpoly", "--lambda", "2", "--nvars", "2", "--check"]));
    assert_eq!(coeff(&v, &[2]), "1 - t - q*t + q*t^2");
    assert_eq!(coeff(&v, &[1, 1]), "1 + q - 2*t - 2*q*t + t^2 + q*t^2");
    assert_eq!(v["check"], "pass");
}

#[test]
fn routes_give_the_same_polynomial() {
    let mut seen = Vec::new();
    for via in ["kplus", "kminus", "eigen"] {
        let v = json(&macops(&["jpoly", "--lambda", "2,1", "--via", via]));
        seen.push(v["coeffs"].clone());
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn ppoly_two() {
    let v = json(&macops(&["ppoly", "--lambda", "2", "--nvars", "2", "--via", "eigen"]));
    assert_eq!(coeff(&v, &[2]), "1");
    assert_eq!(v["provenance"], "eigen_oracle");
    assert!(coeff(&v, &[1, 1]).contains('/'));
}

#[test]
fn kostka_tables() {
    let v = json(&macops(&["kostka", "--degree", "1"]));
    assert_eq!(v["entries"], serde_json::json!([["1"]]));
    let v = json(&macops(&["kostka", "--degree", "2", "--check-duality"]));
    assert_eq!(v["entries"], serde_json::json!([["1", "t"], ["q", "1"]]));
    assert_eq!(v["labels"], serde_json::json!([[2], [1, 1]]));
    assert_eq!(v["check"], "pass");
}

#[test]
fn jack_symbolic_and_integer() {
    let v = json(&macops(&["jack", "--lambda", "2", "--nvars", "2"]));
    assert_eq!(coeff(&v, &[2]), "1 + a");
    assert_eq!(coeff(&v, &[1, 1]), "2");
    let v = json(&macops(&["jack", "--lambda", "2", "--nvars", "2", "--alpha", "1", "--check"]));
    assert_eq!(coeff(&v, &[2]), "2");
    assert_eq!(coeff(&v, &[1, 1]), "2");
    let v = json(&macops(&["jack", "--lambda", "2", "--nvars", "2", "--alpha", "2"]));
    assert_eq!(coeff(&v, &[2]), "3");
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--suite", "raising", "--max-weight", "4"][..],
        &["verify", "--suite", "e-identities", "--n", "3"],
        &["verify", "--suite", "kernel", "--n", "2", "--m", "2"],
    ] {
        let out = macops(args);
        assert!(out.status.success(), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(!text.is_empty());
        for line in text.lines() {
            let r: Value = serde_json::from_str(line).unwrap();
            assert_eq!(r["status"], "pass", "{line}");
        }
    }
}

#[test]
fn generating_identity_records_the_exponent() {
    let out = macops(&["verify", "--suite", "e_generating", "--n", "3", "--m", "2", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("exponent C(n-|I|,2) holds"), "{text}");
}

#[test]
fn apply_op_routes_agree() {
    let mut seen = Vec::new();
    for route in ["generic", "printed", "determinantal"] {
        let v = json(&macops(&["apply-op", "--op", "k", "--mu", "1", "--nvars", "2", "--route", route]));
        seen.push(v["coeffs"].clone());
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]));
    let v = json(&macops(&["apply-op", "--op", "kplus", "--m", "1", "--mu", "0", "--nvars", "2"]));
    assert_eq!(coeff(&v, &[1]), "1 - t");
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["jpoly", "--lambda", "1,2"][..],
        &["jpoly", "--lambda", "1,1,1", "--nvars", "2"],
        &["jpoly", "--lambda", "x"],
        &["kostka", "--degree", "0"],
        &["jack", "--lambda", "2", "--alpha", "0"],
        &["verify", "--suite", "nope"],
        &["apply-op", "--op", "kplus", "--mu", "1"],
        &["jpoly"],
    ] {
        let out = macops(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn weight_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_macops"))
        .args(["jpoly", "--lambda", "3"])
        .env("MACOPS_MAX_WEIGHT", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_macops"))
        .args(["kostka", "--degree", "7"])
        .env_remove("MACOPS_MAX_WEIGHT")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let a = macops(&["jpoly", "--lambda", "3,1"]);
    let b = macops(&["jpoly", "--lambda", "3,1"]);
    assert_eq!(a.stdout, b.stdout);
    let e: Expansion = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(to_json_line(&e).as_bytes(), a.stdout.as_slice());
}

#[test]
fn text_format() {
    let out = macops(&["--format", "text", "jpoly", "--lambda", "1,1", "--nvars", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(1,1): 1 - t - t^2 + t^3"));
    assert!(text.contains("provenance: raising_kminus"));
}
