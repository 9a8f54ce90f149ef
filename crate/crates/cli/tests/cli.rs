//! End-to-end tests for the `tomescu` binary: exit codes, JSON schema, and
//! worker-count independence.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn tomescu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tomescu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn chromatic_of_k4_literal() {
    let out = tomescu(&["chromatic", "C~", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["schema"], 1);
    let coeffs: Vec<&str> = v["results"][0]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["0", "-6", "11", "-6", "1"]);
    assert_eq!(v["results"][0]["pretty"], "x^4 - 6x^3 + 11x^2 - 6x");
}

#[test]
fn chromatic_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "C~").unwrap();
    writeln!(f, "DQc").unwrap();
    let out = tomescu(&["chromatic", path.to_str().unwrap(), "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
}

#[test]
fn family_cross_checks_closed_forms() {
    let out = tomescu(&["family", "theta", "--spec", r#"{"s1":2,"s2":1,"s3":3}"#, "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["engine_matches"], true);
    assert_eq!(v["order"], 5);
    assert_eq!(v["size"], 6);

    let out = tomescu(&["family", "wheel", "--spec", r#"{"t":6}"#, "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["engine_matches"], Value::Null);
    assert_eq!(v["order"], 7);
}

#[test]
fn bounds_custom_grid() {
    let out = tomescu(&[
        "bounds",
        "theta",
        "--grid",
        r#"{"specs":[[1,1,1],[2,1,3]],"x":["1","3/2",2]}"#,
        "--json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["checked"], 6);
    assert_eq!(v["all_hold"], true);
}

#[test]
fn certify_emits_isolating_interval() {
    let out = tomescu(&["certify", "k33son", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["within_reference_window"], true);
    let lo: f64 = parse_ratio(v["largest_root"]["lo"].as_str().unwrap());
    let hi: f64 = parse_ratio(v["largest_root"]["hi"].as_str().unwrap());
    assert!(2.9407 < lo && hi < 2.9409);
}

fn parse_ratio(s: &str) -> f64 {
    match s.split_once('/') {
        Some((n, d)) => n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap(),
        None => s.parse().unwrap(),
    }
}

#[test]
fn verify_conjecture_small_order() {
    let out = tomescu(&["verify", "conjecture", "--order", "4", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["checked"], 1);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["extremal_matches_predicate"], true);
}

#[test]
fn verify_is_worker_count_independent() {
    let mut outputs = Vec::new();
    for workers in ["1", "3"] {
        let out = tomescu(&["verify", "conjecture", "--order", "5", "--workers", workers, "--json"]);
        let mut v = stdout_json(&out);
        v.as_object_mut().unwrap().remove("runtime_ms");
        outputs.push(serde_json::to_string(&v).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn verify_tomescu3_and_cliquebound() {
    let out = tomescu(&["verify", "tomescu3", "--order", "5", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["extremal_is_unique_and_expected"], true);

    let out = tomescu(&["verify", "cliquebound", "--order", "5", "--clique", "3", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["equality_mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn remark_sk4_matches_reference_rows() {
    let out = tomescu(&["remark", "sk4", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["head_coefficients_match"], true);
    assert_eq!(v["pass"], true);
    assert_eq!(v["order"], 12);
}

#[test]
fn explore_k33_reports_threshold() {
    let out = tomescu(&["explore", "k33", "--max-size", "1", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["specs_checked"], 1);
    let lo = parse_ratio(v["max_root"]["lo"].as_str().unwrap());
    assert!(7.40 < lo && lo < 7.41);
}

#[test]
fn usage_errors_exit_two() {
    let out = tomescu(&["chromatic", "!!!notgraph6!!!"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = tomescu(&["family", "theta", "--spec", "{broken"]);
    assert_eq!(out.status.code(), Some(2));

    let out = tomescu(&["verify", "conjecture", "--order", "99"]);
    assert_eq!(out.status.code(), Some(2));

    let out = tomescu(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = tomescu(&["explore", "k33", "--max-size", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stdin_dash_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tomescu"))
        .args(["chromatic", "-", "--json"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"C~\nBW\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
}
