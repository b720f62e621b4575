use std::process::Command;

use homfly_cli::{exit_code, run, Record, ValueRecord};
use homfly_core::Verdict;
use proptest::prelude::*;
use serde_json::Value;

fn homfly(args: &[&str]) -> homfly_cli::Outcome {
    run(std::iter::once("homfly").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = homfly(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn invariant_reports_exact_value() {
    let v = json(&["--no-cache", "invariant", "--knot", "torus:2,3", "--color", "1", "--normalized"]);
    assert_eq!(v["command"][0], "--no-cache");
    let rec = &v["results"][0];
    assert_eq!(rec["kind"], "value");
    assert_eq!(rec["quantity"], "normalized");
    assert_eq!(rec["knot"], "torus:2,3");
    assert!(rec["engine_version"].is_null());
    assert!(v["engine_version"].as_str().unwrap().starts_with("homfly-core"));
}

#[test]
fn json_is_deterministic_apart_from_wall_time() {
    let args = ["--no-cache", "lmov", "--knot", "unknot", "--framing", "1", "--max-weight", "3"];
    let mut a = json(&args);
    let mut b = json(&args);
    a["wall_time_seconds"] = Value::Null;
    b["wall_time_seconds"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn lmov_records_carry_integer_tables() {
    let v = json(&["--no-cache", "lmov", "--knot", "torus:2,3", "--max-weight", "2", "--mu", "1"]);
    let recs = v["results"].as_array().unwrap();
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["kind"], "lmov");
    assert_eq!(recs[0]["verdict"], "pass");
    assert_eq!(recs[0]["framing"], 3);
    assert!(!recs[0]["N"].as_array().unwrap().is_empty());
}

#[test]
fn csv_output_has_headers() {
    let out = homfly(&["--no-cache", "--format", "csv", "lmov", "--knot", "unknot", "--max-weight", "2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("mu,g,Q,N\n"), "{}", out.stdout);
    let out = homfly(&["--format", "csv", "verify", "alpha", "--p", "3", "--tau", "2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("check,instance,pass,detail\n"), "{}", out.stdout);
    let out = homfly(&["--format", "csv", "alexander", "--knot", "torus:2,3"]);
    assert!(out.stdout.starts_with("quantity,knot,framing,color,reverse,value\n"), "{}", out.stdout);
}

#[test]
fn pretty_output_summarizes() {
    let out = homfly(&["--format", "pretty", "verify", "sumchi", "--max-weight", "4"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("PASS sumchi"), "{}", out.stdout);
    assert!(out.stdout.contains("ok in"), "{}", out.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(homfly(&["verify", "hecke", "--n", "3"]).code, 0);
    assert_eq!(homfly(&["verify", "hecke", "--n", "3", "--literal-sandwich"]).code, 1);
    assert_eq!(homfly(&["verify", "no-such-suite"]).code, 2);
    assert_eq!(homfly(&["--no-cache", "invariant", "--knot", "figure8", "--color", "1"]).code, 2);
    assert_eq!(homfly(&["--no-cache", "invariant", "--knot", "torus:2,4", "--color", "1"]).code, 2);
    assert_eq!(homfly(&["lmov", "--knot", "unknot", "--max-weight", "9"]).code, 2);
    assert_eq!(homfly(&["invariant", "--knot", "unknot"]).code, 2);
    assert_eq!(homfly(&["--help"]).code, 0);
}

#[test]
fn unsupported_flavor_is_a_usage_error() {
    let out = homfly(&["--no-cache", "invariant", "--knot", "torus:2,3", "--color", "1", "--composite"]);
    assert_eq!(out.code, 2, "{}", out.stdout);
    assert!(out.stderr.starts_with("error:"));
}

#[test]
fn cache_file_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let p = path.to_str().unwrap();
    let first = json(&["--cache", p, "invariant", "--knot", "torus:2,3", "--color", "2"]);
    assert!(path.exists());
    let second = json(&["--cache", p, "invariant", "--knot", "torus:2,3", "--color", "2"]);
    assert_eq!(first["results"], second["results"]);
    let stats = json(&["--cache", p, "cache", "list"]);
    assert_eq!(stats["results"].as_array().unwrap().len(), 1);
    let path_out = json(&["--cache", p, "cache", "path"]);
    assert_eq!(path_out["results"][0]["value"], p);
    json(&["--cache", p, "cache", "clear"]);
    let after = json(&["--cache", p, "cache", "list"]);
    assert!(after["results"].as_array().unwrap().is_empty());
}

#[test]
fn binary_reads_cache_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env.json");
    let out = Command::new(env!("CARGO_BIN_EXE_homfly"))
        .args(["invariant", "--knot", "unknot", "--color", "1", "--framing", "2"])
        .env("HOMFLY_CACHE", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(stored["entries"].as_array().unwrap().len(), 1);
    let out = Command::new(env!("CARGO_BIN_EXE_homfly"))
        .args(["verify", "no-such-suite"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

fn value_record() -> Record {
    Record::Value(ValueRecord {
        quantity: "framed".into(),
        knot: "unknot".into(),
        framing: 0,
        color: "(1)".into(),
        reverse: None,
        value: "1".into(),
        exact: Value::Null,
    })
}

proptest! {
    #[test]
    fn exit_code_flags_any_failure(n in 0usize..8, bad in prop::option::of(0usize..8)) {
        let mut recs: Vec<Record> = (0..n)
            .map(|i| if i % 2 == 0 { Record::Verdict(Verdict::pass("c", i.to_string())) } else { value_record() })
            .collect();
        let injected = bad.map(|b| b.min(recs.len()));
        if let Some(at) = injected {
            recs.insert(at, Record::Verdict(Verdict::fail("c", "x", "injected")));
        }
        prop_assert_eq!(exit_code(&recs), if injected.is_some() { 1 } else { 0 });
    }
}
