use std::fs;
use std::path::Path;

use quiverhall::cli::run;
use serde_json::Value;

fn quiver(name: &str) -> String {
    format!("{}/examples/quivers/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["quiverhall"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn cartan_of_the_jordan_quiver() {
    let (code, out, _) = call(&["cartan", &quiver("jordan"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([[0]]));
    assert_eq!(v["tags"][0], "imaginary");
}

#[test]
fn bridge_expands_imaginary_steps() {
    let (code, out, _) = call(&["bridge", &quiver("mixed_rs"), "--type", "r:2,s:3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "((r,s,s,s),(2,1,1,1))");
}

#[test]
fn verify_exit_codes() {
    let (code, _, _) = call(&["verify", "concatenation", &quiver("jordan"), "--nu-max", "3", "--q", "2"]);
    assert_eq!(code, 0);
    let (code, out, _) = call(&["verify", "concatenation", &quiver("a2"), "--nu-max", "2", "--q", "2", "--twist", "-1,0,1", "--format", "json"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "fail");
    assert!(v["counterexample"].is_object());
    let (code, _, err) = call(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("frobnicate"));
    let (code, _, _) = call(&["verify", "serre", &quiver("a2"), "--bogus-flag"]);
    assert_eq!(code, 2);
}

#[test]
fn input_errors_exit_with_usage_code() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"vertices":["1"],"arrows":[{"src":"1","tgt":"x"}]}"#).unwrap();
    let (code, _, err) = call(&["cartan", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("`x`"), "{err}");
    let (code, _, err) = call(&["verify", "c-equiv", &quiver("mixed1"), "--file2", &quiver("a2"), "--nu-max", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("not ≈-equivalent"), "{err}");
}

#[test]
fn reports_round_trip_and_are_seed_deterministic() {
    let args = ["verify", "concatenation", &quiver("mixed1"), "--nu-max", "3", "--q", "3", "--format", "json", "--seed", "7", "--budget", "100"];
    let (code, a, _) = call(&args);
    let (_, b, _) = call(&args);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    let report: quiverhall::theorems::VerificationReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), v);
    // a tiny budget forces sampling, which must be flagged
    assert!(report.truncated);
    assert_eq!(code, 0);
}

fn cache_files(dir: &Path) -> Vec<std::path::PathBuf> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect()
}

#[test]
fn dims_are_cached_bit_identically() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["dims", &quiver("a2"), "--nu", "2,1", "--format", "json", "--cache-dir", d];
    let (c1, first, _) = call(&args);
    assert_eq!(c1, 0);
    let files = cache_files(dir.path());
    assert_eq!(files.len(), 1);
    let stamp = fs::read(&files[0]).unwrap();
    let (_, second, _) = call(&args);
    assert_eq!(first, second);
    assert_eq!(fs::read(&files[0]).unwrap(), stamp);

    // damaged entries are evicted and recomputed
    fs::write(&files[0], b"{not json").unwrap();
    let (_, third, err) = call(&args);
    assert_eq!(third, first);
    assert!(err.contains("evicting"), "{err}");

    // another tool version's entry is ignored and replaced
    let mut v: Value = serde_json::from_slice(&fs::read(&files[0]).unwrap()).unwrap();
    v["version"] = "0.0.0".into();
    fs::write(&files[0], serde_json::to_vec(&v).unwrap()).unwrap();
    let (_, fourth, err) = call(&args);
    assert_eq!(fourth, first);
    assert!(err.is_empty());
    let back: Value = serde_json::from_slice(&fs::read(&files[0]).unwrap()).unwrap();
    assert_eq!(back["version"], quiverhall::cli::TOOL_VERSION);
}

#[test]
fn no_cache_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, _, _) = call(&["dims", &quiver("jordan"), "--nu", "3", "--cache-dir", d, "--no-cache"]);
    assert_eq!(code, 0);
    assert!(cache_files(dir.path()).is_empty());
}

#[test]
fn remaining_subcommands() {
    let (code, out, _) = call(&["flags", &quiver("jordan"), "--nu", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["types"].as_array().unwrap().len(), 2);
    let (code, out, _) = call(&["primitive", &quiver("two_loop"), "--vertex", "1", "--m", "2", "--q", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["hall_dim"], 1);
    let (code, _, _) = call(&["verify", "engine-cross", "preset:a2", "--nu-max", "3", "--q", "2", "--cartan-entry", "1,2,-2"]);
    assert_eq!(code, 1);
    let (code, _, _) = call(&["dims", &quiver("kronecker"), "--nu", "1,1", "--engine", "both"]);
    assert_eq!(code, 0);
}
