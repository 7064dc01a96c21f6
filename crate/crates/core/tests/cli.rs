use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sparse-halves")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Writes `gen <name>` output to a per-test scratch file.
fn generated(name: &str, tag: &str) -> PathBuf {
    let out = bin(&["gen", name]);
    assert!(out.status.success());
    let path = std::env::temp_dir().join(format!("sparse-halves-{}-{tag}.txt", std::process::id()));
    std::fs::write(&path, &out.stdout).unwrap();
    path
}

#[test]
fn gen_fd5_header() {
    let out = bin(&["gen", "fd:5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("14 35"));
    assert_eq!(text.lines().count(), 36);
}

#[test]
fn petersen_is_maximal_triangle_free() {
    let p = generated("petersen", "check");
    let out = bin(&["check", p.to_str().unwrap(), "--triangle-free", "--maximality"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["triangle_free"], true);
    assert_eq!(v["maximal_triangle_free"], true);
    assert_eq!(v["m"], 15);
}

#[test]
fn pipeline_and_oracle_agree_on_c5_blowup() {
    let g = generated("blowup:c5:4", "find");
    let out = bin(&["find-half", g.to_str().unwrap(), "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["agree"], true);
    assert_eq!(v["oracle"]["min_edges"], 8);
    assert_eq!(v["pipeline"]["induced_edges"], 8);
    assert_eq!(v["pipeline"]["set"].as_array().unwrap().len(), 10);
}

#[test]
fn exit_codes() {
    let missing = bin(&["check", "/nonexistent/graph.txt", "--triangle-free"]);
    assert_eq!(missing.status.code(), Some(64));
    assert_eq!(json(&missing)["error"]["kind"], "io");
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(bin(&["gen", "fd:0"]).status.code(), Some(64));

    let bad = std::env::temp_dir().join(format!("sparse-halves-{}-bad.txt", std::process::id()));
    std::fs::write(&bad, "3 1\n0 x\n").unwrap();
    let out = bin(&["check", bad.to_str().unwrap(), "--triangle-free"]);
    assert_eq!(out.status.code(), Some(64));
    assert_eq!(json(&out)["error"]["kind"], "parse");
}

#[test]
fn verify_lemma_output_is_thread_independent() {
    let args = ["verify-lemma", "11cycle", "--budget", "3000", "--seed", "9"];
    let one = bin(&[&["--threads", "1"][..], &args[..]].concat());
    let two = bin(&[&["--threads", "2"][..], &args[..]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    let v = json(&one);
    assert_eq!(v["pass"], true);
    assert!(v["counterexample"].is_null());
}

#[test]
fn pipeline_test_is_reproducible() {
    let args = ["pipeline-test", "--count", "6", "--seed", "5", "--max-n", "20", "--oracle-max", "20"];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
