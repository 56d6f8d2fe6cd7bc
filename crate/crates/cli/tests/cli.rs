use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn twistcube(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_twistcube"))
        .args(args)
        .env_remove("TWISTCUBE_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn manifest(out: &Output) -> Value {
    let stderr = String::from_utf8_lossy(&out.stderr);
    serde_json::from_str(stderr.lines().last().unwrap()).unwrap()
}

fn build(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).display().to_string();
    let mut full = args.to_vec();
    full.extend(["-o", &path]);
    assert_eq!(twistcube(&full, None).status.code(), Some(0));
    path
}

#[test]
fn minority_ten_executes_every_arc() {
    let dir = tempfile::tempdir().unwrap();
    let m10 = build(dir.path(), "m10.json", &["build", "minority", "-n", "10"]);
    let out = twistcube(&["verify", "arcs", "--input", &m10], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        (v["arcs"].as_u64(), v["executed"].as_u64()),
        (Some(639), Some(639))
    );
    assert_eq!(v["initial"], 385);
    let m = manifest(&out);
    assert_eq!(m["command"], "verify arcs");
    assert_eq!(m["outcome"], "pass");
    assert_eq!(m["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn exit_codes() {
    assert_eq!(
        twistcube(&["build", "minority", "-n", "2"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twistcube(&["build", "minority", "-n", "13"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(twistcube(&["solve"], None).status.code(), Some(2));
    assert_eq!(
        twistcube(&["verify", "set", "--input", "/no/such/file"], None)
            .status
            .code(),
        Some(2)
    );
    let q3 = twistcube(&["build", "hypercube", "-n", "3"], None).stdout;
    let cut = &q3[..q3.len() / 2];
    let out = twistcube(&["export", "--input", "-"], Some(cut));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
    // A set that does not force is a failure, not an error.
    let out = twistcube(
        &["verify", "set", "--input", "-", "--set", "000,001"],
        Some(&q3),
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["zero_forcing"], false);
    assert_eq!(manifest(&out)["outcome"], "fail");
    let out = twistcube(
        &["verify-set", "--input", "-", "--set", "000,010,100,110"],
        Some(&q3),
    );
    assert_eq!(out.status.code(), Some(0));
    // No arcs in a bare hypercube document.
    assert_eq!(
        twistcube(&["verify", "arcs", "--input", "-"], Some(&q3))
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn chain_twist_is_reported() {
    let doc = br#"{"dimension": null, "vertices": ["a","b","c","d"],
        "edges": [["a","b"],["b","c"],["c","d"],["d","a"]],
        "arcs": [["a","b"],["c","d"]]}"#;
    for detector in ["auto", "exhaustive", "walk"] {
        let out = twistcube(
            &["verify", "twist", "--input", "-", "--detector", detector],
            Some(doc),
        );
        assert_eq!(out.status.code(), Some(1), "{detector}");
        assert_eq!(json(&out)["chain_twist"].as_array().unwrap().len(), 4);
    }
    let out = twistcube(&["verify", "arcs", "--input", "-"], Some(doc));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["executed"], 0);
    let m4 = twistcube(&["build", "minority", "-n", "4"], None).stdout;
    let out = twistcube(&["verify", "twist", "--input", "-"], Some(&m4));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["chain_twist"], Value::Null);
}

#[test]
fn invalid_arcs_fail() {
    let doc = br#"{"dimension": null, "vertices": ["a","b","c"],
        "edges": [["a","b"],["b","c"]], "arcs": [["a","c"]]}"#;
    let out = twistcube(&["verify", "arcs", "--input", "-"], Some(doc));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["violations"][0]["kind"], "not_an_edge");
    let doc = br#"{"dimension": null, "vertices": ["a","b","c"],
        "edges": [["a","b"],["b","c"]], "arcs": [["a","b"],["c","b"]]}"#;
    let out = twistcube(&["verify", "arcs", "--input", "-"], Some(doc));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["structure"], "InDegree");
}

#[test]
fn solve_is_deterministic_across_workers() {
    let m4 = twistcube(&["build", "minority", "-n", "4"], None).stdout;
    let runs: Vec<Output> = ["1", "2", "4"]
        .iter()
        .map(|w| twistcube(&["solve", "--input", "-", "--workers", w], Some(&m4)))
        .collect();
    for r in &runs {
        assert_eq!(r.status.code(), Some(0));
        assert_eq!(r.stdout, runs[0].stdout);
    }
    let v = json(&runs[0]);
    assert_eq!(
        (v["z"].as_u64(), v["status"].as_str()),
        (Some(7), Some("exact"))
    );
    assert_eq!(v["witness"].as_array().unwrap().len(), 7);
    let out = twistcube(&["solve", "--input", "-", "--max-k", "5"], Some(&m4));
    let v = json(&out);
    assert_eq!(v["status"], "inconclusive");
    assert_eq!(v["z"], Value::Null);
    assert_eq!(v["bounds"], serde_json::json!([6, 8]));
}

#[test]
fn large_graphs_need_a_flag() {
    let q6 = twistcube(&["build", "hypercube", "-n", "6"], None).stdout;
    assert_eq!(
        twistcube(&["solve", "--input", "-"], Some(&q6))
            .status
            .code(),
        Some(2)
    );
    let out = twistcube(
        &[
            "solve",
            "--input",
            "-",
            "--allow-large",
            "--budget-secs",
            "0",
        ],
        Some(&q6),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "inconclusive");
    assert_eq!(v["bounds"], serde_json::json!([6, 32]));
}

#[test]
fn twisted_from_spec_and_exports() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(&spec, r#"{"levels": [[0], [1, 0], [0, 3, 2, 1]]}"#).unwrap();
    let cube = build(
        dir.path(),
        "cube.json",
        &["build", "twisted", "--spec", spec.to_str().unwrap()],
    );
    let doc = twistcube(&["export", "--input", &cube, "--format", "json"], None);
    assert_eq!(doc.stdout, std::fs::read(&cube).unwrap());
    let v = json(&doc);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
    assert!(!v["twisted_edges"].as_array().unwrap().is_empty());
    let dot = twistcube(&["export", "--input", &cube], None);
    assert!(String::from_utf8(dot.stdout)
        .unwrap()
        .starts_with("graph G {"));
    let m4 = build(dir.path(), "m4.json", &["build", "minority", "-n", "4"]);
    let dot =
        String::from_utf8(twistcube(&["export", "--input", &m4, "--format", "dot"], None).stdout)
            .unwrap();
    let arcs = dot
        .lines()
        .filter(|l| l.contains(" -> ") && !l.contains("dir=none"))
        .count();
    let red = dot.lines().filter(|l| l.contains("color=red")).count();
    assert_eq!((arcs, red), (9, 2));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"levels": [[0], [0, 0]]}"#).unwrap();
    let out = twistcube(&["build", "twisted", "--spec", bad.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
}
