use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn tww(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tww"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("tww runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn witness_then_verify() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert!(tww(&["export", "--k", "1", "--out", "g1.edges"], d).status.success());
    let w = tww(&["witness", "--k", "1", "--out", "cert.json", "--trace", "trace.csv"], d);
    assert!(w.status.success());
    assert!(stdout(&w).ends_with('\n'));
    let cert = fs::read_to_string(d.join("cert.json")).unwrap();
    assert!(cert.contains("tww-cert/1") && cert.ends_with('\n'));
    let trace = fs::read_to_string(d.join("trace.csv")).unwrap();
    assert_eq!(trace.lines().count(), 522);

    let ok = tww(&["verify", "--graph", "g1.edges", "--cert", "cert.json", "--bound", "7"], d);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("ACCEPT"));
    let bad = tww(&["verify", "--graph", "g1.edges", "--cert", "cert.json", "--bound", "6"], d);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("REJECT"));
}

#[test]
fn solve_p4() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    fs::write(d.join("p4.edges"), "4 3\n0 1\n1 2\n2 3\n").unwrap();
    for threads in ["1", "3"] {
        let o = tww(&["solve", "--graph", "p4.edges", "--mode", "exact", "--threads", threads, "--out", "c.json"], d);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "width=1 status=exact\n");
    }
    let v = tww(&["verify", "--graph", "p4.edges", "--cert", "c.json", "--bound", "1"], d);
    assert_eq!(v.status.code(), Some(0));
    let naive = tww(&["solve", "--graph", "p4.edges", "--mode", "naive"], d);
    assert_eq!(stdout(&naive), "width=1 status=exact\n");
    let infeasible = tww(&["solve", "--graph", "p4.edges", "--mode", "at-most", "--width", "0"], d);
    assert_eq!(infeasible.status.code(), Some(1));
}

#[test]
fn export_round_trip() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert!(tww(&["generate", "--k", "2", "--out", "a.edges", "--meta", "meta.json"], d).status.success());
    assert!(tww(&["export", "--k", "2", "--format", "edges", "--out", "b.edges"], d).status.success());
    let a = fs::read_to_string(d.join("a.edges")).unwrap();
    assert_eq!(a, fs::read_to_string(d.join("b.edges")).unwrap());
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(d.join("meta.json")).unwrap()).unwrap();
    assert_eq!(meta["n"], 1172);
    assert_eq!(meta["skeleton_n"], 92);

    assert!(tww(&["export", "--k", "1", "--skeleton", "--format", "embedding", "--out", "s.emb"], d)
        .status
        .success());
    let analyzed = tww(&["analyze", "--embedding", "s.emb"], d);
    assert!(analyzed.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&analyzed)).unwrap();
    assert_eq!(report["report"]["skeleton_min_degree"], 5);

    let dot = tww(&["export", "--k", "0", "--format", "dot"], d);
    assert!(stdout(&dot).ends_with("}\n"));
}

#[test]
fn errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    fs::write(d.join("broken.edges"), "3 2\n0 1\n").unwrap();
    let o = tww(&["solve", "--graph", "broken.edges"], d);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(tww(&["verify", "--graph", "missing", "--cert", "x", "--bound", "1"], d).status.code(), Some(2));
    assert_eq!(tww(&["solve"], d).status.code(), Some(2));
    assert_eq!(tww(&["frobnicate"], d).status.code(), Some(2));
}
