use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};
use std::io::Write;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_axicover")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_axicover"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn from_points_builds_incidence_hypergraph() {
    let out = run(&["from-points", path(&fixture("grid_corner.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["k"], 2);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn recognize_emits_verifiable_representation() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("rep.json");
    let g = fixture("two_edges.json");
    let out = run(&["recognize", path(&g), "--output", path(&rep)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let out = run(&["--json", "verify", path(&g), path(&rep)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["outcome"], "verified");
}

#[test]
fn tampered_representation_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let g = fixture("two_edges.json");
    let out = run(&["recognize", path(&g)]);
    let mut rep: Value = serde_json::from_slice(&out.stdout).unwrap();
    rep["points"]["e1"] = rep["points"]["e0"].clone();
    let file = dir.path().join("rep.json");
    std::fs::write(&file, rep.to_string()).unwrap();
    let out = run(&["verify", path(&g), path(&file)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn recognize_reports_witness_for_shared_ends() {
    let out = run(&["--json", "recognize", path(&fixture("shared_ends.json"))]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["outcome"], "not-representable");
    assert!(report["input_digest"].as_str().unwrap().starts_with("sha256:"));
    let paths = report["artifact"]["avoiding_paths"].as_object().unwrap();
    assert_eq!(paths.len(), 2);
}

#[test]
fn triangle_reduction_has_matching_ten() {
    let dir = tempfile::tempdir().unwrap();
    let gadget = dir.path().join("gadget.json");
    let out = run(&["reduce-is", path(&fixture("triangle.json")), "--output", path(&gadget)]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["--json", "match-brute", path(&gadget)]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["artifact"]["maximum"], 10);
    assert_eq!(report["artifact"]["target"], 10);
}

#[test]
fn malformed_input_exits_with_two() {
    let out = run_stdin(&["recognize", "-"], "{bad");
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = run(&["recognize", "/nonexistent/input.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run_stdin(&["--json", "stats", "-"], r#"{"k":2,"parts":[["a"],["b"]],"edges":[["a","x"]]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["outcome"], "failed");
}

#[test]
fn oversized_brute_force_exits_with_three() {
    let edges: Vec<[usize; 2]> = (0..29).map(|i| [i, i + 1]).collect();
    let graph = serde_json::json!({"n": 30, "edges": edges}).to_string();
    let out = run_stdin(&["is-brute", "-"], &graph);
    assert_eq!(out.status.code(), Some(3));
    let out = run_stdin(&["is-brute", "-"], &serde_json::json!({"n": 5, "edges": [[0, 1], [1, 2]]}).to_string());
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn isolated_vertices_need_prune_flag() {
    let doc = r#"{"k":3,"parts":[["a","z"],["b"],["c"]],"edges":[["a","b","c"]]}"#;
    assert_eq!(run_stdin(&["recognize", "-"], doc).status.code(), Some(2));
    assert_eq!(run_stdin(&["--prune-isolated", "recognize", "-"], doc).status.code(), Some(0));
}

#[test]
fn projection_and_svg_are_seed_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("points.json");
    std::fs::write(&points, r#"{"d":3,"ell":1,"points":[[0,0,0],[1,0,0],[0,1,2],[2,2,1]]}"#).unwrap();
    let a = run(&["--seed", "7", "project", path(&points)]);
    let b = run(&["--seed", "7", "project", path(&points)]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let planar = dir.path().join("planar.json");
    std::fs::write(&planar, &a.stdout).unwrap();
    let svg = run(&["svg", path(&planar)]);
    assert_eq!(svg.status.code(), Some(0));
    let text = String::from_utf8(svg.stdout).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<circle").count(), 4);
}

#[test]
fn generators_are_seed_deterministic() {
    for args in [["gen-random", "hypergraph"], ["gen-random", "graph"]] {
        let a = run(&["--seed", "3", args[0], args[1]]);
        let b = run(&["--seed", "3", args[0], args[1]]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}
