use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const B3: &str =
    r#"{"vertices":[1,2,3],"positive":[[1,2],[1,3],[2,3]],"negative":[[1,2],[1,3],[2,3]],"loops":[1,2,3]}"#;
const LOOPED_TRIANGLE: &str = r#"{"vertices":[1,2,3],"positive":[[1,2],[1,3],[2,3]],"negative":[[2,3]],"loops":[1]}"#;
const OUTSIDE_THEOREMS: &str =
    r#"{"vertices":[1,2,3,4],"positive":[[1,2],[1,4],[2,3],[2,4],[3,4]],"negative":[[1,4],[2,3],[2,4]],"loops":[]}"#;
const NINE_VERTEX_CHORDAL: &str = r#"{"vertices":[1,2,3,4,5,6,7,8,9],"positive":[[1,2],[1,5],[1,8],[2,3],[2,5],[2,8],[3,5],[3,6],[3,8],[4,5],[4,7],[4,8],[5,8],[6,8],[7,8],[8,9]]}"#;

fn sga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sga")).args(args).env_remove("SGA_SEED").output().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_decides_named_graphs() {
    let dir = TempDir::new().unwrap();
    let out = sga(&["analyze", path(&write(&dir, "b3.json", B3))]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["balanced_chordal"], true);
    assert_eq!(v["supersolvable"], "yes");
    assert_eq!(v["free"], "yes");

    let out = sga(&["analyze", path(&write(&dir, "looped_triangle.json", LOOPED_TRIANGLE))]);
    let v = json(&out);
    assert_eq!(v["free"], "no");
    assert_eq!(v["provenance"], "EdelmanReiner");
    assert_eq!(v["certificate"]["loops_initial_segment"], false);

    let out = sga(&["analyze", path(&write(&dir, "empty.json", r#"{"vertices":[]}"#))]);
    let v = json(&out);
    assert_eq!((v["free"].as_str(), v["rank"].as_u64()), (Some("yes"), Some(0)));
}

#[test]
fn verify_cross_checks_small_instances() {
    let dir = TempDir::new().unwrap();
    let out = sga(&["analyze", "--verify", path(&write(&dir, "looped_triangle.json", LOOPED_TRIANGLE))]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["cross_checked"], true);
}

#[test]
fn unknown_verdict_exits_three() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "g.json", OUTSIDE_THEOREMS);
    let out = sga(&["analyze", "--no-fallback", path(&p)]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["free"], "unknown");
    let out = sga(&["analyze", path(&p)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["provenance"], "OracleFallback");
}

#[test]
fn parse_error_reports_position() {
    let dir = TempDir::new().unwrap();
    let out = sga(&["analyze", path(&write(&dir, "bad.json", "{\n \"vertices\": [1,\n ]"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let out = sga(&["analyze", path(&write(&dir, "bad2.json", r#"{"vertices":[1],"loops":[2]}"#))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn loop_policy_rewrites_input() {
    let dir = TempDir::new().unwrap();
    let p = write(
        &dir,
        "k4.json",
        r#"{"vertices":[1,2,3,4],"positive":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]],"negative":[[1,2],[3,4]]}"#,
    );
    let v = json(&sga(&["analyze", "--loops", "full", path(&p)]));
    assert_eq!((v["free"].as_str(), v["provenance"].as_str()), (Some("no"), Some("MainTheorem")));
    let v = json(&sga(&["analyze", "--loops", "none", path(&p)]));
    assert_eq!(v["provenance"], "EdelmanReiner");
    let v = json(&sga(&["balanced-chordal", "--loops", "full", path(&p)]));
    assert_eq!(v["balanced_chordal"], false);
    assert_eq!(v["witness"]["length"], 4);
}

#[test]
fn polynomials_agree() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "b3.json", B3);
    let chi = json(&sga(&["chromatic", path(&p)]));
    let char = json(&sga(&["characteristic", path(&p)]));
    assert_eq!(chi["coefficients"], char["coefficients"]);
    let text = sga(&["chromatic", "--format", "text", path(&p)]);
    assert!(!text.stdout.is_empty());
}

#[test]
fn freeness_and_supersolvability() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "b3.json", B3);
    let v = json(&sga(&["freeness", path(&p)]));
    assert_eq!(v["status"], "free");
    assert_eq!(v["exponents"], serde_json::json!([1, 3, 5]));
    let out = sga(&["supersolvable", "--verify", path(&p)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["supersolvable"], "yes");
}

#[test]
fn csg_renders_dot_and_rejects_cycles() {
    let dir = TempDir::new().unwrap();
    let out = sga(&["csg", "--format", "dot", path(&write(&dir, "nine.json", NINE_VERTEX_CHORDAL))]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("shape=box").count(), 6);
    assert_eq!(dot.matches("shape=ellipse").count(), 5);

    let out = sga(&[
        "csg",
        "--format",
        "dot",
        path(&write(&dir, "k3.json", r#"{"vertices":[1,2,3],"positive":[[1,2],[1,3],[2,3]]}"#)),
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().matches("shape=box").count(), 1);

    let c4 = r#"{"vertices":[1,2,3,4],"positive":[[1,2],[2,3],[3,4],[1,4]]}"#;
    let out = sga(&["csg", path(&write(&dir, "c4.json", c4))]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("chordless cycle"));
}

#[test]
fn random_is_deterministic_and_seedable() {
    let a = sga(&["random", "-n", "5", "--seed", "9", "--count", "3"]);
    let b = sga(&["random", "-n", "5", "--seed", "9", "--count", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8_lossy(&a.stdout).lines().count(), 3);

    let env = Command::new(env!("CARGO_BIN_EXE_sga"))
        .args(["random", "-n", "5", "--seed", "1", "--count", "3"])
        .env("SGA_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);

    let single = sga(&["random", "-n", "1", "--loops", "full"]);
    assert_eq!(
        String::from_utf8(single.stdout).unwrap().trim(),
        r#"{"vertices":[1],"positive":[],"negative":[],"loops":[1]}"#
    );

    let out = sga(&["random", "-n", "5", "--class", "negative-within-positive", "--count", "50", "--seed", "4"]);
    for line in String::from_utf8(out.stdout).unwrap().lines() {
        let g: Value = serde_json::from_str(line).unwrap();
        for pair in g["negative"].as_array().unwrap() {
            assert!(g["positive"].as_array().unwrap().contains(pair));
        }
    }
}

#[test]
fn generated_graphs_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = sga(&["random", "-n", "4", "--seed", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let p = write(&dir, "g.json", &text);
    let out = sga(&["analyze", "--verify", path(&p)]);
    assert!(matches!(out.status.code(), Some(0)), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn crosscheck_reports_and_refuses() {
    let dir = TempDir::new().unwrap();
    let dump = dir.path().join("fail.json");
    let out = sga(&["crosscheck", "--mode", "er", "--max-vertices", "3", "--dump", path(&dump)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["disagreements"], 0);
    assert_eq!(v["rows"][2]["instances"], 64);
    assert!(!dump.exists());

    let out = sga(&["crosscheck", "--mode", "main-theorem", "--max-vertices", "9"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn dot_format_is_limited_to_graph_outputs() {
    let dir = TempDir::new().unwrap();
    let out = sga(&["analyze", "--format", "dot", path(&write(&dir, "b3.json", B3))]);
    assert_eq!(out.status.code(), Some(2));
    let out = sga(&["random", "-n", "3", "--format", "dot"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("graph signed"));
}
