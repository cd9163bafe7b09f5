//! Contract tests for the command-line surface: formats, streams, flags,
//! and exit codes that scripts are allowed to rely on.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_irrlab"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("spawn");
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

#[test]
fn gen_formats() {
    assert_eq!(run_ok(&["gen", "star", "5"]).trim(), "Ds_");
    let edge_list = run_ok(&["gen", "path", "4", "--format", "edgelist"]);
    assert_eq!(edge_list, "4 3\n0 1\n1 2\n2 3\n");
    // deterministic seeded generation
    let a = run_ok(&["gen", "random-tree", "9", "--seed", "11"]);
    let b = run_ok(&["gen", "random-tree", "9", "--seed", "11"]);
    assert_eq!(a, b);
    let c = run_ok(&["gen", "random-tree", "9", "--seed", "12"]);
    assert_ne!(a, c);
}

#[test]
fn enum_streams_graph6_lines() {
    let lines = run_ok(&["enum", "--trees", "5"]);
    let trees: Vec<&str> = lines.lines().collect();
    assert_eq!(trees.len(), 3);
    let again = run_ok(&["enum", "--trees", "5"]);
    assert_eq!(lines, again);

    let bip = run_ok(&["enum", "--bipartite", "2,2,connected"]);
    assert_eq!(bip.lines().count(), 2);

    let maxdeg = run_ok(&["enum", "--trees-maxdeg", "7,4"]);
    assert_eq!(maxdeg.lines().count(), 3);
}

#[test]
fn compute_reads_graph6_and_edge_lists() {
    let mut child = bin()
        .args(["compute", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"Ds_\nDQc\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let lines: Vec<serde_json::Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["irr"], 12);
    assert_eq!(lines[0]["sigma"], 36);
    assert_eq!(lines[0]["deg_ave"]["num"], 8);
    assert_eq!(lines[0]["deg_ave"]["den"], 5);
    assert_eq!(lines[0]["sigma2"], 2);

    // edge-list input, sigma2 absent on the complete graph K2
    let mut child = bin()
        .args(["compute", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.as_mut().unwrap().write_all(b"2 1\n0 1\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().lines().next().unwrap())
            .unwrap();
    assert_eq!(v["irr"], 0);
    assert!(v.get("sigma2").is_none());

    // malformed graph6 exits 2
    let mut child = bin()
        .args(["compute", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.as_mut().unwrap().write_all(b"D?\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_sigma2_literal_flag() {
    let mut child = bin()
        .args(["compute", "-", "--sigma2-literal"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    // P4: standard sigma2 = 2 (two leaves), literal repeated-degree = 2
    child.stdin.as_mut().unwrap().write_all(b"4 3\n0 1\n1 2\n2 3\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().lines().next().unwrap())
            .unwrap();
    assert_eq!(v["sigma2"], 2);
    assert_eq!(v["sigma2_literal"], 2);
}

#[test]
fn verify_list_exports_catalogue() {
    let text = run_ok(&["verify", "--list"]);
    let catalogue: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(catalogue.len(), 27);
    assert_eq!(catalogue[0]["id"], "C1");
    assert!(catalogue.iter().all(|c| !c["statement"].as_str().unwrap().is_empty()));
    assert!(catalogue.iter().all(|c| !c["guard"].as_str().unwrap().is_empty()));
}

#[test]
fn verify_json_format_and_random_corpus() {
    let text = run_ok(&[
        "verify",
        "--random",
        "tree:8,20,42",
        "--claims",
        "C13,C26",
        "--format",
        "json",
    ]);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["run"]["seed"], 42);
    assert_eq!(report["summary"]["fails"], 0);
    // C13 on 20 random trees plus two C26 halves per tree
    assert_eq!(report["outcomes"].as_array().unwrap().len(), 60);
}

#[test]
fn verify_csv_summary_layout() {
    let text = run_ok(&["verify", "--trees", "4..6", "--claims", "C1"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("claim,holds,fails,na,marginal"));
    assert_eq!(lines.next(), Some("C1,3,0,0,0"));
}

#[test]
fn extremal_csv_and_json() {
    let text = run_ok(&["extremal", "--bipartite", "2,2", "--index", "irr"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("class,index,min,max,min_witnesses,max_witnesses"));
    let row = lines.next().unwrap();
    assert!(row.starts_with("bipartite(2,2),irr,0,2,"), "row: {row}");

    let text = run_ok(&["extremal", "--trees", "5", "--index", "sigma", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(rows[0]["max"], 36);
    assert_eq!(rows[0]["min"], 2);
    // witnesses carry certificates at this order
    assert!(rows[0]["max_witnesses"][0]["certificate"].is_string());

    let bad = bin()
        .args(["extremal", "--trees", "5", "--index", "bogus"])
        .output()
        .expect("spawn");
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn per_graph_bounds_mode() {
    let class_mode = run_ok(&[
        "verify",
        "--trees-maxdeg",
        "7,4",
        "--claims",
        "C10",
        "--format",
        "json",
    ]);
    let per_graph = run_ok(&[
        "verify",
        "--trees-maxdeg",
        "7,4",
        "--claims",
        "C10",
        "--format",
        "json",
        "--per-graph-bounds",
    ]);
    let a: serde_json::Value = serde_json::from_str(&class_mode).unwrap();
    let b: serde_json::Value = serde_json::from_str(&per_graph).unwrap();
    let count = |v: &serde_json::Value| v["outcomes"].as_array().unwrap().len();
    // 3 trees in the class, so the per-member reading has 3x the rows
    assert_eq!(count(&a), 2);
    assert_eq!(count(&b), 6);
}

#[test]
fn gen_example_matches_example_subcommand() {
    let g6 = run_ok(&["gen", "example", "15", "15"]);
    let text = run_ok(&["example", "15", "15"]);
    assert!(text.contains("irr=426"));
    // the emitted graph recomputes to the same values
    let mut child = bin()
        .args(["compute", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.as_mut().unwrap().write_all(g6.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().lines().next().unwrap())
            .unwrap();
    assert_eq!(v["irr"], 426);
    assert_eq!(v["sigma"], 2734);
    assert_eq!(v["n"], 30);
}
