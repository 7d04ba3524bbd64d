//! End-to-end tests of the binary: spawn it, parse its output, check exit
//! codes.

use std::path::Path;
use std::process::{Command, Output};

use flag_homology::graph::{to_graph6, turan_graph};

fn flagc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

#[test]
fn turan_value() {
    let out = flagc(&["turan", "6", "3", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "8");
}

#[test]
fn turan_row_csv() {
    let out = flagc(&["turan-row", "6", "3"]);
    assert_eq!(stdout(&out), "1,6,12,8");
}

#[test]
fn canon_terms_json() {
    let out = flagc(&["canon", "4", "2", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["terms"], serde_json::json!([["3", 2, 3], ["1", 1, 2]]));
}

#[test]
fn shadow_values() {
    assert_eq!(stdout(&flagc(&["shadow", "down", "4", "2", "2"])), "4");
    assert_eq!(stdout(&flagc(&["shadow", "up", "8", "2", "3"])), "4");
}

#[test]
fn clique_betti_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let g6_path = dir.path().join("octahedron.g6");
    std::fs::write(&g6_path, to_graph6(&turan_graph(6, 3)) + "\n").unwrap();

    let out = flagc(&["clique", g6_path.to_str().unwrap()]);
    assert!(out.status.success());
    let complex_path = dir.path().join("octahedron.json");
    std::fs::write(&complex_path, stdout(&out)).unwrap();

    let out = flagc(&["betti", complex_path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["betti"], serde_json::json!([0, 0, 1]));
    assert_eq!(v["p"], 2);

    let out = flagc(&["fvec", complex_path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["f"], serde_json::json!([1, 6, 12, 8]));

    let out = flagc(&["sigma", complex_path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["top_faces_sigma"], v["top_faces_input"]);
}

#[test]
fn hvec_from_entries() {
    let out = flagc(&["hvec", "--f", "1,4,4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["h"], serde_json::json!([1, 2, 1]));
}

#[test]
fn revlex_top_is_a_cycle() {
    let out = flagc(&["revlex", "--colors", "2", "--top", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["colors"], 2);
    assert_eq!(v["facets"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_small_corpus_passes() {
    let dir = tempfile::tempdir().unwrap();
    let ledger = dir.path().join("ledger.jsonl");
    let out = flagc(&[
        "verify",
        "--n",
        "3",
        "--balanced-count",
        "5",
        "--ledger",
        ledger.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("failures: 0"));
    assert!(Path::new(&ledger).exists());
}

#[test]
fn verify_reads_external_graph6_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let g6_path = dir.path().join("corpus.g6");
    let lines = [
        to_graph6(&turan_graph(4, 2)),
        to_graph6(&turan_graph(6, 3)),
        to_graph6(&turan_graph(5, 5)),
    ];
    std::fs::write(&g6_path, lines.join("\n") + "\n").unwrap();
    let ledger = dir.path().join("ext.jsonl");
    let out = flagc(&[
        "verify",
        "--g6",
        g6_path.to_str().unwrap(),
        "--balanced-count",
        "0",
        "--p",
        "2,3",
        "--ledger",
        ledger.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("instances: 3"));
    assert!(stdout(&out).contains("failures: 0"));
}

#[test]
fn scan_conjecture_reports_empty_list() {
    let dir = tempfile::tempdir().unwrap();
    let ledger = dir.path().join("conj.jsonl");
    let out = flagc(&[
        "scan-conjecture",
        "--n",
        "4",
        "--k",
        "1",
        "--ledger",
        ledger.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("certificates listed: 0"));
}

#[test]
fn exit_codes() {
    // Usage errors exit 2.
    let out = flagc(&["definitely-not-a-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
    // Domain errors exit 1.
    let out = flagc(&["turan", "5", "2", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = flagc(&["canon", "0", "2", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = flagc(&["betti", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(1));
}
