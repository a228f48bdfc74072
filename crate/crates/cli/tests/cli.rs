use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn commgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_field_table() {
    let o = commgraph(&["analyze", "--ring", "gf:2^2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("components           5 (12, 12, 12, 12, 12)"));
    assert!(out.contains("diameter             infinity"));
    assert!(out.contains("regular              true"));
}

#[test]
fn analyze_json_round_trips() {
    let o = commgraph(&["analyze", "--ring", "zmod:8", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["edges"], 19236);
    assert_eq!(v["vertices"], 504);
    assert_eq!(v["diameter"], 3);
    assert_eq!(v["omega"]["value"], 56);
    assert_eq!(v["omega"]["exact"], true);
    let report: commgraph::graph::InvariantReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.degree_histogram.values().sum::<u64>(), 504);
}

#[test]
fn repeated_runs_are_identical() {
    let a = commgraph(&["verify", "--ring", "zmod:6", "--format", "json"]);
    let b = commgraph(&["verify", "--ring", "zmod:6", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn verify_exit_codes() {
    let ok = commgraph(&["verify", "--ring", "zmod:10"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("all claims hold"));

    let bad = commgraph(&["verify", "--ring", "zmod:4"]);
    assert_eq!(bad.status.code(), Some(1));
    let out = stdout(&bad);
    assert!(out.contains("MISMATCH   independence number"));
    assert!(out.contains("some claims fail"));
}

#[test]
fn verify_json_carries_errata() {
    let o = commgraph(&["verify", "--ring", "zmod:10", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["predictions"].as_array().unwrap();
    let row = rows
        .iter()
        .find(|r| r["name"] == "edges over a product of two fields")
        .unwrap();
    assert_eq!(row["predicted"], 62055);
    assert_eq!(row["match"], true);
    assert!(row["erratum"].is_string());
    assert_eq!(v["edges"], 62055);
}

#[test]
fn conjecture_table() {
    let o = commgraph(&["conjecture", "--max-n", "9", "--format", "json"]);
    assert!(o.status.success());
    let rows: Value = serde_json::from_slice(&o.stdout).unwrap();
    let ns: Vec<u64> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["n"].as_u64().unwrap())
        .collect();
    assert_eq!(ns, [4, 6, 8, 9]);
    assert_eq!(rows[1]["conjectured"], 120);
    assert_eq!(rows[1]["measured"], 12);
    assert_eq!(rows[1]["consistent"], false);

    let too_small = commgraph(&["conjecture", "--max-n", "3"]);
    assert_eq!(too_small.status.code(), Some(2));
}

#[test]
fn export_formats() {
    let dot = commgraph(&["export", "--ring", "zmod:2", "--format", "dot"]);
    let text = stdout(&dot);
    assert!(text.starts_with("graph \"zmod:2\" {"));
    assert_eq!(text.matches(" -- ").count(), 3);

    let csv = commgraph(&["export", "--ring", "zmod:8", "--format", "csv-degrees"]);
    let text = stdout(&csv);
    assert_eq!(text.lines().next(), Some("vertex_index,class,degree"));
    assert_eq!(text.lines().count(), 505);

    let json = commgraph(&["export", "--ring", "zmod:3", "--format", "json-report"]);
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["vertices"], 24);
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = commgraph(&[
        "analyze",
        "--ring",
        "zmod:6",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["omega"]["value"], 30);
}

#[test]
fn errors_exit_with_two() {
    for args in [
        &["analyze", "--ring", "zmod:1"][..],
        &["analyze", "--ring", "gf:4^1"],
        &["analyze", "--ring", "zmod:6", "--budget", "-1"],
        &["export", "--ring", "zmod:100", "--format", "dot"],
        &["export", "--ring", "zmod:2", "--format", "png"],
        &["analyze", "--ring", "zmod:200"],
        &["frobnicate"],
    ] {
        let o = commgraph(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
    let o = commgraph(&["analyze", "--ring", "zmod:1"]);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
}
