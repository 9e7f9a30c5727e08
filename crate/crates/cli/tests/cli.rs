use std::collections::BTreeSet;
use std::process::{Command, Output};

use hurwitz_cli::io::{parse_dot_edges, parse_listing};
use hurwitz_core::catalan::enumerate;

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .env_remove("HURWITZ_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hurwitz(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn undirected(edges: Vec<(String, String)>) -> BTreeSet<(String, String)> {
    edges.into_iter().map(|(a, b)| if a < b { (a, b) } else { (b, a) }).collect()
}

fn edge_list(s: &str) -> BTreeSet<(String, String)> {
    undirected(
        s.split(';')
            .map(|e| {
                let (a, b) = e.trim().split_once('/').unwrap();
                (a.to_string(), b.to_string())
            })
            .collect(),
    )
}

const GRAPH_4: &str = "12,23,34/12,24,23; 12,23,34/12,34,24; 12,23,34/13,12,34; 12,23,34/23,13,34; \
    12,24,23/12,34,24; 12,24,23/14,12,23; 12,24,23/24,14,23; 12,34,24/34,12,24; 13,12,34/13,34,12; \
    13,12,34/23,13,34; 13,34,12/14,13,12; 13,34,12/34,14,12; 14,12,23/14,13,12; 14,12,23/14,23,13; \
    14,12,23/24,14,23; 14,13,12/14,23,13; 14,13,12/34,14,12; 14,23,13/23,14,13; 23,13,34/23,14,13; \
    23,13,34/23,34,14; 23,14,13/23,34,14; 23,34,14/24,23,14; 23,34,14/34,24,14; 24,14,23/24,23,14; \
    24,23,14/34,24,14; 34,12,24/34,14,12; 34,12,24/34,24,14; 34,14,12/34,24,14";

const HASSE_4: &str = "12,23,34/23,13,34; 23,13,34/23,14,13; 23,14,13/14,23,13; 14,23,13/14,12,23; \
    12,23,34/12,24,23; 12,24,23/24,14,23; 24,14,23/24,23,14; 24,23,14/23,34,14; 12,23,34/13,12,34; \
    13,12,34/13,34,12; 13,34,12/34,14,12; 34,14,12/34,12,24; 34,12,24/12,34,24; 12,34,24/12,23,34; \
    23,13,34/23,34,14; 12,24,23/14,12,23; 13,34,12/14,13,12; 14,13,12/14,12,23; 34,12,24/34,24,14; \
    34,24,14/23,34,14";

#[test]
fn enumerate_listing() {
    let s = stdout(&["enumerate", "--n", "4"]);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 17);
    assert_eq!(lines[16], "count=16");
    assert!(lines.contains(&"1 2,2 3,3 4"));
    assert_eq!(stdout(&["enumerate", "--n", "2"]).lines().next(), Some("1 2"));
    assert_eq!(stdout(&["enumerate", "--n", "5"]).lines().count(), 126);
}

#[test]
fn enumerate_round_trip_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        stdout(&["enumerate", "--n", "6", "--threads", "2", "--out", p.to_str().unwrap()]);
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let parsed = parse_listing(std::str::from_utf8(&ta).unwrap()).unwrap();
    assert_eq!(parsed, enumerate(6).unwrap());
}

#[test]
fn graph_exports_match_known_edge_sets() {
    let g = stdout(&["graph", "--n", "4"]);
    assert!(g.contains("[label=\"12,23,34\"]"));
    assert_eq!(g.matches("[label=").count(), 16);
    assert_eq!(undirected(parse_dot_edges(&g).unwrap()), edge_list(GRAPH_4));
    let h = stdout(&["graph", "--n", "4", "--hasse"]);
    assert_eq!(undirected(parse_dot_edges(&h).unwrap()), edge_list(HASSE_4));
    assert_eq!(g, stdout(&["graph", "--n", "4"]));
}

#[test]
fn stats_rows_and_polynomial() {
    let s = stdout(&["stats", "--n", "4"]);
    assert!(s.starts_with("word,rank,inv_r,inv_l,inv_n\n\"1 2,2 3,3 4\",0,0,0,0\n"));
    assert_eq!(s.lines().count(), 17);
    let six = stdout(&["stats", "--n", "6"]);
    assert!(six.lines().any(|l| l == "\"3 4,1 5,5 6,1 4,1 2\",7,3,1,3"), "worked example row missing");
    let poly: serde_json::Value = serde_json::from_str(&stdout(&["stats", "--n", "4", "--poly"])).unwrap();
    let terms: Vec<(u64, u64, i64)> = poly["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["q"].as_u64().unwrap(), t["t"].as_u64().unwrap(), t["c"].as_i64().unwrap()))
        .collect();
    // q^3 + q^2 t + q t^2 + t^3 + q t, sorted by (q, t).
    assert_eq!(terms, vec![(0, 3, 1), (1, 1, 1), (1, 2, 1), (2, 1, 1), (3, 0, 1)]);
}

#[test]
fn metrics_reports() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["metrics", "--n", "4"])).unwrap();
    assert_eq!((v["radius"].as_u64(), v["diameter"].as_u64()), (Some(3), Some(3)));
    let v: serde_json::Value = serde_json::from_str(&stdout(&["metrics", "--n", "5"])).unwrap();
    assert_eq!(v["radius"].as_u64(), Some(6));
    let v: serde_json::Value = serde_json::from_str(&stdout(&["metrics", "--type", "B", "--n", "2"])).unwrap();
    assert_eq!((v["radius"].as_u64(), v["conjecture_radius"].as_u64()), (Some(2), Some(2)));
    assert!(v["reference_antipodes"].is_null());
}

#[test]
fn type_b_reference_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ref.toml");
    std::fs::write(&path, "provenance = \"test fixture\"\n[values]\n3 = 99\n").unwrap();
    let out = hurwitz(&["metrics", "--type", "B", "--n", "3", "--ref-seq", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["reference_antipodes"].as_u64(), Some(99));
    assert!(String::from_utf8_lossy(&out.stderr).contains("matches neither"));
    std::fs::write(&path, "[values]\n3 = 5\n").unwrap();
    let bad = hurwitz(&["metrics", "--type", "B", "--n", "3", "--ref-seq", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let s = stdout(&["verify", "--n", "4"]);
    assert!(s.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    assert!(!s.contains("FAIL"));
    let hecke = stdout(&["verify", "--n", "5", "--suite", "hecke"]);
    assert_eq!(hecke.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 1);
    assert!(hecke.contains("hecke"));
    let single = stdout(&["verify", "--n", "6", "--suite", "counts"]);
    assert!(single.starts_with("PASS counts"));
    assert_eq!(hurwitz(&["verify", "--n", "6", "--suite", "type-b"]).status.code(), Some(2));
}

#[test]
fn trees_dyck_typeb() {
    let t = stdout(&["trees", "--n", "4"]);
    assert_eq!(t.lines().count(), 1 + 5);
    assert!(t.starts_with("tree,word,right,left,neutral\n"));
    let d = stdout(&["dyck", "--n", "3"]);
    assert_eq!(d.lines().count(), 1 + 5);
    assert!(d.lines().any(|l| l.starts_with("UDUDUD,")));
    assert_eq!(stdout(&["dyck", "--n", "4", "--poly"]), stdout(&["trees", "--n", "5", "--poly"]));
    let b = stdout(&["typeb", "--n", "3"]);
    assert_eq!(b.lines().last(), Some("count=27"));
}

#[test]
fn exit_codes() {
    assert_eq!(hurwitz(&["enumerate", "--n", "10"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["enumerate"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["verify", "--n", "4", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["enumerate", "--n", "4", "--threads", "0"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["metrics", "--n", "4", "--ref-seq", "x.toml"]).status.code(), Some(2));
    let over = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["metrics", "--n", "9"])
        .env("HURWITZ_MAX_N", "7")
        .output()
        .unwrap();
    assert_eq!(over.status.code(), Some(2));
    let lowered = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["typeb", "--n", "3"])
        .env("HURWITZ_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(lowered.status.code(), Some(2));
    assert_eq!(hurwitz(&["dyck", "--n", "13", "--poly"]).status.code(), Some(2));
    let raised = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["dyck", "--n", "13", "--poly"])
        .env("HURWITZ_MAX_N", "13")
        .output()
        .unwrap();
    assert!(raised.status.success());
}
