//! Each command's JSON output against the library call it wraps, plus exit
//! codes and the run manifest.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use vic::certificates::{classify, detect_forbidden};
use vic::construct::{color, Strategy};
use vic::exact::{chi_vi, SearchConfig};
use vic::generators::{gen_outerplanar, GenSpec};
use vic::outerplanar::is_outerplanar;
use vic::{three_thirds_power, Graph};

fn vic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vic"))
        .args(args)
        .env_remove("VIC_NODE_LIMIT")
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn scratch(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p
}

fn diamond() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_matches_library() {
    let out = vic(&["gen", "--n", "12", "--delta", "4", "--girth", "4", "--two-connected", "--seed", "7", "--json"]);
    assert!(out.status.success());
    let spec = GenSpec {
        two_connected: true,
        ..GenSpec::new(12, 4, 4, 7)
    };
    let g = gen_outerplanar(&spec).unwrap();
    let got = Graph::from_json(&json_of(&out)["graph"].to_string()).unwrap();
    assert_eq!(got.edge_list(), g.edge_list());
}

#[test]
fn embed_matches_library() {
    let g = diamond();
    let p = scratch("embed.txt", &g.to_edge_list_text());
    let out = vic(&["embed", s(&p), "--json"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out), serde_json::to_value(is_outerplanar(&g).unwrap()).unwrap());
    let k4 = scratch("k4.txt", &Graph::complete(4).to_edge_list_text());
    assert_eq!(vic(&["embed", s(&k4)]).status.code(), Some(1));
}

#[test]
fn color_then_verify() {
    let g = gen_outerplanar(&GenSpec::new(30, 5, 3, 3)).unwrap();
    let gp = scratch("color.json", &g.to_json());
    let cp = std::env::temp_dir().join(format!("vic-cli-{}/c.json", std::process::id()));
    let out = vic(&["color", s(&gp), "-o", s(&cp), "--json", "--explain"]);
    assert!(out.status.success());
    let lib = color(&g, Strategy::Auto, None).unwrap();
    let j = json_of(&out);
    assert_eq!(j["colors_used"], lib.colors_used());
    assert_eq!(j["algorithm"], lib.algorithm.as_str());
    assert_eq!(j["trace"].as_array().unwrap().len(), lib.trace.len());
    assert_eq!(std::fs::read_to_string(&cp).unwrap(), lib.coloring.to_json_string(&g));

    let ok = vic(&["verify", s(&gp), s(&cp), s(&cp), "--jobs", "2", "--spread", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    let tight = format!("{}", lib.colors_used() - 1);
    assert_eq!(vic(&["verify", s(&gp), s(&cp), "--k", &tight]).status.code(), Some(1));
}

#[test]
fn exact_matches_library_and_reports_limits() {
    let g = diamond();
    let p = scratch("exact.txt", &g.to_edge_list_text());
    let out = vic(&["exact", s(&p), "--json"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["k"], chi_vi(&g, &SearchConfig::default()).unwrap().k);
    assert_eq!(vic(&["exact", s(&p), "--node-limit", "3"]).status.code(), Some(3));
    let limited = Command::new(env!("CARGO_BIN_EXE_vic"))
        .args(["exact", s(&p)])
        .env("VIC_NODE_LIMIT", "3")
        .output()
        .unwrap();
    assert_eq!(limited.status.code(), Some(3));
    assert_eq!(vic(&["exact", s(&p), "--max-k", "5"]).status.code(), Some(1));
}

#[test]
fn classify_and_detect_match_library() {
    let g = diamond();
    let p = scratch("classify.txt", &g.to_edge_list_text());
    let j = json_of(&vic(&["classify", s(&p), "--json"]));
    assert_eq!(j, serde_json::to_value(classify(&g, None).unwrap()).unwrap());
    let d = json_of(&vic(&["detect", s(&p), "--json"]));
    assert_eq!(d["embeddings"], serde_json::to_value(detect_forbidden(&g)).unwrap());
}

#[test]
fn power_matches_library() {
    let g = Graph::cycle(4);
    let p = scratch("power.txt", &g.to_edge_list_text());
    let j = json_of(&vic(&["power", s(&p), "--json"]));
    let h = three_thirds_power(&g).graph;
    assert_eq!(j["n"], h.n());
    assert_eq!(j["m"], h.m());
    let dot = vic(&["power", s(&p), "--format", "dot"]);
    assert!(String::from_utf8_lossy(&dot.stdout).contains("graph"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(vic(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(vic(&["embed", "/nonexistent/graph"]).status.code(), Some(2));
    assert_eq!(vic(&["color", "x", "--spread", "3"]).status.code(), Some(2));
    assert_eq!(vic(&["reproduce", "--only", "11"]).status.code(), Some(2));
}

#[test]
fn manifest_is_written_and_reproducible() {
    let g = diamond();
    let p = scratch("manifest.txt", &g.to_edge_list_text());
    let dir = std::env::temp_dir().join(format!("vic-cli-{}", std::process::id()));
    let (m1, m2) = (dir.join("m1.json"), dir.join("m2.json"));
    for m in [&m1, &m2] {
        assert!(vic(&["exact", s(&p), "--manifest", s(m)]).status.success());
    }
    let a: Value = serde_json::from_str(&std::fs::read_to_string(&m1).unwrap()).unwrap();
    let b: Value = serde_json::from_str(&std::fs::read_to_string(&m2).unwrap()).unwrap();
    assert_eq!(a["command"], "exact");
    assert_eq!(a["summary"], b["summary"]);
    assert_eq!(a["input_hashes"], b["input_hashes"]);
    assert_eq!(a["input_hashes"][0][1].as_str().unwrap().len(), 64);
    // without --manifest the record goes to stderr
    let out = vic(&["exact", s(&p)]);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("manifest {"));
}

#[test]
fn reproduce_selected_rows() {
    let out = vic(&["reproduce", "--only", "1,2,4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json_of(&out);
    assert_eq!(j["passed"], 3);
    assert_eq!(j["rows"][0]["observed"], "5,4,5,5,5,4,5,5 ; spread 1: C3=6 C8=4 C5=5");
}
