use std::path::Path;
use std::process::{Command, Output};

use hankel_core::hankel::hankel_edge_ideal;
use hankel_core::graphs::standard;
use hankel_core::ring::parse_polynomial;
use hankel_core::Poly;

fn hankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hankel"))
        .args(args)
        .env_remove("HANKEL_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_graph(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn gen_prints_path_generators() {
    let dir = tempfile::tempdir().unwrap();
    let l3 = write_graph(dir.path(), "l3.txt", "# path\nn 3\ne 1 2\ne 2 3\n");
    let out = hankel(&["gen", "--graph", &l3]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "x1*x3 - x2^2\nx2*x4 - x3^2\n");
}

#[test]
fn gen_round_trips_through_the_parser() {
    for name in ["fig1", "fig2", "k5", "t2-6"] {
        let g = standard::builtin(name).unwrap();
        let h = hankel_edge_ideal(&g).unwrap();
        let out = hankel(&["gen", "--builtin", name]);
        let parsed: Vec<Poly> = stdout(&out)
            .lines()
            .map(|l| parse_polynomial(l, h.context()).unwrap())
            .collect();
        let expected: Vec<Poly> = h.generators().map(|(_, p)| p.clone()).collect();
        assert_eq!(parsed, expected, "{name}");
    }
}

#[test]
fn edgeless_graph_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write_graph(dir.path(), "empty.txt", "n 3\n");
    let out = hankel(&["gen", "--graph", &empty]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("edgeless graph"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_graph(dir.path(), "bad.txt", "n 3\ne 1 2\ne 1 1\n");
    let out = hankel(&["gen", "--graph", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn gen_json_lists_generators() {
    let out = hankel(&["gen", "--builtin", "k3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"].as_array().unwrap().len(), 3);
    assert_eq!(v["input"]["n"], 3);
    assert_eq!(v["command"], "gen");
}

#[test]
fn json_has_stable_keys_and_is_deterministic() {
    let runs: Vec<Output> = (0..2).map(|_| hankel(&["check", "report", "--builtin", "c5", "--json"])).collect();
    assert_eq!(runs[0].stdout, runs[1].stdout);
    let v: serde_json::Value = serde_json::from_slice(&runs[0].stdout).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["budget_used", "command", "evidence", "input", "order", "result"]);
    assert_eq!(v["result"]["ok"], true);
    assert_eq!(v["result"]["is_almost_ci"], true);
    assert_eq!(v["order"], "revlex");
    assert!(v["budget_used"].as_u64().unwrap() > 0);
}

#[test]
fn check_ci_on_rooted_path() {
    let out = hankel(&["check", "ci", "--builtin", "t1-4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "CI: true (mu=3, height=3)");
    let cycle = hankel(&["check", "ci", "--builtin", "c4"]);
    assert_eq!(cycle.status.code(), Some(1));
}

#[test]
fn figure_three_height() {
    let out = hankel(&["height", "--builtin", "fig3"]);
    assert_eq!(stdout(&out).trim(), "height = 4");
}

#[test]
fn verify_prints_per_n_lines() {
    let out = hankel(&["verify", "--theorem", "prop3.5", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for n in 3..=6 {
        assert!(text.contains(&format!("prop3.5 n={n}: pass")), "{text}");
    }
}

#[test]
fn verify_refuses_large_ranges_and_unknown_tags() {
    assert_eq!(hankel(&["verify", "--theorem", "cor2.3", "--max-n", "12"]).status.code(), Some(2));
    assert_eq!(hankel(&["verify", "--theorem", "thm9.9"]).status.code(), Some(2));
}

#[test]
fn verify_order_does_not_depend_on_jobs() {
    let one = hankel(&["verify", "--theorem", "thm3.2", "--max-n", "5", "--json"]);
    let four = hankel(&["verify", "--theorem", "thm3.2", "--max-n", "5", "--jobs", "4", "--json"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn wrong_candidate_list_is_falsified() {
    let out = hankel(&["minprimes", "--builtin", "l4", "--candidate", "minors=1..4", "--candidate", "vars=1,2"]);
    assert_eq!(out.status.code(), Some(1));
    let right = hankel(&["minprimes", "--builtin", "l4", "--candidate", "minors=1..4", "--candidate", "vars=2,3,4"]);
    assert_eq!(right.status.code(), Some(0));
}

#[test]
fn exhausted_budget_exits_three() {
    let out = hankel(&["gb", "--builtin", "k5", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_hankel"))
        .args(["gb", "--builtin", "k5"])
        .env("HANKEL_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
}

#[test]
fn enum_rooted_counts_path_labelings() {
    let out = hankel(&["enum-rooted", "--builtin", "l3"]);
    assert!(stdout(&out).ends_with("2 rooted labelings\n"));
    assert_eq!(hankel(&["enum-rooted", "--builtin", "c4"]).status.code(), Some(2));
}

#[test]
fn missing_graph_source_is_a_usage_error() {
    assert_eq!(hankel(&["height"]).status.code(), Some(2));
    assert_eq!(hankel(&["height", "--builtin", "l3", "--order", "grevlex"]).status.code(), Some(2));
}
