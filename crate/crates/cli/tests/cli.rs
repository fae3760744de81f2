use std::process::{Command, Output};

use serde_json::Value;

fn domreconf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domreconf"))
        .args(args)
        .env_remove("DOMRECONF_MAX_SETS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn poly_of_triangle() {
    let o = domreconf(&["poly", "--family", "cycle:3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x^3+3x^2+3x\ntotal 7\n");

    let o = domreconf(&["poly", "Bw", "--out", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"], "7");
    assert_eq!(v["coeffs"], serde_json::json!(["0", "3", "3", "1"]));
}

#[test]
fn poly_recurrence_for_long_cycles() {
    let o = domreconf(&[
        "poly",
        "--family",
        "cycle:30",
        "--recurrence",
        "--out",
        "json",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let want = domreconf::domination::cycle_dominating_count(30).unwrap();
    assert_eq!(v["total"], want.to_string());
    assert_eq!(v["method"], "recurrence");

    let o = domreconf(&["poly", "--family", "path:5", "--recurrence"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let o = domreconf(&["poly", "B"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("graph6"));
    let o = domreconf(&["poly", "--family", "nonsense:3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = domreconf(&["build", "--family", "path:3"]);
    assert_eq!(o.status.code(), Some(2), "missing -k");
}

#[test]
fn poly_refuses_large_graphs() {
    let o = domreconf(&["poly", "--family", "path:30"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn build_path_dot_is_an_eight_cycle() {
    let o = domreconf(&["build", "--family", "path:4", "-k", "3", "--dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("graph \"D_3\" {"));
    assert_eq!(dot.matches(" -- ").count(), 8);
    assert_eq!(dot.matches("[label=").count(), 8);
    assert!(dot.contains("label=\"{1,3}\""));
}

#[test]
fn build_below_gamma_warns() {
    let o = domreconf(&["build", "--family", "path:4", "-k", "1", "--out", "json"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("warning"));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["num_vertices"], 0);
}

#[test]
fn build_json_sets_are_sorted() {
    let o = domreconf(&[
        "build",
        "--family",
        "complete:3",
        "-k",
        "3",
        "--out",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sets: Vec<Vec<u64>> = serde_json::from_value(v["vertex_sets"].clone()).unwrap();
    assert_eq!(
        sets,
        vec![
            vec![0],
            vec![1],
            vec![2],
            vec![0, 1],
            vec![0, 2],
            vec![1, 2],
            vec![0, 1, 2]
        ]
    );
}

#[test]
fn build_reads_edge_list_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.txt");
    std::fs::write(&path, "# triangle\n3 3\n0 1\n1 2\n0 2\n").unwrap();
    let o = domreconf(&[
        "build",
        "--format",
        "edges",
        path.to_str().unwrap(),
        "-k",
        "2",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("D_2(G): 6 vertices, 6 edges"));
}

#[test]
fn dsr_queries() {
    let o = domreconf(&[
        "dsr", "--family", "star:4", "--start", "1,2,3", "--goal", "0", "-k", "3",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("UNREACHABLE"));

    let o = domreconf(&[
        "dsr",
        "--family",
        "complete:3",
        "--start",
        "{0}",
        "--goal",
        "{1}",
        "-k",
        "2",
    ]);
    assert_eq!(stdout(&o), "REACHABLE in 2 step(s)\n{0} -> {0,1} -> {1}\n");

    let o = domreconf(&[
        "dsr", "--family", "cycle:5", "--start", "0,2", "--goal", "0,2", "-k", "3", "--out", "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reachable"], true);
    assert_eq!(v["path"], serde_json::json!([[0, 2]]));

    let o = domreconf(&[
        "dsr",
        "--family",
        "complete:3",
        "--start",
        "0",
        "--goal",
        "7",
        "-k",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = domreconf(&[
        "dsr", "--family", "path:3", "--start", "0", "--goal", "1", "-k", "2",
    ]);
    assert_eq!(o.status.code(), Some(2), "start set is not dominating");
}

#[test]
fn caps_exit_with_three() {
    let o = domreconf(&[
        "build",
        "--family",
        "complete:12",
        "-k",
        "12",
        "--max-sets",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_domreconf"))
        .args(["build", "--family", "complete:5", "-k", "5"])
        .env("DOMRECONF_MAX_SETS", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = domreconf(&["census", "basic", "-n", "9"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn census_regular_two() {
    let o = domreconf(&["census", "regular", "-r", "2", "--out", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "verified");
    assert_eq!(v["kind"], "complete_check");
    let mut real: Vec<(String, u64)> = v["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| {
            (
                w["graph6"].as_str().unwrap().to_string(),
                w["k"].as_u64().unwrap(),
            )
        })
        .collect();
    real.sort_by_key(|(_, k)| *k);
    assert_eq!(real.len(), 2);
    let iso = |g6: &str, h: domreconf::Graph| {
        let g = domreconf::formats::parse_graph6(g6).unwrap();
        domreconf::iso::is_isomorphic(&g, &h).unwrap()
    };
    assert_eq!(real[0].1, 2);
    assert!(iso(&real[0].0, domreconf::Graph::complete(3).unwrap()));
    assert_eq!(real[1].1, 3);
    assert!(iso(&real[1].0, domreconf::Graph::path(4).unwrap()));
}

#[test]
fn census_self_iso_finds_stars() {
    let o = domreconf(&["census", "self-iso", "-n", "5", "--out", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let found: Vec<&str> = v["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["graph6"].as_str().unwrap())
        .collect();
    assert_eq!(found.len(), 2);
    for g6 in found {
        let g = domreconf::formats::parse_graph6(g6).unwrap();
        let star = domreconf::Graph::star(g.n()).unwrap();
        assert!(domreconf::iso::is_isomorphic(&g, &star).unwrap());
    }
}

#[test]
fn census_basic_and_star_family() {
    let o = domreconf(&["census", "basic", "-n", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("| verified |"));
    let o = domreconf(&["census", "star-family", "--family", "cycle:9"]);
    assert!(o.status.success());
    let o = domreconf(&["census", "star-family", "--family", "star:5"]);
    assert_eq!(o.status.code(), Some(2), "γ precondition");
}

#[test]
fn census_reports_are_deterministic() {
    let a = domreconf(&[
        "census",
        "connectivity",
        "-n",
        "5",
        "--out",
        "json",
        "--threads",
        "1",
    ]);
    let b = domreconf(&[
        "census",
        "connectivity",
        "-n",
        "5",
        "--out",
        "json",
        "--threads",
        "3",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn census_writes_output_dir() {
    let dir = tempfile::tempdir().unwrap();
    let o = domreconf(&[
        "census",
        "all",
        "--output-dir",
        dir.path().to_str().unwrap(),
        "--out",
        "json",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let summary = std::fs::read_to_string(dir.path().join("summary.md")).unwrap();
    assert_eq!(summary.lines().count(), 2 + 9);
    assert!(dir
        .path()
        .join("regular-dominating-graphs.class.json")
        .is_file());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);
}

#[test]
fn generate_counts() {
    let o = domreconf(&["generate", "-n", "4"]);
    assert_eq!(stdout(&o).lines().count(), 11);
    let o = domreconf(&["generate", "-n", "5", "--connected"]);
    assert_eq!(stdout(&o).lines().count(), 21);
}
