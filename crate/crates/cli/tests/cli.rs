use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_connset");

fn data(name: &str) -> String {
    format!("{}/../core/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn compute_prints_exact_strings() {
    let o = run(&["compute"], "Bw\nBg\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"n\":3,\"N\":\"7\",\"S\":\"12\",\"A\":\"12/7\",\"D\":\"4/7\"}\n\
         {\"n\":3,\"N\":\"6\",\"S\":\"10\",\"A\":\"5/3\",\"D\":\"5/9\"}\n"
    );
}

#[test]
fn compute_profile_and_class() {
    let o = run(&["compute", "--profile", "--classify"], "Bg\n");
    let v = &lines(&o)[0];
    assert_eq!(v["vertex_profile"], serde_json::json!(["3", "4", "3"]));
    assert_eq!(v["near_tree_class"], "tree");
}

#[test]
fn malformed_line_exits_two_with_line_number() {
    let o = run(&["compute"], "Bw\nB!x\nBg\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(lines(&o).len(), 1);
}

#[test]
fn budget_overrun_exits_three() {
    let o = run(
        &["compute", "--family", "complete:n=12", "--budget", "10"],
        "",
    );
    assert_eq!(
        o.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn unknown_statement_exits_four() {
    let o = run(&["verify", "--statements", "thm_main,no_such"], "Bw\n");
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn invalid_family_exits_two() {
    let o = run(&["compute", "--family", "cubic_random:n=5,seed=1"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_connected_six_vertex_graphs() {
    let o = run(
        &[
            "verify",
            "--input",
            &data("connected_n6.g6"),
            "--workers",
            "3",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let out = lines(&o);
    let summary = &out.last().unwrap()["summary"];
    assert_eq!(summary["graphs"], 112);
    assert_eq!(summary["fail"], 0);
    assert!(out[..out.len() - 1].iter().all(|r| r["status"] != "fail"));
}

#[test]
fn verify_output_is_independent_of_workers() {
    let path = data("connected_n5.g6");
    let one = run(&["verify", "--input", &path, "--workers", "1"], "");
    let four = run(&["verify", "--input", &path, "--workers", "4"], "");
    assert_eq!(one.stdout, four.stdout);
    let csv1 = run(&["verify", "--input", &path, "--output-format", "csv"], "");
    let csv4 = run(
        &[
            "verify",
            "--input",
            &path,
            "--output-format",
            "csv",
            "--workers",
            "4",
        ],
        "",
    );
    assert_eq!(csv1.stdout, csv4.stdout);
    assert!(stdout(&csv1).starts_with("graph_index,graph6,statement,param,status,witness\n"));
}

#[test]
fn disconnected_graph_is_not_applicable() {
    let o = run(&["verify"], "C?\n");
    assert_eq!(o.status.code(), Some(0));
    let out = lines(&o);
    assert!(out[..out.len() - 1]
        .iter()
        .all(|r| r["status"] == "not_applicable"));
}

#[test]
fn corrupted_fixture_fails_with_witness() {
    let o = run(
        &[
            "verify",
            "--family",
            "path:n=5",
            "--statements",
            "fixture_corrupt_half",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
    let out = lines(&o);
    assert_eq!(out[0]["status"], "fail");
    assert_eq!(out[0]["witness"]["A"], "7/3");
}

#[test]
fn list_statements() {
    let o = run(&["verify", "--list"], "");
    let ids: Vec<String> = lines(&o)
        .iter()
        .map(|v| v["id"].as_str().unwrap().to_string())
        .collect();
    assert!(ids.contains(&"thm_main".to_string()));
    assert!(ids.contains(&"fixture_corrupt_half".to_string()));
}

#[test]
fn search_minimum_density_on_six_vertices_is_the_path() {
    let o = run(
        &[
            "search",
            "--input",
            &data("connected_n6.g6"),
            "--objective",
            "D",
            "--direction",
            "min",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let v = &lines(&o)[0];
    assert_eq!(v["record"]["value"], "4/9");
    assert_eq!(v["record"]["ties"], 1);
    let g6 = v["record"]["holders"][0]["graph6"]
        .as_str()
        .unwrap()
        .to_string();
    let c = run(&["compute", "--classify"], &format!("{g6}\n"));
    assert_eq!(lines(&c)[0]["S"], "56");
}

#[test]
fn paths_have_average_n_plus_two_over_three() {
    let o = run(&["compute", "--family", "path:n=3..10"], "");
    for (v, n) in lines(&o).iter().zip(3u64..) {
        let expected = num(n + 2, 3);
        assert_eq!(v["A"], expected, "n = {n}");
    }
    let s = run(
        &[
            "search",
            "--family",
            "path:n=3..10",
            "--objective",
            "A",
            "--direction",
            "min",
        ],
        "",
    );
    assert_eq!(lines(&s)[0]["record"]["value"], "5/3");
}

fn num(a: u64, b: u64) -> String {
    let g = gcd(a, b);
    if b / g == 1 {
        format!("{}", a / g)
    } else {
        format!("{}/{}", a / g, b / g)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn cubic_search_reports_degree_three_records() {
    let o = run(
        &[
            "search",
            "--family",
            "cubic_random:n=4..14/2,seed=0..9",
            "--direction",
            "max",
            "--workers",
            "2",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let v = &lines(&o)[0];
    assert_eq!(v["scanned"], 60);
    assert_eq!(v["min_degree3"]["scanned"], 60);
    assert!(v["min_degree3"]["findings"].as_array().unwrap().is_empty());
}

#[test]
fn edge_list_input_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("stats.csv");
    let o = run(
        &[
            "compute",
            "--format",
            "edges",
            "--output-format",
            "csv",
            "--out",
            out.to_str().unwrap(),
        ],
        "3\n0 1\n1 2\n0 2\n\n4\n0 1\n0 2\n0 3\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(out).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "index,graph6,family,n,N,S,A,D,near_tree_class");
    assert_eq!(rows[1], "0,Bw,,3,7,12,12/7,4/7,");
    assert_eq!(rows[2], "1,Cs,,4,11,23,23/11,23/44,");
}

#[test]
fn family_templates_from_input_lines() {
    let o = run(
        &["compute", "--format", "family"],
        "star:m=3\nbaton:L=2,k=1\n",
    );
    let out = lines(&o);
    assert_eq!(out[0]["N"], "11");
    assert_eq!(out[1]["family"], "baton:L=2,k=1");
    assert_eq!(out[1]["N"], "10");
}

#[test]
fn bench_counts_graphs() {
    let o = run(&["bench", "--input", &data("connected_n5.g6")], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(lines(&o)[0]["graphs"], 21);
}
