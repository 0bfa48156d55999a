use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use resspec::format::{to_edge_list, to_graph6};
use resspec::{equal_squares_check, named, Graph, Partition};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_resspec"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn resspec");
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

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, to_edge_list(g)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn spectrum_of_small_graphs() {
    let o = run(&["spectrum"], "order 3\n0 1\n1 2\n0 2\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2/3^3\n");
    assert_eq!(stdout(&run(&["spectrum"], "order 2\n0 1\n")), "1^1\n");
    assert_eq!(stdout(&run(&["spectrum", "-"], "order 2\n")), "inf^1\n");
}

#[test]
fn spectrum_reads_graph6_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    std::fs::write(&path, ">>graph6<<Bw\nC~\n").unwrap();
    let o = run(&["spectrum", s(&path)], "");
    assert_eq!(stdout(&o), "2/3^3\n1/2^6\n");
}

#[test]
fn spectrum_with_rsv_table() {
    let o = run(&["spectrum", "--rsv"], "order 3\n0 1\n1 2\n");
    assert_eq!(
        stdout(&o),
        "1^2,2^1\n  0: 1^1,2^1\n  1: 1^2\n  2: 1^1,2^1\n"
    );
    let o = run(
        &["spectrum", "--format", "json", "--rsv"],
        "order 3\n0 1\n1 2\n",
    );
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["spectrum"], "1^2,2^1");
    assert_eq!(v["rsv"][1], "1^2");
    assert_eq!(v["order"], 3);
}

#[test]
fn parse_errors_exit_3_with_line() {
    let o = run(&["spectrum"], "order 3\n0 1\n0 7\n");
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let o = run(&["spectrum"], "B!\n");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[], "").status.code(), Some(2));
    assert_eq!(run(&["partitions", "x"], "").status.code(), Some(2));
    assert_eq!(
        run(&["spectrum", "/nonexistent/file"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["construct", "--family", "2k", "--k", "2"], "")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn compare_trees() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_graph(dir.path(), "t1", &named::t1());
    let b = write_graph(dir.path(), "t2", &named::t2());
    let o = run(&["compare", s(&a), s(&b)], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "spectra: equal\nspectrum: 3/4^4,1^7,7/4^4,2^6,11/4^4,3^5,15/4^2,4^3,5^1\nisomorphic: no\n"
    );
}

#[test]
fn compare_unequal() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_graph(dir.path(), "c3", &named::cycle(3).unwrap());
    let b = write_graph(dir.path(), "p4", &named::path(3).unwrap());
    let o = run(&["compare", s(&a), s(&b)], "");
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("spectra: different\n"), "{text}");
    assert!(text.contains("2/3: 3 vs 0"), "{text}");
    assert!(text.ends_with("isomorphic: no\n"));
}

#[test]
fn compare_equal_squares_pair() {
    let report = equal_squares_check(
        &Graph::empty(3),
        &[0, 1, 2],
        &Partition::new(vec![3, 3]).unwrap(),
        &Partition::new(vec![4, 1, 1]).unwrap(),
        &named::path(1).unwrap(),
        0,
        6,
    )
    .unwrap();
    let dir = tempfile::tempdir().unwrap();
    let a = write_graph(dir.path(), "a", &report.graph_a);
    let b = write_graph(dir.path(), "b", &report.graph_b);
    let o = run(&["compare", s(&a), s(&b)], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("spectrum: 1^6,2^6,inf^24\n"));
    assert!(stdout(&o).ends_with("isomorphic: no\n"));
}

#[test]
fn order_bound_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_graph(dir.path(), "t1", &named::t1());
    let b = write_graph(dir.path(), "t2", &named::t2());
    let o = bin()
        .args(["compare", s(&a), s(&b)])
        .env("RESSPEC_MAX_ORDER", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("exceeds the configured bound 5"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn construct_tree_family() {
    let o = run(
        &[
            "construct",
            "--family",
            "2k",
            "--k",
            "2",
            "--p",
            "7",
            "--q",
            "8",
            "--verify",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    for v in &lines {
        assert_eq!(v["graph"]["order"], 33);
        assert_eq!(v["family"], "2k");
    }
    assert_eq!(lines[1]["selector"], serde_json::json!([1, 2]));
}

#[test]
fn construct_rejects_bad_parameters() {
    let o = run(&["construct", "--family", "q", "--n", "9"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n ≥ 10"), "{}", stderr(&o));
    let o = run(
        &[
            "construct",
            "--family",
            "2k",
            "--k",
            "2",
            "--p",
            "7",
            "--q",
            "7",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("q ≥ p + 1 ≥ 8"), "{}", stderr(&o));
}

#[test]
fn construct_and_verify_round_trip() {
    let o = run(&["construct", "--family", "q", "--n", "11", "--verify"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert_eq!(
        stdout(&run(&["construct", "--family", "q", "--n", "11"], "")),
        text
    );

    let o = run(&["verify"], &text);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "8 of 8 reports verified\n");

    let tampered = text.replacen("\"isomorphic\":false", "\"isomorphic\":true", 1);
    let o = run(&["verify"], &tampered);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("line 1: FAILED"));

    let o = run(&["verify"], "{\"graph_a\": 3}\n");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn partitions_listing() {
    let o = run(&["partitions", "5"], "");
    assert_eq!(
        stdout(&o),
        "{5}\n{4,1}\n{3,2}\n{3,1,1}\n{2,2,1}\n{2,1,1,1}\n{1,1,1,1,1}\n"
    );
    let o = run(&["partitions", "6", "--equal-sos"], "");
    assert_eq!(stdout(&o), "{4,1,1} {3,3}\n{3,1,1,1} {2,2,2}\n");
    assert_eq!(run(&["partitions", "0"], "").status.code(), Some(2));
}

#[test]
fn mine_exhaustive_and_from_file() {
    let o = run(&["mine", "6"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 pairs\n");
    assert_eq!(run(&["mine", "8"], "").status.code(), Some(2));

    let pair = resspec::family_q(10).unwrap().remove(0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ten.g6");
    let body = format!(
        "{}\n{}\n{}\n",
        to_graph6(&pair.graph_a).unwrap(),
        to_graph6(&pair.graph_b).unwrap(),
        to_graph6(
            &pair
                .graph_a
                .relabel(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0])
                .unwrap()
        )
        .unwrap()
    );
    std::fs::write(&path, body).unwrap();
    let o = run(&["mine", "10", "--g6", s(&path)], "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.ends_with("\n1 pair\n"), "{text}");
    assert!(text.contains(&pair.spectrum.to_string()));
}
