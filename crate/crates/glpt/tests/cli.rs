//! End-to-end checks of the `glpt` binary.

use std::io::Write;
use std::process::{Command, Stdio};

fn glpt() -> Command {
    Command::new(env!("CARGO_BIN_EXE_glpt"))
}

fn run_ok(args: &[&str]) -> String {
    let out = glpt().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "glpt {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn construct_emits_valid_graph6() {
    let g6 = run_ok(&["construct", "g0"]);
    let g = glpt::parse_graph6(g6.trim()).unwrap();
    assert_eq!(g.n(), 12);
    assert_eq!(g.edge_count(), 15);

    let g6 = run_ok(&["construct", "petersen"]);
    let g = glpt::parse_graph6(g6.trim()).unwrap();
    assert_eq!(g.n(), 10);

    let g6 = run_ok(&["construct", "g1", "--p", "1", "--q", "16"]);
    assert_eq!(glpt::parse_graph6(g6.trim()).unwrap().n(), 57);

    let g6 = run_ok(&["construct", "g2", "--p", "1", "--q", "16"]);
    assert_eq!(glpt::parse_graph6(g6.trim()).unwrap().n(), 75);

    let g6 = run_ok(&["construct", "star-blowup", "--k", "1", "--t", "3"]);
    assert_eq!(glpt::parse_graph6(g6.trim()).unwrap().n(), 10);

    let g6 = run_ok(&["construct", "ham-reg", "--k", "6"]);
    assert_eq!(glpt::parse_graph6(g6.trim()).unwrap().n(), 22);

    let g6 = run_ok(&["construct", "bipartite-gadget", "--t", "3", "--minus-matching"]);
    let g = glpt::parse_graph6(g6.trim()).unwrap();
    assert_eq!((g.n(), g.max_degree()), (8, 4));

    let g6 = run_ok(&["construct", "linear-forest", "--lengths", "3,1"]);
    let g = glpt::parse_graph6(g6.trim()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (4, 2));
}

#[test]
fn construct_rejects_bad_parameters() {
    let out = glpt()
        .args(["construct", "g1", "--p", "1", "--q", "15"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let out = glpt().args(["construct", "walther"]).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn analyze_g0_record() {
    let g0_g6 = run_ok(&["construct", "g0"]);
    let line = run_ok(&["analyze", g0_g6.trim()]);
    let record: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(record["n"], 12);
    assert_eq!(record["alpha"], 6);
    assert_eq!(record["kappa"], 1);
    assert_eq!(record["girth"], 5);
    assert_eq!(record["lpt"], 2);
    assert_eq!(record["gallai"].as_array().unwrap().len(), 0);
    assert!(record["errors"].as_array().unwrap().is_empty());
}

#[test]
fn analyze_reads_stdin() {
    let mut child = glpt()
        .args(["analyze", "-", "--format", "summary"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"A_\nBw\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("n=2"));
    assert!(text.contains("n=3"));
}

#[test]
fn scan_summary_is_clean_and_jsonl_schema_holds() {
    let summary = run_ok(&[
        "scan",
        "--theorem",
        "p3p1",
        "--input",
        "gen:6",
        "--format",
        "summary",
    ]);
    assert!(summary.contains("violations:       0"));

    let jsonl = run_ok(&[
        "scan",
        "--theorem",
        "fixer-5p1",
        "--input",
        "gen:5",
        "--format",
        "jsonl",
    ]);
    for line in jsonl.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        for field in ["g6", "n", "alpha", "kappa", "delta", "girth", "lpt", "gallai", "verdicts", "errors"] {
            assert!(v.get(field).is_some(), "missing {field} in {line}");
        }
        assert_eq!(v["verdicts"]["fixer-5p1"], true);
    }
}

#[test]
fn scan_output_is_independent_of_worker_count() {
    let args = [
        "scan",
        "--theorem",
        "zero-sided-k1",
        "--input",
        "gen:5",
        "--format",
        "jsonl",
    ];
    let one = glpt().args(args).env("GLPT_JOBS", "1").output().unwrap();
    let four = glpt().args(args).env("GLPT_JOBS", "4").output().unwrap();
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert!(!one.stdout.is_empty());
}

#[test]
fn search_reports_g0_and_clears_small_corpora() {
    let out = run_ok(&["search", "--alpha-max", "5", "--input", "gen:6"]);
    assert!(out.contains("no counterexample"));

    // Feed g0 through a file corpus.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.g6");
    let g6 = run_ok(&["construct", "g0"]);
    std::fs::write(&path, format!("{}\n", g6.trim())).unwrap();
    let out = run_ok(&[
        "search",
        "--alpha-max",
        "6",
        "--input",
        path.to_str().unwrap(),
    ]);
    let hit: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(hit["n"], 12);
    assert_eq!(hit["lpt"], 2);
    assert_eq!(hit["longest_path_order"], 10);
}

#[test]
fn strict_ingestion_names_the_bad_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    std::fs::write(&path, "A_\n###bad###\nBw\n").unwrap();
    let out = glpt()
        .args(["search", "--alpha-max", "3", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "stderr: {err}");

    // Lenient mode skips it and proceeds.
    let out = glpt()
        .args([
            "search",
            "--alpha-max",
            "3",
            "--input",
            path.to_str().unwrap(),
            "--skip-bad",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipping line 2"));
}

#[test]
fn selftest_flag_verifies_generator_counts() {
    let out = glpt()
        .args([
            "scan",
            "--theorem",
            "p3p1",
            "--input",
            "gen:4",
            "--selftest",
            "--format",
            "summary",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("selftest n=4: 6 connected graphs"));
}

#[test]
fn surgery_subcommand_reports_plan() {
    // Triangle: path 0,1 with off-path vertex 2 adjacent to both.
    let out = run_ok(&["surgery", "--graph", "Bw", "--path", "0,1", "--seed", "2"]);
    assert!(out.contains("attachments: [0, 1]"));
    assert!(out.contains("InteriorSplice"));
    assert!(out.contains("applied:"));

    // Longest path of a path graph: no plan.
    let out = run_ok(&["surgery", "--graph", "Ch", "--path", "0,1,2", "--seed", "3"]);
    assert!(out.contains("plan:        none") || out.contains("ExteriorSplice"));
}
