//! The command line driven in-process through `cli::run_with`.

use std::path::Path;

use grid_ramsey::cli::format::ColoringFile;
use grid_ramsey::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gridramsey").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.col");
    let (code, out, _) = run(&["construct", "--family", "mubayi", "--n", "32", "--out", path_str(&file)]);
    assert_eq!(code, 0);
    assert!(out.contains("family: mubayi\n"), "{out}");
    let (code, out, _) = run(&["verify", "--property", "pq", "--p", "4", "--q", "3", "--in", path_str(&file)]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("holds: true"));
    let (code, out, _) = run(&["--json", "verify", "--property", "pq", "--p", "3", "--q", "3", "--in", path_str(&file)]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
}

#[test]
fn stdout_output_is_a_canonical_file() {
    let (code, out, _) = run(&["construct", "--family", "binary", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph 5 3\n1 2 0 # 1\n"), "{out}");
    assert_eq!(ColoringFile::parse(&out).unwrap().to_text(), out);
}

#[test]
fn grids_and_partite_images() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("a.grid");
    let hyper = dir.path().join("a.hyp");
    assert_eq!(run(&["construct", "--family", "asym-grid", "--r", "4", "--out", path_str(&grid)]).0, 0);
    let (code, out, _) = run(&["verify", "--property", "alternating-free", "--in", path_str(&grid)]);
    assert_eq!((code, out.contains("holds: true")), (0, true));
    let (code, _, _) = run(&["verify", "--property", "bipartite-rows", "--in", path_str(&grid)]);
    assert_eq!(code, 0);
    assert_eq!(run(&["construct", "--family", "partite3", "--in", path_str(&grid), "--out", path_str(&hyper)]).0, 0);
    let (code, out, _) = run(&["construct", "--family", "partite3", "--in", path_str(&hyper)]);
    assert_eq!(code, 0);
    assert_eq!(out, std::fs::read_to_string(&grid).unwrap());
}

#[test]
fn alternating_rectangle_is_reported_one_based() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("mono.grid");
    std::fs::write(&grid, "grid 2 2 1\nrow 1 1 2 0\nrow 2 1 2 0\ncol 1 2 1 0\ncol 1 2 2 0\n").unwrap();
    let (code, out, _) = run(&["verify", "--property", "alternating-free", "--in", path_str(&grid)]);
    assert_eq!(code, 1);
    assert!(out.contains("rectangle: [1,1,2,2]"), "{out}");
}

#[test]
fn witnesses() {
    let (code, out, _) = run(&["witness", "--method", "shelah", "--r", "2", "--seed", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("verified: true"));
    let (code, out, _) = run(&["--json", "witness", "--method", "stepdown", "--k", "3", "--r", "2", "--p", "4", "--q", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 64);
    assert!(v["color_count"].as_u64().unwrap() <= 2);
}

#[test]
fn solve_budget_checkpoint_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.txt");
    let (code, out, err) = run(&["solve", "g", "--m", "4", "--n", "6", "--budget", "50", "--checkpoint", path_str(&cp)]);
    assert_eq!(code, 3, "{out}");
    assert!(err.starts_with("error:"));
    assert!(out.contains("status: budget-exhausted"));
    let (code, resumed, _) = run(&["solve", "g", "--resume", path_str(&cp)]);
    assert_eq!(code, 0);
    let (_, direct, _) = run(&["solve", "g", "--m", "4", "--n", "6"]);
    let tail = |s: &str| s.lines().filter(|l| l.starts_with("value") || l.starts_with("nodes")).collect::<Vec<_>>().join("\n");
    assert_eq!(tail(&resumed), tail(&direct));
}

#[test]
fn solve_writes_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.col");
    let (code, out, _) = run(&["solve", "f", "--n", "4", "--p", "4", "--q", "6", "--out", path_str(&cert)]);
    assert_eq!(code, 0);
    assert!(out.contains("value: 6"), "{out}");
    let (code, _, _) = run(&["verify", "--property", "pq", "--p", "4", "--q", "6", "--in", path_str(&cert)]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["solve", "G", "--r", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("value: 2"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = run(&["construct", "--family", "nope"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"), "{err}");
    let (code, _, err) = run(&["construct", "--family", "binary"]);
    assert_eq!(code, 2);
    assert!(err.contains("--n"), "{err}");
    let (code, _, err) = run(&["verify", "--property", "pq", "--in", "/nonexistent/file"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("construct"));
}

#[test]
fn chromatic_checks_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("m.col");
    assert_eq!(run(&["construct", "--family", "mubayi", "--n", "16", "--out", path_str(&file)]).0, 0);
    let (code, out, _) = run(&["verify", "--property", "chromatic-pq", "--p", "4", "--q", "3", "--in", path_str(&file)]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&[
        "verify", "--property", "chromatic-pq", "--p", "4", "--q", "3", "--samples", "20", "--seed", "1", "--in",
        path_str(&file),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("mode: sample"));
    let (code, out, _) = run(&["verify", "--property", "chi-slow-grow", "--samples", "30", "--in", path_str(&file)]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("sampled_sets: 30"));
}

#[test]
fn random_grids_from_partition_files() {
    let dir = tempfile::tempdir().unwrap();
    let part = dir.path().join("p.part");
    let grid = dir.path().join("g.grid");
    assert_eq!(run(&["construct", "--family", "product-partition", "--n", "4", "--t", "2", "--out", path_str(&part)]).0, 0);
    let args = ["construct", "--family", "grid-random", "--partition", path_str(&part), "--r", "4", "--m", "6"];
    let (code, out, _) = run(&[&args[..], &["--out", path_str(&grid)]].concat());
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = run(&["verify", "--property", "alternating-free", "--in", path_str(&grid)]);
    assert_eq!(code, 0);
    // same seed, same grid
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
}
