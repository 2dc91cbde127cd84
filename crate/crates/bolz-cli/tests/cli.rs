//! End-to-end tests of the command-line interface: exit codes, file
//! handling, and the pinned experiment output.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bolz() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bolz"))
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bolz-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bolz().args(args).output().expect("failed to spawn bolz")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn test_roundtrip_through_binary() {
    let dir = tmpdir("roundtrip");
    let input = dir.join("in.txt");
    let text: Vec<u8> = (0..40_000u32).map(|i| (i * i % 251) as u8).collect();
    std::fs::write(&input, &text).unwrap();

    let out = run(&[
        "compress",
        "--f-code",
        "gamma",
        "--g-code",
        "gamma",
        path_str(&input),
        "-o",
        path_str(&dir.join("out.bolz")),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let out = run(&[
        "decompress",
        path_str(&dir.join("out.bolz")),
        "-o",
        path_str(&dir.join("back.txt")),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read(dir.join("back.txt")).unwrap(), text);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn test_default_output_names() {
    let dir = tmpdir("names");
    let input = dir.join("data.bin");
    std::fs::write(&input, b"squeeze me please, squeeze me please").unwrap();

    assert!(run(&["compress", path_str(&input)]).status.success());
    let packed = dir.join("data.bin.bolz");
    assert!(packed.exists());

    std::fs::remove_file(&input).unwrap();
    assert!(run(&["decompress", path_str(&packed)]).status.success());
    assert_eq!(
        std::fs::read(dir.join("data.bin")).unwrap(),
        b"squeeze me please, squeeze me please"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn test_window_and_code_flags() {
    let dir = tmpdir("flags");
    let input = dir.join("in");
    std::fs::write(&input, b"abcabcabc".repeat(200)).unwrap();
    for code in ["fixed32", "gamma", "delta", "fib"] {
        let packed = dir.join(format!("out-{code}.bolz"));
        let out = run(&[
            "compress",
            "--f-code",
            code,
            "--g-code",
            code,
            "--window",
            "64",
            "--parser",
            "greedy",
            path_str(&input),
            "-o",
            path_str(&packed),
        ]);
        assert!(out.status.success(), "{code}");
        let back = dir.join(format!("back-{code}"));
        assert!(run(&["decompress", path_str(&packed), "-o", path_str(&back)]).status.success());
        assert_eq!(std::fs::read(&back).unwrap(), b"abcabcabc".repeat(200));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn test_exit_codes() {
    // Usage errors: unknown flag, unknown subcommand, bad value.
    assert_eq!(run(&["compress", "--no-such-flag"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["gapfamily", "--lmin", "9", "--lmax", "2"]).status.code(), Some(2));

    // Help and version are not errors.
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));

    // Data errors: missing input, corrupt stream, out-of-range parameter.
    let out = run(&["compress", "/nonexistent/input/file"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let dir = tmpdir("exitcodes");
    let bad = dir.join("bad.bolz");
    std::fs::write(&bad, b"NOTBOLZ").unwrap();
    let out = run(&["decompress", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("corrupt"));

    let truncated = dir.join("trunc.bolz");
    let input = dir.join("in");
    std::fs::write(&input, b"abracadabra abracadabra").unwrap();
    assert!(run(&["compress", path_str(&input), "-o", path_str(&dir.join("full.bolz"))])
        .status
        .success());
    let full = std::fs::read(dir.join("full.bolz")).unwrap();
    std::fs::write(&truncated, &full[..full.len() - 1]).unwrap();
    assert_eq!(run(&["decompress", path_str(&truncated)]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn test_gapfamily_golden_csv() {
    // Pinned output; the bit counts are verified against the full-graph
    // reference in the library acceptance suite.
    let out = run(&["gapfamily", "--lmax", "8"]);
    assert!(out.status.success());
    let want = "\
l,n,greedy_bits,optimal_bits,ratio,greedy_phrases,optimal_phrases
2,12,57,57,1.000000,7,7
3,21,75,71,1.056338,8,9
4,35,95,83,1.144578,9,10
5,58,123,99,1.242424,10,11
6,98,153,113,1.353982,11,12
7,171,189,129,1.465116,12,13
8,309,229,143,1.601399,13,15
";
    assert_eq!(String::from_utf8_lossy(&out.stdout), want);

    // --csv writes the same bytes to a file.
    let dir = tmpdir("gapcsv");
    let csv = dir.join("rows.csv");
    assert!(run(&["gapfamily", "--lmax", "8", "--csv", path_str(&csv)]).status.success());
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), want);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn test_stats_reports_edge_budget() {
    let dir = tmpdir("stats");
    let input = dir.join("aaaa");
    std::fs::write(&input, b"aaaa").unwrap();
    let out = run(&["stats", path_str(&input)]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("n: 4"));
    // Distances 1..=3 split into two gamma classes, lengths 1..=4 into
    // three; no vertex may exceed that budget.
    assert!(text.contains("distance classes: 2"));
    assert!(text.contains("length classes: 3"));
    for line in text.lines().filter(|l| l.starts_with("  ")) {
        let edges: usize = line.trim().split(':').next().unwrap().parse().unwrap();
        assert!(edges <= 5, "histogram key {edges} exceeds the class budget");
    }
    assert!(text.contains("optimal bits: 15"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn test_stats_dot_export() {
    let dir = tmpdir("dot");
    let input = dir.join("in");
    std::fs::write(&input, b"abab").unwrap();
    let dot = dir.join("graphs.dot");
    let out = run(&["stats", path_str(&input), "--dot", path_str(&dot)]);
    assert!(out.status.success());
    let rendered = std::fs::read_to_string(&dot).unwrap();
    assert!(rendered.contains("digraph full"));
    assert!(rendered.contains("digraph pruned"));
    assert!(rendered.contains("v0 -> v1"));

    // Large inputs are refused rather than rendered.
    let big = dir.join("big");
    std::fs::write(&big, vec![b'x'; 4096]).unwrap();
    assert_eq!(
        run(&["stats", path_str(&big), "--dot", path_str(&dot)]).status.code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn test_bench_runs() {
    let out = run(&["bench", "--min-exp", "10", "--max-exp", "12", "--runs", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.starts_with("n,median_ms,ratio_vs_prev,out_bytes"));
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(1).unwrap().starts_with("1024,"));
}
