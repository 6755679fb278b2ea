use std::path::Path;
use std::process::{Command, Output};

fn rsgao(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsgao"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn encode_then_decode() {
    let dir = tempfile::tempdir().unwrap();
    let blocks = dir.path().join("blocks.txt");
    let out = rsgao(&[
        "encode", "--m", "3", "--k", "3", "--message", "0 1 0", "--message", "5 0 7",
        "--output", path(&blocks),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&blocks).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "rs 7 3 3 0xb");
    // x evaluated at alpha^0..alpha^6
    assert_eq!(lines[1], "1 2 4 3 6 7 5");

    let out = rsgao(&["decode", "--input", path(&blocks)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 1 0\n5 0 7\n");
}

#[test]
fn corrupt_then_decode_within_radius() {
    let dir = tempfile::tempdir().unwrap();
    let clean = dir.path().join("clean.txt");
    let noisy = dir.path().join("noisy.txt");
    let msgs = dir.path().join("msgs.txt");
    std::fs::write(&msgs, "1 2 3 4 5 6 7\n0 0 0 0 0 0 1\n15 14 13 12 11 10 9\n").unwrap();
    assert!(rsgao(&["encode", "--n", "15", "--k", "7", "--input", path(&msgs), "--output", path(&clean)])
        .status
        .success());
    let out = rsgao(&[
        "corrupt", "--t", "2", "--l", "4", "--seed", "11", "--input", path(&clean), "--output",
        path(&noisy),
    ]);
    assert!(out.status.success());
    let noisy_text = std::fs::read_to_string(&noisy).unwrap();
    for line in noisy_text.lines().skip(1) {
        assert_eq!(line.matches('?').count(), 4);
    }
    for alg in ["gao", "truong", "suggested"] {
        let out = rsgao(&["decode", "--algorithm", alg, "--self-check", "--input", path(&noisy)]);
        assert_eq!(out.status.code(), Some(0), "{alg}");
        assert_eq!(stdout(&out), "1 2 3 4 5 6 7\n0 0 0 0 0 0 1\n15 14 13 12 11 10 9\n");
    }
    // errors-only cannot take erasures: usage-level error
    let out = rsgao(&["decode", "--algorithm", "errors-only", "--input", path(&noisy)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn explicit_positions() {
    let dir = tempfile::tempdir().unwrap();
    let clean = dir.path().join("clean.txt");
    let noisy = dir.path().join("noisy.txt");
    rsgao(&["encode", "--m", "3", "--k", "3", "--message", "0 1 0", "--output", path(&clean)]);
    let out = rsgao(&[
        "corrupt", "--positions", "2", "--erasure-positions", "0,6", "--input", path(&clean),
        "--output", path(&noisy),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&noisy).unwrap();
    let toks: Vec<&str> = text.lines().nth(1).unwrap().split(' ').collect();
    assert_eq!(toks[0], "?");
    assert_eq!(toks[6], "?");
    assert_ne!(toks[2], "4");
    assert_eq!(&toks[3..6], &["3", "6", "7"]);
    let out = rsgao(&["decode", "--input", path(&noisy)]);
    assert_eq!(stdout(&out), "0 1 0\n");
}

#[test]
fn too_many_erasures_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let noisy = dir.path().join("noisy.txt");
    // RS(7,3): d = 5 erasures
    std::fs::write(&noisy, "rs 7 3 3 0xb\n? ? ? ? ? 7 5\n").unwrap();
    let out = rsgao(&["decode", "--input", path(&noisy)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "FAIL degree overflow\n");
}

#[test]
fn malformed_input_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "rs 7 3 3 0xb\n1 2 3\n").unwrap();
    let out = rsgao(&["decode", "--input", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("expected 7 symbols"));

    assert_eq!(rsgao(&["decode", "--algorithm", "nope"]).status.code(), Some(2));
    assert_eq!(rsgao(&["encode", "--k", "3", "--message", "1 2 3"]).status.code(), Some(2));
    assert_eq!(rsgao(&["encode", "--n", "10", "--k", "3", "--message", "1 2 3"]).status.code(), Some(2));
    assert_eq!(rsgao(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bench_writes_table_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("counts.csv");
    let out = rsgao(&[
        "bench", "--m", "4", "--k", "7", "--l", "2", "--t", "2", "--trials", "20", "--csv",
        path(&csv),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("RS(15, 7)"));
    assert!(text.contains("suggested <= truong on every trial"));
    let csv = std::fs::read_to_string(&csv).unwrap();
    assert!(csv.starts_with("algorithm,step,mults,invs,iterations\n"));
    assert!(csv.contains("truong,2b,"));
}

#[test]
fn selftest_passes() {
    let out = rsgao(&["selftest", "--trials", "50"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("PASS").count(), 3);
}
