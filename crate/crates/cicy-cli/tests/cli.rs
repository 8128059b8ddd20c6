//! Behavioural tests for the command-line interface: output text, file
//! handling, and exit codes (0 success, 1 bad input/data, 2 internal
//! fault).

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn corpus_path() -> String {
    format!("{}/../../data/corpus.cicy", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_cicy"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("no signal"),
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
    )
}

#[test]
fn validate_reports_ok_for_the_corpus() {
    let corpus = corpus_path();
    let (code, stdout, _) = run(&["validate", "--input", &corpus]);
    assert_eq!(code, 0);
    for name in ["quintic", "bicubic", "tetraquadric", "five-factor"] {
        assert!(
            stdout.contains(&format!("{name}: ok")),
            "missing {name} in {stdout}"
        );
    }
}

#[test]
fn validate_flags_a_non_threefold_and_exits_1() {
    let path = scratch("invalid.cicy");
    fs::write(&path, "config curve\ndims 1\nrow 3\nend\n").unwrap();
    let (code, stdout, _) = run(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("curve: invalid"));
    assert!(stdout.contains("not a threefold"));
    assert!(stdout.contains("first Chern class"));
}

#[test]
fn parse_errors_exit_1_with_a_line_number() {
    let path = scratch("broken.cicy");
    fs::write(&path, "config a\ndims 1 1\nrow 2 0\nrow 2\nend\n").unwrap();
    let (code, _, stderr) = run(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("line 4"), "stderr was: {stderr}");
}

#[test]
fn euler_prints_one_value_per_configuration() {
    let corpus = corpus_path();
    let (code, stdout, _) = run(&["euler", "--input", &corpus, "--name", "quintic"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "quintic: -200\n");
}

#[test]
fn betti_lists_pairs_for_the_five_factor_example() {
    let corpus = corpus_path();
    let (code, stdout, _) = run(&["betti", "--input", &corpus, "--name", "five-factor"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "five-factor: (0, 39), (1, 38)\n");
}

#[test]
fn betti_explains_when_the_favourable_assumption_is_off() {
    let corpus = corpus_path();
    let (code, stdout, _) = run(&[
        "betti",
        "--input",
        &corpus,
        "--name",
        "five-factor",
        "--assume-favourable",
        "false",
    ]);
    assert_eq!(code, 0);
    assert!(
        stdout.starts_with("five-factor: none ("),
        "stdout was: {stdout}"
    );
}

#[test]
fn inconsistent_supplied_hodge_data_exits_1() {
    let path = scratch("mismatch.cicy");
    fs::write(&path, "config quintic\ndims 4\nrow 5\nhodge 1 100\nend\n").unwrap();
    let (code, _, stderr) = run(&["batch", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("data error"), "stderr was: {stderr}");
    assert!(stderr.contains("mismatch"), "stderr was: {stderr}");
}

#[test]
fn expand_reaches_the_requested_factor_count() {
    let corpus = corpus_path();
    let (code, stdout, _) = run(&[
        "expand",
        "--input",
        &corpus,
        "--name",
        "tetraquadric",
        "--target-factors",
        "5",
    ]);
    assert_eq!(code, 0);
    assert!(
        stdout.starts_with("tetraquadric: 1 configuration(s) with 5 factors\n"),
        "stdout was: {stdout}"
    );
    assert_eq!(stdout.matches('[').count(), 5, "five rows expected");
}

#[test]
fn unknown_name_filter_exits_1() {
    let corpus = corpus_path();
    let (code, _, stderr) = run(&["euler", "--input", &corpus, "--name", "septic"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("septic"), "stderr was: {stderr}");
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let corpus = corpus_path();
    let path = scratch("report.tsv");
    let (code, stdout, _) = run(&[
        "batch",
        "--input",
        &corpus,
        "--format",
        "tsv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("name\tvalid\tchi\t"));
    assert_eq!(written.lines().count(), 5);
}

#[test]
fn involutions_renders_roles_and_betti_superscripts() {
    let corpus = corpus_path();
    let (code, stdout, _) = run(&["involutions", "--input", &corpus, "--name", "five-factor"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("five-factor: 4 free involution assignment(s)\n"));
    assert!(stdout.contains("C1: [1 | 0 0 1 1 0]"));
    assert!(stdout.contains("]^{0,39}"));
    assert!(stdout.contains("]^{1,38}"));
}

#[test]
fn batch_text_format_summarises_each_configuration() {
    let corpus = corpus_path();
    let (code, stdout, _) = run(&["batch", "--input", &corpus]);
    assert_eq!(code, 0);
    assert!(stdout.contains("quintic: valid"));
    assert!(stdout.contains("h11 = 1, h21 = 101 (supplied)"));
    assert!(stdout.contains("Betti pairs (b2, b3): (0, 39), (1, 38)"));
}
