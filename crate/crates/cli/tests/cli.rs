use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/fixture.thesaurus")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn roget(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_roget"))
        .env_remove("ROGET_THESAURUS")
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_fixture(args: &[&str]) -> Output {
    let path = fixture();
    let mut all = vec!["--thesaurus", path.to_str().unwrap()];
    all.extend_from_slice(args);
    roget(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn sim_prints_score_and_tier() {
    let o = with_fixture(&["sim", "feline", "lynx"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("14 Intermediate\n"), "{}", stdout(&o));

    let o = with_fixture(&["--format", "tsv", "distance", "feline", "lynx"]);
    assert_eq!(stdout(&o), "feline\tlynx\t2\t14\tIntermediate\t1\n");
}

#[test]
fn unknown_word_exits_one() {
    let o = with_fixture(&["distance", "zzzz", "cat"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not found: zzzz"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn input_failures_exit_two_and_name_the_path() {
    let o = roget(&["--thesaurus", "/nonexistent/thesaurus.txt", "sim", "a", "b"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/nonexistent/thesaurus.txt"));

    let o = roget(&["sim", "a", "b"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("ROGET_THESAURUS"));

    let o = with_fixture(&["solve", "/nonexistent/questions.tsv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/nonexistent/questions.tsv"));

    let o = roget(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn thesaurus_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_roget"))
        .env("ROGET_THESAURUS", fixture())
        .args(["sim", "feline", "lynx"])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("14 "));
}

#[test]
fn paths_in_report_format() {
    let o = with_fixture(&["paths", "ode", "poem"]);
    let text = stdout(&o);
    let headers: Vec<&str> = text.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(headers, ["ode N. to poem N., length = 2, 2 path(s) of this length"; 2]);
    assert!(text.contains("    ode → poetry ← poem\n"));

    let o = with_fixture(&["paths", "feline", "lynx"]);
    assert!(stdout(&o).contains("    feline → cat ← lynx\n"));

    // a word with itself: one zero-length header per reference
    let o = with_fixture(&["paths", "feline", "feline"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("length = 0, 3 path(s)")).count(), 3);

    let o = with_fixture(&["paths", "--longest", "feline", "lynx"]);
    assert!(stdout(&o).contains("→ T ←"));
}

#[test]
fn solve_prints_verdicts_and_summary() {
    let o = with_fixture(&["solve", data("ode.tsv").to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("ode N. to poem N., length = 2, 2 path(s) of this length\n"));
    assert!(text.contains("→ Roget thinks that ode means poem: CORRECT\n"));
    for line in ["Correct", "Questions with ties", "Score", "Percent", "Questions not found", "Other words not found"] {
        assert!(text.lines().any(|l| l.starts_with(line)), "{line}");
    }
}

#[test]
fn solve_summary_counts() {
    let o = with_fixture(&["--format", "tsv", "solve", "--summary", data("mixed.tsv").to_str().unwrap()]);
    assert_eq!(
        stdout(&o),
        "Correct\t1\nQuestions with ties\t2\nScore\t1.75\nPercent\t43.75\nQuestions not found\t1\nOther words not found\t2\n"
    );

    let o = with_fixture(&["--format", "tsv", "solve", data("ties.tsv").to_str().unwrap()]);
    let text = stdout(&o);
    let credits: Vec<&str> = text.lines().take(3).map(|l| l.split('\t').nth(5).unwrap()).collect();
    assert_eq!(credits, ["0.5", "0.33", "0.25"]);
}

#[test]
fn solve_nouns_only_filters() {
    let o = with_fixture(&["solve", "--nouns-only", "--summary", data("mixed.tsv").to_str().unwrap()]);
    assert!(o.status.success());
    // zzzz has no noun reading and "xylophone zebra" is unknown
    assert!(stderr(&o).contains("kept 2 of 4"), "{}", stderr(&o));
}

#[test]
fn bench_linear_pairs_correlate_perfectly() {
    let o = with_fixture(&["--format", "tsv", "bench", data("linear_pairs.tsv").to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("journey's end – terminus\t4.000\t16.000\tHigh\n"));
    assert!(text.ends_with("Correlation\t1.000\t1.000\n"), "{text}");
}

#[test]
fn bench_policies() {
    let file = data("linear_pairs_missing.tsv");
    let o = with_fixture(&["--format", "tsv", "bench", file.to_str().unwrap()]);
    assert!(stdout(&o).ends_with("Correlation\t1.000\t1.000\n"));
    assert!(stdout(&o).contains("qwertyuiop – terminus\t3.900\tNA\tNA\n"));
    assert!(stderr(&o).contains("1 pair(s) not found"));

    let o = with_fixture(&["--format", "tsv", "bench", "--policy", "zero", file.to_str().unwrap()]);
    assert!(!stdout(&o).ends_with("Correlation\t1.000\t1.000\n"));
    assert!(stdout(&o).contains("qwertyuiop – terminus\t3.900\t0.000\tNA\n"));
}

#[test]
fn bench_outliers() {
    let file = data("linear_pairs.tsv");
    let o = with_fixture(&["--format", "tsv", "bench", "--outliers", "2.75", file.to_str().unwrap()]);
    let text = stdout(&o);
    let outliers: Vec<&str> = text.split("\n\n").nth(1).unwrap().lines().skip(1).collect();
    // 3.0 scores 12 and 2.5 scores 10, so a 2.75 split separates them cleanly
    assert!(outliers.is_empty(), "{outliers:?}");

    let o = with_fixture(&["--format", "tsv", "bench", "--outliers", "3.25", file.to_str().unwrap()]);
    let text = stdout(&o);
    let outliers: Vec<&str> = text.split("\n\n").nth(1).unwrap().lines().skip(1).collect();
    assert_eq!(outliers, ["popular misconception – glaring error\t3.000\t12.000\t0.000"]);
}

#[test]
fn bench_constant_scores_exit_one() {
    let o = with_fixture(&["bench", data("constant_pairs.tsv").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("correlation undefined"));
}

#[test]
fn validate_fixture() {
    let o = with_fixture(&["--format", "tsv", "validate"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("heads\t41\n"));
    assert!(text.contains("entries\t193\n"));
    assert!(text.contains("violations\t0\n"));
}

#[test]
fn import_then_query() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("excerpt.thesaurus");
    let o = roget(&["import", "--from", "gutenberg1911", data("roget1911_excerpt.txt").to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stderr(&o).contains("5 heads"));

    let o = roget(&["--format", "tsv", "validate", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("heads\t5\n"));

    let o = roget(&["--thesaurus", out.to_str().unwrap(), "sim", "existence", "being"]);
    assert!(stdout(&o).starts_with("16 High"));
}

#[test]
fn import_rejects_empty_input() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let o = roget(&["import", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("empty"));

    let o = roget(&["import", "/nonexistent/roget.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/nonexistent/roget.txt"));
}

#[test]
fn sim_examples() {
    assert!(stdout(&with_fixture(&["sim", "cat", "cat"])).starts_with("16 High\n"));
    let o = with_fixture(&["sim", "feline", "zzzz"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not found: zzzz"));
}

#[test]
fn malformed_question_line_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.tsv");
    std::fs::write(&file, "# header\node\theavy debt\tpoem\tsweet smell\tsurprise\t1\node\tpoem\n").unwrap();
    let o = with_fixture(&["solve", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn output_is_deterministic() {
    let file = data("mixed.tsv");
    for args in [
        vec!["solve", file.to_str().unwrap()],
        vec!["paths", "--longest", "feline", "lynx"],
        vec!["--format", "tsv", "bench", "--outliers", "2", data("linear_pairs_missing.tsv").to_str().unwrap()],
    ] {
        let (a, b) = (with_fixture(&args), with_fixture(&args));
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stderr, b.stderr);
    }
}
