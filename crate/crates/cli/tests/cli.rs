use std::process::{Command, Output};

use twofano::report::Report;

fn twofano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twofano")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn bound_subcommand_prints_the_total_then_its_summands() {
    let out = twofano(&["lemma3", "--ch2", "2", "--c1sq", "18", "--e", "3", "--dim", "4", "--g", "0", "--b", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\nch2 term: 2\nc1^2 term: 3\ndeformation term: -4\n");

    let out = twofano(&["lemma3", "--ch2", "0", "--c1sq", "0", "--e", "1", "--dim", "3", "--g", "0", "--b", "0"]);
    assert_eq!(stdout(&out).lines().next(), Some("1"));

    let out = twofano(&["lemma3", "--ch2", "-3/2", "--c1sq", "1/3", "--e", "2", "--dim", "5", "--g", "0", "--b", "0"]);
    assert_eq!(stdout(&out).lines().next(), Some("31/12"));
}

#[test]
fn errors_exit_nonzero_with_one_line() {
    for args in [
        vec!["lemma3", "--ch2", "0", "--c1sq", "0", "--e", "0", "--dim", "3", "--g", "0", "--b", "0"],
        vec!["classify", "ci n=5 d=3,"],
        vec!["classify", "ci n=2 d=2,2"],
        vec!["classify", "bundle base=(ci n=2) c1L=-1"],
        vec!["bb-degree", "ci n=1", "--e", "1"],
        vec!["sweep", "--family", "product", "--cap", "5"],
    ] {
        let out = twofano(&args);
        assert!(!out.status.success(), "{args:?}");
        assert!(stdout(&out).is_empty(), "{args:?}");
        assert_eq!(stderr(&out).lines().count(), 1, "{args:?}: {}", stderr(&out));
    }
    let out = twofano(&["classify", "ci n=5 d=3,"]);
    assert!(stderr(&out).contains("position 11"));
    let out = twofano(&["sweep", "--family", "product", "--cap", "5"]);
    assert!(stderr(&out).contains("cap of 5"));
}

#[test]
fn classify_renders_every_format() {
    let table = stdout(&twofano(&["classify", "grass k=2 n=4"]));
    assert!(table.starts_with("spec "));
    assert!(table.contains("grass k=2 n=4"));
    let csv = stdout(&twofano(&["classify", "grass k=2 n=4", "--format", "csv"]));
    let rows = Report::rows_from_csv(&csv).unwrap();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].two_fano);
    let json = stdout(&twofano(&["classify", "grass k=2 n=4", "--format", "json"]));
    assert_eq!(Report::from_json(&json).unwrap().rows, rows);
}

#[test]
fn bb_degree_lists_each_surface_generator() {
    let out = twofano(&["bb-degree", "ci n=2", "--e", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[1] 6\n");
    let out = twofano(&["bb-degree", "grass k=2 n=4", "--e", "2"]);
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn empty_sweep_succeeds() {
    let out = twofano(&["sweep", "--family", "grassmannian", "--max-n", "1", "--format", "json"]);
    assert!(out.status.success());
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert!(report.rows.is_empty());
    assert_eq!(report.summary.rows, 0);
}

#[test]
fn boundary_only_keeps_flagged_rows() {
    let out = twofano(&["sweep", "--family", "ci", "--max-n", "8", "--max-r", "2", "--max-d", "3", "--boundary-only", "--format", "csv"]);
    let rows = Report::rows_from_csv(&stdout(&out)).unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.boundary_flag));
    assert!(rows.iter().any(|r| r.spec == "ci n=3 d=2"));
}
