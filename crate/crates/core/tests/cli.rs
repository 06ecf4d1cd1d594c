use std::process::{Command, Output};

use glie::table::TableDocument;

fn glie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_json() {
    let out = glie(&["table", "--presentation", "pm0n-reduced", "--n", "4", "--max-degree", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = TableDocument::from_json(&stdout(&out)).unwrap();
    assert_eq!(doc.presentation, "pm0n-reduced");
    let ranks: Vec<usize> = doc.rows.iter().map(|r| r.rank).collect();
    assert_eq!(ranks, vec![2, 1, 2, 3, 6]);
    assert!(doc.rows.iter().all(|r| r.torsion.is_empty()));
    assert!(doc.timing.is_none());
}

#[test]
fn machine_output_is_byte_identical() {
    for format in ["json", "csv"] {
        let args = ["table", "--presentation", "ihara", "--n", "4", "--max-degree", "3", "--format", format];
        assert_eq!(glie(&args).stdout, glie(&args).stdout);
    }
}

#[test]
fn table_text_and_csv() {
    let out = glie(&["table", "--presentation", "sphere-reduced", "--n", "4", "--max-degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Z/2"), "{text}");
    let out = glie(&["table", "--presentation", "kohno", "--n", "2", "--max-degree", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "degree,witt,rank,torsion\n1,1,1,\n2,0,0,\n");
}

#[test]
fn timing_is_opt_in() {
    let out = glie(&["table", "--presentation", "kohno", "--n", "3", "--max-degree", "2", "--format", "json", "--timing"]);
    let doc = TableDocument::from_json(&stdout(&out)).unwrap();
    assert_eq!(doc.timing.unwrap().per_degree_us.len(), 2);
}

#[test]
fn verify_passes() {
    for args in [
        vec!["verify", "example-pm04", "--max-degree", "5"],
        vec!["verify", "burau", "--n", "5"],
        vec!["verify", "--check", "delta2", "--n", "4"],
        vec!["verify", "sphere-sanity", "--n", "4"],
    ] {
        let out = glie(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stdout(&out));
        assert!(stdout(&out).contains("PASS"));
    }
}

#[test]
fn verify_failure_exits_one() {
    // the reduced presentation loses relations for n = 5
    let out = glie(&["verify", "theorem2", "--n", "5", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["table", "--presentation", "nope", "--n", "4"],
        vec!["table", "--presentation", "ihara", "--n", "2"],
        vec!["table", "--presentation", "ihara", "--n", "4", "--format", "xml"],
        vec!["table", "--presentation", "ihara", "--n", "4", "--max-degree", "0"],
        vec!["verify", "bogus"],
        vec!["verify"],
        vec!["frobnicate"],
    ] {
        let out = glie(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = Command::new(env!("CARGO_BIN_EXE_glie"))
        .args(["list-presentations"])
        .env("GLIE_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn thread_cap_does_not_change_output() {
    let args = ["table", "--presentation", "kohno", "--n", "4", "--max-degree", "3", "--format", "json"];
    let one = Command::new(env!("CARGO_BIN_EXE_glie")).args(args).env("GLIE_THREADS", "1").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, glie(&args).stdout);
}

#[test]
fn lists_presentations() {
    let out = glie(&["list-presentations"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["kohno", "ihara", "pm0n-full", "pm0n-reduced", "sphere-reduced"] {
        assert!(text.contains(name));
    }
}
