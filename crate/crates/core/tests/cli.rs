use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn qdisk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdisk")).args(args).output().unwrap()
}

fn qdisk_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qdisk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error_json(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(1));
    serde_json::from_slice(&o.stderr).unwrap()
}

#[test]
fn det_of_two_by_two() {
    let o = qdisk(&["det", &fixture("board2x2.txt")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn validate_reports_census() {
    let o = qdisk(&["validate", &fixture("thirteen.glue")]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["V_I"], 5);
    assert_eq!(v["E_B"], 18);
    assert_eq!(v["E_I"], 17);
    assert_eq!(v["F"], 13);
    assert!(v["board"].is_null());
}

#[test]
fn board_census_has_signed_vertices() {
    let o = qdisk(&["validate", &fixture("rect5x4.txt")]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let b = &v["board"];
    assert_eq!(b["V_B_plus"].as_i64().unwrap() - b["V_B_minus"].as_i64().unwrap(), 2);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in
        [["ldu", "rect5x4.txt"], ["match", "loner.txt"], ["cutpaste", "rect5x4.txt"], ["diagonals", "thirteen.glue"]]
    {
        let path = fixture(args[1]);
        let a = qdisk(&[args[0], &path]);
        let b = qdisk(&[args[0], &path]);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn json_keys_are_sorted() {
    let text = stdout(&qdisk(&["matrix", &fixture("thirteen.glue")]));
    let keys: Vec<&str> =
        text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim().split('"').nth(1).unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn reads_standard_input() {
    let o = qdisk_stdin(&["tilings", "--count"], "###\n###\n");
    assert_eq!(stdout(&o), "3\n");
    let o = qdisk_stdin(&["tilings", "--signed", "-"], "###\n###\n");
    assert_eq!(stdout(&o).trim().parse::<i64>().unwrap().abs(), 1);
}

#[test]
fn listing_indexes_the_enumeration() {
    let o = qdisk(&["tilings", "--list", "--json", &fixture("loner.txt")]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<u64> = v.as_array().unwrap().iter().map(|t| t["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, [0, 1, 2]);
}

#[test]
fn matching_has_a_loner() {
    let o = qdisk(&["match", &fixture("loner.txt")]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pairs"].as_array().unwrap().len(), 1);
    assert!(v["loner"].is_u64());
    let last = v["trace"].as_array().unwrap().last().unwrap();
    assert_eq!(last["tilings"], 1);
}

#[test]
fn cutpaste_keeps_board_format() {
    let o = qdisk(&["cutpaste", &fixture("rect5x4.txt")]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for c in v["components"].as_array().unwrap() {
        assert_eq!(c["format"], "board");
        qdisk::parse_board(c["text"].as_str().unwrap()).unwrap();
    }
    assert_eq!(v["square_map"].as_array().unwrap().len(), 20);
}

#[test]
fn cutpaste_of_glued_disk_emits_glue() {
    let o = qdisk(&["cutpaste", &fixture("thirteen.glue")]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for c in v["components"].as_array().unwrap() {
        assert_eq!(c["format"], "glue");
        qdisk::parse_glued(c["text"].as_str().unwrap()).unwrap();
    }
}

#[test]
fn cutpaste_rejects_a_non_corner() {
    let v = error_json(&qdisk(&["cutpaste", "--corner", "1", &fixture("rect5x4.txt")]));
    assert_eq!(v["code"], "NotACorner");
}

#[test]
fn solve_and_reject() {
    let o = qdisk(&["solve", &fixture("rect5x4.txt"), "--rhs", "1,0,0,0,0,0,0,0,0,-1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim().split(',').count(), 10);
    let v = error_json(&qdisk(&["solve", &fixture("board2x2.txt"), "--rhs", "1,0"]));
    assert_eq!(v["code"], "NoRationalSolution");
}

#[test]
fn parse_error_points_at_the_line() {
    let o = qdisk_stdin(&["validate", "--format", "glue"], "squares 2\nglue 0 1 1\n");
    let v = error_json(&o);
    assert_eq!(v["code"], "Parse");
    assert_eq!(v["location"]["line"], 2);
}

#[test]
fn ring_of_squares_is_rejected() {
    // Eight squares around a missing ninth: an annulus, not a disk.
    let o = qdisk_stdin(&["validate"], "###\n#.#\n###\n");
    assert_eq!(error_json(&o)["code"], "NotADisk");
    let mut ring = String::from("squares 8\n");
    for i in 0..8 {
        ring.push_str(&format!("glue {i} 1 {} 3\n", (i + 1) % 8));
    }
    let o = qdisk_stdin(&["validate"], &ring);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn det_needs_balanced_colors() {
    let v = error_json(&qdisk_stdin(&["det"], "###\n"));
    assert_eq!(v["code"], "NonSquare");
}

#[test]
fn corpus_then_crosscheck() {
    let o = qdisk(&["corpus", "--all-boards", "--max-cells", "4", "--square-only"]);
    let blocks = stdout(&o).split("\n\n").count();
    assert_eq!(blocks, 17);
    let o = qdisk(&["crosscheck", "--all-boards", "--max-cells", "10"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["discrepancies"].as_array().unwrap().len(), 0);
    let o = qdisk(&["crosscheck", "--random", "20", "--glued", "10", "--max-cells", "16", "--seed", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn missing_file_is_an_io_error() {
    let v = error_json(&qdisk(&["rank", "/nonexistent/board.txt"]));
    assert_eq!(v["code"], "Io");
    assert_eq!(v["location"]["file"], "/nonexistent/board.txt");
}
