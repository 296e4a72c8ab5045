use std::path::Path;
use std::process::{Command, Output};

use carton_cli::json::CartonJson;
use carton_core::Face;

fn carton(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_carton")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = carton(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

const EXTENDED: [&str; 8] = ["--rect", "3x4", "--lambda", "2,1", "--mu", "3,1", "--nu", "3,2"];
const SMALL: [&str; 8] = ["--rect", "2x3", "--lambda", "2", "--mu", "2,1", "--nu", "1"];

fn with<'a>(cmd: &'a str, instance: &[&'a str], extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend_from_slice(instance);
    v.extend_from_slice(extra);
    v
}

/// The text output of one carton, split into face blocks keyed by caption.
fn carton_blocks(text: &str, witness: &str) -> Vec<String> {
    let start = text.find(&format!("witness {witness}\n")).expect("witness present");
    let body = &text[start..];
    let end = body[1..].find("\ncarton ").or_else(|| body.find("\ncount ")).unwrap();
    body[..end + 1]
        .split("\n\n")
        .skip(1)
        .filter(|b| !b.trim().is_empty())
        .map(|b| format!("{}\n", b.trim_end_matches('\n')))
        .collect()
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&with("count", &SMALL, &[])), "1\n");
    assert_eq!(stdout(&with("count", &EXTENDED, &[])), "2\n");
    assert_eq!(
        stdout(&["count", "--rect", "3x3", "--lambda", "2,1", "--mu", "2,1", "--nu", "2,1"]),
        "2\n"
    );
    assert_eq!(stdout(&with("count", &EXTENDED, &["-v"])), "2\nballot 2\nrectification 2\n");
}

#[test]
fn count_with_chosen_tableaux() {
    let a = stdout(&with("count", &EXTENDED, &["--t-lambda", "1,3/2", "--t-mu", "1,3,4/2"]));
    assert_eq!(a, "2\n");
    let bad = carton(&with("count", &EXTENDED, &["--t-lambda", "1,2,3"]));
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn count_json() {
    let doc: serde_json::Value = serde_json::from_str(&stdout(&with("count", &SMALL, &["--format", "json", "-v"]))).unwrap();
    assert_eq!(doc["count"], 1);
    assert_eq!(doc["ballot"], 1);
    assert_eq!(doc["mu"], serde_json::json!([2, 1]));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(carton(&["count", "--rect", "2x2"]).status.code(), Some(1));
    assert_eq!(carton(&["count", "--rect", "2x2", "--lambda", "3", "--mu", "0", "--nu", "0"]).status.code(), Some(1));
    assert_eq!(carton(&["count", "--rect", "0x2", "--lambda", "0", "--mu", "0", "--nu", "0"]).status.code(), Some(1));
    assert_eq!(carton(&["growth", "--left", "0-2", "--top", "2"]).status.code(), Some(1));
    assert_eq!(carton(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(carton(&["--help"]).status.code(), Some(0));
}

#[test]
fn extended_example_faces_match_golden_tables() {
    let text = stdout(&with("enumerate", &EXTENDED, &[]));
    assert!(text.ends_with("count 2\n"));
    let blocks = carton_blocks(&text, ".,.,2,3/.,4/1");
    assert_eq!(blocks.len(), 6);
    for (face, block) in Face::ALL.into_iter().zip(&blocks) {
        if face == Face::ZMax {
            continue;
        }
        assert_eq!(block, &golden(&format!("{}.txt", face.name())), "{}", face.name());
    }
}

/// The transcribed ν−λ∨−Λ−μ∨ face differs from the computed one in a single
/// cell, where the transcription breaks the local rule and disagrees with
/// the λ∨−Λ edge shared with the next face.
#[test]
fn transcribed_nu_face_differs_in_one_cell() {
    let text = stdout(&with("enumerate", &EXTENDED, &[]));
    let computed = &carton_blocks(&text, ".,.,2,3/.,4/1")[3];
    let printed = golden("nu-lambdaVee-Lambda-muVee.txt");
    let diff: Vec<(&str, &str)> = computed.lines().zip(printed.lines()).filter(|(a, b)| a != b).collect();
    assert_eq!(
        diff,
        vec![(
            "(3,2,1)    | (3,2,2) | (3,3,2) | (4,3,2) | (4,3,3)",
            "(3,2,1)    | (3,2,2) | (3,3,2) | (4,3,2) | (4,4,2)"
        )]
    );
    // the shared edge as printed on the next face
    assert!(golden("lambdaVee-Lambda-nuVee-mu.txt").contains("(4,3,3)    | (4,3,2)"));
}

#[test]
fn parallel_enumeration_matches() {
    let a = stdout(&with("enumerate", &EXTENDED, &[]));
    let b = stdout(&with("enumerate", &EXTENDED, &["--parallel"]));
    assert_eq!(a, b);
}

#[test]
fn small_example_front_faces() {
    let text = stdout(&with("enumerate", &SMALL, &[]));
    assert!(text.starts_with("carton 1\n"));
    assert!(text.ends_with("count 1\n"));
    assert!(text.contains("∅−μ−ν∨−λ\n(2)=λ | (2,1) | (3,1) | (3,2)=ν∨\n(1)   | (1,1) | (2,1) | (2,2)\n∅     | (1)   | (2)   | (2,1)=μ\n"));
}

#[test]
fn size_mismatch_enumerates_nothing() {
    let text = stdout(&["enumerate", "--rect", "2x2", "--lambda", "1", "--mu", "1", "--nu", "1"]);
    assert_eq!(text, "count 0\n");
    let json = stdout(&["enumerate", "--rect", "2x2", "--lambda", "1", "--mu", "1", "--nu", "1", "--format", "json"]);
    assert_eq!(json, "");
}

#[test]
fn json_lines_round_trip() {
    let text = stdout(&with("enumerate", &EXTENDED, &["--format", "json"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        let doc: CartonJson = serde_json::from_str(line).unwrap();
        let ca = doc.to_carton().unwrap();
        assert_eq!(serde_json::to_string(&CartonJson::from(&ca)).unwrap(), line);
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["corners"]["nuVee"], serde_json::json!([4, 2, 1]));
        assert_eq!(v["faces"].as_array().unwrap().len(), 6);
    }
}

#[test]
fn growth_reproduces_the_printed_diagram() {
    let text = stdout(&["growth", "--left", "0-1-2-3-3,1", "--top", "3,1-4,1-4,2-4,3-4,3,1-5,3,1-5,3,2"]);
    assert_eq!(text, golden("growth.txt"));
}

#[test]
fn growth_degenerate_and_layered() {
    assert_eq!(stdout(&["growth", "--left", "0", "--top", "0-1-2"]), "∅ | (1) | (2)\n");
    let doc: serde_json::Value = serde_json::from_str(&stdout(&[
        "growth",
        "--left",
        "0-1-2-2,1",
        "--top",
        "2,1-2,2-3,2-4,2-4,2,1",
        "--format",
        "json",
    ]))
    .unwrap();
    let rows = doc["rows"].as_array().unwrap();
    let bottom = rows.last().unwrap();
    assert_eq!(bottom, &serde_json::json!([[], [1], [2], [3], [3, 1]]));
    let right: Vec<_> = rows.iter().rev().map(|r| r.as_array().unwrap().last().unwrap().clone()).collect();
    assert_eq!(right, vec![serde_json::json!([3, 1]), serde_json::json!([3, 1, 1]), serde_json::json!([4, 1, 1]), serde_json::json!([4, 2, 1])]);
}

#[test]
fn symmetry_pairings() {
    let swap = stdout(&with("symmetry", &SMALL, &["--sigma", "mln"]));
    assert!(swap.contains("1 <-> 1\n"), "{swap}");
    assert!(swap.contains("to ((2,1), (2), (1))"), "{swap}");
    assert!(swap.ends_with("bijection: 1 cartons, 1 cartons for the permuted triple\n"));
    let cycle = stdout(&with("symmetry", &EXTENDED, &["--sigma", "mnl"]));
    assert!(cycle.contains("1 <-> 1\n2 <-> 2\n"), "{cycle}");
    let id = stdout(&with("symmetry", &EXTENDED, &[]));
    assert!(id.contains("sigma lmn"), "{id}");
    assert_eq!(carton(&with("symmetry", &SMALL, &["--sigma", "xyz"])).status.code(), Some(1));
}

#[test]
fn verify_small_rectangles() {
    for r in ["2x2", "2x3"] {
        let text = stdout(&["verify", "--rect", r, "--seed", "5"]);
        assert!(text.starts_with("seed 5\n"));
        let last = text.lines().last().unwrap();
        let (passed, total) = last.split_once(" of ").unwrap();
        assert_eq!(format!("{passed} of {total}"), format!("{passed} of {passed} suites passed"));
    }
    let json = stdout(&["verify", "--rect", "2x2", "--max-size", "4", "--format", "json"]);
    let suites: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert!(suites.iter().all(|s| s["passed"] == true));
}

#[test]
fn selftest_passes() {
    let out = carton(&["selftest", "--seed", "11", "--parallel"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.starts_with("seed 11\n"));
    assert!(text.contains("seed 11 (1000 cases)"));
}
