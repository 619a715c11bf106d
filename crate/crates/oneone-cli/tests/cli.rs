//! End-to-end checks of the command-line surface: outputs, exit codes, and
//! file round-trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oneone"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn oneone")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).to_string()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("oneone-cli-test-{}-{name}", std::process::id()));
    p
}

fn write_fixture(name: &str, json: &str) -> PathBuf {
    let p = tmp(name);
    std::fs::write(&p, json).unwrap();
    p
}

/// A valid one-vertex geodesic diagram of the unknot.
fn unknot_json() -> &'static str {
    r#"{ "beta": [["1/211", "1/4"]], "offset": [0, 1], "w": ["1/61", "1/8"] }"#
}

#[test]
fn check_reports_verdicts_as_json() {
    // Build the P(-2,3,7) diagram through the braid pipeline first.
    let out_path = tmp("p237.json");
    let o = run(&[
        "braid",
        "diagram",
        "7",
        "4",
        "2",
        "--filling",
        "inf",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let o = run(&["check", out_path.to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["coherence"], "Positive");
    assert_eq!(v["lspace"], "PositiveLSpaceKnot");
    assert_eq!(v["reduced"], true);

    // Written diagrams re-parse byte-identically after canonicalization.
    let text = std::fs::read_to_string(&out_path).unwrap();
    let reparsed = oneone::io::diagram_from_json(&text).unwrap();
    assert_eq!(oneone::io::diagram_to_json(&reparsed), text);
}

#[test]
fn hfk_prints_alexander_for_s3() {
    let p = write_fixture("unknot.json", unknot_json());
    let o = run(&["hfk", p.to_str().unwrap(), "--alexander"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains('1'));
}

#[test]
fn hfk_alexander_fails_on_lens_diagram_with_exit_1() {
    // Geodesic of class (2,5): a lens-space diagram.
    let json = r#"{ "beta": [["1/211", "1/4"]], "offset": [2, 5], "w": ["1/61", "1/8"] }"#;
    let p = write_fixture("lens.json", json);
    let o = run(&["hfk", p.to_str().unwrap(), "--alexander"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_file_exits_1() {
    let p = write_fixture("bad.json", "{ not json");
    let o = run(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn invalid_diagram_exits_1() {
    let json = r#"{ "beta": [["1/4", "1/2"]], "offset": [0, 1], "w": ["1/61", "1/8"] }"#;
    let p = write_fixture("on-alpha.json", json);
    let o = run(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn braid_interval_text() {
    let o = run(&["braid", "interval", "7", "4", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"["5/2","3/1"], "Strict""#);
}

#[test]
fn braid_classify_simple_slope() {
    let o = run(&["braid", "classify", "7", "4", "2", "--filling", "8/3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("simple=true"), "got: {text}");
    assert!(text.contains("diagram=Both"), "got: {text}");
}

#[test]
fn braid_not_a_knot_exits_1() {
    let o = run(&["braid", "interval", "4", "3", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn braid_slope_zero_exits_1() {
    let o = run(&["braid", "diagram", "7", "4", "2", "--filling", "0/1", "-o", "/dev/null"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn search_is_deterministic_and_sorted() {
    let a = run(&["search", "--max-winding", "7"]);
    let b = bin()
        .args(["search", "--max-winding", "7"])
        .env("ONEONE_THREADS", "1")
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let rows: Vec<serde_json::Value> = stdout(&a)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let keys: Vec<(i64, i64, i64)> = rows
        .iter()
        .map(|r| {
            (
                r["omega"].as_i64().unwrap(),
                r["b"].as_i64().unwrap(),
                r["m"].as_i64().unwrap(),
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    // The triple-filling rows appear at max winding 7.
    let triples: Vec<_> = rows
        .iter()
        .filter(|r| r["fillings"].as_array().unwrap().len() == 3)
        .collect();
    assert_eq!(triples.len(), 2);
}

#[test]
fn render_is_deterministic() {
    let p = write_fixture("unknot2.json", unknot_json());
    let s1 = tmp("out1.svg");
    let s2 = tmp("out2.svg");
    assert!(run(&["render", p.to_str().unwrap(), "-o", s1.to_str().unwrap()])
        .status
        .success());
    assert!(run(&["render", p.to_str().unwrap(), "-o", s2.to_str().unwrap()])
        .status
        .success());
    let a = std::fs::read(&s1).unwrap();
    let b = std::fs::read(&s2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
    assert!(String::from_utf8_lossy(&a).starts_with("<svg"));
}

#[test]
fn render_t27_shows_seven_points_and_six_bigons() {
    // Build T(2,7) by writing its diagram from the library fixture.
    let d = oneone::diagram::from_standard_form(7, 4, 3, 4).unwrap();
    let p = write_fixture("t27.json", &oneone::io::diagram_to_json(&d));
    let out = tmp("t27.svg");
    assert!(run(&["render", p.to_str().unwrap(), "-o", out.to_str().unwrap()])
        .status
        .success());
    let svg = std::fs::read_to_string(&out).unwrap();
    // one circle per basepoint mark plus intersection dots
    let dots = svg.matches(r#"r="2.5""#).count();
    assert_eq!(dots, 7);
    let shaded = svg.matches("fill-opacity").count();
    assert_eq!(shaded, 6);
}

fn _assert_path_hygiene(_: &Path) {}
