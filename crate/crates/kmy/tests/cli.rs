//! End-to-end checks of the command-line interface: output bytes, JSON
//! schemas and exit codes.

use std::process::{Command, Output};

const EXAMPLE: &str = "1-7' 2-1' 3-6 5-8 4-2' 7-4' 3'-6' 5'-8'";

fn kmy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmy")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn dim_outputs_the_dimension() {
    let out = kmy(&["dim", "-n", "4", "-l", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "43\n");
}

#[test]
fn dim_json_schema() {
    let out = kmy(&["dim", "-n", "4", "-l", "-1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["dim"], 14);
}

#[test]
fn height_of_the_example_diagram() {
    let out = kmy(&["height", "-n", "8", EXAMPLE]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn mul_reports_loops_and_product() {
    let out = kmy(&["mul", "-n", "2", "1-2 1'-2'", "1-2 1'-2'"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "d^1 1-2 1'-2'\n");
}

#[test]
fn basis_lists_canonical_diagrams() {
    let out = kmy(&["basis", "-n", "2", "-l", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.contains(&"1-1' 2-2'"));
    assert!(lines.contains(&"1-2 1'-2'"));
    assert!(lines.contains(&"1-2' 2-1'"));
}

#[test]
fn gram_det_is_canonical() {
    let out = kmy(&["gram-det", "-n", "4", "-l", "-1", "-p", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-d^2 + d^4\n");
}

#[test]
fn gram_json_matches_schema() {
    let out = kmy(&["gram", "-n", "4", "-l", "0", "-p", "2", "--lambda", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["p"], 2);
    assert_eq!(v["lambda"][0], 2);
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
    assert_eq!(v["entries"].as_array().unwrap().len(), 4);
}

#[test]
fn semisimple_verdict_and_exit_codes() {
    let out = kmy(&["semisimple", "-n", "4", "-l", "0", "--delta", "0+1i"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: semisimple"));

    let out = kmy(&["semisimple", "-n", "2", "-l", "-1", "--delta", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("verdict: not semisimple"));
}

#[test]
fn axioms_verified_small() {
    let out = kmy(&["axioms", "-n", "3", "-l", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("A1"));
    assert!(text.contains("A5"));
    assert!(!text.contains("Failed"));
}

#[test]
fn restrict_single_cell() {
    let out = kmy(&["restrict", "-n", "4", "-l", "0", "-p", "2", "--lambda", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Verified"));
}

#[test]
fn decompose_both_methods() {
    for method in ["search", "constructive"] {
        let out = kmy(&["decompose", "-n", "3", "-l", "-1", "1-2 3-1' 2'-3'", "--method", method]);
        assert!(out.status.success(), "{method} failed");
        let word = stdout(&out);
        assert!(word.split_whitespace().all(|t| t.starts_with('u') || t == "1"), "{word}");
    }
}

#[test]
fn specht_command() {
    let out = kmy(&["specht", "--lambda", "2,1", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["tabloids"], 3);
}

#[test]
fn usage_errors_exit_one() {
    // l out of range
    let out = kmy(&["dim", "-n", "4", "-l", "9"]);
    assert_eq!(out.status.code(), Some(1));
    // malformed diagram
    let out = kmy(&["height", "-n", "2", "1-1"]);
    assert_eq!(out.status.code(), Some(1));
    // delta must be exact
    let out = kmy(&["semisimple", "-n", "2", "-l", "0", "--delta", "0.5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_byte_stable() {
    let a = kmy(&["axioms", "-n", "4", "-l", "0", "--seed", "3", "--format", "json"]);
    let b = kmy(&["axioms", "-n", "4", "-l", "0", "--seed", "3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = kmy(&["basis", "-n", "4", "-l", "1"]);
    let b = kmy(&["basis", "-n", "4", "-l", "1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file_option() {
    let dir = std::env::temp_dir().join("kmy-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dim.txt");
    let out = kmy(&["dim", "-n", "3", "-l", "1", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "15\n");
}
