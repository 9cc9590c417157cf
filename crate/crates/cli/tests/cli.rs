//! End-to-end tests for the binary: golden outputs for the four-team
//! example (values hand-checked against the library's unit tests), exit
//! codes, determinism, and the stdin plumbing.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_leaguerate");
const EXAMPLE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/example4.csv");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("binary runs")
}

#[test]
fn golden_rate_history() {
    let got = run_ok(&["rate", "--method", "tmassey", "--input", EXAMPLE, "--upto", "3"]);
    assert_eq!(got, include_str!("golden/rate_tmassey_upto3.csv"));
}

#[test]
fn golden_trace() {
    let got = run_ok(&["trace", "--team", "A", "--input", EXAMPLE, "--upto", "3"]);
    assert_eq!(got, include_str!("golden/trace_a_upto3.csv"));
}

#[test]
fn golden_spectral() {
    let got = run_ok(&["spectral", "--input", EXAMPLE]);
    assert_eq!(got, include_str!("golden/spectral.csv"));
}

#[test]
fn golden_evaluate() {
    let got = run_ok(&["evaluate", "--method", "tmassey", "--input", EXAMPLE]);
    assert_eq!(got, include_str!("golden/evaluate_tmassey.csv"));
}

#[test]
fn identical_runs_are_byte_identical() {
    let args =
        ["simulate", "--teams", "6", "--noise", "1.5", "--seed", "9", "--double"];
    assert_eq!(run_ok(&args), run_ok(&args));
    let args = ["rate", "--method", "elo", "--input", EXAMPLE, "--format", "json"];
    assert_eq!(run_ok(&args), run_ok(&args));
}

#[test]
fn simulate_pipes_into_rate() {
    let season = run_ok(&["simulate", "--teams", "4", "--seed", "7"]);
    let out = run_with_stdin(&["rate", "--method", "massey", "--input", "-"], &season);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // noiseless margins reproduce the evenly spaced strengths exactly
    assert!(text.contains("T1,1.500000"), "{text}");
    assert!(text.contains("T4,-1.500000"), "{text}");
}

#[test]
fn exit_codes_by_failure_class() {
    let io = run(&["rate", "--method", "massey", "--input", "/nonexistent.csv"]);
    assert_eq!(io.status.code(), Some(1));

    let usage = run(&["rate", "--method", "massey", "--input", EXAMPLE, "--bogus"]);
    assert_eq!(usage.status.code(), Some(2));
    let config =
        run(&["rate", "--method", "massey", "--input", EXAMPLE, "--alpha", "0.3"]);
    assert_eq!(config.status.code(), Some(2));

    let bad = "round,date,home,away,home_goals,away_goals\n1,,A,B,x,0\n";
    let parse = run_with_stdin(&["rate", "--method", "massey", "--input", "-"], bad);
    assert_eq!(parse.status.code(), Some(3));

    let data = run(&[
        "trajectory", "--method", "tmassey", "--teams", "A,Nobody", "--input", EXAMPLE,
    ]);
    assert_eq!(data.status.code(), Some(4));

    let split = "round,date,home,away,home_goals,away_goals\n1,,A,B,1,0\n1,,C,D,1,0\n";
    let numeric = run_with_stdin(&["rate", "--method", "massey", "--input", "-"], split);
    assert_eq!(numeric.status.code(), Some(5));
    let msg = String::from_utf8_lossy(&numeric.stderr);
    assert!(msg.contains("disconnected"), "{msg}");
}

#[test]
fn json_outputs_parse() {
    for args in [
        vec!["rate", "--method", "massey", "--input", EXAMPLE, "--format", "json"],
        vec!["rate", "--method", "tmassey", "--input", EXAMPLE, "--format", "json"],
        vec!["trace", "--team", "A", "--input", EXAMPLE, "--format", "json"],
        vec!["spectral", "--input", EXAMPLE, "--format", "json"],
        vec!["evaluate", "--all-methods", "--input", EXAMPLE, "--format", "json"],
        vec!["calibrate", "--method", "elo", "--input", EXAMPLE, "--format", "json"],
        vec![
            "trajectory", "--method", "tmassey", "--teams", "A", "--input", EXAMPLE,
            "--format", "json",
        ],
        vec!["simulate", "--teams", "4", "--format", "json"],
    ] {
        let text = run_ok(&args);
        serde_json::from_str::<serde_json::Value>(&text)
            .unwrap_or_else(|e| panic!("{args:?} emitted invalid json: {e}"));
    }
}

#[test]
fn output_dir_env_resolves_relative_paths() {
    let dir = std::env::temp_dir().join(format!("leaguerate-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = Command::new(BIN)
        .args(["rate", "--method", "tmassey", "--input", EXAMPLE, "--output", "r.csv"])
        .env("LEAGUERATE_OUT_DIR", &dir)
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let written = std::fs::read_to_string(dir.join("r.csv")).expect("file written");
    assert!(written.starts_with("team,round,rating,games\n"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn fixture_format_with_round_inference() {
    let fixture = "\
Date,HomeTeam,AwayTeam,FTHG,FTAG
2015-08-22,Juventus,Udinese,0,1
2015-08-22,Milan,Fiorentina,2,0
2015-08-29,Udinese,Milan,2,3
2015-08-29,Fiorentina,Juventus,1,1
";
    let out = run_with_stdin(
        &["rate", "--method", "tmassey", "--input", "-", "--infer-rounds"],
        fixture,
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Juventus,2,-1.500000,2"), "{text}");
}
