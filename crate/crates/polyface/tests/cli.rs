//! End-to-end tests of the command-line binary: JSON in/out, exit codes,
//! and determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn polyface(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_polyface"));
    cmd.args(args);
    cmd
}

fn run(args: &[&str]) -> Output {
    polyface(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = polyface(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary finishes")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON value")
}

const V_POSET: &str = r#"{"n":3,"covers":[[0,1],[0,2]]}"#;

#[test]
fn gen_named_emits_poset_json() {
    let out = run(&["gen", "named", "v"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), V_POSET);
}

#[test]
fn gen_named_family_requires_size() {
    let out = run(&["gen", "named", "chain"]);
    assert_eq!(out.status.code(), Some(2));
    let ok = run(&["gen", "named", "chain", "--k", "3"]);
    let json = stdout_json(&ok);
    assert_eq!(json["n"], 3);
}

#[test]
fn gen_all_streams_one_class_per_line() {
    let out = run(&["gen", "all", "--n", "4"]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = stdout.trim().lines().collect();
    assert_eq!(lines.len(), 16);
    for line in lines {
        let parsed: serde_json::Value = serde_json::from_str(line).expect("each line is JSON");
        assert_eq!(parsed["n"], 4);
    }
}

#[test]
fn gen_random_is_reproducible() {
    let a = run(&["gen", "random", "--n", "6", "--density", "0.4", "--seed", "11"]);
    let b = run(&["gen", "random", "--n", "6", "--density", "0.4", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn census_reports_the_v_poset_f_vector() {
    let out = run_with_stdin(&["census", "--polytope", "o"], V_POSET);
    let json = stdout_json(&out);
    assert_eq!(json["f0"], 5);
    assert_eq!(json["f1"], 8);
    assert_eq!(json["f2_tri"], 4);
    assert_eq!(json["f2_sq"], 1);
    assert_eq!(json["polytope"], "O");
}

#[test]
fn census_both_with_oracle_agrees() {
    let out = run_with_stdin(&["census", "--oracle"], V_POSET);
    let json = stdout_json(&out);
    for side in ["o", "c"] {
        assert_eq!(json[side]["match"], true, "side {side}");
        assert_eq!(json[side]["oracle"]["source"], "oracle");
        assert_eq!(json[side]["census"]["f0"], json[side]["oracle"]["f0"]);
    }
}

#[test]
fn oracle_subcommand_counts_faces_geometrically() {
    let out = run_with_stdin(&["oracle", "--polytope", "c"], V_POSET);
    let json = stdout_json(&out);
    assert_eq!(json["f2_tri"], 4);
    assert_eq!(json["f2_sq"], 1);
    assert_eq!(json["triangles"].as_array().map(Vec::len), Some(4));
}

#[test]
fn dot_prints_cover_arcs_only() {
    let chain3 = r#"{"n":3,"covers":[[0,1],[1,2]]}"#;
    let out = run_with_stdin(&["dot"], chain3);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("rankdir=BT"));
    assert!(text.contains("0 -> 1;") && text.contains("1 -> 2;"));
    // The composite relation 0 < 2 must not appear as an arc.
    assert!(!text.contains("0 -> 2"));
}

#[test]
fn bijection_matches_the_single_v_square() {
    let out = run_with_stdin(&["bijection"], V_POSET);
    let json = stdout_json(&out);
    assert_eq!(json["count_o"], 1);
    assert_eq!(json["count_c"], 1);
    assert_eq!(json["pairs"].as_array().map(Vec::len), Some(1));
    assert_eq!(json["roundtrip_failures"].as_array().map(Vec::len), Some(0));
}

#[test]
fn malformed_input_exits_with_usage_code() {
    for bad in ["not json at all", r#"{"n":3,"covers":[[0]]}"#, r#"{"n":2,"covers":[[0,1],[1,0]]}"#] {
        let out = run_with_stdin(&["census"], bad);
        assert_eq!(out.status.code(), Some(2), "input {bad:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_small_sweep_is_clean_and_deterministic() {
    let a = run(&["verify", "--max-n", "3", "--oracle-max-n", "3", "--jobs", "1"]);
    assert!(a.status.success(), "stderr: {}", String::from_utf8_lossy(&a.stderr));
    let json = stdout_json(&a);
    assert_eq!(json["posets_checked"], 8);
    assert_eq!(json["counterexamples"].as_array().map(Vec::len), Some(0));
    let b = run(&["verify", "--max-n", "3", "--oracle-max-n", "3", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout, "report must not depend on --jobs");
}

#[test]
fn verify_catches_an_injected_census_fault() {
    let out = run(&["verify", "--max-n", "3", "--oracle-max-n", "0", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("report still prints");
    let counterexamples = json["counterexamples"].as_array().expect("list");
    assert!(!counterexamples.is_empty());
    assert_eq!(counterexamples[0]["property"], "square_count_equal");
}

#[test]
fn enumeration_cap_applies_to_sweeps_and_generation() {
    let out = polyface(&["gen", "all", "--n", "5"])
        .env("POLYFACE_MAX_N", "4")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let out = polyface(&["verify", "--max-n", "5"])
        .env("POLYFACE_MAX_N", "4")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let out = polyface(&["verify", "--max-n", "4", "--oracle-max-n", "3"])
        .env("POLYFACE_MAX_N", "4")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
}

#[test]
fn gen_output_feeds_every_other_command() {
    let poset = run(&["gen", "named", "x5"]);
    let text = String::from_utf8_lossy(&poset.stdout).trim().to_string();
    for args in [
        vec!["census"],
        vec!["census", "--oracle"],
        vec!["oracle"],
        vec!["bijection"],
        vec!["dot"],
    ] {
        let out = run_with_stdin(&args, &text);
        assert!(
            out.status.success(),
            "{args:?} rejected generator output: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}
