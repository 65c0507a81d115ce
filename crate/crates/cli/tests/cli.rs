use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster-scatter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn seed_arg(name: &str) -> String {
    fixture(&format!("seeds/{name}.json")).display().to_string()
}

fn action_arg(name: &str) -> String {
    fixture(&format!("actions/{name}.json"))
        .display()
        .to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn a2_scatter_has_five_walls() {
    let out = run(&["scatter", "--seed-file", &seed_arg("a2")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["walls"].as_array().unwrap().len(), 5);
}

#[test]
fn kronecker_falls_back_to_rank2_completion() {
    let out = run(&[
        "scatter",
        "--seed-file",
        &seed_arg("kronecker2"),
        "--order",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank-2 completion"));
}

#[test]
fn infinite_rank3_scatter_is_an_input_error() {
    let out = run(&[
        "scatter",
        "--seed-file",
        &seed_arg("markov_folded"),
        "--depth",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn missing_seed_file_is_an_input_error() {
    let out = run(&["scatter", "--seed-file", "/nonexistent/seed.json"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["scatter"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn a3_fold_matches_direct_diagram() {
    let out = run(&[
        "fold",
        "--seed-file",
        &seed_arg("a3"),
        "--action-file",
        &action_arg("a3_swap13"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["equivalent"], Value::Bool(true));
    assert_eq!(v["report"]["loop_failures"], 0);
    assert_eq!(v["folded_seed"]["rank"], 2);
}

#[test]
fn inadmissible_fold_is_an_input_error() {
    let out = run(&[
        "fold",
        "--seed-file",
        &seed_arg("a2"),
        "--action-file",
        &action_arg("a2_swap12"),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("admissible"));
}

#[test]
fn s24_dt_has_nine_term_f_polynomials() {
    let out = run(&[
        "dt",
        "--seed-file",
        &seed_arg("s24"),
        "--action-file",
        &action_arg("s24_antipodal"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 6);
    for g in gens {
        assert_eq!(g["F"].as_array().unwrap().len(), 9);
    }
    let folded = v["folded"].as_array().unwrap();
    assert_eq!(folded.len(), 3);
    for g in folded {
        assert_eq!(g["F"].as_array().unwrap().len(), 7);
        assert_eq!(g["G"].as_array().unwrap().len(), 7);
    }
}

#[test]
fn dt_without_sequence_is_an_input_error() {
    let out = run(&["dt", "--seed-file", &seed_arg("markov_folded")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn dt_takes_an_explicit_sequence() {
    let out = run(&["dt", "--seed-file", &seed_arg("a2"), "--sequence", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["sequence"], serde_json::json!([1, 2]));
}

#[test]
fn theta_on_a2() {
    let out = run(&[
        "theta",
        "--seed-file",
        &seed_arg("a2"),
        "--p0=-1,0,0,0",
        "--point",
        "7,5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!json(&out)["poly"].as_array().unwrap().is_empty());
}

#[test]
fn theta_on_subseed_embeds() {
    let out = run(&[
        "theta",
        "--seed-file",
        &seed_arg("markov_folded"),
        "--subseed",
        "1,2",
        "--p0=1,-1,0,0",
        "--point",
        "3,11",
        "--order",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["embedded"]["indices"], serde_json::json!([1, 2]));
    assert_eq!(v["embedded"]["p0"].as_array().unwrap().len(), 6);
}

#[test]
fn theta_on_rank3_needs_subseed() {
    let out = run(&[
        "theta",
        "--seed-file",
        &seed_arg("markov_folded"),
        "--p0=1,0,0,0",
        "--point",
        "3,11",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "fold",
        "--seed-file",
        &seed_arg("a3"),
        "--action-file",
        &action_arg("a3_swap13"),
        "--sample-seed",
        "17",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("cluster-scatter-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a2.json");
    let out = run(&[
        "scatter",
        "--seed-file",
        &seed_arg("a2"),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["walls"].as_array().unwrap().len(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn render_rank2_and_rank3() {
    let out = run(&["render", "--seed-file", &seed_arg("a2")]);
    assert_eq!(out.status.code(), Some(0));
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    // two axes and five walls
    assert_eq!(svg.matches("<line").count(), 2 + 5);

    let out = run(&[
        "render",
        "--seed-file",
        &seed_arg("markov_folded"),
        "--depth",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.matches("<line").count() > 3);
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn bad_plane_is_an_input_error() {
    let out = run(&["render", "--seed-file", &seed_arg("a3"), "--plane", "1,0,1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn order_must_be_positive() {
    let out = run(&["scatter", "--seed-file", &seed_arg("a2"), "--order", "0"]);
    assert_eq!(out.status.code(), Some(3));
}
