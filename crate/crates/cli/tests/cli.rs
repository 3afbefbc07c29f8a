// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn geointerp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geointerp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn circle(dir: &Path, samples: usize) -> std::path::PathBuf {
    let path = dir.join("circle.json");
    let spec = format!(r#"{{"generator":"circle","samples":{samples}}}"#);
    let out = geointerp(&["generate", "--spec", &spec, "--out", arg(&path)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn interpolation_keeps_required_times() {
    let dir = tempfile::tempdir().unwrap();
    let c = circle(dir.path(), 512);
    let poly = dir.path().join("poly.json");
    let svg = dir.path().join("poly.svg");
    let out = geointerp(&[
        "interpolate",
        "--in",
        arg(&c),
        "--epsilon",
        "0.1",
        "--required",
        "0.25,0.5",
        "--out",
        arg(&poly),
        "--svg",
        arg(&svg),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let summary = stdout_json(&out);
    assert!(summary["mesh"].as_f64().unwrap() < 0.1);

    let file: Value = serde_json::from_str(&std::fs::read_to_string(&poly).unwrap()).unwrap();
    let times: Vec<f64> = file["times"].as_array().unwrap().iter().map(|t| t.as_f64().unwrap()).collect();
    assert!(times.contains(&0.25) && times.contains(&0.5));
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<svg"));

    let verify = geointerp(&["verify", "--in", arg(&poly)]);
    assert_eq!(verify.status.code(), Some(0));
    assert_eq!(stdout_json(&verify)["simple"], Value::Bool(true));
}

#[test]
fn bowtie_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bowtie.json");
    std::fs::write(
        &path,
        r#"{"space":"euclidean","dim":2,"closed":true,"times":[0,0.25,0.5,0.75,1],
            "points":[[0,0],[1,1],[1,0],[0,1],[0,0]]}"#,
    )
    .unwrap();
    let out = geointerp(&["verify", "--in", arg(&path)]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["simple"], Value::Bool(false));
    assert_eq!(v["violation"]["first"], 0);
    assert_eq!(v["violation"]["second"], 2);
}

#[test]
fn signature_area_word_on_a_circle() {
    let dir = tempfile::tempdir().unwrap();
    let c = circle(dir.path(), 4096);
    let out = geointerp(&["signature", "--in", arg(&c), "--word", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let value = stdout_json(&out)["value"].as_f64().unwrap();
    // polygon inscribed in the unit circle: area of the regular 4096-gon
    let n = 4096.0;
    let oracle = 0.5 * n * (2.0 * PI / n).sin();
    assert!((value - oracle).abs() < 1e-9, "{value} vs {oracle}");
}

#[test]
fn green_and_compare_report_json() {
    let dir = tempfile::tempdir().unwrap();
    let c = circle(dir.path(), 512);
    let out = geointerp(&["green", "--in", arg(&c), "--f", "-y", "--g", "x", "--epsilons", "0.2,0.1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);

    let out = geointerp(&["compare", "--a", arg(&c), "--b", arg(&c)]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["moments_equal"], Value::Bool(true));
    assert_eq!(v["report"]["reparam"]["matched"], Value::Bool(true));
}

#[test]
fn floats_are_rounded_to_twelve_digits() {
    let dir = tempfile::tempdir().unwrap();
    let c = circle(dir.path(), 256);
    let out = geointerp(&["pvar", "--in", arg(&c), "--p", "2.5"]);
    assert_eq!(out.status.code(), Some(0));
    let value = stdout_json(&out)["value"].as_f64().unwrap();
    let rounded: f64 = format!("{value:.11e}").parse().unwrap();
    assert_eq!(value, rounded);
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = geointerp(&["verify", "--in", arg(&path)]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].is_string() && err["message"].is_string());

    let missing = dir.path().join("missing.json");
    let out = geointerp(&["pvar", "--in", arg(&missing), "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
}
