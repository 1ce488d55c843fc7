use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn carlitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_carlitz"))
        .args(args)
        .env_remove("CARLITZ_R")
        .env_remove("CARLITZ_PREC")
        .env_remove("CARLITZ_FORMAT")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn zeta_is_deterministic_json() {
    let args = ["zeta", "--r", "3", "--index", "2", "--prec", "20"];
    let a = carlitz(&args);
    let b = carlitz(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["route"], "gamma_0");
    assert_eq!(v["value"]["uniformizer"], "1/θ");
    assert_eq!(v["value"]["lead"], 0);
    assert_eq!(v["value"]["e_ram"], 1);
    assert_eq!(v["value"]["prec"], 20);
    // ζ_A(2) = 1 + θ^{-6} + … for r = 3
    let coeffs = v["value"]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs[0], "1");
    assert_eq!(coeffs[6], "1");
    assert!(coeffs[1..6].iter().all(|c| c == "0"));
}

#[test]
fn zeta_u_series() {
    let out = carlitz(&[
        "zeta-u", "--r", "3", "--index", "2,1", "--nmax", "2", "--prec", "25",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["index"], serde_json::json!([2, 1]));
    let g = v["gammas"].as_array().unwrap();
    assert_eq!(g.len(), 3);
    assert_eq!(g[1]["u_exponent"], 2);
    assert_eq!(v["spot_checked"], serde_json::json!([0, 2]));
}

#[test]
fn finite_zeta_csv() {
    let out = carlitz(&[
        "finite-zeta",
        "--r",
        "2",
        "--index",
        "1",
        "--dmax",
        "3",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        rd.headers().unwrap(),
        vec!["v", "v_coeffs", "value", "value_coeffs"]
    );
    let rows: Vec<csv::StringRecord> = rd.records().map(|r| r.unwrap()).collect();
    // monic irreducibles of degree ≤ 3 over 𝔽_2
    assert_eq!(rows.len(), 5);
    assert_eq!(&rows[0][0], "θ");
    assert_eq!(&rows[0][1], "0 1");
}

#[test]
fn verify_examples_pass() {
    let out = carlitz(&[
        "verify",
        "--suite",
        "finite-euler-carlitz",
        "--r",
        "3",
        "--deg-max",
        "3",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["cases"].as_array().unwrap().len(), 39 * 3);
    assert!(v["cases"][0].get("elapsed_ms").is_none());

    let out = carlitz(&[
        "verify",
        "--suite",
        "shuffle-hom",
        "--r",
        "2",
        "--weight-max",
        "5",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .ends_with("suite shuffle-hom: PASS (325 cases, 0 failed)\n"));
}

#[test]
fn verify_reports_failures_with_status() {
    let out = carlitz(&["verify", "--suite", "vanishing-reven", "--r", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["pass"], false);
    let failed: Vec<&Value> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed
        .iter()
        .all(|c| c["inputs"]["v"].as_str().unwrap().starts_with('θ')));
    assert!(failed[0]["detail"].as_str().unwrap().contains("divides s"));
}

#[test]
fn unknown_suite_is_an_error_record() {
    let out = carlitz(&["verify", "--suite", "unknown"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "UnknownSuite");
    assert!(out.stdout.is_empty());
}

#[test]
fn timings_only_on_request() {
    let out = carlitz(&["verify", "--suite", "t-expansion", "--timings"]);
    assert!(out.status.success());
    assert!(json(&out)["cases"][0]["elapsed_ms"].is_number());
}

#[test]
fn config_file_env_and_flags() {
    let path = scratch("carlitz.toml");
    std::fs::write(&path, "r = 2\nprec = 12\nformat = \"csv\"\n").unwrap();
    let p = path.to_str().unwrap();

    let out = carlitz(&["zeta", "--index", "1", "--config", p]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("index,prec,cutoff,value\n(1),12,"));

    let out = Command::new(env!("CARGO_BIN_EXE_carlitz"))
        .args(["zeta", "--index", "1", "--config", p])
        .env("CARLITZ_PREC", "15")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("(1),15,"));

    let out = carlitz(&[
        "zeta", "--index", "1", "--config", p, "--prec", "9", "--format", "json",
    ]);
    let v = json(&out);
    assert_eq!((v["r"].as_u64(), v["prec"].as_i64()), (Some(2), Some(9)));
}

#[test]
fn output_file_and_bad_input() {
    let path = scratch("texp.json");
    let out = carlitz(&[
        "t-expansion",
        "--index",
        "2,1",
        "--terms",
        "10",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 10);
    assert_eq!(v["coeffs"][0], serde_json::json!([]));

    let out = carlitz(&["zeta", "--index", "1", "--r", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "InvalidField");
}
