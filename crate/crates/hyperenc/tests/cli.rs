//! End-to-end tests of the `hyperenc` binary: JSON output, exit codes, and
//! spec-file round trips.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperenc"))
}

fn run(args: &[&str]) -> (String, i32) {
    let out = bin().args(args).output().expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).trim().to_string(),
        out.status.code().unwrap(),
    )
}

#[test]
fn encode_success_and_exit_codes() {
    let (stdout, code) = run(&[
        "encode", "--family", "hessian", "--q", "5", "--d", "3", "--t", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, r#"{"x":"1","y":"4"}"#);

    // t = 1/2 is excluded for quasiquadratic curves
    let (stdout, code) = run(&[
        "encode",
        "--family",
        "quasiquadratic",
        "--q",
        "5",
        "--d",
        "3",
        "--a",
        "1",
        "--t",
        "3",
    ]);
    assert_eq!(code, 2);
    assert_eq!(stdout, r#"{"error":"not_encodable","stage":"t=1/2"}"#);

    // malformed hex
    let (_, code) = run(&[
        "encode", "--family", "hessian", "--q", "5", "--d", "3", "--t", "zz",
    ]);
    assert_eq!(code, 1);

    // degenerate curve
    let (stdout, code) = run(&[
        "encode", "--family", "hessian", "--q", "5", "--d", "1", "--t", "0",
    ]);
    assert_eq!(code, 1);
    assert!(stdout.contains("degenerate"));
}

#[test]
fn spec_file_roundtrip() {
    let dir = std::env::temp_dir().join(format!("hyperenc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("curve.json");
    let doc = r#"{"family":"genus2type1","q":"11","a":"1","b":"1"}"#;
    std::fs::write(&path, doc).unwrap();

    let (stdout, code) = run(&["encode", "--spec", path.to_str().unwrap(), "--t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, r#"{"x":"7","y":"5"}"#);

    // the embedded curve document round-trips bit-exactly through reports
    let (stdout, code) = run(&[
        "census",
        "--family",
        "genus2type1",
        "--q",
        "11",
        "--a",
        "1",
        "--b",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains(&format!("\"curve\":{doc}")), "{stdout}");

    // the same census driven by the spec file
    let (from_file, code) = run(&["census", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut a: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(&from_file).unwrap();
    a["elapsed_ms"] = serde_json::json!(0);
    b["elapsed_ms"] = serde_json::json!(0);
    assert_eq!(a, b);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn census_field_cap() {
    let (stdout, code) = run(&["census", "--family", "quasiquadratic", "--q", "1048583"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("field too large"), "{stdout}");
}

#[test]
fn census_sweep_and_out_file() {
    let dir = std::env::temp_dir().join(format!("hyperenc-census-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (stdout, code) = run(&[
        "census",
        "--family",
        "hessian",
        "--qs",
        "5,11",
        "--workers",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["pass"], serde_json::json!(true));
    assert_eq!(v["rows"].as_array().unwrap().len(), 4 + 10);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn census_pinned_report_with_image() {
    let (stdout, code) = run(&[
        "census",
        "--family",
        "hessian",
        "--q",
        "5",
        "--d",
        "0",
        "--include-image",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["image_size"], serde_json::json!(2));
    assert_eq!(v["excluded"][0]["t"], serde_json::json!("3"));
    let image = v["image"].as_array().unwrap();
    assert_eq!(image.len(), 2);
    assert_eq!(image[0]["multiplicity"], serde_json::json!(2));
}

#[test]
fn hash_is_deterministic_and_reads_stdin() {
    let args = [
        "hash",
        "--family",
        "demoivre",
        "--q",
        "53",
        "--d",
        "5",
        "--a",
        "1",
        "--b",
        "1",
        "--message",
        "user@example.com",
    ];
    let (a, code) = run(&args);
    assert_eq!(code, 0);
    let (b, _) = run(&args);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(v["counter"].as_u64().unwrap() < 256);

    // same message via stdin
    let mut child = bin()
        .args([
            "hash",
            "--family",
            "demoivre",
            "--q",
            "53",
            "--d",
            "5",
            "--a",
            "1",
            "--b",
            "1",
            "--message",
            "-",
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"user@example.com")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), a);
}

#[test]
fn divisor_outputs_points_on_curve() {
    let (stdout, code) = run(&[
        "divisor",
        "--family",
        "quasiquadratic",
        "--q",
        "41",
        "--d",
        "3",
        "--a",
        "2",
        "--message",
        "hello",
    ]);
    assert_eq!(code, 0, "{stdout}");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let r = v["r"].as_u64().unwrap();
    assert!((1..=2).contains(&r));
    assert_eq!(v["genus"], serde_json::json!(2));
    assert_eq!(v["points"].as_array().unwrap().len() as u64, r);

    // hessian cubics have no hyperelliptic model
    let (_, code) = run(&[
        "divisor",
        "--family",
        "hessian",
        "--q",
        "5",
        "--d",
        "0",
        "--message",
        "x",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn invariants_outputs() {
    let (stdout, code) = run(&["invariants", "--family", "hessian", "--q", "5", "--d", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["j"], serde_json::json!("2"));

    let (stdout, code) = run(&[
        "invariants",
        "--family",
        "genus2type2",
        "--q",
        "251",
        "--lambda",
        "1",
        "--mu",
        "1",
        "--a",
        "1",
        "--v",
        "2",
        "--w",
        "3",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["locus_residual"], serde_json::json!("0"));
    for key in ["J2", "J4", "J6", "J8", "J10"] {
        assert!(v[key].is_string());
    }

    let (_, code) = run(&[
        "invariants",
        "--family",
        "quasiquadratic",
        "--q",
        "5",
        "--d",
        "3",
        "--a",
        "1",
    ]);
    assert_eq!(code, 1);
}
