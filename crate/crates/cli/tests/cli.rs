use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tetmedial(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tetmedial"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn tetmedial");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const MIXED: &str = "id,a,b,c,d,e,f\nreg,1,1,1,1,1,1\nbad,1,1,1,1,1,10\n";

#[test]
fn compute_emits_one_line_per_record() {
    let out = tetmedial(&["compute"], MIXED);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with(r#"{"id":"reg""#));
    assert!(lines[1].contains(r#""error":"triangle inequality fails on face aef, cdf""#));
    assert!(text.ends_with('\n'));
}

#[test]
fn strict_mode_exits_two() {
    let out = tetmedial(&["compute", "--strict"], MIXED);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out).lines().count(), 2);
    let out = tetmedial(&["validate", "--strict"], "a,b,c,d,e,f\n1,1,1,1,1,1\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn parse_failure_exits_one() {
    let out = tetmedial(&["compute"], "a,b,c,d,e,f\n1,1,1,1,1\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("record 1"));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_flags_exit_one() {
    assert_eq!(
        tetmedial(&["compute", "--pair", "xy"], "").status.code(),
        Some(1)
    );
    assert_eq!(tetmedial(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(
        tetmedial(&["selftest", "--count", "0"], "").status.code(),
        Some(1)
    );
    assert_eq!(tetmedial(&["--help"], "").status.code(), Some(0));
}

#[test]
fn json_input_and_single_pair() {
    let src = r#"[{"id":"t1","edges":[1,1.4142135624,1.4142135624,1,1.4142135624,1]}]"#;
    let out = tetmedial(&["compute", "--format", "json", "--pair", "de"], src);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["id"], "t1");
    let de = v["medial_areas"]["de"].as_f64().unwrap();
    assert!((de - 2f64.sqrt() / 4.0).abs() < 1e-9);
    assert!(v["medial_areas"].get("ac").is_none());
}

#[test]
fn validate_reports_flat_input() {
    let out = tetmedial(
        &["validate"],
        "a,b,c,d,e,f\n1.4142135623730951,1,1.4142135623730951,1,1,1\n",
    );
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["status"], "degenerate");
    assert_eq!(v["volume"], 0.0);
    assert_eq!(v["face_ok"]["cdf"], true);
}

#[test]
fn files_in_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.csv");
    let output = dir.path().join("out.jsonl");
    std::fs::write(&input, "a,b,c,d,e,f\r\n2,2,2,2,2,2\r\n").unwrap();
    let out = tetmedial(
        &[
            "compute",
            "--input",
            input.to_str().unwrap(),
            "--output",
            output.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&output).unwrap();
    assert!(written.contains(r#""medial_areas":{"de":1.0,"ac":1.0,"bf":1.0}"#));
}

#[test]
fn selftest_failure_exits_three() {
    let out = tetmedial(&["selftest", "--count", "20", "--tolerance", "0"], "");
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(!v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn selftest_is_repeatable() {
    let a = tetmedial(&["selftest", "--seed", "7", "--count", "300"], "");
    let b = tetmedial(&["selftest", "--seed", "7", "--count", "300"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
