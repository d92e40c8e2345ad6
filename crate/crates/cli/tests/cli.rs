use std::path::PathBuf;
use std::process::Command;

use hkinv::Rational;
use hkinv_cli::{parse_rational, run, EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn invoke(args: &[&str]) -> (u8, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("hkinv").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out, err) = invoke(&a);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn value(report: &Value, label: &str) -> String {
    report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["label"] == label)
        .unwrap_or_else(|| panic!("no entry `{label}`"))["value"]
        .as_str()
        .unwrap()
        .to_string()
}

#[test]
fn golden_reports() {
    for (args, file) in [
        (&["report-all", "--json"][..], "report_all.json"),
        (
            &["euler", "--case", "natural", "--json"][..],
            "euler_natural.json",
        ),
        (
            &["relations", "--q", "4", "--json"][..],
            "relations_q4.json",
        ),
        (&["lagrangian"][..], "lagrangian.txt"),
    ] {
        let (code, out, _) = invoke(args);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, golden(file), "golden mismatch for {args:?}");
    }
}

#[test]
fn report_all_values() {
    let r = json(&["report-all"]);
    let expected = [
        ("ring/h^6", "960"),
        ("ring/h^4c2", "1728"),
        ("ring/h^2c2^2", "4800"),
        ("ring/h^2c4", "1920"),
        ("ring/c2^3", "36800"),
        ("ring/c2c4", "14720"),
        ("relations/c4: coeff of h^4", "-10"),
        ("relations/c4: coeff of h^2c2", "20/3"),
        ("euler/natural: chi(X/i)", "1000"),
        ("euler/opposite: chi(fixed locus)", "-1536"),
        ("lagrangian/a (h^3)", "15/8"),
        ("lagrangian/b (hc2)", "-5/8"),
        ("lagrangian/opposite: 4c^2", "336"),
        ("lagrangian/sign-convention flag", "1"),
        ("fixed-locus/chi(O)", "-130"),
        ("fixed-locus/K^3", "5760"),
        ("walls/Re Z(s)/Z(v)", "1/2"),
        ("kuranishi/standard substitution", "1"),
        ("symprod/(theta-6eta)^3", "-36"),
        ("f3/h^{0,3} - h^{0,2}", "131"),
    ];
    for (label, v) in expected {
        assert_eq!(value(&r, label), v, "{label}");
    }
}

#[test]
fn values_round_trip() {
    let r = json(&["report-all"]);
    for e in r["results"].as_array().unwrap() {
        let s = e["value"].as_str().unwrap();
        let q: Rational = parse_rational(s).unwrap();
        assert_eq!(q.to_string(), s, "{}", e["label"]);
        assert!(!s.contains('.') && !s.contains(' '));
    }
}

#[test]
fn deterministic() {
    let a = invoke(&["report-all", "--json"]);
    let b = invoke(&["report-all", "--json"]);
    assert_eq!(a, b);
}

#[test]
fn parameter_overrides() {
    let r = json(&["relations", "--q", "2"]);
    assert_eq!(value(&r, "c4: coeff of h^4"), "-40");
    assert_eq!(value(&r, "c4: coeff of h^2c2"), "40/3");
    let r = json(&["lagrangian", "--degree", "72", "--q", "1"]);
    assert_eq!(value(&r, "a (h^3)"), "12");
    assert_eq!(value(&r, "b (hc2)"), "-1");
    assert_eq!(value(&r, "admissible case found"), "0");
    let r = json(&["walls", "--beta", "-3/2"]);
    assert_eq!(value(&r, "alpha^2"), "7/4");
    assert_eq!(value(&r, "Re Z(s)/Z(v)"), "1/3");
    let r = json(&["pell", "--bound", "2"]);
    assert_eq!(value(&r, "solutions"), "6");
    let r = json(&["symprod", "--genus", "8"]);
    assert_eq!(value(&r, "[E] coefficient"), "0");
}

#[test]
fn exit_codes() {
    assert_eq!(invoke(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["ring", "--q", "1/0"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["ring", "--q", "abc"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["euler", "--case", "sideways"]).0, EXIT_USAGE);
    assert_eq!(invoke(&[]).0, EXIT_USAGE);
    let (code, _, err) = invoke(&["ring", "--q", "-4"]);
    assert_eq!(code, EXIT_COMPUTATION);
    assert!(err.contains("positive"), "{err}");
    assert_eq!(invoke(&["walls", "--beta", "0"]).0, EXIT_COMPUTATION);
    assert_eq!(invoke(&["symprod", "--genus", "2"]).0, EXIT_COMPUTATION);
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("euler.json");
    let (code, out, _) = invoke(&["euler", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value(&r, "natural: chi(fixed locus)"), "-1200");
}

#[test]
fn binary_matches_library() {
    let output = Command::new(env!("CARGO_BIN_EXE_hkinv"))
        .args(["report-all", "--json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        golden("report_all.json")
    );
    let bad = Command::new(env!("CARGO_BIN_EXE_hkinv"))
        .arg("nope")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(i32::from(EXIT_USAGE)));
}
