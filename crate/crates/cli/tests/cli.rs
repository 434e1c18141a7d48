use std::io::Write;
use std::process::{Command, Output, Stdio};

use hecke_core::multiplicative::CmReport;
use hecke_core::spectral::EigenReport;
use hecke_core::suites::{SuiteReport, SUITES};
use hecke_core::{GaussianRational, HypSeries, TruncatedSeries};
use serde_json::Value;

const LI2: &str = r#"{"prefactor":"1","exponent":1,"upper":["1","1","1"],"lower":["2","2"],"scale":"1"}"#;
const X2_2F1: &str = r#"{"prefactor":"1","exponent":2,"upper":["1/3","2"],"lower":["5/2"],"scale":"1"}"#;

fn hecke(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = hecke(args, stdin);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str], stdin: &str) -> Option<i32> {
    hecke(args, stdin).status.code()
}

fn q(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

fn qs(xs: &[&str]) -> Vec<GaussianRational> {
    xs.iter().map(|x| q(x)).collect()
}

#[test]
fn expand_dilogarithm() {
    let series: TruncatedSeries = serde_json::from_str(&ok(&["expand", "--order", "4"], LI2)).unwrap();
    assert_eq!(series.coeffs(), qs(&["0", "1", "1/4", "1/9", "1/16"]).as_slice());
}

#[test]
fn expand_reads_a_file_argument() {
    let path = std::env::temp_dir().join(format!("hecke-li2-{}.json", std::process::id()));
    std::fs::write(&path, LI2).unwrap();
    let from_file = ok(&["expand", "--order", "6", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(from_file, ok(&["expand", "--order", "6", "-"], LI2));
}

#[test]
fn expand_zero_prefactor() {
    let doc = r#"{"prefactor":"0","exponent":0,"upper":["1/2"],"lower":[],"scale":"3"}"#;
    let series: TruncatedSeries = serde_json::from_str(&ok(&["expand", "--order", "5"], doc)).unwrap();
    assert_eq!(series, TruncatedSeries::zeros(5));
}

#[test]
fn parse_errors_exit_with_2() {
    let doc = r#"{"prefactor":"1//2","exponent":0,"upper":[],"lower":[],"scale":"1"}"#;
    assert_eq!(code(&["expand", "--order", "3"], doc), Some(2));
    assert_eq!(code(&["expand", "--order", "3"], "not json"), Some(2));
    assert_eq!(code(&["expand", "--order", "3"], r#"{"prefactor":"1"}"#), Some(2));
    assert_eq!(code(&["apply", "--n", "0"], LI2), Some(2));
    assert_eq!(code(&["cm", "--upper", "1,2i"], ""), Some(2));
    assert_eq!(code(&["verify", "--suite", "nonsense"], ""), Some(2));
}

#[test]
fn illegal_parameters_exit_with_3() {
    let doc = r#"{"prefactor":"1","exponent":0,"upper":["1"],"lower":["-3"],"scale":"1"}"#;
    assert_eq!(code(&["expand", "--order", "3"], doc), Some(3));
    assert_eq!(code(&["classify"], doc), Some(3));
    assert_eq!(code(&["cm", "--upper", "1", "--lower", "0"], ""), Some(3));
    assert_eq!(code(&["cm", "--upper", "0"], ""), Some(3));
}

#[test]
fn apply_dilogarithm_symbolically() {
    let doc: Value = serde_json::from_str(&ok(&["apply", "--n", "2", "--mode", "symbolic", "--order", "30"], LI2)).unwrap();
    let canonical: HypSeries = serde_json::from_value(doc["canonical"].clone()).unwrap();
    assert_eq!(canonical.prefactor(), &q("1/4"));
    assert_eq!(canonical.upper(), qs(&["1", "1", "1"]).as_slice());
    assert_eq!(canonical.lower(), qs(&["2", "2"]).as_slice());
    assert_eq!(doc["verification"]["matches"], Value::Bool(true));
    assert_eq!(doc["verification"]["first_mismatch"], Value::Null);
}

#[test]
fn apply_divisible_exponent_image() {
    let doc: Value = serde_json::from_str(&ok(&["apply", "--n", "2"], X2_2F1)).unwrap();
    let image: HypSeries = serde_json::from_value(doc["image"].clone()).unwrap();
    assert_eq!(image.exponent(), 1);
    assert_eq!(image.upper(), qs(&["1/6", "2/3", "1", "3/2"]).as_slice());
    assert_eq!(image.lower(), qs(&["5/4", "7/4", "1/2"]).as_slice());
}

#[test]
fn apply_with_n_one_is_the_identity() {
    let input: HypSeries = serde_json::from_str(X2_2F1).unwrap();
    let doc: Value = serde_json::from_str(&ok(&["apply", "--n", "1"], X2_2F1)).unwrap();
    let image: HypSeries = serde_json::from_value(doc["image"].clone()).unwrap();
    assert_eq!(image, input);
    let numeric: TruncatedSeries =
        serde_json::from_str(&ok(&["apply", "--n", "1", "--mode", "numeric", "--order", "12"], X2_2F1)).unwrap();
    assert_eq!(numeric, input.expand(12));
}

#[test]
fn apply_numeric_decimates() {
    let numeric: TruncatedSeries =
        serde_json::from_str(&ok(&["apply", "--n", "3", "--mode", "numeric", "--order", "10"], LI2)).unwrap();
    let expected: Vec<_> = (0..=10i64)
        .map(|k| if k == 0 { q("0") } else { GaussianRational::ratio(1, 9 * k * k) })
        .collect();
    assert_eq!(numeric.coeffs(), expected.as_slice());
}

#[test]
fn classify_dilogarithm() {
    let report: EigenReport = serde_json::from_str(&ok(&["classify"], LI2)).unwrap();
    assert!(report.is_eigen());
    assert_eq!(report.exponent, Some(-2));
}

#[test]
fn cm_example() {
    let report: CmReport =
        serde_json::from_str(&ok(&["cm", "--upper", "2,2", "--lower", "1,1", "--terms", "60"], "")).unwrap();
    assert!(report.is_cm());
    assert_eq!(report.exponent, Some(2));
    let report: CmReport = serde_json::from_str(&ok(&["cm", "--upper", "3", "--lower", "2"], "")).unwrap();
    assert_eq!(report.witness, Some((2, 2)));
}

#[test]
fn verify_spectrum_seed_7() {
    let report: SuiteReport = serde_json::from_str(&ok(&["verify", "--suite", "spectrum", "--seed", "7"], "")).unwrap();
    assert!(report.passed());
}

#[test]
fn every_suite_is_reachable() {
    for suite in SUITES {
        let report: SuiteReport = serde_json::from_str(&ok(&["verify", "--suite", suite, "--seed", "3"], "")).unwrap();
        assert!(report.passed(), "{suite}: {:?}", report.failure);
    }
}

#[test]
fn outputs_round_trip() {
    let text = ok(&["expand", "--order", "9"], X2_2F1);
    let series: TruncatedSeries = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&series).unwrap(), text.trim_end());

    let text = ok(&["classify"], LI2);
    let report: EigenReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap(), text.trim_end());

    let text = ok(&["cm", "--upper", "1,1", "--lower", "2,2"], "");
    let report: CmReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap(), text.trim_end());

    let doc: Value = serde_json::from_str(&ok(&["apply", "--n", "3"], X2_2F1)).unwrap();
    let image: HypSeries = serde_json::from_value(doc["image"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&image).unwrap(), doc["image"]);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["apply", "--n", "3", "--order", "20"][..],
        &["classify"][..],
        &["verify", "--suite", "oracle", "--seed", "11"][..],
    ] {
        assert_eq!(ok(args, X2_2F1), ok(args, X2_2F1));
    }
}
