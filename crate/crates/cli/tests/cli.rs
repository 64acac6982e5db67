use std::path::PathBuf;
use std::process::Command;

use polystab::{Rational, RationalPolynomial};
use polystab_cli::parse::parse_polynomial;
use proptest::prelude::*;
use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_polystab"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8"),
        String::from_utf8(out.stderr).expect("utf8"),
    )
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(report: &Value) {
    let v = schema();
    let errors: Vec<String> = v.iter_errors(report).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "{errors:#?}\n{report:#}");
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("cauchy_neg_half_line", &["cauchy", "--num", "1", "--den", "x^2 - 1", "--from", "-inf", "--to", "0", "--json"]),
    ("cauchy_pos_half_line", &["cauchy", "--num", "1", "--den", "x^2 - 1", "--from", "0", "--to", "+inf", "--json"]),
    ("cauchy_real_line", &["cauchy", "--num", "1", "--den", "x^2 - 1", "--json"]),
    ("quintic_four_right", &["analyze", "--poly", "x^5 - x^4 + 3x^3 - 4x + 1", "--json"]),
    ("quartic_loose_bound", &["analyze", "--poly", "x^4 + 2x^3 + 23x^2 + 94x + 130", "--json"]),
    ("degenerate_family", &["signs", "--poly", "x^4 - 1", "--json"]),
    ("shifted_pair_critical", &["analyze", "--poly", "x^5 + 5/2 x^4 + 10x^3 - 54", "--json"]),
    ("spectrum_complex_pair", &["niep", "--spectrum", "2, -1+1i, -1-1i", "--json"]),
];

#[test]
fn golden_reports() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in GOLDEN {
        let (code, stdout, stderr) = bin(args);
        assert_eq!(code, 0, "{name}: {stderr}");
        let report: Value = serde_json::from_str(&stdout).unwrap();
        assert_valid(&report);
        let path = golden_dir().join(format!("{name}.json"));
        if update {
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(stdout, expected, "{name} drifted from {}", path.display());
    }
}

#[test]
fn golden_values() {
    let load = |name: &str| -> Value {
        serde_json::from_str(&std::fs::read_to_string(golden_dir().join(format!("{name}.json"))).unwrap()).unwrap()
    };
    assert_eq!(load("cauchy_neg_half_line")["index"], -1);
    assert_eq!(load("cauchy_pos_half_line")["index"], 1);
    assert_eq!(load("cauchy_real_line")["index"], 0);

    let q = load("quintic_four_right");
    assert_eq!(q["counts"]["n_plus"], 4);
    assert_eq!(q["counts"]["n_minus"], 1);
    assert_eq!(q["counts"]["d"], 3);
    let cert = &q["interlacing"]["certificate"];
    let exact = |v: &Value| -> Vec<String> {
        v.as_array().unwrap().iter().map(|r| r["exact"].as_str().unwrap().to_string()).collect()
    };
    assert_eq!(exact(&cert["mu"]), ["-2", "0", "2"]);
    assert_eq!(exact(&cert["nu"]), ["-1", "1"]);
    assert_eq!(cert["strict"], true);
    assert_eq!(q["interlacing"]["p"], "x^5 - 3x^3 - 4x");
    assert_eq!(q["interlacing"]["q"], "-x^4 + 1");

    let q = load("quartic_loose_bound");
    assert_eq!(q["counts"]["n_plus"], 2);
    assert_eq!(q["counts"]["d"], 0);

    let s = load("degenerate_family");
    assert_eq!(s["signs"]["odd_pattern"]["verdict"]["shape"], "all_zero");

    let s = load("spectrum_complex_pair");
    assert_eq!(s["realization"]["realizable"], true);
    assert_eq!(s["characteristic_polynomial"], "x^3 - 2x - 4");
}

#[test]
fn human_output_and_exit_codes() {
    let (code, out, _) = bin(&["stability", "--poly", "x^3 + 3x^2 + 3x + 1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("STABLE"));

    let (code, out, _) = bin(&["stability", "--poly", "x^2 - 1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("NOT STABLE"));

    let (code, _, err) = bin(&["counts", "--poly", "x^2 - - 1"]);
    assert_eq!(code, 2);
    assert!(err.contains("E_PARSE") && err.contains("byte 6"), "{err}");

    let (code, out, _) = bin(&["counts", "--poly", "x^2 - - 1", "--json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["offset"], 6);
    assert_eq!(v["error"]["expected"], serde_json::json!(["number", "'x'"]));
    assert_valid(&v);

    let (code, _, err) = bin(&["newton", "--poly", "x^2 + 1"]);
    assert_eq!(code, 1);
    assert!(err.contains("E_DEGREE_TOO_SMALL"), "{err}");

    let (code, _, err) = bin(&["signs", "--poly", "2x^2 + 1"]);
    assert_eq!(code, 1);
    assert!(err.contains("E_NON_MONIC"), "{err}");

    let (code, _, err) = bin(&["interlace", "--poly", "x^2 + 1"]);
    assert_eq!(code, 1);
    assert!(err.contains("E_ALL_ROOTS_IMAGINARY"), "{err}");

    let (code, _, err) = bin(&["niep", "--spectrum", "-1, -2"]);
    assert_eq!(code, 1);
    assert!(err.contains("E_HYPOTHESIS_VIOLATION"), "{err}");

    let (code, out, _) = bin(&["niep", "--spectrum", "2, -1+1i, -1+1i", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["realization"]["failed_condition"], "SelfConjugate");

    let (code, _, err) = bin(&["cauchy", "--num", "1", "--den", "x^2 - 1", "--from", "-1", "--to", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("E_ENDPOINT_IS_POLE"), "{err}");
    let (code, out, _) = bin(&["cauchy", "--num", "1", "--den", "x^2 - 1", "--from", "-1", "--to", "1", "--nudge", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["index"], 0);
    assert_valid(&v);

    let (code, _, _) = bin(&["counts"]);
    assert_eq!(code, 2);
    let (code, _, err) = bin(&["counts", "--file", "/nonexistent/polys.txt"]);
    assert_eq!(code, 2);
    assert!(err.contains("E_IO"), "{err}");
}

#[test]
fn file_and_coefficient_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("polys.txt");
    std::fs::write(&path, "# examples\nx^2 + 2x + 1\n\nx^3 - 1\nx^2 +\n").unwrap();
    let (code, out, _) = bin(&["counts", "--file", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 3);
    assert_eq!(items[0]["counts"]["n_minus"], 2);
    assert_eq!(items[1]["counts"]["n_plus"], 1);
    assert_eq!(items[2]["error"]["code"], "E_PARSE");
    items.iter().for_each(assert_valid);

    let (code, out, _) = bin(&["counts", "--coeffs", "1,-1,3,0,-4,1", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["counts"]["n_plus"], 4);

    let (code, out, _) = bin(&["analyze", "--poly", "2x^2 + 4x + 2", "--verify", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["normalized"], "x^2 + 2x + 1");
    assert_eq!(v["verify"]["agrees"], true);
    assert_valid(&v);
}

#[test]
fn in_process_run_matches_binary() {
    let args = ["polystab", "counts", "--poly", "x^3 - 2x^2 - 13x - 10", "--json"];
    let outcome = polystab_cli::run(args);
    let (code, out, _) = bin(&args[1..]);
    assert_eq!((outcome.code, outcome.stdout), (code, out));
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #[test]
    fn parse_print_round_trip(coeffs in prop::collection::vec(small_rational(), 1..9)) {
        let f = RationalPolynomial::new(coeffs);
        let printed = f.to_string();
        let back = parse_polynomial(&printed).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_string(), printed);
    }
}
