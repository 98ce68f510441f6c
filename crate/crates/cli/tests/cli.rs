use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn mnewton(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mnewton"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_spectrum(dir: &Path, name: &str, values: &[(f64, f64)]) -> std::path::PathBuf {
    let pairs: Vec<[f64; 2]> = values.iter().map(|&(re, im)| [re, im]).collect();
    let path = dir.join(name);
    fs::write(&path, serde_json::json!({ "values": pairs }).to_string()).unwrap();
    path
}

#[test]
fn newton_on_generated_m_matrix_passes() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    let gen = mnewton(&["gen", "--kind", "M", "--n", "6", "--seed", "17"]);
    assert_eq!(gen.status.code(), Some(0));
    fs::write(&m, &gen.stdout).unwrap();

    let out = mnewton(&["newton", "--input", path_str(&m)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json_of(&out);
    assert_eq!(report["pass"], true);
    let margins = report["report"]["margins"].as_array().unwrap();
    assert_eq!(margins.len(), 5);
    assert!(margins.iter().all(|x| x.as_f64().unwrap() >= 0.0));
}

#[test]
fn identity_sum_is_exactly_zero() {
    let out = mnewton(&["identity", "--n", "12", "--m", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out);
    assert_eq!(report["sum"], "0");

    let all = mnewton(&["identity", "--n", "9"]);
    assert_eq!(all.status.code(), Some(0));
    assert_eq!(json_of(&all)["sums"].as_array().unwrap().len(), 8);
}

#[test]
fn five_tuple_fails_laffey_meehan_with_margin_minus_60() {
    let dir = tempfile::tempdir().unwrap();
    let t = write_spectrum(
        dir.path(),
        "t.json",
        &[(3.0, 0.0), (3.0, 0.0), (-2.0, 0.0), (-2.0, 0.0), (-2.0, 0.0)],
    );
    let out = mnewton(&["niep-screen", "--spectrum", path_str(&t)]);
    assert_eq!(out.status.code(), Some(1));
    let lm = &json_of(&out)["report"]["laffey_meehan"];
    assert_eq!(lm["status"], "fail");
    assert_eq!(lm["margin"].as_f64(), Some(-60.0));
    assert_eq!(lm["exact_margin"].as_i64(), Some(-60));
}

#[test]
fn newton_failure_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let s2 = std::f64::consts::SQRT_2;
    let t = write_spectrum(dir.path(), "t.json", &[(0.0, 0.0), (s2, -1.0), (s2, 1.0)]);
    let out = mnewton(&["newton", "--spectrum", path_str(&t)]);
    assert_eq!(out.status.code(), Some(1));
    let report = json_of(&out);
    assert_eq!(report["report"]["worst_j"], 1);
    let mu1 = report["report"]["margins"][0].as_f64().unwrap();
    assert!((mu1 + 1.0 / 9.0).abs() <= 1e-12);
}

#[test]
fn malformed_input_exits_2_naming_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"n\": 2, \"rows\": [[1, 2]").unwrap();
    let out = mnewton(&["classify", "--input", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("`json`"));

    let short = dir.path().join("short.json");
    fs::write(&short, r#"{"n": 3, "rows": [[1, 2], [3, 4]]}"#).unwrap();
    let out = mnewton(&["coeffs", "--input", path_str(&short)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`rows`"));

    let missing = dir.path().join("missing.json");
    let out = mnewton(&["newton", "--input", path_str(&missing)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--input"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(mnewton(&["identity", "--n", "5", "--m", "9"]).status.code(), Some(2));
    assert_eq!(mnewton(&["forms", "--n", "4", "--m", "2", "--kind", "nope"]).status.code(), Some(2));
    assert_eq!(mnewton(&["identity", "--n", "5", "--tol", "-1"]).status.code(), Some(2));
    let out = mnewton(&["gen", "--kind", "M", "--n", "3", "--margin", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`margin`"));
    assert_eq!(mnewton(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let gen = mnewton(&["gen", "--kind", "inverse-M", "--n", "5", "--seed", "4"]);
    assert_eq!(gen.stdout, mnewton(&["gen", "--kind", "inverse-M", "--n", "5", "--seed", "4"]).stdout);
    let m = dir.path().join("m.json");
    fs::write(&m, &gen.stdout).unwrap();
    for cmd in ["classify", "coeffs", "newton", "sfunc"] {
        let a = mnewton(&[cmd, "--input", path_str(&m)]);
        let b = mnewton(&[cmd, "--input", path_str(&m)]);
        assert_eq!(a.status.code(), Some(0), "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn batch_screening_is_sorted_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    write_spectrum(dir.path(), "c_five.json", &[(3.0, 0.0), (3.0, 0.0), (-2.0, 0.0), (-2.0, 0.0), (-2.0, 0.0)]);
    write_spectrum(dir.path(), "a_trivial.json", &[(1.0, 0.0), (0.5, 0.0)]);
    write_spectrum(dir.path(), "b_triple.json", &[(1.0, 0.0), (-1.0, 0.0), (-1.0, 0.0)]);
    fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let args = ["niep-screen", "--spectrum", path_str(dir.path())];
    let first = mnewton(&args);
    assert_eq!(first.status.code(), Some(1));
    for _ in 0..3 {
        assert_eq!(mnewton(&args).stdout, first.stdout);
    }
    let report = json_of(&first);
    let results = report["results"].as_array().unwrap();
    let files: Vec<&str> = results.iter().map(|r| r["file"].as_str().unwrap()).collect();
    assert_eq!(files, ["a_trivial.json", "b_triple.json", "c_five.json"]);
    let passes: Vec<bool> = results.iter().map(|r| r["pass"].as_bool().unwrap()).collect();
    assert_eq!(passes, [true, false, false]);
    assert_eq!(results[1]["report"]["moments"]["status"], "fail");
}

#[test]
fn screening_flags_are_applied() {
    let dir = tempfile::tempdir().unwrap();
    let t = write_spectrum(dir.path(), "t.json", &[(2.0, 0.0), (1.0, 0.0)]);
    let out = mnewton(&["niep-screen", "--spectrum", path_str(&t), "--jll-bound", "6", "--moment-k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out)["report"].clone();
    assert_eq!(report["params"]["jll_bound"], 6);
    assert_eq!(report["moments"]["values"].as_array().unwrap().len(), 4);
}

#[test]
fn forms_check_and_export() {
    let out = mnewton(&["forms", "--n", "6", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out);
    assert_eq!(report["dim"], 20);
    assert_eq!(report["psd"]["psd"], true);
    assert_eq!(report["structure"]["holds"], true);

    let tilde = json_of(&mnewton(&["forms", "--n", "6", "--m", "2", "--kind", "tilde_phi"]));
    assert_eq!(tilde["positive_eigenvalues"], 1);

    let csv = mnewton(&["forms", "--n", "4", "--m", "2", "--export", "csv"]);
    assert_eq!(csv.status.code(), Some(0));
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.split(',').count() == 6));

    let js = json_of(&mnewton(&["forms", "--n", "4", "--m", "1", "--kind", "phi", "--export", "json"]));
    assert_eq!(js["kind"], "phi");
    assert_eq!(js["entries"][0][0], 1.0);
    assert_eq!(js["entries"][0][1], 0.0);
}

#[test]
fn sfunc_selects_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let gen = mnewton(&["gen", "--kind", "M", "--n", "5", "--seed", "2"]);
    let m = dir.path().join("m.json");
    fs::write(&m, &gen.stdout).unwrap();
    let one = json_of(&mnewton(&["sfunc", "--input", path_str(&m), "--m", "2", "--k", "1"]));
    assert_eq!(one["genimm"].as_array().unwrap().len(), 1);
    assert_eq!(one["worst_genimm"]["m"], 2);
    assert_eq!(one["pass"], true);
    let out = mnewton(&["sfunc", "--input", path_str(&m), "--m", "4", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn roots_round_trip_through_screening() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    // (x − 2)(x − 1)(x + 1)
    fs::write(&p, r#"{"coeffs": [1, -2, -1, 2]}"#).unwrap();
    let out = mnewton(&["roots", "--input", path_str(&p)]);
    assert_eq!(out.status.code(), Some(0));
    let s = dir.path().join("s.json");
    fs::write(&s, &out.stdout).unwrap();
    let values = json_of(&out)["values"].clone();
    assert!((values[0][0].as_f64().unwrap() - 2.0).abs() < 1e-12);
    let screened = mnewton(&["niep-screen", "--spectrum", path_str(&s)]);
    assert_eq!(screened.status.code(), Some(0));
}
