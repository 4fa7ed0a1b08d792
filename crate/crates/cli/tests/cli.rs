use std::process::{Command, Output};

use fewnomial::expr::parse_poly;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fewnomial")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn vcount_prints_integer() {
    let out = run(&["vcount", "x^2 - 3*x + 2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "2");
    assert_eq!(stdout(&run(&["vcount", "x - x"])).trim(), "-2");
    assert_eq!(json(&run(&["vcount", "--json", "-x^5 + 1"]))["sign_variations"], 1);
}

#[test]
fn vcount_rejects_y() {
    let out = run(&["vcount", "x + y"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("x only"));
}

#[test]
fn bound_is_six_t_minus_four() {
    assert_eq!(stdout(&run(&["bound", "--t", "1"])).trim(), "2");
    assert_eq!(stdout(&run(&["bound", "--t", "3"])).trim(), "14");
    assert_eq!(run(&["bound", "--t", "0"]).status.code(), Some(2));
}

#[test]
fn restrict_prints_dense_polynomial() {
    let out = run(&["restrict", "y - x - 1", "--a", "1", "--b", "1"]);
    assert_eq!(stdout(&out).trim(), "0");
    let out = run(&["restrict", "x*y + 1", "--a", "-1/2", "--b", "2"]);
    assert_eq!(stdout(&out).trim(), "-1/2*x^2 + 2*x + 1");
    let out = run(&["restrict", "--json", "y^2", "--a", "1", "--b", "0"]);
    assert_eq!(json(&out)["coeffs"], serde_json::json!(["0/1", "0/1", "1/1"]));
}

#[test]
fn roots_report() {
    let out = run(&["roots", "x^2 - y", "--a", "0", "--b", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["identically_zero"], false);
    assert_eq!(report["count"], 2);
    assert_eq!(report["bound"], 8);
    assert_eq!(report["sharper_bound"], 3);
    let report = json(&run(&["roots", "y - x - 1", "--a", "1", "--b", "1"]));
    assert_eq!(report["identically_zero"], true);
    assert_eq!(report["count"], Value::Null);
}

#[test]
fn divides_exit_codes() {
    let planted = "(y - 2*x - 3)*(x^5*y^2 - 7*y^9 + 1)";
    let out = run(&["divides", planted, "--a", "2", "--b", "3", "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["divides"], true);
    assert_eq!(report["mode"], "exact");
    assert_eq!(report["t"], 9);
    assert_eq!(report["outcomes"].as_array().unwrap().len(), 6 * 9 - 3);

    let out = run(&["divides", planted, "--a", "2", "--b", "4", "--mode", "modular", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["divides"], false);

    assert_eq!(run(&["divides", "x^", "--a", "2", "--b", "3"]).status.code(), Some(2));
    assert_eq!(run(&["divides", "x", "--a", "2", "--b", "3", "--mode", "fast"]).status.code(), Some(2));
    assert_eq!(run(&["divides", "x", "--a", "2", "--b", "3", "--primes", "0"]).status.code(), Some(2));
}

#[test]
fn divides_horizontal_line() {
    let out = run(&["divides", "(y + 1)*(x^3 + y)", "--a", "0", "--b", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["decided_by"], "horizontal-line");
}

#[test]
fn divides_vertical_exit_codes() {
    assert_eq!(run(&["divides-vertical", "(x - 2/3)*(y^4 + x)", "--c", "2/3"]).status.code(), Some(0));
    assert_eq!(run(&["divides-vertical", "x*y + 1", "--c", "0"]).status.code(), Some(1));
}

#[test]
fn polynomial_from_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let f = parse_poly("(y - 2*x - 3)*(x^1125899906842624 + y)").unwrap();
    std::fs::write(&path, serde_json::to_string(&f).unwrap()).unwrap();
    let path = path.to_str().unwrap();
    let out = run(&["divides", "--in", path, "--a", "2", "--b", "3", "--mode", "modular"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(run(&["divides", "--in", path, "x", "--a", "2", "--b", "3"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--in", "/nonexistent.json", "--a", "1", "--b", "1"]).status.code(), Some(2));
}

#[test]
fn univariate_json_for_vcount() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(&path, r#"{"terms":[{"c":"1/1","e":"0"},{"c":"-2/1","e":"9223372036854775807"}]}"#).unwrap();
    let out = run(&["vcount", "--in", path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn fuzz_reports_are_deterministic() {
    let args = ["fuzz", "thm1", "--trials", "300", "--seed", "9"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let report = json(&first);
    assert_eq!(report["failures"], 0);
    assert!(report["max_count_per_t"].as_object().is_some_and(|m| !m.is_empty()));
    assert!(report.get("wall_time").is_none());
    assert_ne!(run(&["fuzz", "thm1", "--trials", "300", "--seed", "10"]).stdout, first.stdout);
}

#[test]
fn fuzz_every_property_small() {
    for property in ["lemma2", "perturbation", "prop3", "descartes", "thm1", "corollary", "test-vs-oracle", "yun"] {
        let out = run(&["fuzz", property, "--trials", "50", "--seed", "1"]);
        assert_eq!(out.status.code(), Some(0), "{property}");
        assert_eq!(json(&out)["property"], property);
    }
}

#[test]
fn fuzz_rejects_unknown_property() {
    assert_eq!(run(&["fuzz", "lemma3"]).status.code(), Some(2));
    assert_eq!(run(&["fuzz", "thm1", "--max-terms", "0"]).status.code(), Some(2));
}

#[test]
fn bench_small() {
    let out = run(&["bench", "--json", "--bits", "12,20", "--terms", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert_eq!(row["divides"], true);
        assert_eq!(row["perturbed_divides"], false);
    }
    assert!(rows[1]["ring_mults"].as_u64() > rows[0]["ring_mults"].as_u64());
}
