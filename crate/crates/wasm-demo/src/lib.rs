//! Browser bindings. Every export takes plain strings and returns a JSON
//! string; failures come back as `{"error": "..."}`.

use fewnomial::descartes::sign_variations;
use fewnomial::divisibility::{test_linear_factor_report, Mode, TestConfig};
use fewnomial::expr::parse_poly;
use fewnomial::line::{count_roots_on_line, on_unit_line, restrict_to_line};
use fewnomial::rational::parse_rational;
use fewnomial::{DenseUniPoly, Line, Result, SparseUniPoly};
use num_traits::ToPrimitive;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Dense work in the browser stays small.
const DEMO_DENSE_CAP: u64 = 2_000;

fn respond<T: Serialize>(result: Result<T>) -> String {
    match result {
        Ok(value) => serde_json::to_string(&value).unwrap_or_else(|e| error_json(&e.to_string())),
        Err(e) => error_json(&e.to_string()),
    }
}

fn error_json(message: &str) -> String {
    serde_json::json!({ "error": message }).to_string()
}

fn parse_line(a: &str, b: &str) -> Result<Line> {
    Ok(Line::new(parse_rational(a.trim())?, parse_rational(b.trim())?))
}

/// Floating-point samples of `g` for drawing only.
fn samples(g: &DenseUniPoly, half_width: f64, count: usize) -> Vec<[f64; 2]> {
    let coeffs: Vec<f64> = g.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    (0..=count)
        .map(|i| {
            let x = -half_width + 2.0 * half_width * i as f64 / count as f64;
            let y = coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
            [x, y]
        })
        .collect()
}

#[derive(Serialize)]
struct Restriction {
    restriction: String,
    report: fewnomial::RootCountReport,
    samples: Vec<[f64; 2]>,
}

/// `f(x, a*x + b)`, its root report and plot samples on `[-width, width]`.
#[wasm_bindgen]
pub fn restrict(expr: &str, a: &str, b: &str, width: f64) -> String {
    respond((|| {
        let f = parse_poly(expr)?;
        let line = parse_line(a, b)?;
        let g = restrict_to_line(&f, &line, DEMO_DENSE_CAP)?;
        let report = count_roots_on_line(&f, &line, DEMO_DENSE_CAP)?;
        let width = if width.is_finite() && width > 0.0 { width } else { 4.0 };
        Ok(Restriction { restriction: g.to_string(), report, samples: samples(&g, width, 400) })
    })())
}

#[derive(Serialize)]
struct UnitLine {
    t: usize,
    restriction: String,
    sign_variations: i64,
    bound: i64,
}

/// Sign variations of `f(x, x + 1)` next to `2t - 2`.
#[wasm_bindgen]
pub fn unit_line_variations(expr: &str) -> String {
    respond((|| {
        let f = parse_poly(expr)?;
        let g = on_unit_line(&f, DEMO_DENSE_CAP)?;
        Ok(UnitLine {
            t: f.t(),
            restriction: g.to_string(),
            sign_variations: sign_variations(&SparseUniPoly::from_dense(&g)).value(),
            bound: 2 * f.t() as i64 - 2,
        })
    })())
}

/// Linear-factor test for `y - a*x - b`; `mode` is `exact`, `modular` or
/// `auto`.
#[wasm_bindgen]
pub fn divides(expr: &str, a: &str, b: &str, mode: &str, seed: u32) -> String {
    respond((|| {
        let cfg = TestConfig {
            mode: mode.parse::<Mode>()?,
            dense_cap: DEMO_DENSE_CAP,
            rng_seed: seed as u64,
            ..TestConfig::default()
        };
        test_linear_factor_report(&parse_poly(expr)?, &parse_line(a, b)?, &cfg)
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restrict_reports_roots() {
        let out: serde_json::Value = serde_json::from_str(&restrict("x^2 - y", "0", "1", 2.0)).unwrap();
        assert_eq!(out["report"]["count"], 2);
        assert_eq!(out["restriction"], "x^2 - 1");
        assert_eq!(out["samples"].as_array().unwrap().len(), 401);
        assert_eq!(out["samples"][200][1], -1.0);
    }

    #[test]
    fn errors_are_json() {
        let out: serde_json::Value = serde_json::from_str(&restrict("x^", "1", "1", 2.0)).unwrap();
        assert!(out["error"].as_str().unwrap().contains("offset 2"));
        let out: serde_json::Value = serde_json::from_str(&divides("x", "1", "1", "fast", 0)).unwrap();
        assert!(out["error"].is_string());
    }

    #[test]
    fn unit_line_bound() {
        let out: serde_json::Value = serde_json::from_str(&unit_line_variations("x^3 - 2*x*y + y^4")).unwrap();
        assert_eq!(out["t"], 3);
        assert!(out["sign_variations"].as_i64().unwrap() <= out["bound"].as_i64().unwrap());
    }

    #[test]
    fn divides_planted() {
        let out: serde_json::Value =
            serde_json::from_str(&divides("(y - 2*x - 3)*(x^40*y^3 + 1)", "2", "3", "modular", 4)).unwrap();
        assert_eq!(out["divides"], true);
    }
}
