//! Lacunary scaling runs: `(y - 2x - 3) * g` with huge exponents in `g`.

use std::time::{Duration, Instant};

use fewnomial::divisibility::{test_linear_factor_report, TestConfig};
use fewnomial::rational::int;
use fewnomial::{Line, Result, SparseBiPoly};
use rand::Rng;
use serde::Serialize;

use crate::gen;

/// A random `terms`-term cofactor whose exponents have exactly `bits` bits.
///
/// The same `(seed, terms)` gives the same coefficients and the same
/// relative exponent pattern for every `bits`, so runs at different
/// bit-lengths differ only in exponent size.
pub fn lacunary_cofactor(seed: u64, terms: usize, bits: u32) -> SparseBiPoly {
    assert!((2..=62).contains(&bits), "bit-length out of range");
    let mut rng = gen::trial_rng(seed, 0);
    let top = 1u64 << (bits - 1);
    let spread = |r: u64| top + (r >> (64 - (bits - 1)));
    let raw: Vec<_> = (0..terms).map(|_| (gen::coeff(&mut rng, 9), rng.gen::<u64>(), rng.gen::<u64>())).collect();
    SparseBiPoly::new(raw.into_iter().map(|(c, a, b)| (c, spread(a), spread(b)))).expect("exponents below 2^62")
}

pub fn lacunary_line() -> Line {
    Line::from_ints(2, 3)
}

/// `(y - 2x - 3) * g`, optionally with the coefficient of its lowest term
/// bumped by one so the factor no longer divides it.
pub fn lacunary_instance(seed: u64, terms: usize, bits: u32, perturb: bool) -> SparseBiPoly {
    let line = lacunary_line();
    let g = lacunary_cofactor(seed, terms, bits);
    let f = SparseBiPoly::linear_form(&line.a, &line.b).checked_mul(&g).expect("exponents below 2^63");
    if perturb {
        let first = &f.terms()[0];
        let bump = SparseBiPoly::monomial(int(1), first.alpha, first.beta).expect("existing exponent");
        &f + &bump
    } else {
        f
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub bits: u32,
    pub t: usize,
    pub divides: bool,
    pub perturbed_divides: bool,
    pub ring_mults: u64,
    pub perturbed_ring_mults: u64,
    #[serde(serialize_with = "secs")]
    pub time: Duration,
    #[serde(serialize_with = "secs")]
    pub perturbed_time: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

pub fn run_bench(seed: u64, terms: usize, bits: u32, cfg: &TestConfig) -> Result<BenchRow> {
    let line = lacunary_line();
    let f = lacunary_instance(seed, terms, bits, false);
    let start = Instant::now();
    let report = test_linear_factor_report(&f, &line, cfg)?;
    let time = start.elapsed();

    let perturbed = lacunary_instance(seed, terms, bits, true);
    let start = Instant::now();
    let perturbed_report = test_linear_factor_report(&perturbed, &line, cfg)?;
    let perturbed_time = start.elapsed();

    Ok(BenchRow {
        bits,
        t: f.t(),
        divides: report.divides,
        perturbed_divides: perturbed_report.divides,
        ring_mults: report.ring_mults,
        perturbed_ring_mults: perturbed_report.ring_mults,
        time,
        perturbed_time,
    })
}

/// Least-squares slope and intercept of `ys` against `xs`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}
