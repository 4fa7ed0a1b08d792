//! Seeded verification campaigns.
//!
//! Each property draws independent instances from a per-trial random stream
//! and checks one inequality or agreement exactly. Trials run on a rayon
//! pool; results are folded in trial order, so a report depends only on the
//! property, the trial count, the seed and the generator parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use fewnomial::descartes::sign_variations;
use fewnomial::divisibility::{first_nonzero_specialization, oracle_divides, test_linear_factor, TestConfig};
use fewnomial::line::{count_roots_on_line, on_unit_line, six_t_minus_four};
use fewnomial::poly::DEFAULT_DENSE_CAP;
use fewnomial::rational::int;
use fewnomial::realroots::{count_with_multiplicity, squarefree_decompose, Endpoint};
use fewnomial::{DenseUniPoly, Error, SparseBiPoly, SparseUniPoly};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::gen::{self, GenParams, LineKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Property {
    #[serde(rename = "lemma2")]
    Lemma2,
    #[serde(rename = "perturbation")]
    Perturbation,
    #[serde(rename = "prop3")]
    Prop3,
    #[serde(rename = "descartes")]
    Descartes,
    #[serde(rename = "thm1")]
    Thm1,
    #[serde(rename = "corollary")]
    Corollary,
    #[serde(rename = "test-vs-oracle")]
    TestVsOracle,
    #[serde(rename = "yun")]
    Yun,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::Lemma2,
        Property::Perturbation,
        Property::Prop3,
        Property::Descartes,
        Property::Thm1,
        Property::Corollary,
        Property::TestVsOracle,
        Property::Yun,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Property::Lemma2 => "lemma2",
            Property::Perturbation => "perturbation",
            Property::Prop3 => "prop3",
            Property::Descartes => "descartes",
            Property::Thm1 => "thm1",
            Property::Corollary => "corollary",
            Property::TestVsOracle => "test-vs-oracle",
            Property::Yun => "yun",
        }
    }

    /// Generator ranges used when the caller does not override them.
    pub fn default_params(self) -> GenParams {
        match self {
            Property::Lemma2 | Property::Perturbation => {
                GenParams { max_terms: 8, max_exp: 60, ..GenParams::default() }
            }
            Property::Descartes => GenParams { max_terms: 8, max_exp: 30, ..GenParams::default() },
            Property::Prop3 | Property::Thm1 | Property::Corollary => GenParams::default(),
            Property::TestVsOracle => GenParams { max_exp: 20, ratio_bound: 5, ..GenParams::default() },
            Property::Yun => GenParams { max_terms: 4, max_exp: 4, ratio_bound: 5, ..GenParams::default() },
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Property::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown property {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzParams {
    pub gen: GenParams,
    /// Seeds for the modular runs in `test-vs-oracle`.
    pub modular_seeds: Vec<u64>,
    pub dense_cap: u64,
}

impl FuzzParams {
    pub fn for_property(property: Property) -> Self {
        Self { gen: property.default_params(), modular_seeds: vec![1, 2, 3, 4, 5], dense_cap: DEFAULT_DENSE_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub property: Property,
    pub trials: u64,
    pub failures: u64,
    pub seed: u64,
    pub params: FuzzParams,
    /// Largest root count seen per term count (`thm1` only).
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub max_count_per_t: BTreeMap<usize, u64>,
    /// Named tallies: edge cases hit, planted instances, and so on.
    pub stats: BTreeMap<String, u64>,
    pub counterexamples: Vec<String>,
    /// Not serialized; reports for equal inputs are byte-identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn stat(&self, key: &str) -> u64 {
        self.stats.get(key).copied().unwrap_or(0)
    }
}

#[derive(Default)]
struct Trial {
    failure: Option<String>,
    tags: Vec<String>,
    root_count: Option<(usize, u64)>,
}

impl Trial {
    fn tag(&mut self, tag: impl Into<String>) {
        self.tags.push(tag.into());
    }

    fn fail(&mut self, message: String) {
        self.failure = Some(message);
    }

    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        if !ok && self.failure.is_none() {
            self.failure = Some(message());
        }
    }
}

const MAX_COUNTEREXAMPLES: usize = 10;

pub fn run_fuzz(property: Property, trials: u64, seed: u64, params: &FuzzParams) -> FuzzReport {
    let start = Instant::now();
    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = gen::trial_rng(seed, i);
            let mut trial = Trial::default();
            match property {
                Property::Lemma2 => lemma2(&mut rng, params, &mut trial),
                Property::Perturbation => perturbation(&mut rng, params, &mut trial),
                Property::Prop3 => prop3(&mut rng, params, &mut trial),
                Property::Descartes => descartes(&mut rng, params, &mut trial),
                Property::Thm1 => thm1(&mut rng, params, &mut trial),
                Property::Corollary => corollary(&mut rng, params, &mut trial),
                Property::TestVsOracle => test_vs_oracle(&mut rng, params, &mut trial),
                Property::Yun => yun(&mut rng, params, &mut trial),
            }
            trial
        })
        .collect();

    let mut report = FuzzReport {
        property,
        trials,
        failures: 0,
        seed,
        params: params.clone(),
        max_count_per_t: BTreeMap::new(),
        stats: BTreeMap::new(),
        counterexamples: Vec::new(),
        wall_time: Duration::ZERO,
    };
    for (i, trial) in results.into_iter().enumerate() {
        if let Some(message) = trial.failure {
            report.failures += 1;
            if report.counterexamples.len() < MAX_COUNTEREXAMPLES {
                report.counterexamples.push(format!("trial {i}: {message}"));
            }
        }
        for tag in trial.tags {
            *report.stats.entry(tag).or_default() += 1;
        }
        if let Some((t, count)) = trial.root_count {
            let slot = report.max_count_per_t.entry(t).or_default();
            *slot = (*slot).max(count);
        }
    }
    report.wall_time = start.elapsed();
    report
}

fn x_plus_one() -> SparseUniPoly {
    SparseUniPoly::new([(0, int(1)), (1, int(1))]).unwrap()
}

fn lemma2<R: Rng>(rng: &mut R, params: &FuzzParams, trial: &mut Trial) {
    let g = &params.gen;
    let p = gen::sparse_uni(rng, g.max_terms, g.max_exp, g.coeff_bound);
    let product = x_plus_one().checked_mul(&p).unwrap();
    let (before, after) = (sign_variations(&p), sign_variations(&product));
    trial.check(after <= before, || format!("p = {p}: V((x+1)p) = {after} > V(p) = {before}"));
}

fn perturbation<R: Rng>(rng: &mut R, params: &FuzzParams, trial: &mut Trial) {
    let g = &params.gen;
    let p = gen::sparse_uni(rng, g.max_terms, g.max_exp, g.coeff_bound);
    let q = match rng.gen_range(0..8) {
        0 => {
            trial.tag("cancels-to-zero");
            -&p
        }
        1 => {
            // cancel all but a few terms of p
            trial.tag("partial-cancellation");
            let keep = gen::sparse_uni(rng, 2, g.max_exp, g.coeff_bound);
            &keep - &p
        }
        _ => gen::sparse_uni(rng, g.max_terms, g.max_exp, g.coeff_bound),
    };
    let sum = &p + &q;
    if sum.is_zero() {
        trial.tag("sum-is-zero");
    }
    let lhs = sign_variations(&sum).value();
    let rhs = sign_variations(&p).value() + 2 * q.term_count() as i64;
    trial.check(lhs <= rhs, || format!("p = {p}, q = {q}: V(p+q) = {lhs} > {rhs}"));
}

fn prop3<R: Rng>(rng: &mut R, params: &FuzzParams, trial: &mut Trial) {
    let f = gen::sparse_bi(rng, &params.gen);
    let g = on_unit_line(&f, params.dense_cap).unwrap();
    let v = sign_variations(&SparseUniPoly::from_dense(&g)).value();
    let bound = 2 * f.t() as i64 - 2;
    trial.check(v <= bound, || format!("f = {f}: V(f(x, x+1)) = {v} > 2t - 2 = {bound}"));
}

fn descartes<R: Rng>(rng: &mut R, params: &FuzzParams, trial: &mut Trial) {
    let g = &params.gen;
    let mut p = gen::sparse_uni(rng, g.max_terms, g.max_exp, g.coeff_bound);
    if rng.gen_range(0..4) == 0 {
        trial.tag("planted-positive-roots");
        let mut dense = p.to_dense(params.dense_cap).unwrap();
        for (root, mult) in gen::planted_roots(rng, 2, 3) {
            dense = &dense * &DenseUniPoly::linear(int(1), -root).pow(mult);
        }
        p = SparseUniPoly::from_dense(&dense);
    }
    if p.is_zero() {
        trial.tag("zero-input");
        let v = sign_variations(&p).value();
        return trial.check(v == -2, || format!("V(0) = {v}"));
    }
    let dense = p.to_dense(params.dense_cap).unwrap();
    let positive = count_with_multiplicity(&dense, &Endpoint::Finite(int(0)), &Endpoint::PosInf, &[]).unwrap();
    let v = sign_variations(&p).value();
    trial.check(positive as i64 <= v, || format!("p = {p}: {positive} positive roots > V(p) = {v}"));
    // every real root with multiplicity, 0 at most once
    let real = count_with_multiplicity(&dense, &Endpoint::NegInf, &Endpoint::PosInf, &[int(0)]).unwrap();
    let bound = 2 * p.term_count() as i64 - 1;
    trial.check(real as i64 <= bound, || format!("p = {p}: {real} real roots > 2t - 1 = {bound}"));
}

fn thm1<R: Rng>(rng: &mut R, params: &FuzzParams, trial: &mut Trial) {
    let f = gen::sparse_bi(rng, &params.gen);
    let line = gen::line(rng, params.gen.ratio_bound);
    let report = match count_roots_on_line(&f, &line, params.dense_cap) {
        Ok(r) => r,
        Err(e) => return trial.fail(format!("f = {f}, line = ({}, {}): {e}", line.a, line.b)),
    };
    if report.identically_zero {
        trial.tag("identically-zero");
        return;
    }
    let count = report.count.unwrap();
    trial.root_count = Some((f.t(), count));
    if f.t() == 1 && count as i64 == six_t_minus_four(1) {
        trial.tag("tight-t1");
    }
    trial.check(report.within_bound(), || {
        format!("f = {f}, line = ({}, {}): {count} roots > 6t - 4 = {}", line.a, line.b, report.bound)
    });
    if let Some(sharper) = report.sharper_bound {
        trial.check(count as i64 <= sharper, || {
            format!("f = {f}, line = ({}, {}): {count} roots > 2t - 1 = {sharper}", line.a, line.b)
        });
    }
}

fn corollary<R: Rng>(rng: &mut R, params: &FuzzParams, trial: &mut Trial) {
    let mut f = gen::sparse_bi(rng, &params.gen);
    if rng.gen_bool(0.5) {
        // add partners that cancel under y = x^3: (c, a, b) -> (-c, a - 3, b + 1)
        trial.tag("engineered-collisions");
        let partners: Vec<_> =
            f.terms().iter().filter(|t| t.alpha >= 3).map(|t| (-&t.coeff, t.alpha - 3, t.beta + 1)).collect();
        f = &f + &SparseBiPoly::new(partners).unwrap();
    }
    if f.is_zero() {
        trial.tag("skipped-zero");
        return;
    }
    match first_nonzero_specialization(&f) {
        Ok((n, _)) => {
            if n > 3 {
                trial.tag("first-n-above-3");
            }
            let limit = 12 * f.t() as u64 - 5;
            trial.check(n <= limit, || format!("f = {f}: first nonzero n = {n} > 12t - 5 = {limit}"));
        }
        Err(e) => trial.fail(format!("f = {f}: {e}")),
    }
}

fn test_vs_oracle<R: Rng>(rng: &mut R, params: &FuzzParams, trial: &mut Trial) {
    let (kind, line) = gen::line_of_kind(rng, params.gen.ratio_bound);
    trial.tag(match kind {
        LineKind::HorizontalPlus => "line-0-plus-1",
        LineKind::HorizontalMinus => "line-0-minus-1",
        LineKind::Reflected => "line-reflected",
        LineKind::Generic => "line-generic",
    });
    let f = if rng.gen_range(0..4) == 0 {
        trial.tag("planted");
        let cofactor_params = GenParams {
            max_terms: (params.gen.max_terms / 3).max(1),
            max_exp: params.gen.max_exp.saturating_sub(1),
            ..params.gen.clone()
        };
        let g = gen::sparse_bi(rng, &cofactor_params);
        SparseBiPoly::linear_form(&line.a, &line.b).checked_mul(&g).unwrap()
    } else {
        gen::sparse_bi(rng, &params.gen)
    };
    let truth = match oracle_divides(&f, &line, params.dense_cap) {
        Ok(v) => v,
        Err(e) => return trial.fail(format!("oracle failed on f = {f}: {e}")),
    };
    if truth {
        trial.tag("divisible");
    }
    let describe = |mode: &str, got: bool| {
        format!("f = {f}, line = ({}, {}), {mode}: test says {got}, oracle says {truth}", line.a, line.b)
    };
    match test_linear_factor(&f, &line, &TestConfig::exact()) {
        Ok(v) => trial.check(v == truth, || describe("exact", v)),
        Err(e) => trial.fail(format!("exact test failed on f = {f}: {e}")),
    }
    for &seed in &params.modular_seeds {
        match test_linear_factor(&f, &line, &TestConfig::modular(seed)) {
            Ok(v) => trial.check(v == truth, || describe(&format!("modular seed {seed}"), v)),
            Err(e) => trial.fail(format!("modular test failed on f = {f}: {e}")),
        }
    }
}

fn yun<R: Rng>(rng: &mut R, params: &FuzzParams, trial: &mut Trial) {
    let g = &params.gen;
    let mut p = DenseUniPoly::constant(gen::nonzero_rational(rng, g.ratio_bound));
    for _ in 0..rng.gen_range(1..=g.max_terms) {
        let degree = rng.gen_range(1..=3);
        let factor = DenseUniPoly::new(
            (0..=degree)
                .map(|i| {
                    if i == degree {
                        gen::nonzero_rational(rng, g.ratio_bound)
                    } else {
                        gen::rational(rng, g.ratio_bound)
                    }
                })
                .collect(),
        );
        p = &p * &factor.pow(rng.gen_range(1..=g.max_exp));
    }
    let decomposition = squarefree_decompose(&p).unwrap();
    let product = decomposition.product();
    trial.check(product == p.monic(), || format!("p = {p}: product of factors is {product}"));
    if decomposition.factors.iter().any(|(_, m)| *m > 1) {
        trial.tag("repeated-factor");
    }
    for (factor, _) in &decomposition.factors {
        let squarefree = factor.gcd(&factor.derivative()).is_constant();
        trial.check(squarefree, || format!("p = {p}: factor {factor} is not squarefree"));
    }
    for (i, (fi, _)) in decomposition.factors.iter().enumerate() {
        for (fj, _) in &decomposition.factors[i + 1..] {
            trial.check(fi.gcd(fj).is_constant(), || format!("p = {p}: factors {fi} and {fj} share a root"));
        }
    }
}
