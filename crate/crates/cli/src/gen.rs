//! Seeded random instances for the property campaigns.

use fewnomial::rational::{int, ratio};
use fewnomial::{Line, Rational, SparseBiPoly, SparseUniPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Ranges the generators draw from. Every campaign draws the term count
/// first, then exponents and coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenParams {
    pub max_terms: usize,
    pub max_exp: u64,
    /// Coefficients are nonzero integers in `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    /// Line parameters are `num/den` with `|num| <= ratio_bound`,
    /// `1 <= den <= ratio_bound`.
    pub ratio_bound: i64,
}

impl Default for GenParams {
    fn default() -> Self {
        Self { max_terms: 6, max_exp: 25, coeff_bound: 9, ratio_bound: 9 }
    }
}

/// Independent stream per trial, so results do not depend on scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn nonzero_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    let magnitude = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        magnitude
    } else {
        -magnitude
    }
}

pub fn coeff<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    int(nonzero_int(rng, bound))
}

pub fn rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    ratio(nonzero_int(rng, bound), rng.gen_range(1..=bound))
}

/// `1..=max_terms` terms with exponents in `0..=max_deg`.
pub fn sparse_uni<R: Rng>(rng: &mut R, max_terms: usize, max_deg: u64, coeff_bound: i64) -> SparseUniPoly {
    let t = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..t).map(|_| (rng.gen_range(0..=max_deg), coeff(rng, coeff_bound))).collect();
    SparseUniPoly::new(terms).expect("small exponents")
}

pub fn sparse_bi<R: Rng>(rng: &mut R, params: &GenParams) -> SparseBiPoly {
    let t = rng.gen_range(1..=params.max_terms);
    sparse_bi_with_terms(rng, t, params)
}

pub fn sparse_bi_with_terms<R: Rng>(rng: &mut R, t: usize, params: &GenParams) -> SparseBiPoly {
    let terms: Vec<_> = (0..t)
        .map(|_| (coeff(rng, params.coeff_bound), rng.gen_range(0..=params.max_exp), rng.gen_range(0..=params.max_exp)))
        .collect();
    SparseBiPoly::new(terms).expect("small exponents")
}

/// Mostly generic lines, with a share of `a = 0` and `b = 0`.
pub fn line<R: Rng>(rng: &mut R, bound: i64) -> Line {
    match rng.gen_range(0..10) {
        0 => Line::new(int(0), rational(rng, bound)),
        1 => Line::new(rational(rng, bound), int(0)),
        _ => Line::new(nonzero_rational(rng, bound), nonzero_rational(rng, bound)),
    }
}

/// Line families exercised by the divisibility campaign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LineKind {
    /// `(a, b) = (0, 1)`.
    HorizontalPlus,
    /// `(a, b) = (0, -1)`.
    HorizontalMinus,
    /// `|b| = |1 - a|`, which triggers the reflection.
    Reflected,
    Generic,
}

pub fn line_of_kind<R: Rng>(rng: &mut R, bound: i64) -> (LineKind, Line) {
    let roll = rng.gen_range(0..100);
    if roll < 5 {
        (LineKind::HorizontalPlus, Line::from_ints(0, 1))
    } else if roll < 10 {
        (LineKind::HorizontalMinus, Line::from_ints(0, -1))
    } else if roll < 20 {
        let a = loop {
            let a = rational(rng, bound);
            if a != int(0) {
                break a;
            }
        };
        let one_minus_a = int(1) - &a;
        let b = if rng.gen_bool(0.5) { one_minus_a } else { -one_minus_a };
        (LineKind::Reflected, Line::new(a, b))
    } else {
        (LineKind::Generic, Line::new(rational(rng, bound), rational(rng, bound)))
    }
}

/// Random `(x - r)^k` factors with small positive rational roots, to give
/// the root counters repeated roots to find.
pub fn planted_roots<R: Rng>(rng: &mut R, count: usize, max_mult: u64) -> Vec<(Rational, u64)> {
    let mut roots: Vec<Rational> = (1..=6).flat_map(|n| (1..=3).map(move |d| ratio(n, d))).collect();
    roots.sort();
    roots.dedup();
    roots.shuffle(rng);
    roots.truncate(count);
    roots.into_iter().map(|r| (r, rng.gen_range(1..=max_mult))).collect()
}
