//! Deciding whether `y - a*x - b` divides a sparse `f(x, y)`.
//!
//! The test looks at the odd specializations `f(x, x^n)` for
//! `n = 3, 5, ..., 12t - 5`. If the trinomial `x^n - a*x - b` divides every
//! nonzero specialization then the restriction `f(x, a*x + b)` has at least
//! `6t - 3` distinct real roots, more than the `6t - 4` bound allows, so it
//! vanishes identically. The trinomials are distinct-rooted whenever
//! `|b| != |1 - a|`; the excluded lines are handled by reflecting `x`, and
//! the lines `y = ±1` by direct substitution.
//!
//! Trinomial divisibility is decided by one remainder computation per `n`,
//! either exactly over `Q` or modulo random word-size primes. A nonzero
//! residue modulo any prime proves non-divisibility. An all-zero outcome
//! over `k` primes accepts wrongly only if every sampled prime divides the
//! exact residue, so the error is at most `(B / P)^k` where `B` bounds the
//! number of prime factors of the exact residue's numerators and `P` the
//! number of primes in the sampling range.

mod ring;

use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use self::ring::{ExactRing, ModRing, TrinomialRing};
use crate::error::{Error, Result};
use crate::line::{restrict_to_line, Line};
use crate::poly::{SparseBiPoly, SparseUniPoly, DEFAULT_DENSE_CAP, MAX_EXPONENT};
use crate::primes::random_prime;
use crate::rational::{self, Rational};

/// Largest specialized degree for which [`Mode::Auto`] stays exact.
pub const AUTO_EXACT_LIMIT: u64 = 4096;

/// `x^n - a*x - b` with odd `n >= 3`, which always has a real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrinomialModulus {
    n: u64,
    a: Rational,
    b: Rational,
}

impl TrinomialModulus {
    pub fn new(n: u64, a: Rational, b: Rational) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::InvalidModulus(n));
        }
        // residues are dense vectors of length n
        if n > u32::MAX as u64 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(Self { n, a, b })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }
}

/// Arithmetic used for one remainder computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueMode {
    Exact,
    Modular(u64),
}

/// Element of `K[x] / (x^n - a*x - b)`, coefficients indexed by exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrinomialResidue {
    Exact(Vec<Rational>),
    Modular { prime: u64, coeffs: Vec<u64> },
}

impl TrinomialResidue {
    pub fn is_zero(&self) -> bool {
        match self {
            TrinomialResidue::Exact(c) => c.iter().all(Zero::is_zero),
            TrinomialResidue::Modular { coeffs, .. } => coeffs.iter().all(|&c| c == 0),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            TrinomialResidue::Exact(c) => c.len(),
            TrinomialResidue::Modular { coeffs, .. } => coeffs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// How the residue was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Synthetic division of the dense polynomial by the trinomial.
    Division,
    /// Square-and-multiply for each power `x^e` in the quotient ring.
    Powering,
}

/// Residue plus the number of quotient-ring multiplications spent on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub residue: TrinomialResidue,
    pub ring_mults: u64,
    pub strategy: Strategy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    Modular,
    Auto,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "modular" => Ok(Mode::Modular),
            "auto" => Ok(Mode::Auto),
            other => Err(Error::InvalidConfig(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestConfig {
    pub mode: Mode,
    /// Primes per modular check.
    pub prime_count: u32,
    /// Primes are drawn from `[2^(bits-1), 2^bits)`.
    pub prime_bits: u32,
    /// Degrees up to this are reduced by synthetic division; above it by
    /// powering in the quotient ring.
    pub dense_cap: u64,
    pub rng_seed: u64,
}

impl Default for TestConfig {
    fn default() -> Self {
        Self { mode: Mode::Auto, prime_count: 3, prime_bits: 46, dense_cap: DEFAULT_DENSE_CAP, rng_seed: 0 }
    }
}

impl TestConfig {
    pub fn exact() -> Self {
        Self { mode: Mode::Exact, ..Self::default() }
    }

    pub fn modular(seed: u64) -> Self {
        Self { mode: Mode::Modular, rng_seed: seed, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.prime_count == 0 {
            return Err(Error::InvalidConfig("prime_count must be at least 1".into()));
        }
        if !(3..=50).contains(&self.prime_bits) {
            return Err(Error::InvalidConfig("prime_bits must lie in 3..=50".into()));
        }
        Ok(())
    }
}

/// `f(x, x^n)`: exponents `alpha + n*beta`, colliding terms combined.
pub fn specialize(f: &SparseBiPoly, n: u64) -> Result<SparseUniPoly> {
    if n == 0 {
        return Err(Error::InvalidConfig("specialization needs n >= 1".into()));
    }
    let terms = f
        .terms()
        .iter()
        .map(|t| {
            let e = n
                .checked_mul(t.beta)
                .and_then(|e| e.checked_add(t.alpha))
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or(Error::ExponentOverflow)?;
            Ok((e, t.coeff.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    SparseUniPoly::new(terms)
}

/// Odd `n` values visited by the test for a polynomial with `t` terms.
pub fn odd_range(t: usize) -> impl Iterator<Item = u64> {
    let last = (12 * t as u64).saturating_sub(5);
    (3..=last).step_by(2)
}

/// Smallest odd `n` in `[3, 12t - 5]` with `f(x, x^n) != 0`. One always
/// exists for nonzero `f`; not finding one is an internal error.
pub fn first_nonzero_specialization(f: &SparseBiPoly) -> Result<(u64, SparseUniPoly)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for n in odd_range(f.t()) {
        let p = specialize(f, n)?;
        if !p.is_zero() {
            return Ok((n, p));
        }
    }
    Err(Error::Internal(format!("every odd specialization up to {} vanished", 12 * f.t() - 5)))
}

fn reduce_in<R: TrinomialRing>(
    ring: &R,
    terms: &[(u64, R::Coeff)],
    unit: R::Coeff,
    dense_cap: u64,
) -> (Vec<R::Coeff>, u64, Strategy) {
    let degree = terms.last().map(|(e, _)| *e).unwrap_or(0);
    if degree <= dense_cap {
        let mut dense = vec![ring.zero(); (degree as usize + 1).max(ring.n())];
        for (e, c) in terms {
            dense[*e as usize] = c.clone();
        }
        return (ring.fold_high(dense), 0, Strategy::Division);
    }
    let (acc, mults) = power_terms(ring, terms, unit);
    (acc, mults, Strategy::Powering)
}

/// `sum c * (x^e mod trinomial)` with each power built by left-to-right
/// square-and-multiply. Multiplying by `x` is a shift, so the cost of a term
/// with `e >= n` is exactly `bitlen(e) - 1` ring squarings.
fn power_terms<R: TrinomialRing>(ring: &R, terms: &[(u64, R::Coeff)], unit: R::Coeff) -> (Vec<R::Coeff>, u64) {
    let n = ring.n() as u64;
    let mut acc = vec![ring.zero(); ring.n()];
    let mut mults = 0;
    for (e, c) in terms {
        if *e < n {
            ring.add_assign(&mut acc[*e as usize], c);
            continue;
        }
        let bits = 64 - e.leading_zeros();
        let mut power = ring.basis(1, unit.clone());
        for bit in (0..bits - 1).rev() {
            power = ring.square(&power);
            mults += 1;
            if (e >> bit) & 1 == 1 {
                ring.mul_x(&mut power);
            }
        }
        ring.add_scaled(&mut acc, &power, c);
    }
    (acc, mults)
}

fn exact_ring(m: &TrinomialModulus) -> ExactRing {
    ExactRing { n: m.n as usize, a: m.a.clone(), b: m.b.clone() }
}

fn mod_ring(m: &TrinomialModulus, prime: u64) -> Result<ModRing> {
    Ok(ModRing {
        n: m.n as usize,
        p: prime,
        a: ModRing::reduce_rational(&m.a, prime)?,
        b: ModRing::reduce_rational(&m.b, prime)?,
    })
}

/// Remainder of `p` modulo the trinomial, choosing synthetic division when
/// `deg p <= dense_cap` and quotient-ring powering otherwise.
pub fn reduce_mod_trinomial_with(
    p: &SparseUniPoly,
    m: &TrinomialModulus,
    mode: ResidueMode,
    dense_cap: u64,
) -> Result<Reduction> {
    match mode {
        ResidueMode::Exact => {
            let ring = exact_ring(m);
            let (coeffs, ring_mults, strategy) = reduce_in(&ring, p.terms(), Rational::one(), dense_cap);
            Ok(Reduction { residue: TrinomialResidue::Exact(coeffs), ring_mults, strategy })
        }
        ResidueMode::Modular(prime) => {
            let ring = mod_ring(m, prime)?;
            let terms = p
                .terms()
                .iter()
                .map(|(e, c)| Ok((*e, ModRing::reduce_rational(c, prime)?)))
                .collect::<Result<Vec<_>>>()?;
            let (coeffs, ring_mults, strategy) = reduce_in(&ring, &terms, 1, dense_cap);
            Ok(Reduction { residue: TrinomialResidue::Modular { prime, coeffs }, ring_mults, strategy })
        }
    }
}

/// Remainder of `p` modulo `x^n - a*x - b` with the default dense cap.
pub fn reduce_mod_trinomial(p: &SparseUniPoly, m: &TrinomialModulus, mode: ResidueMode) -> Result<TrinomialResidue> {
    reduce_mod_trinomial_with(p, m, mode, DEFAULT_DENSE_CAP).map(|r| r.residue)
}

/// Remainder computed by quotient-ring powering regardless of degree.
pub fn reduce_by_powering(p: &SparseUniPoly, m: &TrinomialModulus, mode: ResidueMode) -> Result<Reduction> {
    reduce_mod_trinomial_with(p, m, mode, 0)
}

/// Outcome of one trinomial divisibility check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrinomialCheck {
    pub divides: bool,
    pub mode: Mode,
    pub primes: Vec<u64>,
    pub ring_mults: u64,
    pub strategy: Strategy,
}

const BAD_PRIME_RETRIES: u32 = 32;

fn check_with_rng(
    p: &SparseUniPoly,
    m: &TrinomialModulus,
    cfg: &TestConfig,
    rng: &mut ChaCha8Rng,
) -> Result<TrinomialCheck> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mode = match cfg.mode {
        Mode::Auto if p.degree().unwrap_or(0) <= AUTO_EXACT_LIMIT => Mode::Exact,
        Mode::Auto => Mode::Modular,
        other => other,
    };
    if mode == Mode::Exact {
        let r = reduce_mod_trinomial_with(p, m, ResidueMode::Exact, cfg.dense_cap)?;
        return Ok(TrinomialCheck {
            divides: r.residue.is_zero(),
            mode,
            primes: Vec::new(),
            ring_mults: r.ring_mults,
            strategy: r.strategy,
        });
    }
    let mut check =
        TrinomialCheck { divides: true, mode, primes: Vec::new(), ring_mults: 0, strategy: Strategy::Division };
    for _ in 0..cfg.prime_count {
        let mut attempts = 0;
        let reduction = loop {
            let prime = random_prime(rng, cfg.prime_bits);
            match reduce_mod_trinomial_with(p, m, ResidueMode::Modular(prime), cfg.dense_cap) {
                Ok(r) => {
                    check.primes.push(prime);
                    break r;
                }
                Err(Error::BadPrime(bad)) => {
                    attempts += 1;
                    if attempts > BAD_PRIME_RETRIES {
                        return Err(Error::BadPrime(bad));
                    }
                }
                Err(e) => return Err(e),
            }
        };
        check.ring_mults += reduction.ring_mults;
        check.strategy = reduction.strategy;
        if !reduction.residue.is_zero() {
            check.divides = false;
            break;
        }
    }
    Ok(check)
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Whether `x^n - a*x - b` divides `p`: exact, or one-sided Monte Carlo
/// over `cfg.prime_count` random primes.
pub fn check_trinomial_divisibility(
    p: &SparseUniPoly,
    m: &TrinomialModulus,
    cfg: &TestConfig,
) -> Result<TrinomialCheck> {
    cfg.validate()?;
    check_with_rng(p, m, cfg, &mut rng_for(cfg.rng_seed, m.n))
}

pub fn divides_trinomial(p: &SparseUniPoly, m: &TrinomialModulus, cfg: &TestConfig) -> Result<bool> {
    check_trinomial_divisibility(p, m, cfg).map(|c| c.divides)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NStatus {
    /// `f(x, x^n) = 0`; the trinomial divides it trivially.
    ZeroSpecialization,
    Divides,
    NotDivides,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NOutcome {
    pub n: u64,
    pub status: NStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<TrinomialCheck>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    /// `f = 0`.
    ZeroPolynomial,
    /// `(a, b) = (0, ±1)`, decided by `f(x, b) = 0`.
    HorizontalLine,
    /// The specialization loop.
    Specializations,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TestReport {
    pub divides: bool,
    pub decided_by: Decision,
    pub t: usize,
    pub line: Line,
    /// The reflection `f(x, y) -> f(-x, y)`, `a -> -a` was applied.
    pub reflected: bool,
    pub mode: Mode,
    pub outcomes: Vec<NOutcome>,
    pub ring_mults: u64,
}

/// Decides `y - a*x - b | f`, recording the outcome for every `n` visited.
pub fn test_linear_factor_report(f: &SparseBiPoly, line: &Line, cfg: &TestConfig) -> Result<TestReport> {
    cfg.validate()?;
    let mut report = TestReport {
        divides: true,
        decided_by: Decision::ZeroPolynomial,
        t: f.t(),
        line: line.clone(),
        reflected: false,
        mode: cfg.mode,
        outcomes: Vec::new(),
        ring_mults: 0,
    };
    if f.is_zero() {
        return Ok(report);
    }

    if line.a.is_zero() && line.b.abs().is_one() {
        report.decided_by = Decision::HorizontalLine;
        report.divides = f.substitute_y(&line.b).is_zero();
        return Ok(report);
    }

    let mut f = f.clone();
    let mut a = line.a.clone();
    let b = line.b.clone();
    if b.abs() == (Rational::one() - &a).abs() {
        f = f.negate_x();
        a = -a;
        report.reflected = true;
        if b.abs() == (Rational::one() - &a).abs() {
            return Err(Error::Internal("reflected line still has |b| = |1 - a|".into()));
        }
    }

    report.decided_by = Decision::Specializations;
    for n in odd_range(f.t()) {
        let p = specialize(&f, n)?;
        if p.is_zero() {
            report.outcomes.push(NOutcome { n, status: NStatus::ZeroSpecialization, check: None });
            continue;
        }
        let modulus = TrinomialModulus::new(n, a.clone(), b.clone())?;
        let check = check_with_rng(&p, &modulus, cfg, &mut rng_for(cfg.rng_seed, n))?;
        report.ring_mults += check.ring_mults;
        let divides = check.divides;
        let status = if divides { NStatus::Divides } else { NStatus::NotDivides };
        report.outcomes.push(NOutcome { n, status, check: Some(check) });
        if !divides {
            report.divides = false;
            return Ok(report);
        }
    }
    Ok(report)
}

/// Whether `y - a*x - b` divides `f`. Exact mode never errs; modular mode
/// may accept wrongly with small probability and never rejects wrongly.
pub fn test_linear_factor(f: &SparseBiPoly, line: &Line, cfg: &TestConfig) -> Result<bool> {
    test_linear_factor_report(f, line, cfg).map(|r| r.divides)
}

/// Ground truth at desk scale: `y - a*x - b | f` iff `f(x, a*x + b) = 0`.
pub fn oracle_divides(f: &SparseBiPoly, line: &Line, cap: u64) -> Result<bool> {
    Ok(restrict_to_line(f, line, cap)?.is_zero())
}

/// Whether `x - c` divides `f`, i.e. `f(c, y) = 0`. Each power of `y` is
/// checked separately as `sum coeff * c^(alpha - alpha_min)`; when
/// `|c| != 0, 1` the spread of `alpha` within a group must not exceed `cap`.
pub fn divides_vertical(f: &SparseBiPoly, c: &Rational, cap: u64) -> Result<bool> {
    if c.is_zero() || c.abs().is_one() {
        return Ok(f.substitute_x(c).is_zero());
    }
    let mut terms: Vec<_> = f.terms().iter().collect();
    terms.sort_by_key(|t| (t.beta, t.alpha));
    for group in terms.chunk_by(|p, q| p.beta == q.beta) {
        let lowest = group[0].alpha;
        let spread = group[group.len() - 1].alpha - lowest;
        if spread > cap {
            return Err(Error::DegreeCapExceeded { degree: spread, cap });
        }
        let sum: Rational = group.iter().map(|t| &t.coeff * rational::pow_u64(c, t.alpha - lowest)).sum();
        if !sum.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
