//! Exact real-root counting for dense rational polynomials.
//!
//! Sturm chains are computed over the integers with the subresultant
//! pseudo-remainder sequence. Each element is a known-sign multiple of the
//! classical chain `p, p', -rem(p, p'), ...`; the sign is tracked and folded
//! back in, so sign variations agree with the textbook chain while
//! coefficient growth stays polynomial. Multiplicities come from Yun's
//! squarefree decomposition.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::DenseUniPoly;
use crate::rational::Rational;

/// Interval endpoint on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Endpoint {
    fn rank(&self) -> u8 {
        match self {
            Endpoint::NegInf => 0,
            Endpoint::Finite(_) => 1,
            Endpoint::PosInf => 2,
        }
    }

    /// Whether `point` lies in the half-open interval `(lo, hi]`.
    pub fn contains(lo: &Endpoint, hi: &Endpoint, point: &Rational) -> bool {
        let above_lo = match lo {
            Endpoint::NegInf => true,
            Endpoint::Finite(l) => point > l,
            Endpoint::PosInf => false,
        };
        let below_hi = match hi {
            Endpoint::NegInf => false,
            Endpoint::Finite(h) => point <= h,
            Endpoint::PosInf => true,
        };
        above_lo && below_hi
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Endpoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl From<Rational> for Endpoint {
    fn from(value: Rational) -> Self {
        Endpoint::Finite(value)
    }
}

// Integer polynomial helpers. Coefficients are indexed by exponent and the
// vector is kept trimmed (no trailing zeros).

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn int_derivative(p: &[BigInt]) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    trim(&mut d);
    d
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`, computed fraction-free.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut remaining = (a.len() - b.len() + 1) as u32;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        trim(&mut r);
        remaining -= 1;
    }
    if remaining > 0 && !r.is_empty() {
        let factor = num_traits::pow(lb.clone(), remaining as usize);
        for c in r.iter_mut() {
            *c *= &factor;
        }
    }
    r
}

fn exact_div_scalar(p: &mut [BigInt], d: &BigInt) {
    for c in p.iter_mut() {
        let (q, r) = c.div_rem(d);
        debug_assert!(r.is_zero(), "subresultant division must be exact");
        *c = q;
    }
}

fn sign_of(v: &BigInt) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `p(num/den)` for `den > 0`, via the homogenized Horner scheme.
fn sign_at(p: &[BigInt], num: &BigInt, den: &BigInt) -> i32 {
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * num + c * &den_pow;
        den_pow *= den;
    }
    sign_of(&acc)
}

fn sign_at_endpoint(p: &[BigInt], at: &Endpoint) -> i32 {
    let lc = sign_of(p.last().expect("chain elements are nonzero"));
    match at {
        Endpoint::PosInf => lc,
        Endpoint::NegInf => {
            if (p.len() - 1).is_multiple_of(2) {
                lc
            } else {
                -lc
            }
        }
        Endpoint::Finite(r) => sign_at(p, r.numer(), r.denom()),
    }
}

fn primitive_ints(p: &DenseUniPoly) -> Result<Vec<BigInt>> {
    p.primitive_integer_coeffs().ok_or(Error::ZeroPolynomial)
}

/// Subresultant remainder sequence of `a, b` (`deg a >= deg b`, `b != 0`),
/// each entry paired with the sign `s` such that `s * entry` is a positive
/// multiple of the corresponding element of the negated-remainder sequence.
fn signed_subresultant_prs(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<(Vec<BigInt>, i32)> {
    let mut seq = vec![(a, 1), (b, 1)];
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let n = seq.len();
        let (a, sign_a) = (&seq[n - 2].0, seq[n - 2].1);
        let b = &seq[n - 1].0;
        if b.len() == 1 {
            break;
        }
        let delta = (a.len() - b.len()) as u32;
        let mut r = pseudo_rem(a, b);
        if r.is_empty() {
            break;
        }
        let divisor = &g * num_traits::pow(h.clone(), delta as usize);
        exact_div_scalar(&mut r, &divisor);

        let lb = b.last().unwrap().clone();
        let lb_sign = if (delta + 1).is_multiple_of(2) { 1 } else { sign_of(&lb) };
        let sign_r = -lb_sign * sign_a * sign_of(&divisor);

        let next_g = lb;
        let next_h = if delta == 1 {
            next_g.clone()
        } else {
            let num = num_traits::pow(next_g.clone(), delta as usize);
            let den = num_traits::pow(h.clone(), delta as usize - 1);
            debug_assert!((&num % &den).is_zero());
            num / den
        };
        g = next_g;
        h = next_h;
        seq.push((r, sign_r));
    }
    seq
}

/// Primitive integer gcd of two nonzero integer polynomials.
fn int_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let seq = signed_subresultant_prs(a.to_vec(), b.to_vec());
    let mut last = seq.into_iter().last().unwrap().0;
    let content = last.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    exact_div_scalar(&mut last, &content);
    if last.last().unwrap().is_negative() {
        for c in last.iter_mut() {
            *c = -&*c;
        }
    }
    last
}

/// Sturm chain `p, p', ...` of a nonzero polynomial, stored as integer
/// polynomials whose signs agree pointwise with the classical chain.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

impl SturmChain {
    pub fn new(p: &DenseUniPoly) -> Result<Self> {
        let base = primitive_ints(p)?;
        let deriv = int_derivative(&base);
        if deriv.is_empty() {
            return Ok(Self { chain: vec![base] });
        }
        let chain = signed_subresultant_prs(base, deriv)
            .into_iter()
            .map(|(mut poly, sign)| {
                if sign < 0 {
                    for c in poly.iter_mut() {
                        *c = -&*c;
                    }
                }
                poly
            })
            .collect();
        Ok(Self { chain })
    }

    /// Chain elements as rational polynomials.
    pub fn chain(&self) -> Vec<DenseUniPoly> {
        self.chain.iter().map(|c| DenseUniPoly::from_integer_coeffs(c)).collect()
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// `gcd(p, p')` is constant exactly when the chain ends in a constant.
    pub fn is_squarefree(&self) -> bool {
        self.chain.last().is_some_and(|c| c.len() == 1)
    }

    pub fn variations_at(&self, at: &Endpoint) -> u64 {
        let mut last = 0;
        let mut changes = 0;
        for poly in &self.chain {
            let s = sign_at_endpoint(poly, at);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Distinct roots in `(lo, hi]`; requires a squarefree polynomial.
    pub fn count(&self, lo: &Endpoint, hi: &Endpoint) -> Result<u64> {
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let (vl, vh) = (self.variations_at(lo), self.variations_at(hi));
        vl.checked_sub(vh).ok_or_else(|| Error::Internal("sign variations increased along the interval".into()))
    }
}

/// Number of distinct real roots of squarefree `p` in `(lo, hi]`.
pub fn sturm_count(p: &DenseUniPoly, lo: &Endpoint, hi: &Endpoint) -> Result<u64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    SturmChain::new(p)?.count(lo, hi)
}

/// `p = c * prod factor_i ^ multiplicity_i` with monic, squarefree, pairwise
/// coprime factors listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub factors: Vec<(DenseUniPoly, u32)>,
}

impl SquarefreeDecomposition {
    /// `prod factor^multiplicity`, i.e. the input made monic.
    pub fn product(&self) -> DenseUniPoly {
        self.factors.iter().fold(DenseUniPoly::constant(Rational::one()), |acc, (f, m)| &acc * &f.pow(u64::from(*m)))
    }

    pub fn multiplicity_of_root(&self, root: &Rational) -> u32 {
        self.factors.iter().find(|(f, _)| f.eval(root).is_zero()).map(|(_, m)| *m).unwrap_or(0)
    }
}

fn monic_from_ints(p: &[BigInt]) -> DenseUniPoly {
    DenseUniPoly::from_integer_coeffs(p).monic()
}

/// Yun's squarefree decomposition.
pub fn squarefree_decompose(p: &DenseUniPoly) -> Result<SquarefreeDecomposition> {
    let base = primitive_ints(p)?;
    let mut factors = Vec::new();
    if base.len() == 1 {
        return Ok(SquarefreeDecomposition { factors });
    }
    let deriv = int_derivative(&base);
    let a0 = monic_from_ints(&int_gcd(&base, &deriv));
    let f = monic_from_ints(&base);
    let fd = f.derivative();
    let mut b = f.exact_div(&a0)?;
    let mut c = fd.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut multiplicity = 1u32;
    while !b.is_constant() {
        let a = if d.is_zero() {
            b.clone()
        } else {
            let bi = primitive_ints(&b)?;
            let di = primitive_ints(&d)?;
            monic_from_ints(&int_gcd(&bi, &di))
        };
        if !a.is_constant() {
            factors.push((a.clone(), multiplicity));
        }
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        multiplicity += 1;
    }
    Ok(SquarefreeDecomposition { factors })
}

/// Real roots of `p` in `(lo, hi]` counted with multiplicity, except that
/// each root listed in `once_roots` contributes at most one.
pub fn count_with_multiplicity(p: &DenseUniPoly, lo: &Endpoint, hi: &Endpoint, once_roots: &[Rational]) -> Result<u64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    let chain = SturmChain::new(p)?;
    if chain.is_squarefree() {
        // Every root is simple, so the once-counted roots change nothing.
        return chain.count(lo, hi);
    }
    let decomposition = squarefree_decompose(p)?;
    let mut total = 0u64;
    for (factor, m) in &decomposition.factors {
        total += u64::from(*m) * SturmChain::new(factor)?.count(lo, hi)?;
    }
    let mut seen: Vec<&Rational> = Vec::new();
    for r in once_roots {
        if seen.contains(&r) || !Endpoint::contains(lo, hi, r) {
            continue;
        }
        seen.push(r);
        let m = decomposition.multiplicity_of_root(r);
        if m > 1 {
            total -= u64::from(m) - 1;
        }
    }
    Ok(total)
}
