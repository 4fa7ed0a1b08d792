//! Arithmetic in `K[x] / (x^n - a*x - b)` for `K = Q` and `K = Z/pZ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::primes::{inv_mod, mul_mod};
use crate::rational::Rational;

/// Residue ring modulo a trinomial over some coefficient field. Elements are
/// dense vectors of length `n`.
pub(crate) trait TrinomialRing {
    type Coeff: Clone;

    fn n(&self) -> usize;
    fn zero(&self) -> Self::Coeff;
    fn is_zero(&self, c: &Self::Coeff) -> bool;
    fn add_assign(&self, acc: &mut Self::Coeff, value: &Self::Coeff);
    fn mul(&self, x: &Self::Coeff, y: &Self::Coeff) -> Self::Coeff;
    fn a(&self) -> &Self::Coeff;
    fn b(&self) -> &Self::Coeff;
    /// Full product of two length-`n` vectors (length `2n - 1`).
    fn convolve_square(&self, x: &[Self::Coeff]) -> Vec<Self::Coeff>;

    fn basis(&self, k: usize, unit: Self::Coeff) -> Vec<Self::Coeff> {
        let mut v = vec![self.zero(); self.n()];
        v[k] = unit;
        v
    }

    /// Folds every coefficient of degree `>= n` back with `x^n = a*x + b`,
    /// from the top down; returns the first `n` entries.
    fn fold_high(&self, mut v: Vec<Self::Coeff>) -> Vec<Self::Coeff> {
        let n = self.n();
        for k in (n..v.len()).rev() {
            let c = std::mem::replace(&mut v[k], self.zero());
            if self.is_zero(&c) {
                continue;
            }
            let hi = self.mul(self.a(), &c);
            self.add_assign(&mut v[k - n + 1], &hi);
            let lo = self.mul(self.b(), &c);
            self.add_assign(&mut v[k - n], &lo);
        }
        v.truncate(n);
        v.resize(n, self.zero());
        v
    }

    fn square(&self, x: &[Self::Coeff]) -> Vec<Self::Coeff> {
        let full = self.convolve_square(x);
        self.fold_high(full)
    }

    /// In-place multiplication by `x`.
    fn mul_x(&self, v: &mut Vec<Self::Coeff>) {
        let top = v.pop().expect("residue has length n");
        v.insert(0, self.zero());
        if !self.is_zero(&top) {
            let hi = self.mul(self.a(), &top);
            self.add_assign(&mut v[1], &hi);
            v[0] = self.mul(self.b(), &top);
        }
    }

    fn add_scaled(&self, acc: &mut [Self::Coeff], v: &[Self::Coeff], scale: &Self::Coeff) {
        for (slot, value) in acc.iter_mut().zip(v) {
            if !self.is_zero(value) {
                let term = self.mul(value, scale);
                self.add_assign(slot, &term);
            }
        }
    }
}

pub(crate) struct ExactRing {
    pub n: usize,
    pub a: Rational,
    pub b: Rational,
}

impl TrinomialRing for ExactRing {
    type Coeff = Rational;

    fn n(&self) -> usize {
        self.n
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn is_zero(&self, c: &Rational) -> bool {
        c.is_zero()
    }
    fn add_assign(&self, acc: &mut Rational, value: &Rational) {
        *acc += value;
    }
    fn mul(&self, x: &Rational, y: &Rational) -> Rational {
        x * y
    }
    fn a(&self) -> &Rational {
        &self.a
    }
    fn b(&self) -> &Rational {
        &self.b
    }

    fn convolve_square(&self, x: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); 2 * x.len() - 1];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, xj) in x.iter().enumerate() {
                if !xj.is_zero() {
                    out[i + j] += xi * xj;
                }
            }
        }
        out
    }
}

pub(crate) struct ModRing {
    pub n: usize,
    pub p: u64,
    pub a: u64,
    pub b: u64,
}

impl ModRing {
    pub fn reduce_rational(value: &Rational, p: u64) -> Result<u64> {
        let modulus = BigInt::from(p);
        let den = value.denom().mod_floor(&modulus).to_u64().expect("reduced below p");
        let inv = inv_mod(den, p).ok_or(Error::BadPrime(p))?;
        let num = value.numer().mod_floor(&modulus).to_u64().expect("reduced below p");
        Ok(mul_mod(num, inv, p))
    }
}

impl TrinomialRing for ModRing {
    type Coeff = u64;

    fn n(&self) -> usize {
        self.n
    }
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, c: &u64) -> bool {
        *c == 0
    }
    fn add_assign(&self, acc: &mut u64, value: &u64) {
        let s = *acc + *value;
        *acc = if s >= self.p { s - self.p } else { s };
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        mul_mod(*x, *y, self.p)
    }
    fn a(&self) -> &u64 {
        &self.a
    }
    fn b(&self) -> &u64 {
        &self.b
    }

    // Products stay below 2^(2 * 50); sums of up to 2^27 of them fit in a
    // u128 accumulator, so each output is reduced once.
    fn convolve_square(&self, x: &[u64]) -> Vec<u64> {
        let n = x.len();
        let mut cross = vec![0u128; 2 * n - 1];
        for i in 0..n {
            let xi = x[i] as u128;
            if xi == 0 {
                continue;
            }
            for j in i + 1..n {
                cross[i + j] += xi * x[j] as u128;
            }
        }
        let p = self.p as u128;
        cross
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                let mut total = (c % p) * 2;
                if k % 2 == 0 {
                    let d = x[k / 2] as u128;
                    total += d * d % p;
                }
                (total % p) as u64
            })
            .collect()
    }
}
