use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{power_text, write_sum};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Coefficient vector indexed by exponent. Trailing zeros are trimmed, so the
/// zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DenseUniPoly {
    coeffs: Vec<Rational>,
}

impl DenseUniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `slope * x + intercept`.
    pub fn linear(slope: Rational, intercept: Rational) -> Self {
        Self::new(vec![intercept, slope])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut result = Self::constant(Rational::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(BigInt::from(i))).collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &q * d;
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("exact division left a remainder".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r.primitive_scaled();
        }
        a.monic()
    }

    /// Positive rational multiple with coprime integer coefficients. Keeps
    /// coefficient size down in Euclidean remainder sequences.
    fn primitive_scaled(&self) -> Self {
        match self.primitive_integer_coeffs() {
            Some(ints) => Self::new(ints.into_iter().map(Rational::from_integer).collect()),
            None => Self::zero(),
        }
    }

    /// Integer coefficients of the positive multiple of `self` whose
    /// coefficients are coprime integers. `None` for the zero polynomial.
    pub fn primitive_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() {
            return None;
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Some(ints.into_iter().map(|c| c / &content).collect())
    }

    pub fn from_integer_coeffs(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Number of exact roots at `point`, i.e. the largest `m` with
    /// `(x - point)^m | self`. Zero for the zero polynomial.
    pub fn root_multiplicity(&self, point: &Rational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let factor = Self::linear(Rational::one(), -point);
        let mut current = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = current.div_rem(&factor).expect("nonzero divisor");
            if !r.is_zero() {
                return m;
            }
            current = q;
            m += 1;
        }
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }
}

impl Add<&DenseUniPoly> for &DenseUniPoly {
    type Output = DenseUniPoly;

    fn add(self, other: &DenseUniPoly) -> DenseUniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        DenseUniPoly::new(
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)).collect(),
        )
    }
}

impl Sub<&DenseUniPoly> for &DenseUniPoly {
    type Output = DenseUniPoly;

    fn sub(self, other: &DenseUniPoly) -> DenseUniPoly {
        self + &(-other)
    }
}

impl Neg for &DenseUniPoly {
    type Output = DenseUniPoly;

    fn neg(self) -> DenseUniPoly {
        DenseUniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul<&DenseUniPoly> for &DenseUniPoly {
    type Output = DenseUniPoly;

    fn mul(self, other: &DenseUniPoly) -> DenseUniPoly {
        if self.is_zero() || other.is_zero() {
            return DenseUniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DenseUniPoly::new(out)
    }
}

impl fmt::Display for DenseUniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (c, power_text('x', e as u64).unwrap_or_default())),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct DenseWire {
    coeffs: Vec<String>,
}

impl Serialize for DenseUniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DenseWire { coeffs: self.coeffs.iter().map(rational::format_rational).collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DenseUniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = DenseWire::deserialize(deserializer)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|c| rational::parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(DenseUniPoly::new(coeffs))
    }
}
