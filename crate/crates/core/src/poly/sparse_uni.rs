use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{add_exponents, check_exponent, power_text, write_sum, DenseUniPoly};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Univariate polynomial stored as `(exponent, coefficient)` pairs with
/// strictly increasing exponents and no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseUniPoly {
    terms: Vec<(u64, Rational)>,
}

impl SparseUniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { terms: vec![(0, Rational::one())] }
    }

    /// Builds a normalized polynomial: duplicate exponents are merged, zero
    /// coefficients dropped and terms sorted by exponent.
    pub fn new<I>(raw_terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, Rational)>,
    {
        let mut merged: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e, c) in raw_terms {
            check_exponent(e)?;
            *merged.entry(e).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_sorted_unchecked(merged))
    }

    pub(crate) fn from_sorted_unchecked(merged: BTreeMap<u64, Rational>) -> Self {
        Self { terms: merged.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn monomial(coeff: Rational, exponent: u64) -> Result<Self> {
        Self::new([(exponent, coeff)])
    }

    pub fn terms(&self) -> &[(u64, Rational)] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect() }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                *acc.entry(add_exponents(*e1, *e2)?).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        Ok(Self::from_sorted_unchecked(acc))
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: u64) -> Result<Self> {
        let terms =
            self.terms.iter().map(|(e, c)| Ok((add_exponents(*e, shift)?, c.clone()))).collect::<Result<_>>()?;
        Ok(Self { terms })
    }

    /// Exact value at `point`. Cost grows with the exponents unless
    /// `point` is `0` or `±1`.
    pub fn eval(&self, point: &Rational) -> Rational {
        self.terms.iter().map(|(e, c)| c * rational::pow_u64(point, *e)).sum()
    }

    /// Dense coefficient vector; refuses degrees above `cap`.
    pub fn to_dense(&self, cap: u64) -> Result<DenseUniPoly> {
        let Some(degree) = self.degree() else {
            return Ok(DenseUniPoly::zero());
        };
        if degree > cap {
            return Err(Error::DegreeCapExceeded { degree, cap });
        }
        let mut coeffs = vec![Rational::zero(); degree as usize + 1];
        for (e, c) in &self.terms {
            coeffs[*e as usize] = c.clone();
        }
        Ok(DenseUniPoly::new(coeffs))
    }

    pub fn from_dense(p: &DenseUniPoly) -> Self {
        Self {
            terms: p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as u64, c.clone()))
                .collect(),
        }
    }

    /// Max over coefficients of `max(|num|, den)`; `1` for the zero polynomial.
    pub fn height(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| rational::rational_height(c)).max().unwrap_or_else(BigInt::one)
    }
}

impl Add<&SparseUniPoly> for &SparseUniPoly {
    type Output = SparseUniPoly;

    fn add(self, other: &SparseUniPoly) -> SparseUniPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                std::cmp::Ordering::Less => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let sum = ca + cb;
                    if !sum.is_zero() {
                        out.push((*ea, sum));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        SparseUniPoly { terms: out }
    }
}

impl Neg for &SparseUniPoly {
    type Output = SparseUniPoly;

    fn neg(self) -> SparseUniPoly {
        SparseUniPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub<&SparseUniPoly> for &SparseUniPoly {
    type Output = SparseUniPoly;

    fn sub(self, other: &SparseUniPoly) -> SparseUniPoly {
        self + &(-other)
    }
}

impl fmt::Display for SparseUniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().rev().map(|(e, c)| (c, power_text('x', *e).unwrap_or_default())))
    }
}

#[derive(Serialize, Deserialize)]
struct UniTermWire {
    #[serde(with = "rational::serde_str")]
    c: Rational,
    #[serde(with = "rational::serde_exponent")]
    e: u64,
}

#[derive(Serialize, Deserialize)]
struct UniWire {
    terms: Vec<UniTermWire>,
}

impl Serialize for SparseUniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        UniWire { terms: self.terms.iter().map(|(e, c)| UniTermWire { c: c.clone(), e: *e }).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SparseUniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = UniWire::deserialize(deserializer)?;
        SparseUniPoly::new(wire.terms.into_iter().map(|t| (t.e, t.c))).map_err(serde::de::Error::custom)
    }
}
