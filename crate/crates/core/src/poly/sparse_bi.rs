use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{add_exponents, check_exponent, power_text, write_sum, SparseUniPoly};
use crate::error::Result;
use crate::rational::{self, Rational};

/// One monomial `coeff * x^alpha * y^beta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiTerm {
    pub coeff: Rational,
    pub alpha: u64,
    pub beta: u64,
}

/// Bivariate polynomial as a term list sorted by `(alpha, beta)`, with
/// distinct exponent pairs and no zero coefficients. The number of terms is
/// the `t` of the root bound and of the divisibility test.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseBiPoly {
    terms: Vec<BiTerm>,
}

impl SparseBiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new<I>(raw_terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, u64, u64)>,
    {
        let mut merged: BTreeMap<(u64, u64), Rational> = BTreeMap::new();
        for (c, alpha, beta) in raw_terms {
            check_exponent(alpha)?;
            check_exponent(beta)?;
            *merged.entry((alpha, beta)).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(merged))
    }

    fn from_map(merged: BTreeMap<(u64, u64), Rational>) -> Self {
        Self {
            terms: merged
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((alpha, beta), coeff)| BiTerm { coeff, alpha, beta })
                .collect(),
        }
    }

    pub fn monomial(coeff: Rational, alpha: u64, beta: u64) -> Result<Self> {
        Self::new([(coeff, alpha, beta)])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_map(BTreeMap::from([((0, 0), c)]))
    }

    /// `y - a*x - b`.
    pub fn linear_form(a: &Rational, b: &Rational) -> Self {
        Self::from_map(BTreeMap::from([((0, 0), -b), ((0, 1), Rational::one()), ((1, 0), -a)]))
    }

    pub fn terms(&self) -> &[BiTerm] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn t(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `max(alpha + beta)` over the terms, `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        // alpha + beta may exceed 63 bits; saturate, callers compare against caps.
        self.terms.iter().map(|t| t.alpha.saturating_add(t.beta)).max()
    }

    pub fn max_alpha(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.alpha).max()
    }

    pub fn max_beta(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.beta).max()
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut acc: BTreeMap<(u64, u64), Rational> = BTreeMap::new();
        for p in &self.terms {
            for q in &other.terms {
                let key = (add_exponents(p.alpha, q.alpha)?, add_exponents(p.beta, q.beta)?);
                *acc.entry(key).or_insert_with(Rational::zero) += &p.coeff * &q.coeff;
            }
        }
        Ok(Self::from_map(acc))
    }

    pub fn checked_pow(&self, exp: u64) -> Result<Self> {
        let mut result = Self::constant(Rational::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_map(self.terms.iter().map(|t| ((t.alpha, t.beta), &t.coeff * factor)).collect())
    }

    /// Rebuilds the polynomial with every term mapped through `map`.
    pub fn map_terms<F>(&self, mut map: F) -> Result<Self>
    where
        F: FnMut(&BiTerm) -> Result<(Rational, u64, u64)>,
    {
        let mapped = self.terms.iter().map(&mut map).collect::<Result<Vec<_>>>()?;
        Self::new(mapped)
    }

    /// `f(-x, y)`: negates the coefficients of terms with odd `alpha`.
    pub fn negate_x(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| BiTerm { coeff: if t.alpha % 2 == 1 { -&t.coeff } else { t.coeff.clone() }, ..*t })
                .collect(),
        }
    }

    /// `f(x, c)` as a polynomial in `x`. Exact; the cost of `c^beta` grows
    /// with `beta` unless `c` is `0` or `±1`.
    pub fn substitute_y(&self, c: &Rational) -> SparseUniPoly {
        let mut merged: BTreeMap<u64, Rational> = BTreeMap::new();
        for t in &self.terms {
            *merged.entry(t.alpha).or_insert_with(Rational::zero) += &t.coeff * rational::pow_u64(c, t.beta);
        }
        SparseUniPoly::from_sorted_unchecked(merged)
    }

    /// `f(c, y)` as a polynomial in `y`, with the same cost caveat.
    pub fn substitute_x(&self, c: &Rational) -> SparseUniPoly {
        let mut merged: BTreeMap<u64, Rational> = BTreeMap::new();
        for t in &self.terms {
            *merged.entry(t.beta).or_insert_with(Rational::zero) += &t.coeff * rational::pow_u64(c, t.alpha);
        }
        SparseUniPoly::from_sorted_unchecked(merged)
    }

    pub fn height(&self) -> BigInt {
        self.terms.iter().map(|t| rational::rational_height(&t.coeff)).max().unwrap_or_else(BigInt::one)
    }
}

impl Add<&SparseBiPoly> for &SparseBiPoly {
    type Output = SparseBiPoly;

    fn add(self, other: &SparseBiPoly) -> SparseBiPoly {
        let mut acc: BTreeMap<(u64, u64), Rational> = BTreeMap::new();
        for t in self.terms.iter().chain(&other.terms) {
            *acc.entry((t.alpha, t.beta)).or_insert_with(Rational::zero) += &t.coeff;
        }
        SparseBiPoly::from_map(acc)
    }
}

impl Neg for &SparseBiPoly {
    type Output = SparseBiPoly;

    fn neg(self) -> SparseBiPoly {
        SparseBiPoly { terms: self.terms.iter().map(|t| BiTerm { coeff: -&t.coeff, ..*t }).collect() }
    }
}

impl Sub<&SparseBiPoly> for &SparseBiPoly {
    type Output = SparseBiPoly;

    fn sub(self, other: &SparseBiPoly) -> SparseBiPoly {
        self + &(-other)
    }
}

impl fmt::Display for SparseBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Highest total degree first, then by descending x power.
        let mut order: Vec<&BiTerm> = self.terms.iter().collect();
        order.sort_by(|p, q| {
            (q.alpha as u128 + q.beta as u128, q.alpha).cmp(&(p.alpha as u128 + p.beta as u128, p.alpha))
        });
        write_sum(
            f,
            order.into_iter().map(|t| {
                let parts: Vec<String> =
                    [power_text('x', t.alpha), power_text('y', t.beta)].into_iter().flatten().collect();
                (&t.coeff, parts.join("*"))
            }),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct BiTermWire {
    #[serde(with = "rational::serde_str")]
    c: Rational,
    #[serde(with = "rational::serde_exponent")]
    a: u64,
    #[serde(with = "rational::serde_exponent")]
    b: u64,
}

#[derive(Serialize, Deserialize)]
struct BiWire {
    terms: Vec<BiTermWire>,
}

impl Serialize for SparseBiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BiWire { terms: self.terms.iter().map(|t| BiTermWire { c: t.coeff.clone(), a: t.alpha, b: t.beta }).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SparseBiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = BiWire::deserialize(deserializer)?;
        SparseBiPoly::new(wire.terms.into_iter().map(|t| (t.c, t.a, t.b))).map_err(serde::de::Error::custom)
    }
}
