//! Exact rationals.
//!
//! `BigRational` already keeps fractions reduced with a positive denominator
//! and represents zero as `0/1`, so it is used directly.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"num/den"` or a bare integer `"num"`. The denominator must be nonzero.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical wire form, always `"num/den"`.
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// `max(|num|, den)` of a reduced fraction.
pub fn rational_height(value: &Rational) -> BigInt {
    let num = value.numer().abs();
    if &num > value.denom() {
        num
    } else {
        value.denom().clone()
    }
}

pub fn sign(value: &Rational) -> i32 {
    match value.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// `base^exp` for an unsigned exponent. `0^0 = 1`.
pub fn pow_u64(base: &Rational, exp: u64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    if base.is_zero() {
        return Rational::zero();
    }
    if base.is_one() {
        return Rational::one();
    }
    if *base == -Rational::one() {
        return if exp.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    }
    let mut result = Rational::one();
    let mut acc = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= &acc;
        }
        e >>= 1;
        if e > 0 {
            acc = &acc * &acc;
        }
    }
    result
}

/// `base^exp` for a signed exponent; `base` must be nonzero when `exp < 0`.
pub fn pow_i64(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        pow_u64(base, exp as u64)
    } else {
        pow_u64(&base.recip(), exp.unsigned_abs())
    }
}

/// Serde adapter writing a rational as its `"num/den"` string.
pub mod serde_str {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(de::Error::custom)
    }
}

/// Serde adapter for exponents: written as decimal strings, read from either
/// strings or JSON integers.
pub mod serde_exponent {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use crate::poly::MAX_EXPONENT;

    pub fn serialize<S: Serializer>(value: &u64, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_string())
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Text(String),
        Number(u64),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<u64, D::Error> {
        let value = match Raw::deserialize(deserializer)? {
            Raw::Text(t) => t.trim().parse::<u64>().map_err(|_| de::Error::custom(format!("bad exponent {t:?}")))?,
            Raw::Number(n) => n,
        };
        if value > MAX_EXPONENT {
            return Err(de::Error::custom("exponent overflow: value does not fit in 63 bits"));
        }
        Ok(value)
    }
}
