//! Sparse and dense polynomial representations.

mod dense;
mod sparse_bi;
mod sparse_uni;

pub use dense::DenseUniPoly;
pub use sparse_bi::{BiTerm, SparseBiPoly};
pub use sparse_uni::SparseUniPoly;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest admissible exponent, `2^63 - 1`.
pub const MAX_EXPONENT: u64 = (1 << 63) - 1;

/// Default bound on dense expansion degree.
pub const DEFAULT_DENSE_CAP: u64 = 100_000;

pub(crate) fn check_exponent(e: u64) -> Result<u64> {
    if e > MAX_EXPONENT {
        Err(Error::ExponentOverflow)
    } else {
        Ok(e)
    }
}

pub(crate) fn add_exponents(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::ExponentOverflow).and_then(check_exponent)
}

/// Writes `terms` (coefficient, monomial text) as a `+`/`-` separated sum that
/// the expression parser reads back. An empty monomial is the constant term.
pub(crate) fn write_sum<'a, I>(f: &mut std::fmt::Formatter<'_>, terms: I) -> std::fmt::Result
where
    I: IntoIterator<Item = (&'a Rational, String)>,
{
    let mut first = true;
    for (coeff, monomial) in terms {
        let negative = coeff.is_negative();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        let magnitude = coeff.abs();
        if monomial.is_empty() {
            write!(f, "{}", magnitude)?;
        } else if magnitude.is_one() {
            f.write_str(&monomial)?;
        } else {
            write!(f, "{}*{}", magnitude, monomial)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn power_text(var: char, e: u64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}
