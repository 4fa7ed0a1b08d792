//! Sign variations and the Descartes bound on positive roots.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::SparseUniPoly;
use crate::rational;

/// Number of sign changes in the coefficient sequence. The zero polynomial
/// has the value `-2`, which keeps `V(p + q) <= V(p) + 2 * terms(q)` true
/// when `p + q` cancels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SignVariationCount(i64);

impl SignVariationCount {
    pub const ZERO_POLY: Self = Self(-2);

    pub fn value(self) -> i64 {
        self.0
    }
}

impl fmt::Display for SignVariationCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Counts adjacent sign changes over the stored (nonzero) coefficients.
/// Runs in `O(t)` regardless of degree.
pub fn sign_variations(p: &SparseUniPoly) -> SignVariationCount {
    if p.is_zero() {
        return SignVariationCount::ZERO_POLY;
    }
    let changes = p.terms().windows(2).filter(|w| rational::sign(&w[0].1) != rational::sign(&w[1].1)).count();
    SignVariationCount(changes as i64)
}

/// Upper bound on the number of positive roots of `p`, with multiplicity.
pub fn descartes_positive_bound(p: &SparseUniPoly) -> Result<u64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(sign_variations(p).value() as u64)
}
