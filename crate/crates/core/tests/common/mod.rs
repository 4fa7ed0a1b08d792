#![allow(dead_code)]

use fewnomial::rational::{int, ratio};
use fewnomial::{DenseUniPoly, Rational, SparseBiPoly, SparseUniPoly};
use proptest::prelude::*;

pub fn coeff() -> impl Strategy<Value = Rational> {
    (-9i64..=9).prop_filter("nonzero", |c| *c != 0).prop_map(int)
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9, any::<bool>()).prop_map(|(n, d, neg)| ratio(if neg { -n } else { n }, d))
}

pub fn bi(max_terms: usize, max_exp: u64) -> impl Strategy<Value = SparseBiPoly> {
    prop::collection::vec((coeff(), 0..=max_exp, 0..=max_exp), 0..=max_terms)
        .prop_map(|terms| SparseBiPoly::new(terms).unwrap())
}

pub fn nonzero_bi(max_terms: usize, max_exp: u64) -> impl Strategy<Value = SparseBiPoly> {
    bi(max_terms, max_exp).prop_filter("nonzero", |f| !f.is_zero())
}

pub fn uni(max_terms: usize, max_exp: u64) -> impl Strategy<Value = SparseUniPoly> {
    prop::collection::vec((0..=max_exp, coeff()), 0..=max_terms).prop_map(|terms| SparseUniPoly::new(terms).unwrap())
}

/// `sum c * p^alpha * q^beta`, by repeated multiplication.
pub fn substitute(f: &SparseBiPoly, p: &DenseUniPoly, q: &DenseUniPoly) -> DenseUniPoly {
    let mut acc = DenseUniPoly::zero();
    for term in f.terms() {
        let mut product = DenseUniPoly::constant(term.coeff.clone());
        for _ in 0..term.alpha {
            product = &product * p;
        }
        for _ in 0..term.beta {
            product = &product * q;
        }
        acc = &acc + &product;
    }
    acc
}

pub fn x_plus(c: i64) -> DenseUniPoly {
    DenseUniPoly::from_ints(&[c, 1])
}
