//! Restriction of a bivariate polynomial to a line `y = a*x + b` and the
//! `6t - 4` bound on the real roots of the restriction.
//!
//! For `a, b != 0` the roots of `g(x) = f(x, a*x + b)` split into three
//! open intervals around the special points `0` and `-b/a`. Each interval
//! is carried onto the positive half-line of some `h(x, x + 1)`:
//!
//! * [`hat_transform`] rescales so the line becomes `y = x + 1`;
//! * [`reflect_transform`] maps `(-inf, -1)` onto `(0, inf)`;
//! * [`moebius_transform`] maps `(-1, 0)` onto `(0, inf)`.
//!
//! Each transformed polynomial has at most `2t - 2` sign variations after
//! the substitution `y = x + 1`, which gives the bound.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{add_exponents, DenseUniPoly, SparseBiPoly};
use crate::rational::{self, Rational};
use crate::realroots::{count_with_multiplicity, Endpoint};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Line {
    #[serde(with = "rational::serde_str")]
    pub a: Rational,
    #[serde(with = "rational::serde_str")]
    pub b: Rational,
}

impl Line {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(rational::int(a), rational::int(b))
    }

    /// `a*x + b` as a polynomial in `x`.
    pub fn as_poly(&self) -> DenseUniPoly {
        DenseUniPoly::linear(self.a.clone(), self.b.clone())
    }

    /// Points whose multiplicity is ignored: `0` and `-b/a`, merged when
    /// they coincide and reduced to `0` alone when `a = 0`.
    pub fn special_points(&self) -> Vec<Rational> {
        if self.a.is_zero() || self.b.is_zero() {
            vec![Rational::zero()]
        } else {
            vec![Rational::zero(), -&self.b / &self.a]
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a.is_zero() || self.b.is_zero()
    }
}

/// `g(x) = f(x, a*x + b)` expanded densely.
///
/// Terms are grouped by their `y` exponent and combined from the top level
/// down, `acc <- acc * (a*x + b)^(gap) + a_k(x)`, so powers of the linear
/// form are shared between terms.
pub fn restrict_to_line(f: &SparseBiPoly, line: &Line, cap: u64) -> Result<DenseUniPoly> {
    let Some(degree) = f.total_degree() else {
        return Ok(DenseUniPoly::zero());
    };
    if degree > cap {
        return Err(Error::DegreeCapExceeded { degree, cap });
    }
    let mut levels: BTreeMap<u64, Vec<Rational>> = BTreeMap::new();
    for term in f.terms() {
        let row = levels.entry(term.beta).or_default();
        let alpha = term.alpha as usize;
        if row.len() <= alpha {
            row.resize(alpha + 1, Rational::zero());
        }
        row[alpha] += &term.coeff;
    }
    let linear = line.as_poly();
    let mut powers: HashMap<u64, DenseUniPoly> = HashMap::new();
    let mut power = |gap: u64| powers.entry(gap).or_insert_with(|| linear.pow(gap)).clone();

    let mut iter = levels.into_iter().rev();
    let (mut beta, top) = iter.next().expect("nonzero polynomial has a level");
    let mut acc = DenseUniPoly::new(top);
    for (next_beta, row) in iter {
        acc = &(&acc * &power(beta - next_beta)) + &DenseUniPoly::new(row);
        beta = next_beta;
    }
    Ok(&acc * &power(beta))
}

/// `f(x, x + 1)`.
pub fn on_unit_line(f: &SparseBiPoly, cap: u64) -> Result<DenseUniPoly> {
    restrict_to_line(f, &Line::from_ints(1, 1), cap)
}

/// `f_hat` with `f(b*x/a, b*(x + 1)) = f_hat(x, x + 1)`: coefficients become
/// `c * a^(-alpha) * b^(alpha + beta)`.
pub fn hat_transform(f: &SparseBiPoly, line: &Line) -> Result<SparseBiPoly> {
    if line.is_degenerate() {
        return Err(Error::DegenerateLine);
    }
    let a_inv = line.a.recip();
    f.map_terms(|t| {
        let c = &t.coeff
            * rational::pow_u64(&a_inv, t.alpha)
            * rational::pow_u64(&line.b, t.alpha)
            * rational::pow_u64(&line.b, t.beta);
        Ok((c, t.alpha, t.beta))
    })
}

/// `f_1 = sum c * (-1)^(alpha + beta) * x^beta * y^alpha`, so that
/// `g(-1 - x) = f_1(x, x + 1)` on the line `y = x + 1`.
pub fn reflect_transform(f: &SparseBiPoly) -> SparseBiPoly {
    f.map_terms(|t| {
        let c = if (t.alpha % 2) ^ (t.beta % 2) == 1 { -&t.coeff } else { t.coeff.clone() };
        Ok((c, t.beta, t.alpha))
    })
    .expect("swapping exponents cannot overflow")
}

/// `f_2 = sum c * (-1)^alpha * x^alpha * y^(D - alpha - beta)` with
/// `D = max(alpha + beta)`, so that
/// `(x + 1)^D * g(-x / (x + 1)) = f_2(x, x + 1)` on the line `y = x + 1`.
pub fn moebius_transform(f: &SparseBiPoly) -> Result<SparseBiPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let top = f.terms().iter().map(|t| t.alpha as u128 + t.beta as u128).max().unwrap();
    f.map_terms(|t| {
        let c = if t.alpha % 2 == 1 { -&t.coeff } else { t.coeff.clone() };
        let rest = top - (t.alpha as u128 + t.beta as u128);
        let beta = u64::try_from(rest).map_err(|_| Error::ExponentOverflow)?;
        Ok((c, t.alpha, add_exponents(beta, 0)?))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialRoot {
    #[serde(with = "rational::serde_str")]
    pub root: Rational,
    pub present: bool,
}

/// Real-root count of `f` on a line, next to the `6t - 4` bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootCountReport {
    pub identically_zero: bool,
    pub count: Option<u64>,
    /// `6t - 4`.
    pub bound: i64,
    /// `2t - 1`, valid when `a = 0` or `b = 0`.
    pub sharper_bound: Option<i64>,
    pub t: usize,
    pub special_roots: Vec<SpecialRoot>,
}

impl RootCountReport {
    pub fn within_bound(&self) -> bool {
        self.identically_zero || self.count.is_some_and(|c| (c as i64) <= self.bound)
    }
}

pub fn six_t_minus_four(t: usize) -> i64 {
    6 * t as i64 - 4
}

/// Counts the real roots of `f(x, a*x + b)` with multiplicity, except that
/// `0` and `-b/a` count at most once each.
pub fn count_roots_on_line(f: &SparseBiPoly, line: &Line, cap: u64) -> Result<RootCountReport> {
    let g = restrict_to_line(f, line, cap)?;
    let t = f.t();
    let points = line.special_points();
    let identically_zero = g.is_zero();
    let special_roots = points
        .iter()
        .map(|r| SpecialRoot { root: r.clone(), present: identically_zero || g.eval(r).is_zero() })
        .collect();
    let count = if identically_zero {
        None
    } else {
        Some(count_with_multiplicity(&g, &Endpoint::NegInf, &Endpoint::PosInf, &points)?)
    };
    Ok(RootCountReport {
        identically_zero,
        count,
        bound: six_t_minus_four(t),
        sharper_bound: line.is_degenerate().then(|| 2 * t as i64 - 1),
        t,
        special_roots,
    })
}

/// `(x + 1)^k` as a dense polynomial; used to compare transformed
/// restrictions.
pub fn x_plus_one_pow(k: u64) -> DenseUniPoly {
    DenseUniPoly::linear(Rational::one(), Rational::one()).pow(k)
}
