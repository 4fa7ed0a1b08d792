mod common;

use common::{nonzero_bi, nonzero_rational, substitute, x_plus};
use fewnomial::descartes::sign_variations;
use fewnomial::line::{
    count_roots_on_line, hat_transform, moebius_transform, on_unit_line, reflect_transform, restrict_to_line,
};
use fewnomial::rational::int;
use fewnomial::realroots::{count_with_multiplicity, Endpoint};
use fewnomial::{DenseUniPoly, Line, Rational, SparseBiPoly, SparseUniPoly};
use proptest::prelude::*;

const CAP: u64 = 10_000;

/// `f(x, a*x + b)` expanded term by term with binomial coefficients.
fn binomial_restriction(f: &SparseBiPoly, line: &Line) -> DenseUniPoly {
    let degree = f.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::from_integer(0.into()); degree + 1];
    for term in f.terms() {
        let mut binom = int(1);
        for k in 0..=term.beta {
            let a_k = fewnomial::rational::pow_u64(&line.a, k);
            let b_rest = fewnomial::rational::pow_u64(&line.b, term.beta - k);
            coeffs[(term.alpha + k) as usize] += &term.coeff * &binom * a_k * b_rest;
            binom = binom * int((term.beta - k) as i64) / int(k as i64 + 1);
        }
    }
    DenseUniPoly::new(coeffs)
}

/// Roots with multiplicity in the open interval `(lo, hi)`, `lo` finite or
/// `-inf`, `hi` finite.
fn count_open(p: &DenseUniPoly, lo: &Endpoint, hi: &Rational) -> u64 {
    let closed = count_with_multiplicity(p, lo, &Endpoint::Finite(hi.clone()), &[]).unwrap();
    closed - p.root_multiplicity(hi) as u64
}

fn positive_roots(p: &DenseUniPoly) -> u64 {
    count_with_multiplicity(p, &Endpoint::Finite(int(0)), &Endpoint::PosInf, &[]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn restriction_matches_binomial_expansion(
        f in nonzero_bi(6, 12),
        a in nonzero_rational(),
        b in nonzero_rational(),
    ) {
        let line = Line::new(a, b);
        prop_assert_eq!(restrict_to_line(&f, &line, CAP).unwrap(), binomial_restriction(&f, &line));
    }

    #[test]
    fn restriction_matches_substitution(f in nonzero_bi(5, 8), a in -5i64..=5, b in -5i64..=5) {
        let line = Line::from_ints(a, b);
        prop_assert_eq!(restrict_to_line(&f, &line, CAP).unwrap(), substitute(&f, &x_plus(0), &line.as_poly()));
    }

    #[test]
    fn hat_moves_line_to_unit_line(f in nonzero_bi(6, 10), a in nonzero_rational(), b in nonzero_rational()) {
        let line = Line::new(a.clone(), b.clone());
        let x_scaled = DenseUniPoly::linear(&b / &a, int(0));
        let y_scaled = DenseUniPoly::linear(b.clone(), b.clone());
        let hat = hat_transform(&f, &line).unwrap();
        prop_assert_eq!(substitute(&f, &x_scaled, &y_scaled), on_unit_line(&hat, CAP).unwrap());
    }

    #[test]
    fn reflection_identity(f in nonzero_bi(6, 10)) {
        let g = on_unit_line(&f, CAP).unwrap();
        let reflected = g.compose(&DenseUniPoly::from_ints(&[-1, -1]));
        prop_assert_eq!(reflected, on_unit_line(&reflect_transform(&f), CAP).unwrap());
    }

    #[test]
    fn moebius_identity(f in nonzero_bi(6, 10)) {
        let g = on_unit_line(&f, CAP).unwrap();
        let f2 = moebius_transform(&f).unwrap();
        let top = f.terms().iter().map(|t| t.alpha + t.beta).max().unwrap();
        // (x + 1)^deg(g) * g(-x / (x + 1)), padded by (x + 1)^(D - deg g)
        let homogenized = match g.degree() {
            None => DenseUniPoly::zero(),
            Some(deg) => {
                let mut acc = DenseUniPoly::zero();
                for (k, c) in g.coeffs().iter().enumerate() {
                    let term = &DenseUniPoly::from_ints(&[0, -1]).pow(k as u64)
                        * &x_plus(1).pow((deg - k) as u64);
                    acc = &acc + &term.scale(c);
                }
                &acc * &x_plus(1).pow(top - deg as u64)
            }
        };
        prop_assert_eq!(homogenized, on_unit_line(&f2, CAP).unwrap());
    }

    #[test]
    fn interval_counts_transport(f in nonzero_bi(5, 10)) {
        let g = on_unit_line(&f, CAP).unwrap();
        prop_assume!(!g.is_zero());
        let f1 = on_unit_line(&reflect_transform(&f), CAP).unwrap();
        let f2 = on_unit_line(&moebius_transform(&f).unwrap(), CAP).unwrap();
        prop_assert_eq!(count_open(&g, &Endpoint::NegInf, &int(-1)), positive_roots(&f1));
        prop_assert_eq!(count_open(&g, &Endpoint::Finite(int(-1)), &int(0)), positive_roots(&f2));
    }

    #[test]
    fn variations_on_unit_line(f in nonzero_bi(6, 20)) {
        let v = sign_variations(&SparseUniPoly::from_dense(&on_unit_line(&f, CAP).unwrap()));
        prop_assert!(v.value() <= 2 * f.t() as i64 - 2);
    }

    #[test]
    fn root_count_within_bound(f in nonzero_bi(6, 15), a in nonzero_rational(), b in nonzero_rational()) {
        let report = count_roots_on_line(&f, &Line::new(a, b), CAP).unwrap();
        prop_assert!(report.within_bound());
    }

    #[test]
    fn degenerate_lines_obey_sharper_bound(f in nonzero_bi(6, 15), c in nonzero_rational(), horizontal in any::<bool>()) {
        let line = if horizontal { Line::new(int(0), c) } else { Line::new(c, int(0)) };
        let report = count_roots_on_line(&f, &line, CAP).unwrap();
        if let Some(count) = report.count {
            prop_assert!((count as i64) < 2 * f.t() as i64);
        }
    }
}
