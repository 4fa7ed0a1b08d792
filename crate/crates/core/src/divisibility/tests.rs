use super::*;
use crate::poly::DenseUniPoly;
use crate::rational::{int, ratio};

fn bi(terms: &[(i64, u64, u64)]) -> SparseBiPoly {
    SparseBiPoly::new(terms.iter().map(|&(c, a, b)| (int(c), a, b))).unwrap()
}

fn uni(terms: &[(u64, i64)]) -> SparseUniPoly {
    SparseUniPoly::new(terms.iter().map(|&(e, c)| (e, int(c)))).unwrap()
}

fn modulus(n: u64, a: i64, b: i64) -> TrinomialModulus {
    TrinomialModulus::new(n, int(a), int(b)).unwrap()
}

/// Remainder by plain dense long division, independent of the ring code.
fn long_division_remainder(p: &SparseUniPoly, m: &TrinomialModulus) -> Vec<Rational> {
    let mut divisor = vec![Rational::zero(); m.n() as usize + 1];
    divisor[0] = -m.b();
    divisor[1] = -m.a();
    divisor[m.n() as usize] = Rational::one();
    let (_, r) = p.to_dense(1 << 20).unwrap().div_rem(&DenseUniPoly::new(divisor)).unwrap();
    let mut coeffs = r.coeffs().to_vec();
    coeffs.resize(m.n() as usize, Rational::zero());
    coeffs
}

fn exact(residue: TrinomialResidue) -> Vec<Rational> {
    match residue {
        TrinomialResidue::Exact(c) => c,
        other => panic!("expected exact residue, got {other:?}"),
    }
}

#[test]
fn modulus_validation() {
    assert_eq!(TrinomialModulus::new(4, int(1), int(1)), Err(Error::InvalidModulus(4)));
    assert_eq!(TrinomialModulus::new(1, int(1), int(1)), Err(Error::InvalidModulus(1)));
    assert!(TrinomialModulus::new(3, int(0), int(0)).is_ok());
}

#[test]
fn specialize_examples() {
    assert_eq!(specialize(&bi(&[(1, 1, 1), (1, 0, 2)]), 3).unwrap(), uni(&[(4, 1), (6, 1)]));
    assert!(specialize(&bi(&[(1, 5, 0), (-1, 2, 1)]), 3).unwrap().is_zero());
    assert_eq!(specialize(&bi(&[(1, 0, 1), (-2, 1, 0), (-3, 0, 0)]), 3).unwrap(), uni(&[(3, 1), (1, -2), (0, -3)]));
    let wide = SparseBiPoly::monomial(int(1), 0, 1 << 62).unwrap();
    assert_eq!(specialize(&wide, 3), Err(Error::ExponentOverflow));
}

#[test]
fn first_nonzero_examples() {
    assert_eq!(first_nonzero_specialization(&bi(&[(1, 0, 1), (-1, 1, 0)])).unwrap(), (3, uni(&[(3, 1), (1, -1)])));
    // n = 3 collides x^5 with x^(2+3); n = 5 gives x^5 - x^7
    assert_eq!(first_nonzero_specialization(&bi(&[(1, 5, 0), (-1, 2, 1)])).unwrap(), (5, uni(&[(5, 1), (7, -1)])));
    assert_eq!(first_nonzero_specialization(&bi(&[(1, 0, 0)])).unwrap(), (3, uni(&[(0, 1)])));
    assert_eq!(first_nonzero_specialization(&SparseBiPoly::zero()), Err(Error::ZeroPolynomial));
}

#[test]
fn reduce_examples() {
    let m = modulus(3, 1, 1);
    let r = exact(reduce_mod_trinomial(&uni(&[(5, 1)]), &m, ResidueMode::Exact).unwrap());
    assert_eq!(r, vec![int(1), int(1), int(1)]);
    assert_eq!(r, long_division_remainder(&uni(&[(5, 1)]), &m));
    assert!(reduce_mod_trinomial(&uni(&[(3, 1), (1, -1), (0, -1)]), &m, ResidueMode::Exact).unwrap().is_zero());
    assert!(reduce_mod_trinomial(&uni(&[(3, 1), (1, -2), (0, -3)]), &modulus(3, 2, 3), ResidueMode::Exact)
        .unwrap()
        .is_zero());
}

#[test]
fn powering_matches_long_division() {
    let m = TrinomialModulus::new(5, ratio(-2, 3), ratio(5, 7)).unwrap();
    let p =
        SparseUniPoly::new([(0, int(4)), (7, ratio(1, 2)), (33, int(-3)), (64, int(1)), (101, ratio(9, 5))]).unwrap();
    let via_powering = reduce_by_powering(&p, &m, ResidueMode::Exact).unwrap();
    assert_eq!(via_powering.strategy, Strategy::Powering);
    assert_eq!(exact(via_powering.residue), long_division_remainder(&p, &m));
    let via_division = reduce_mod_trinomial_with(&p, &m, ResidueMode::Exact, 1000).unwrap();
    assert_eq!(via_division.strategy, Strategy::Division);
    assert_eq!(via_division.ring_mults, 0);
    assert_eq!(exact(via_division.residue), long_division_remainder(&p, &m));
}

#[test]
fn modular_residue_is_image_of_exact() {
    let m = TrinomialModulus::new(7, ratio(3, 4), ratio(-1, 6)).unwrap();
    let p = SparseUniPoly::new([(2, int(1)), (40, ratio(-5, 3)), (91, int(2))]).unwrap();
    let exact_coeffs = exact(reduce_mod_trinomial(&p, &m, ResidueMode::Exact).unwrap());
    let prime = 1_000_000_007;
    for cap in [0, 1000] {
        let r = reduce_mod_trinomial_with(&p, &m, ResidueMode::Modular(prime), cap).unwrap();
        let TrinomialResidue::Modular { coeffs, .. } = r.residue else { panic!() };
        let expected: Vec<u64> = exact_coeffs.iter().map(|c| ModRing::reduce_rational(c, prime).unwrap()).collect();
        assert_eq!(coeffs, expected, "cap {cap}");
    }
}

#[test]
fn bad_prime_detected() {
    let m = TrinomialModulus::new(3, ratio(1, 7), int(1)).unwrap();
    assert_eq!(reduce_mod_trinomial(&uni(&[(5, 1)]), &m, ResidueMode::Modular(7)), Err(Error::BadPrime(7)));
}

#[test]
fn ring_mult_count_tracks_bit_length() {
    let m = modulus(5, 2, 3);
    let p = |bits: u32| {
        SparseUniPoly::new([(1u64 << (bits - 1) | 5, int(1)), ((1u64 << (bits - 1)) | 0x1234, int(-2))]).unwrap()
    };
    let count = |bits| reduce_by_powering(&p(bits), &m, ResidueMode::Modular(1_000_003)).unwrap().ring_mults;
    // two terms, bitlen(e) - 1 squarings each
    assert_eq!(count(20), 2 * 19);
    assert_eq!(count(40) - count(20), 2 * 20);
}

#[test]
fn divides_trinomial_examples() {
    let m = modulus(3, 1, 1);
    let cfg = TestConfig::exact();
    // (x^3 - x - 1)(x^2 + 1) = x^5 + x^3 - x^3 ... expanded densely
    let product = &DenseUniPoly::from_ints(&[-1, -1, 0, 1]) * &DenseUniPoly::from_ints(&[1, 0, 1]);
    let p = SparseUniPoly::from_dense(&product);
    assert!(divides_trinomial(&p, &m, &cfg).unwrap());
    let q = uni(&[(5, 1), (0, 1)]);
    assert!(!divides_trinomial(&q, &m, &cfg).unwrap());
    assert_eq!(exact(reduce_mod_trinomial(&q, &m, ResidueMode::Exact).unwrap()), vec![int(2), int(1), int(1)]);
    assert!(divides_trinomial(&uni(&[(3, 1), (1, -1), (0, -1)]), &m, &cfg).unwrap());
    assert_eq!(divides_trinomial(&SparseUniPoly::zero(), &m, &cfg), Err(Error::ZeroPolynomial));
    for seed in 0..5 {
        assert!(divides_trinomial(&p, &m, &TestConfig::modular(seed)).unwrap());
        assert!(!divides_trinomial(&q, &m, &TestConfig::modular(seed)).unwrap());
    }
}

#[test]
fn linear_factor_examples() {
    let f = bi(&[(1, 0, 2), (-1, 2, 0), (-2, 0, 1), (-2, 1, 0)]);
    for cfg in [TestConfig::exact(), TestConfig::modular(11), TestConfig::default()] {
        assert!(test_linear_factor(&f, &Line::from_ints(1, 2), &cfg).unwrap());
        assert!(!test_linear_factor(&f, &Line::from_ints(1, 1), &cfg).unwrap());
    }
    let report =
        test_linear_factor_report(&bi(&[(1, 0, 2), (-1, 0, 0)]), &Line::from_ints(0, 1), &TestConfig::exact()).unwrap();
    assert!(report.divides);
    assert_eq!(report.decided_by, Decision::HorizontalLine);
    assert!(test_linear_factor(&SparseBiPoly::zero(), &Line::from_ints(3, 4), &TestConfig::exact()).unwrap());
}

#[test]
fn linear_factor_visits_every_odd_n_when_dividing() {
    let f = bi(&[(1, 0, 2), (-1, 2, 0), (-2, 0, 1), (-2, 1, 0)]);
    let report = test_linear_factor_report(&f, &Line::from_ints(1, 2), &TestConfig::exact()).unwrap();
    let ns: Vec<u64> = report.outcomes.iter().map(|o| o.n).collect();
    assert_eq!(ns, (3..=43).step_by(2).collect::<Vec<_>>());
    assert_eq!(ns.len(), 6 * f.t() - 3);
}

#[test]
fn reflection_branch() {
    // |b| = |1 - a| for (a, b) = (3, 2): y - 3x - 2
    let line = Line::from_ints(3, 2);
    let g = bi(&[(1, 2, 1), (-4, 0, 3), (1, 1, 0)]);
    let f = SparseBiPoly::linear_form(&line.a, &line.b).checked_mul(&g).unwrap();
    let report = test_linear_factor_report(&f, &line, &TestConfig::exact()).unwrap();
    assert!(report.reflected);
    assert!(report.divides);
    let perturbed = &f + &bi(&[(1, 0, 0)]);
    assert!(!test_linear_factor(&perturbed, &line, &TestConfig::exact()).unwrap());
}

#[test]
fn oracle_examples() {
    let f = bi(&[(1, 0, 2), (-1, 2, 0), (-2, 0, 1), (-2, 1, 0)]);
    assert!(oracle_divides(&f, &Line::from_ints(1, 2), 100).unwrap());
    assert!(!oracle_divides(&bi(&[(1, 1, 1), (1, 0, 0)]), &Line::from_ints(0, 0), 100).unwrap());
    assert!(oracle_divides(&SparseBiPoly::zero(), &Line::from_ints(5, 5), 100).unwrap());
}

#[test]
fn vertical_examples() {
    assert!(divides_vertical(&bi(&[(1, 1, 1), (-1, 0, 1)]), &int(1), 100).unwrap());
    assert!(!divides_vertical(&bi(&[(1, 1, 0), (1, 0, 1)]), &int(0), 100).unwrap());
    assert!(divides_vertical(&SparseBiPoly::zero(), &ratio(2, 3), 100).unwrap());
    // (x - 2) * (x^2 y + 1)
    let f = bi(&[(1, 3, 1), (-2, 2, 1), (1, 1, 0), (-2, 0, 0)]);
    assert!(divides_vertical(&f, &int(2), 100).unwrap());
    assert!(!divides_vertical(&f, &int(3), 100).unwrap());
    // huge exponents with c = -1 are free
    let g = bi(&[(1, 1 << 60, 2), (-1, 0, 2)]);
    assert!(divides_vertical(&g, &int(-1), 100).unwrap());
    assert!(matches!(divides_vertical(&g, &int(2), 100), Err(Error::DegreeCapExceeded { .. })));
}

#[test]
fn config_validation() {
    let f = bi(&[(1, 1, 1)]);
    let cfg = TestConfig { prime_count: 0, ..TestConfig::modular(1) };
    assert!(matches!(test_linear_factor(&f, &Line::from_ints(2, 3), &cfg), Err(Error::InvalidConfig(_))));
    let cfg = TestConfig { prime_bits: 62, ..TestConfig::modular(1) };
    assert!(matches!(test_linear_factor(&f, &Line::from_ints(2, 3), &cfg), Err(Error::InvalidConfig(_))));
}
