mod common;

use common::{bi, nonzero_bi, nonzero_rational};
use fewnomial::divisibility::{
    oracle_divides, reduce_mod_trinomial, test_linear_factor, ResidueMode, TestConfig, TrinomialModulus,
};
use fewnomial::primes::random_prime;
use fewnomial::rational::int;
use fewnomial::{Error, Line, SparseBiPoly, SparseUniPoly};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CAP: u64 = 10_000;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reflection_preserves_divisibility(f in bi(5, 10), a in nonzero_rational(), b in nonzero_rational()) {
        let planted = SparseBiPoly::linear_form(&a, &b).checked_mul(&f).unwrap();
        for g in [&f, &planted] {
            let direct = oracle_divides(g, &Line::new(a.clone(), b.clone()), CAP).unwrap();
            let reflected = oracle_divides(&g.negate_x(), &Line::new(-&a, b.clone()), CAP).unwrap();
            prop_assert_eq!(direct, reflected);
        }
    }

    #[test]
    fn planted_factors_are_found(g in nonzero_bi(3, 12), a in nonzero_rational(), b in nonzero_rational()) {
        let line = Line::new(a.clone(), b.clone());
        let f = SparseBiPoly::linear_form(&a, &b).checked_mul(&g).unwrap();
        prop_assert!(test_linear_factor(&f, &line, &TestConfig::exact()).unwrap());
        prop_assert!(test_linear_factor(&f, &line, &TestConfig::modular(17)).unwrap());
    }

    #[test]
    fn exact_and_modular_agree_with_oracle(f in nonzero_bi(6, 12), a in -4i64..=4, b in -4i64..=4) {
        let line = Line::from_ints(a, b);
        let truth = oracle_divides(&f, &line, CAP).unwrap();
        prop_assert_eq!(test_linear_factor(&f, &line, &TestConfig::exact()).unwrap(), truth);
        prop_assert_eq!(test_linear_factor(&f, &line, &TestConfig::modular(3)).unwrap(), truth);
    }
}

#[test]
fn zero_residue_survives_every_prime() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let cases = [(3u64, 2i64, 3i64), (5, -1, 4), (7, 3, -2)];
    for (n, a, b) in cases {
        let trinomial = SparseUniPoly::new([(n, int(1)), (1, int(-a)), (0, int(-b))]).unwrap();
        let cofactor = SparseUniPoly::new([(40, int(7)), (13, int(-5)), (2, int(1)), (0, int(9))]).unwrap();
        let p = trinomial.checked_mul(&cofactor).unwrap();
        let m = TrinomialModulus::new(n, int(a), int(b)).unwrap();
        assert!(reduce_mod_trinomial(&p, &m, ResidueMode::Exact).unwrap().is_zero());
        let mut tested = 0;
        while tested < 100 {
            let prime = random_prime(&mut rng, 40);
            match reduce_mod_trinomial(&p, &m, ResidueMode::Modular(prime)) {
                Ok(r) => {
                    assert!(r.is_zero(), "prime {prime} gave a nonzero residue");
                    tested += 1;
                }
                Err(Error::BadPrime(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn rational_line_with_huge_exponents() {
    let a = fewnomial::rational::ratio(-3, 5);
    let b = fewnomial::rational::ratio(7, 2);
    let g = SparseBiPoly::new([(int(4), 1 << 40, 3), (int(-1), 17, 1 << 41), (int(2), 0, 0)]).unwrap();
    let f = SparseBiPoly::linear_form(&a, &b).checked_mul(&g).unwrap();
    let line = Line::new(a, b);
    assert!(test_linear_factor(&f, &line, &TestConfig::modular(5)).unwrap());
    let perturbed = &f + &SparseBiPoly::monomial(int(1), 1 << 40, 3).unwrap();
    assert!(!test_linear_factor(&perturbed, &line, &TestConfig::modular(5)).unwrap());
}
