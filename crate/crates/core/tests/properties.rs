//! Invariants checked on generated inputs.

use dkcong::dkscan::{dk_coefficients, verify_family, FamilySpec, KFormula};
use dkcong::eta::{canonical_cusp, Cusp, EtaQuotient};
use dkcong::hecke::{progression_extract, u_operator};
use dkcong::localize::engine::ZForm;
use dkcong::localize::theorems::sample_v1;
use dkcong::localize::valuation::{exact_coeffs, lambda, membership, psi, Space};
use dkcong::localize::xpoly::{LocalizedElement, XPoly};
use dkcong::ring::{Integers, ModPow5, Ring};
use dkcong::series::{euler_quotient, Series};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn series(coeffs: Vec<i64>, trunc: i64) -> Series<Integers> {
    Series::from_i64s(Integers, 0, &coeffs, trunc)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_commutes_and_associates(
        a in prop::collection::vec(-50i64..50, 1..20),
        b in prop::collection::vec(-50i64..50, 1..20),
        c in prop::collection::vec(-50i64..50, 1..20),
    ) {
        let (a, b, c) = (series(a, 25), series(b, 25), series(c, 25));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn inverse_of_a_unit_series(tail in prop::collection::vec(-20i64..20, 0..15)) {
        let mut c = vec![1];
        c.extend(tail);
        let f = series(c, 30);
        let g = f.invert().unwrap();
        prop_assert_eq!(&f * &g, Series::one(Integers, 30));
    }

    #[test]
    fn u_operators_compose(coeffs in prop::collection::vec(-100i64..100, 1..200)) {
        let f = series(coeffs, 200);
        prop_assert_eq!(u_operator(&u_operator(&f, 5), 5), u_operator(&f, 25));
    }

    #[test]
    fn u_operator_is_linear(
        a in prop::collection::vec(-100i64..100, 1..100),
        b in prop::collection::vec(-100i64..100, 1..100),
        t in 0i64..5,
    ) {
        let (a, b) = (series(a, 100), series(b, 100));
        let lhs = progression_extract(&(&a + &b), 5, t);
        let rhs = &progression_extract(&a, 5, t) + &progression_extract(&b, 5, t);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eta_expansion_is_multiplicative(r1 in -4i64..5, r2 in -4i64..5, s1 in -4i64..5, s2 in -4i64..5) {
        // leading exponents stay integral when the sums are multiples of 24
        let f = EtaQuotient::new(10, &[(1, r1 * 24), (5, r2 * 24)]).unwrap();
        let g = EtaQuotient::new(10, &[(2, s1 * 24), (10, s2 * 24)]).unwrap();
        let fg = f.product(&g).unwrap();
        let t = 40;
        let lhs = fg.expand(Integers, t).unwrap();
        let rhs = &f.expand(Integers, t).unwrap() * &g.expand(Integers, t).unwrap();
        let common = lhs.trunc().min(rhs.trunc());
        prop_assert_eq!(lhs.truncate(common), rhs.truncate(common));
    }

    #[test]
    fn orders_depend_only_on_the_cusp_class(a in -60i64..60, c in 1i64..60) {
        prop_assume!(a.gcd(&c) == 1);
        let f = EtaQuotient::new(50, &[(1, -16), (2, 5), (25, 16), (50, -5)]).unwrap();
        let cusp = Cusp::new(a, c);
        prop_assert_eq!(f.order_at(cusp), f.order_at(canonical_cusp(50, cusp)));
    }

    #[test]
    fn z_form_round_trip(coeffs in prop::collection::vec(-30i64..30, 1..12), den in 0u32..8) {
        let e = LocalizedElement::new(XPoly::from_i64s(&coeffs), den);
        let back = ZForm::from_localized(&e).to_localized();
        prop_assert_eq!(back.canonical(), e.canonical());
    }

    #[test]
    fn kernel_samples_are_members(seed in any::<u64>(), n in prop::sample::select(vec![1u32, 6, 11]), degree in 8usize..16) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = sample_v1(&mut rng, n, degree);
        let c = e.num.to_ints().unwrap();
        prop_assert!(membership(&exact_coeffs(&c), n as u64, Space::V1(n as u64)).member);
    }

    #[test]
    fn counterexamples_reproduce(k in 0i64..12, m in prop::sample::select(vec![5u64, 25]), b in 0u64..25, e in 1u32..3) {
        let b = b % m;
        let r = verify_family(&FamilySpec::new(KFormula::constant(k), m, b, e, "generated"), 0, 600);
        if let Some(c) = r.counterexample {
            let exact = dk_coefficients(Integers, c.k, c.n as i64 + 1).coeff(c.n as i64);
            prop_assert!(!exact.is_multiple_of(&BigInt::from(5u64.pow(e))));
            prop_assert_eq!(c.n % m, b);
        }
    }
}

#[test]
fn psi_recursion() {
    for alpha in 1..=10 {
        assert_eq!(5 * psi(alpha), psi(alpha + 1) - 1);
    }
}

#[test]
fn lambda_is_the_inverse_of_four() {
    for alpha in 1..=8u32 {
        let p = 5u64.pow(alpha);
        assert_eq!(4 * lambda(alpha) % p, 1);
        assert!(lambda(alpha) < p);
        assert_eq!(lambda(alpha + 1), lambda(alpha) + 3 * p);
    }
}

#[test]
fn residue_rings_agree_with_integers() {
    let ring = ModPow5::new(6);
    for k in [0, 1, 2, 5] {
        let exact = dk_coefficients(Integers, k, 500);
        let modular = dk_coefficients(ring, k, 500);
        let m = BigInt::from(5u64.pow(6));
        for n in 0..500 {
            assert_eq!(ring.from_bigint(&exact.coeff(n).mod_floor(&m)), modular.coeff(n), "k={k} n={n}");
        }
    }
}

#[test]
fn raising_k_by_25_multiplies_by_a_series_in_q_to_the_25() {
    // D_(k+25) / D_k = (q^2;q^2)^25/(q;q)^75 = (q^50;q^50)/(q^25;q^25)^3 mod 5
    let ring = ModPow5::new(1);
    let t = 300;
    let lhs = dk_coefficients(ring, 26, t);
    let rhs = &dk_coefficients(ring, 1, t) * &euler_quotient(ring, &[(50, 1), (25, -3)], t);
    assert_eq!(lhs, rhs);
}
