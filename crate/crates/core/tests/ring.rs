use num_bigint::BigInt;
use proptest::prelude::*;
use recalg::combinatorics::compositions;
use recalg::ring::{sigma_factors, sigma_q, CyclotomicCtx, Integer, LaurentInt};

const P: u64 = 1_000_000_007;

fn laurent() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-8i32..=8, -50i64..=50), 0..6)
        .prop_map(|t| LaurentInt::from_terms(t.into_iter().map(|(e, c)| (e, Integer::from(c)))))
}

fn big_int() -> impl Strategy<Value = i64> {
    prop_oneof![any::<i64>(), -1000i64..1000, Just(i64::MIN), Just(i64::MAX)]
}

/// Some x in Z/p whose multiplicative order is exactly `ell` (ell prime, dividing p - 1 only for 3).
fn element_of_order(ell: u64, p: u64) -> u64 {
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = ((r as u128 * b as u128) % p as u128) as u64;
            }
            b = ((b as u128 * b as u128) % p as u128) as u64;
            e >>= 1;
        }
        r
    };
    (2..p)
        .map(|g| pow(g, (p - 1) / ell))
        .find(|&x| x != 1)
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentInt::one(), a.clone());
    }

    #[test]
    fn products_evaluate_pointwise(a in laurent(), b in laurent(), x in 2u64..P) {
        let lhs = (&a * &b).eval_mod(x, P);
        let rhs = (a.eval_mod(x, P) as u128 * b.eval_mod(x, P) as u128 % P as u128) as u64;
        prop_assert_eq!(lhs, rhs);
        let sum = (&a + &b).eval_mod(x, P);
        prop_assert_eq!(sum, (a.eval_mod(x, P) + b.eval_mod(x, P)) % P);
    }

    #[test]
    fn integers_match_bigint(a in big_int(), b in big_int(), c in big_int()) {
        let (ia, ib, ic) = (Integer::from(a), Integer::from(b), Integer::from(c));
        let (ba, bb, bc) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
        prop_assert_eq!((&(&ia * &ib) + &ic).to_big(), &ba * &bb + &bc);
        prop_assert_eq!((&(&ia - &ib) * &(&ia + &ic)).to_big(), (&ba - &bb) * (&ba + &bc));
        prop_assert_eq!(ia.pow(3).to_big(), ba.pow(3));
        // normalization: equal values compare equal whatever their width
        let back = &(&ia * &ib) - &(&ia * &ib);
        prop_assert!(back.is_zero());
    }

    #[test]
    fn cyclotomic_reduction_matches_root_evaluation(f in laurent(), ell in prop::sample::select(vec![3u32, 5, 7])) {
        // P - 1 = 2 · 500000003, so use a prime with the needed roots instead.
        let p: u64 = 2_521; // 2520 = 2^3 · 3^2 · 5 · 7
        let z = element_of_order(ell as u64, p);
        let ctx = CyclotomicCtx::new(ell, 1).unwrap();
        let r = ctx.reduce(&f);
        prop_assert_eq!(r.eval_mod(z, p), f.eval_mod(z, p));
        prop_assert!(r.max_exp().is_none_or(|e| e < ctx.degree() as i32));
        prop_assert!(r.min_exp().is_none_or(|e| e >= 0));
        prop_assert_eq!(ctx.reduce(&r), r.clone());
    }

    #[test]
    fn reduction_is_a_ring_map(a in laurent(), b in laurent()) {
        let ctx = CyclotomicCtx::new(5, 2).unwrap();
        let lhs = ctx.reduce(&(&a * &b));
        let rhs = ctx.reduce(&(&ctx.reduce(&a) * &ctx.reduce(&b)));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn sigma_is_its_factor_product() {
    for n in 1..=8 {
        for l in compositions(n).unwrap() {
            let prod = sigma_factors(&l)
                .into_iter()
                .fold(LaurentInt::one(), |acc, m| {
                    &acc * &(&LaurentInt::one() - &LaurentInt::q_pow(1, -2 * m as i32))
                });
            assert_eq!(sigma_q(&l, 1), prod, "{l}");
        }
    }
}

#[test]
fn sigma_vanishes_only_past_the_order() {
    let ctx = CyclotomicCtx::new(5, 1).unwrap();
    for l in compositions(5).unwrap() {
        assert!(!ctx.is_zero(&sigma_q(&l, 1)), "{l}");
    }
    assert!(ctx.is_zero(&sigma_q(&"6".parse().unwrap(), 1)));
}
