use proptest::prelude::*;
use recalg::frt::{Element, FrtAlgebra, Gen, Word};
use recalg::rform::{build_rform, Variant};
use recalg::ring::{Integer, LaurentInt};
use recalg::twisting::{twist_quadratic_formula, ChainOrder, Twister};

fn power(g: Gen, n: u32) -> Word {
    std::iter::repeat_n(g, n as usize).collect()
}

fn gens(n: u8) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=n, 1..=n), 0..=4)
        .prop_map(|v| v.into_iter().map(|(i, j)| Gen::new(i, j)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn r_form_agrees_with_brute_force(n in 2u8..=3, ab in (2u8..=3).prop_flat_map(|n| (gens(n), gens(n)))) {
        let (a, b) = ab;
        let n = n.max(a.iter().chain(&b).map(|g| g.row.max(g.col)).max().unwrap_or(1));
        let form = build_rform(n).unwrap();
        for v in [Variant::R, Variant::Rinv, Variant::Rtilde] {
            prop_assert_eq!(form.eval_r(v, &a, &b), form.eval_r_brute(v, &a, &b), "{:?}", v);
        }
    }

    #[test]
    fn twisting_is_linear(w1 in gens(2), w2 in gens(2), c1 in -5i64..=5, e in -3i32..=3) {
        let tw = Twister::new(2).unwrap();
        let frt = tw.algebra().frt();
        let c = LaurentInt::monomial(Integer::from(c1), e);
        let a = frt.normal_form(&w1, &LaurentInt::one()).unwrap();
        let b = frt.normal_form(&w2, &c).unwrap();
        let lhs = tw.twist(&a.add(&b)).unwrap();
        let rhs = tw.twist(&a).unwrap().add(&tw.twist(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn generators_are_fixed() {
    let tw = Twister::new(3).unwrap();
    for g in Gen::all(3) {
        let e = tw.twist_word(&[g]).unwrap();
        assert_eq!(e.as_element(), &Element::gen(3, g.row, g.col).unwrap());
    }
}

#[test]
fn quadratic_monomials_follow_the_formula() {
    for n in 2..=3u8 {
        let tw = Twister::new(n).unwrap();
        for a in Gen::all(n) {
            for b in Gen::all(n) {
                let formula = twist_quadratic_formula(n, a.row, a.col, b.row, b.col).unwrap();
                let direct = tw.twist_word(&[a, b]).unwrap();
                assert_eq!(
                    tw.algebra().evaluate(&formula).unwrap(),
                    direct,
                    "{a:?} {b:?}"
                );
            }
        }
    }
}

#[test]
fn twisting_is_injective_in_low_degree() {
    for (n, top) in [(2u8, 4usize), (3, 3)] {
        let tw = Twister::new(n).unwrap();
        for d in 0..=top {
            let cert = tw.injectivity_certificate(d);
            assert!(cert.certifies(), "n = {n}, degree {d}: {cert:?}");
        }
    }
}

#[test]
fn diagonal_powers_match_closed_formula() {
    let cells: Vec<(u8, u32)> = (2..=3)
        .flat_map(|n| (2..=5).map(move |big_n| (n, big_n)))
        .chain([(2, 6), (2, 7)])
        .collect();
    for (n, big_n) in cells {
        let tw = Twister::new(n).unwrap();
        for k in 1..=n {
            let direct = tw.twist_word(&power(Gen::new(k, k), big_n)).unwrap();
            for order in [ChainOrder::AsComposed, ChainOrder::ReversedSegments] {
                let closed = tw.diag_power_closed_with(k, big_n, order).unwrap();
                assert_eq!(closed, direct, "n = {n}, k = {k}, N = {big_n}, {order:?}");
            }
        }
    }
}

#[test]
fn off_diagonal_powers_only_pick_up_a_scalar() {
    for n in 2..=3u8 {
        let tw = Twister::new(n).unwrap();
        for g in Gen::all(n).filter(|g| !g.is_diagonal()) {
            for big_n in 0..=6 {
                let (s, e) = tw.twist_offdiag_power(g.row, g.col, big_n).unwrap();
                assert_eq!(
                    e.scale(&s),
                    tw.twist_word(&power(g, big_n)).unwrap(),
                    "{g:?}^{big_n}"
                );
            }
        }
    }
}

#[test]
fn mixed_powers_and_recursion() {
    for n in 2..=3u8 {
        let tw = Twister::new(n).unwrap();
        for k in 1..=n {
            for l in 1..=n {
                for big_n in 1..=4 {
                    let mut w = power(Gen::new(k, k), big_n);
                    w.push(Gen::new(k, l));
                    assert_eq!(
                        tw.twist_mixed_closed(k, l, big_n).unwrap(),
                        tw.twist_word(&w).unwrap()
                    );
                    assert!(tw.recursion_residual(k, l, big_n).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn twisted_determinant_is_central() {
    for n in 2..=3u8 {
        let tw = Twister::new(n).unwrap();
        let alg = tw.algebra();
        let d = tw.twist(&FrtAlgebra::new(n).unwrap().qdet()).unwrap();
        for g in Gen::all(n) {
            let u = alg.gen(g.row, g.col).unwrap();
            assert_eq!(
                alg.braided_multiply(&d, &u).unwrap(),
                alg.braided_multiply(&u, &d).unwrap(),
                "{g:?}"
            );
        }
    }
}
