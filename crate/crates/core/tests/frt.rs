use proptest::prelude::*;
use recalg::frt::{Element, FrtAlgebra, Gen, Strategy as Reduction, TensorElement, Word};
use recalg::ring::{Integer, LaurentInt};

fn word(n: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=n, 1..=n), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(i, j)| Gen::new(i, j)).collect())
}

fn coeff() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-4i32..=4, -5i64..=5), 1..3)
        .prop_map(|t| LaurentInt::from_terms(t.into_iter().map(|(e, c)| (e, Integer::from(c)))))
}

fn element(n: u8, max_len: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((word(n, max_len), coeff()), 1..3).prop_map(move |terms| {
        let alg = FrtAlgebra::new(n).unwrap();
        terms.iter().fold(Element::zero(n), |acc, (w, c)| {
            acc.add(&alg.normal_form(w, c).unwrap())
        })
    })
}

fn sized<S: Strategy>(
    f: impl Fn(u8) -> S + Clone + 'static,
) -> impl Strategy<Value = (u8, S::Value, S::Value, S::Value)>
where
    S::Value: std::fmt::Debug,
{
    (1u8..=3).prop_flat_map(move |n| (Just(n), f(n), f(n), f(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn strategies_agree(n in 1u8..=3, w in (1u8..=3).prop_flat_map(|n| word(n, 6))) {
        let n = n.max(w.iter().map(|g| g.row.max(g.col)).max().unwrap_or(1));
        let alg = FrtAlgebra::new(n).unwrap();
        let left = alg.normal_form_with(&w, Reduction::Leftmost);
        let right = alg.normal_form_with(&w, Reduction::Rightmost);
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(alg.multiply(&left, &Element::one(n)).unwrap(), left);
    }

    #[test]
    fn multiplication_is_associative((n, a, b, c) in sized(|n| element(n, 2))) {
        let alg = FrtAlgebra::new(n).unwrap();
        let ab_c = alg.multiply(&alg.multiply(&a, &b).unwrap(), &c).unwrap();
        let a_bc = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn coproduct_laws((n, a, b, _c) in sized(|n| element(n, 3))) {
        let alg = FrtAlgebra::new(n).unwrap();
        let da = alg.coproduct(&a).unwrap();
        let db = alg.coproduct(&b).unwrap();
        let dab = alg.coproduct(&alg.multiply(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(dab, alg.tensor_multiply(&da, &db));
        prop_assert_eq!(alg.coproduct2(&a).unwrap(), alg.coproduct2_right(&a).unwrap());
        prop_assert_eq!(alg.counit_left(&da), a.clone());
        prop_assert_eq!(alg.counit_right(&da), a.clone());
        let eab = alg.counit(&alg.multiply(&a, &b).unwrap());
        prop_assert_eq!(eab, &alg.counit(&a) * &alg.counit(&b));
    }

    #[test]
    fn qdet_commutes_with_everything(n in 1u8..=3, seed in any::<u64>()) {
        let alg = FrtAlgebra::new(n).unwrap();
        let d = alg.qdet();
        let mut rng = recalg::verify::random::rng_for(seed, "qdet");
        let a = recalg::verify::random::random_element(&mut rng, &alg, 2);
        prop_assert_eq!(alg.multiply(&d, &a).unwrap(), alg.multiply(&a, &d).unwrap());
    }
}

#[test]
fn qdet_is_grouplike() {
    for n in 1..=3 {
        let alg = FrtAlgebra::new(n).unwrap();
        let d = alg.qdet();
        assert_eq!(
            alg.coproduct(&d).unwrap(),
            TensorElement::pure(&d, &d),
            "n = {n}"
        );
        assert!(alg.counit(&d).is_one());
    }
}

#[test]
fn generator_relations_of_the_two_by_two_case() {
    let alg = FrtAlgebra::new(2).unwrap();
    let q = LaurentInt::q_pow(2, 1);
    let w = |s: &[(u8, u8)]| -> Word { s.iter().map(|&(i, j)| Gen::new(i, j)).collect() };
    // b a = q a b with a, b = x11, x12
    let ba = alg
        .normal_form(&w(&[(1, 2), (1, 1)]), &LaurentInt::one())
        .unwrap();
    let ab = alg.normal_form(&w(&[(1, 1), (1, 2)]), &q).unwrap();
    assert_eq!(ba, ab);
    // d a - a d = (q - q^-1) b c
    let da = alg
        .normal_form(&w(&[(2, 2), (1, 1)]), &LaurentInt::one())
        .unwrap();
    let ad = alg
        .normal_form(&w(&[(1, 1), (2, 2)]), &LaurentInt::one())
        .unwrap();
    let bc = alg
        .normal_form(&w(&[(1, 2), (2, 1)]), &(&q - &q.unit_inverse().unwrap()))
        .unwrap();
    assert_eq!(da.sub(&ad), bc);
}
