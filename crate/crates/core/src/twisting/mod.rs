//! The twisting map from `O_q(M_n)` to its covariantized algebra.

pub mod closed;
pub mod map;

pub use closed::{
    diag_power_expr, mixed_closed_expr, offdiag_power_scalar, twist_quadratic_formula, v_chain,
    ChainOrder,
};
pub use map::{InjectivityCertificate, TwistResult, Twister, CERT_PRIME};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::{braided_det_expr_with, DetStatistic, UExpr};
    use crate::frt::{normal_words, Element, Gen, Word};
    use crate::ring::{one_minus_q_neg2, LaurentInt};

    fn g(i: u8, j: u8) -> Gen {
        Gen::new(i, j)
    }

    fn chain(n: u8, w: &[(u8, u8)], c: LaurentInt) -> UExpr {
        let w: Vec<Gen> = w.iter().map(|&(a, b)| g(a, b)).collect();
        UExpr::chain(n, &w, c)
    }

    #[test]
    fn unit_and_generators() {
        let t = Twister::new(2).unwrap();
        assert_eq!(
            t.twist(&Element::one(2)).unwrap().as_element(),
            &Element::one(2)
        );
        let x = Element::gen(2, 1, 2).unwrap();
        assert_eq!(t.twist(&x).unwrap().as_element(), &x);
        assert!(t.twist(&Element::one(3)).is_err());
    }

    #[test]
    fn quadratic_formula_all_monomials() {
        for n in 1..=3u8 {
            let t = Twister::new(n).unwrap();
            for a in Gen::all(n) {
                for b in Gen::all(n) {
                    let lhs = t.twist_word(&[a, b]).unwrap();
                    let f = twist_quadratic_formula(n, a.row, a.col, b.row, b.col).unwrap();
                    assert_eq!(lhs, t.algebra().evaluate(&f).unwrap(), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn determinants() {
        let t = Twister::new(2).unwrap();
        let expect = chain(2, &[(2, 2), (1, 1)], LaurentInt::one()).add(&chain(
            2,
            &[(2, 1), (1, 2)],
            -LaurentInt::q_pow(2, 2),
        ));
        let tw = t.twist(&t.algebra().frt().qdet()).unwrap();
        assert_eq!(tw, t.algebra().evaluate(&expect).unwrap());
        let t = Twister::new(3).unwrap();
        let tw = t.twist(&t.algebra().frt().qdet()).unwrap();
        assert_eq!(tw, t.algebra().braided_det());
        let other = braided_det_expr_with(3, DetStatistic::Exceedance);
        assert_ne!(tw, t.algebra().evaluate(&other).unwrap());
    }

    #[test]
    fn formal_twist_evaluates() {
        let t = Twister::new(2).unwrap();
        for w in normal_words(2, 3) {
            let a = Element::from_normal_terms(2, [(w, LaurentInt::one())]);
            let f = t.twist_formal(&a).unwrap();
            assert_eq!(t.algebra().evaluate(&f).unwrap(), t.twist(&a).unwrap());
        }
    }

    #[test]
    fn offdiag_powers() {
        let t = Twister::new(2).unwrap();
        for big_n in 0..=4u32 {
            let (s, e) = t.twist_offdiag_power(1, 2, big_n).unwrap();
            let w: Word = std::iter::repeat_n(g(1, 2), big_n as usize).collect();
            assert_eq!(e.scale(&s), t.twist_word(&w).unwrap());
        }
        assert_eq!(
            t.twist_offdiag_power(2, 1, 3).unwrap().0,
            LaurentInt::q_pow(2, -3)
        );
        assert!(t.twist_offdiag_power(1, 1, 2).is_err());
    }

    #[test]
    fn diagonal_powers() {
        let t = Twister::new(2).unwrap();
        for k in 1..=2u8 {
            for big_n in 2..=4u32 {
                let w: Word = std::iter::repeat_n(g(k, k), big_n as usize).collect();
                let direct = t.twist_word(&w).unwrap();
                assert_eq!(t.twist_diag_power_closed(k, big_n).unwrap(), direct);
                assert_eq!(
                    t.diag_power_closed_with(k, big_n, ChainOrder::ReversedSegments)
                        .unwrap(),
                    direct
                );
            }
        }
        assert!(t.twist_diag_power_closed(1, 1).is_err());
        let e = diag_power_expr(2, 1, 4, ChainOrder::AsComposed).unwrap();
        assert_eq!(e, chain(2, &[(1, 1); 4], LaurentInt::one()));
    }

    #[test]
    fn cubic_display_for_two_by_two() {
        let (a, b, c, d) = ((1, 1), (1, 2), (2, 1), (2, 2));
        let m = |k| one_minus_q_neg2(k, 2);
        let expect = chain(2, &[d, d, d], LaurentInt::one())
            .add(&chain(2, &[d, c, b], m(1)))
            .add(&chain(2, &[c, b, d], m(2)))
            .add(&chain(2, &[c, a, b], &m(1) * &m(2)));
        assert_eq!(
            diag_power_expr(2, 2, 3, ChainOrder::ReversedSegments).unwrap(),
            expect
        );
        let t = Twister::new(2).unwrap();
        let w = [g(2, 2); 3];
        assert_eq!(
            t.algebra().evaluate(&expect).unwrap(),
            t.twist_word(&w).unwrap()
        );
    }

    #[test]
    fn mixed_and_recursion() {
        let t = Twister::new(2).unwrap();
        for (k, l) in [(2, 1), (2, 2), (1, 2), (1, 1)] {
            for big_n in 1..=3u32 {
                let mut w: Word = std::iter::repeat_n(g(k, k), big_n as usize).collect();
                w.push(g(k, l));
                assert_eq!(
                    t.twist_mixed_closed(k, l, big_n).unwrap(),
                    t.twist_word(&w).unwrap()
                );
                assert!(t.recursion_residual(k, l, big_n).unwrap().is_zero());
            }
        }
        let base = mixed_closed_expr(2, 2, 1, 1).unwrap();
        assert_eq!(base, twist_quadratic_formula(2, 2, 2, 2, 1).unwrap());
    }

    #[test]
    fn injective_in_low_degree() {
        let t = Twister::new(2).unwrap();
        for d in 0..=3 {
            let c = t.injectivity_certificate(d);
            assert!(c.certifies(), "{c:?}");
        }
    }
}
