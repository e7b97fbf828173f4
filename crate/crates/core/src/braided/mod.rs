//! The covariantized (reflection equation) algebra.

pub mod algebra;
pub mod expr;
pub mod relations;

pub use algebra::{
    braided_det_expr, braided_det_expr_with, BraidedAlgebra, BraidedElement, DetStatistic,
};
pub use expr::UExpr;
pub use relations::{
    admissible_indices, m2_display_relations, quadratic_relation, quadratic_relations, QuadFamily,
    QuadRelation, Rel3Form,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frt::{Element, Gen};
    use crate::ring::LaurentInt;

    fn u(alg: &BraidedAlgebra, i: u8, j: u8) -> BraidedElement {
        alg.gen(i, j).unwrap()
    }

    #[test]
    fn unit_and_generators() {
        let alg = BraidedAlgebra::new(2).unwrap();
        let one = BraidedElement::one(2);
        let b = u(&alg, 1, 2);
        assert_eq!(alg.braided_multiply(&one, &b).unwrap(), b);
        assert_eq!(alg.braided_multiply(&b, &one).unwrap(), b);
        assert_eq!(alg.braided_power(&b, 1).unwrap(), b);
        assert_eq!(alg.braided_power(&one, 5).unwrap(), one);
    }

    #[test]
    fn m2_relations_from_display() {
        let alg = BraidedAlgebra::new(2).unwrap();
        let (a, b, d) = (u(&alg, 1, 1), u(&alg, 1, 2), u(&alg, 2, 2));
        let ad = alg.braided_multiply(&a, &d).unwrap();
        let da = alg.braided_multiply(&d, &a).unwrap();
        assert_eq!(ad, da);
        let ba = alg.braided_multiply(&b, &a).unwrap();
        let ab = alg.braided_multiply(&a, &b).unwrap();
        assert_eq!(ba, ab.scale(&LaurentInt::q_pow(2, 2)));
        let fixed = m2_display_relations(false);
        for (name, l, r) in fixed {
            assert!(alg.relation_residual(&l, &r).unwrap().is_zero(), "{name}");
        }
        let printed = m2_display_relations(true);
        let failing: Vec<_> = printed
            .iter()
            .filter(|(_, l, r)| !alg.relation_residual(l, r).unwrap().is_zero())
            .map(|(name, _, _)| *name)
            .collect();
        assert_eq!(failing, vec!["c*a = q^2 a*c", "c*b - b*c = (1-q^2)(d-a)*a"]);
    }

    #[test]
    fn fast_path_matches_general() {
        for n in 2..=3u8 {
            let alg = BraidedAlgebra::new(n).unwrap();
            let gens: Vec<Gen> = Gen::all(n).collect();
            let a = alg
                .frt()
                .normal_form(&[gens[1], gens[n as usize]], &LaurentInt::one())
                .unwrap();
            let a = BraidedElement::from_element(a.add(&Element::gen(n, n, 1).unwrap()));
            for &g in &gens {
                let b = BraidedElement::gen(n, g.row, g.col).unwrap();
                let fast = alg.braided_multiply(&a, &b).unwrap();
                let slow = alg.braided_multiply_general(&a, &b).unwrap();
                assert_eq!(fast, slow, "n={n} g={g}");
            }
        }
    }

    #[test]
    fn determinants_small() {
        let alg = BraidedAlgebra::new(1).unwrap();
        assert_eq!(alg.braided_det(), u(&alg, 1, 1));
        let e = braided_det_expr(2);
        assert_eq!(e.render(), "-q^2·u[2,1]⋆u[1,2] + u[2,2]⋆u[1,1]");
    }

    #[test]
    fn quadratic_counts() {
        for n in 1..=4u8 {
            let total = quadratic_relations(n, Rel3Form::Corrected).len();
            let m = (n as usize).pow(2);
            assert_eq!(total, m * (m - 1) / 2);
        }
        assert!(quadratic_relation(2, QuadFamily::Rel1, &[1, 2, 1], Rel3Form::Corrected).is_err());
        assert!(quadratic_relation(2, QuadFamily::Rel3, &[1, 1, 2], Rel3Form::Corrected).is_err());
    }

    #[test]
    fn named_residuals() {
        let alg = BraidedAlgebra::new(2).unwrap();
        assert!(alg
            .check_quadratic_relation(QuadFamily::Rel3, &[1, 1, 2, 2])
            .unwrap()
            .is_zero());
        assert!(alg
            .check_quadratic_relation(QuadFamily::Rel1, &[1, 1, 2])
            .unwrap()
            .is_zero());
        let alg = BraidedAlgebra::new(3).unwrap();
        assert!(alg
            .check_quadratic_relation(QuadFamily::Rel4, &[1, 1, 2, 3])
            .unwrap()
            .is_zero());
        let printed =
            quadratic_relation(3, QuadFamily::Rel3, &[2, 1, 3, 2], Rel3Form::AsPrinted).unwrap();
        assert!(!alg
            .relation_residual(&printed.lhs, &printed.rhs)
            .unwrap()
            .is_zero());
    }
}
