//! Finite presentations of the covariantized algebras and their small quotients.

pub mod build;
pub mod doc;
pub mod render;

pub use build::{
    count_terms, det_terms, diagonal_layout, diagonal_terms, expected_relation_count, present,
    TermCount,
};
pub use doc::{
    specialize_doc, specialize_uexpr, terms_from_uexpr, Coeff, CoeffRing, Family, PresentationDoc,
    Relation, Symbol, Term,
};
pub use render::{relation_latex, relation_text};

use crate::ring::{CyclotomicCtx, LaurentInt};

/// Canonical representative of `f` at `q = ε`.
pub fn specialize(f: &LaurentInt, ctx: &CyclotomicCtx) -> LaurentInt {
    ctx.reduce(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Composition;
    use crate::error::Error;
    use crate::frt::Gen;
    use crate::ring::{one_minus_q_neg2, sigma_q};

    fn u(i: u8, j: u8) -> Symbol {
        Symbol::U(Gen::new(i, j))
    }

    #[test]
    fn relation_counts() {
        for n in 1..=3u8 {
            for f in Family::ALL {
                let ell = f.is_small().then_some(3);
                let doc = present(f, n, ell).unwrap();
                assert_eq!(
                    doc.relations.len(),
                    expected_relation_count(f, n),
                    "{f} {n}"
                );
            }
        }
    }

    #[test]
    fn rank_one_small() {
        let doc = present(Family::SmallGln, 1, Some(3)).unwrap();
        assert_eq!(doc.generators, vec![u(1, 1)]);
        assert_eq!(doc.relations.len(), 1);
        assert_eq!(relation_text(&doc, &doc.relations[0]), "u[1,1]^3 = 1");
    }

    #[test]
    fn cubic_two_by_two_display() {
        let doc = present(Family::SmallGln, 2, Some(3)).unwrap();
        let r = doc.relation("power-diagonal", &[2]).unwrap();
        assert_eq!(
            relation_text(&doc, r),
            "u[2,2]^3 + (1 - ε^-2)·u[2,2]⋆u[2,1]⋆u[1,2] + (1 - ε^-4)·u[2,1]⋆u[1,2]⋆u[2,2] \
             + (1 - ε^-2)·(1 - ε^-4)·u[2,1]⋆u[1,1]⋆u[1,2] = 1"
        );
        let r = doc.relation("power-diagonal", &[1]).unwrap();
        assert_eq!(relation_text(&doc, r), "u[1,1]^3 = 1");
    }

    #[test]
    fn specialization_examples() {
        let ctx = CyclotomicCtx::new(3, 1).unwrap();
        assert!(specialize(&(LaurentInt::q_pow(1, 3) - LaurentInt::one()), &ctx).is_zero());
        let s = sigma_q(&Composition::new(vec![1, 2]).unwrap(), 1);
        assert_eq!(
            specialize(&s, &ctx),
            specialize(&one_minus_q_neg2(2, 1), &ctx)
        );
        for ell in [3u32, 5, 7] {
            for n in 1..=3u32 {
                let ctx = CyclotomicCtx::new(ell, n).unwrap();
                let e = (ell * (ell - 1) / 2) as i32;
                assert!(specialize(&LaurentInt::q_pow(n, -e), &ctx).is_one());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for n in 1..=2u8 {
            for f in Family::ALL {
                let doc = present(f, n, f.is_small().then_some(5)).unwrap();
                let s = doc.to_json_string();
                assert_eq!(PresentationDoc::from_json_str(&s).unwrap(), doc);
                assert_eq!(
                    s,
                    present(f, n, f.is_small().then_some(5))
                        .unwrap()
                        .to_json_string()
                );
            }
        }
        assert!(PresentationDoc::from_json_str("{}").is_err());
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(
            present(Family::SmallGln, 2, Some(4)).unwrap_err(),
            Error::BadOrder(4)
        );
        assert!(present(Family::SmallGln, 2, None).is_err());
        assert!(present(Family::Mn, 2, Some(3)).is_err());
        assert_eq!(present(Family::Mn, 0, None).unwrap_err(), Error::BadSize);
        assert_eq!("small-sln".parse::<Family>().unwrap(), Family::SmallSln);
        assert!("gl".parse::<Family>().is_err());
    }

    #[test]
    fn term_counts() {
        assert_eq!(count_terms(2, 3, 2).unwrap().enumerated, 4);
        assert!(count_terms(2, 3, 2).unwrap().agrees());
        assert_eq!(count_terms(1, 3, 1).unwrap().enumerated, 1);
        let c = count_terms(3, 5, 3).unwrap();
        assert_eq!((c.enumerated, c.closed_form), (81, 31));
        assert!(count_terms(2, 3, 3).is_err());
    }

    #[test]
    fn generic_relations_hold() {
        let alg = crate::braided::BraidedAlgebra::new(2).unwrap();
        let doc = present(Family::Sln, 2, None).unwrap();
        for r in doc
            .relations
            .iter()
            .filter(|r| r.tag.starts_with("quadratic"))
        {
            assert!(
                r.residual(&alg).unwrap().is_zero(),
                "{}",
                relation_text(&doc, r)
            );
        }
        let gl = present(Family::Gln, 2, None).unwrap();
        assert!(gl.relations_tagged("t-central").all(|r| r.involves_t()));
    }
}
