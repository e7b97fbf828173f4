//! Assembling presentation documents and counting their terms.

use serde::Serialize;

use super::doc::{
    specialize_doc, terms_from_uexpr, unit_term, Coeff, CoeffRing, Family, PresentationDoc,
    Relation, Symbol, Term,
};
use crate::braided::{quadratic_relations, Rel3Form};
use crate::combinatorics::{compositions, v_set};
use crate::error::{Error, Result};
use crate::frt::{deficiency, inv_count, permutations, Gen};
use crate::ring::{sigma_factors, sigma_q, CyclotomicCtx, Integer, LaurentInt};
use crate::twisting::{v_chain, ChainOrder};

fn u_word(w: &[Gen]) -> Vec<Symbol> {
    w.iter().map(|&g| Symbol::U(g)).collect()
}

/// Quadratic relations with the third family in its twist-verified form.
fn quadratic(n: u8) -> Vec<Relation> {
    quadratic_relations(n, Rel3Form::Corrected)
        .into_iter()
        .map(|r| Relation {
            tag: r.family.tag().into(),
            indices: r.indices,
            lhs: terms_from_uexpr(&r.lhs),
            rhs: terms_from_uexpr(&r.rhs),
        })
        .collect()
}

/// Determinant chains, identity permutation first.
pub fn det_terms(n: u8) -> Vec<Term> {
    permutations(n)
        .into_iter()
        .map(|sigma| {
            let l = inv_count(&sigma) as i32;
            let sign = if l % 2 == 0 { 1 } else { -1 };
            let e = (l + deficiency(&sigma) as i32) * n as i32;
            let w: Vec<Gen> = (1..=n)
                .rev()
                .map(|i| Gen::new(i, sigma[i as usize - 1]))
                .collect();
            Term {
                coeff: Coeff::plain(LaurentInt::monomial(Integer::from(sign), e)),
                word: u_word(&w),
            }
        })
        .collect()
}

/// Chain layout used for the diagonal power relation. The `n = 2` documents
/// follow the `mon(λ₋₁) ⋆ ⋯ ⋆ mon(λ₁)` layout; both layouts evaluate equally.
pub fn diagonal_layout(n: u8) -> ChainOrder {
    if n == 2 {
        ChainOrder::ReversedSegments
    } else {
        ChainOrder::AsComposed
    }
}

/// `Σ_{λ⊨ℓ} σ(λ) Σ_{β∈V^k(λ)} chain(β)`, ordered by the factor list of `σ(λ)`, shortest first.
pub fn diagonal_terms(n: u8, k: u8, ell: u32, order: ChainOrder) -> Result<Vec<Term>> {
    let mut out: Vec<((usize, Vec<u32>), Term)> = Vec::new();
    for lambda in compositions(ell)? {
        let factors = sigma_factors(&lambda);
        let value = sigma_q(&lambda, n as u32);
        for beta in v_set(k, &lambda) {
            let w = v_chain(&beta, &lambda, order);
            out.push((
                (factors.len(), factors.clone()),
                Term {
                    coeff: Coeff::factored(value.clone(), factors.clone()),
                    word: u_word(&w),
                },
            ));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, t)| t).collect())
}

/// Assembles the generators and relations of a family.
pub fn present(family: Family, n: u8, ell: Option<u32>) -> Result<PresentationDoc> {
    if n == 0 {
        return Err(Error::BadSize);
    }
    let ctx = if family.is_small() {
        let ell = ell.ok_or_else(|| {
            Error::InvalidArgument(format!("{family} needs an odd order ell >= 3"))
        })?;
        Some(CyclotomicCtx::new(ell, n as u32)?)
    } else {
        if ell.is_some() {
            return Err(Error::InvalidArgument(format!(
                "{family} takes no root of unity"
            )));
        }
        None
    };
    let mut generators: Vec<Symbol> = Gen::all(n).map(Symbol::U).collect();
    let mut relations = quadratic(n);
    let t_word = |mut w: Vec<Symbol>, front: bool| {
        if front {
            w.insert(0, Symbol::T);
        } else {
            w.push(Symbol::T);
        }
        w
    };
    match family {
        Family::Mn => {}
        Family::Gln => {
            generators.push(Symbol::T);
            let with_t = |front: bool| -> Vec<Term> {
                det_terms(n)
                    .into_iter()
                    .map(|t| Term {
                        coeff: t.coeff,
                        word: t_word(t.word, front),
                    })
                    .collect()
            };
            relations.push(Relation {
                tag: "det-inverse-right".into(),
                indices: vec![],
                lhs: with_t(false),
                rhs: vec![unit_term()],
            });
            relations.push(Relation {
                tag: "det-inverse-left".into(),
                indices: vec![],
                lhs: with_t(true),
                rhs: vec![unit_term()],
            });
            for g in Gen::all(n) {
                relations.push(Relation {
                    tag: "t-central".into(),
                    indices: vec![g.row, g.col],
                    lhs: vec![Term {
                        coeff: Coeff::one(),
                        word: vec![Symbol::U(g), Symbol::T],
                    }],
                    rhs: vec![Term {
                        coeff: Coeff::one(),
                        word: vec![Symbol::T, Symbol::U(g)],
                    }],
                });
            }
        }
        Family::Sln | Family::SmallSln | Family::SmallGln => {}
    }
    if let Some(ctx) = &ctx {
        let ell = ctx.ell();
        for g in Gen::all(n).filter(|g| !g.is_diagonal()) {
            relations.push(Relation {
                tag: "power-nilpotent".into(),
                indices: vec![g.row, g.col],
                lhs: vec![Term {
                    coeff: Coeff::one(),
                    word: vec![Symbol::U(g); ell as usize],
                }],
                rhs: vec![],
            });
        }
        for k in 1..=n {
            relations.push(Relation {
                tag: "power-diagonal".into(),
                indices: vec![k],
                lhs: diagonal_terms(n, k, ell, diagonal_layout(n))?,
                rhs: vec![unit_term()],
            });
        }
    }
    if matches!(family, Family::Sln | Family::SmallSln) {
        relations.push(Relation {
            tag: "det-one".into(),
            indices: vec![],
            lhs: det_terms(n),
            rhs: vec![unit_term()],
        });
    }
    let doc = PresentationDoc {
        algebra: family,
        n,
        ell: None,
        ring: CoeffRing::Laurent { n: n as u32 },
        generators,
        relations,
    };
    match ctx {
        Some(ctx) => specialize_doc(&doc, &ctx),
        None => Ok(doc),
    }
}

/// Relation count predicted for a family.
pub fn expected_relation_count(family: Family, n: u8) -> usize {
    let m = (n as usize).pow(2);
    let quad = m * (m - 1) / 2;
    match family {
        Family::Mn => quad,
        Family::Gln => quad + 2 + m,
        Family::Sln => quad + 1,
        Family::SmallGln => quad + m,
        Family::SmallSln => quad + m + 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TermCount {
    pub n: u8,
    pub ell: u32,
    pub k: u8,
    /// Monomials with nonzero coefficient at `q = ε` in the diagonal relation.
    pub enumerated: u64,
    /// `1 + (2^{ℓ-1} - 1)(k - 1)`.
    pub closed_form: u64,
}

impl TermCount {
    pub fn agrees(&self) -> bool {
        self.enumerated == self.closed_form
    }
}

/// Counts the diagonal relation for `k` by enumeration, next to the closed form.
pub fn count_terms(n: u8, ell: u32, k: u8) -> Result<TermCount> {
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange(n, k, k));
    }
    let ctx = CyclotomicCtx::new(ell, n as u32)?;
    let terms = diagonal_terms(n, k, ell, ChainOrder::AsComposed)?;
    let enumerated = terms
        .iter()
        .filter(|t| !ctx.reduce(&t.coeff.value).is_zero())
        .count() as u64;
    let closed_form = 1 + ((1u64 << (ell - 1)) - 1) * (k as u64 - 1);
    Ok(TermCount {
        n,
        ell,
        k,
        enumerated,
        closed_form,
    })
}
