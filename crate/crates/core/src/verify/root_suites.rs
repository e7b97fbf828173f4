//! Suites at a root of unity: the added power relations, the displayed
//! examples, and the term counts.

use super::displays::{cubic_display_n2, det3_display, general_cubic_display, quintic_display_n2};
use super::{Check, SuiteParams, Tally};
use crate::braided::{braided_det_expr, BraidedAlgebra, BraidedElement, UExpr};
use crate::combinatorics::{compositions, v_set, v_set_size, Composition, IndexTuple};
use crate::error::{Error, Result};
use crate::frt::{Element, Gen, Word};
use crate::presentations::{
    count_terms, expected_relation_count, present, Family, PresentationDoc, Relation,
};
use crate::ring::{one_minus_q_neg2, sigma_q, CyclotomicCtx, Integer, LaurentInt};
use crate::twisting::Twister;

fn reduce(e: &BraidedElement, ctx: &CyclotomicCtx) -> Element {
    let terms = e
        .as_element()
        .terms()
        .map(|(w, c)| (w.clone(), ctx.reduce(c)))
        .filter(|(_, c)| !c.is_zero());
    Element::from_normal_terms(e.n(), terms.collect::<Vec<_>>())
}

fn lhs_of(doc: &PresentationDoc, tag: &str, idx: &[u8]) -> Result<UExpr> {
    let rel: &Relation = doc
        .relation(tag, idx)
        .ok_or_else(|| Error::InvalidArgument(format!("document has no {tag} {idx:?}")))?;
    let (l, _) = rel
        .as_uexprs(doc.n)
        .ok_or_else(|| Error::InvalidArgument(format!("{tag} involves t")))?;
    Ok(l)
}

pub(super) fn theorem(p: &SuiteParams) -> Result<Vec<Check>> {
    let ell = p.ell_or_default();
    CyclotomicCtx::new(ell, p.n as u32)?;
    let mut out = Vec::new();
    for k in 1..=p.n {
        out.push(Check::new(
            format!("theorem/power-diagonal-k{k}"),
            move |p| {
                let ctx = CyclotomicCtx::new(ell, p.n as u32)?;
                let tw = Twister::new(p.n)?;
                let alg = tw.algebra();
                let one = BraidedElement::one(p.n);
                let w: Word = std::iter::repeat_n(Gen::new(k, k), ell as usize).collect();
                let twisted = reduce(&tw.twist_word(&w)?.sub(&one), &ctx);
                let doc = present(Family::SmallGln, p.n, Some(ell))?;
                let emitted = reduce(
                    &alg.evaluate(&lhs_of(&doc, "power-diagonal", &[k])?)?
                        .sub(&one),
                    &ctx,
                );
                let mut t = Tally::zero();
                t.case(twisted == emitted, || {
                    format!("residual {}", twisted.sub(&emitted).render('u'))
                });
                Ok(t.finish())
            },
        ));
    }
    if p.n >= 2 {
        out.push(Check::new("theorem/power-nilpotent", move |p| {
            let ctx = CyclotomicCtx::new(ell, p.n as u32)?;
            let tw = Twister::new(p.n)?;
            let doc = present(Family::SmallGln, p.n, Some(ell))?;
            let mut t = Tally::zero();
            let e = (ell * (ell - 1) / 2) as i32;
            let scalar = ctx.reduce(&LaurentInt::q_pow(p.n as u32, -e));
            t.case(scalar.is_one(), || {
                format!("q^-{e} reduces to {}", scalar.display(p.n as u32))
            });
            for g in Gen::all(p.n).filter(|g| !g.is_diagonal()) {
                let w: Word = std::iter::repeat_n(g, ell as usize).collect();
                let twisted = reduce(&tw.twist_word(&w)?, &ctx);
                let emitted = reduce(
                    &tw.algebra()
                        .evaluate(&lhs_of(&doc, "power-nilpotent", &[g.row, g.col])?)?,
                    &ctx,
                );
                t.case(twisted == emitted, || {
                    format!("({},{}): residual {}", g.row, g.col, twisted.sub(&emitted))
                });
            }
            Ok(t.finish())
        }));
    }
    out.push(Check::new("theorem/det-one", |p| {
        let tw = Twister::new(p.n)?;
        let frt = tw.algebra().frt();
        let twisted = tw.twist(&frt.qdet().sub(&Element::one(p.n)))?;
        let doc = present(Family::Sln, p.n, None)?;
        let emitted = tw
            .algebra()
            .evaluate(&lhs_of(&doc, "det-one", &[])?)?
            .sub(&BraidedElement::one(p.n));
        let mut t = Tally::zero();
        t.case(twisted == emitted, || {
            format!(
                "residual {}",
                twisted.sub(&emitted).as_element().render('u')
            )
        });
        Ok(t.finish())
    }));
    out.push(Check::new("theorem/relation-counts", move |p| {
        let mut t = Tally::zero();
        for f in Family::ALL {
            let doc = present(f, p.n, f.is_small().then_some(ell))?;
            let want = expected_relation_count(f, p.n);
            t.case(doc.relations.len() == want, || {
                format!("{f}: {} relations, expected {want}", doc.relations.len())
            });
        }
        Ok(t.finish())
    }));
    Ok(out)
}

fn diagonal_lhs(n: u8, ell: u32, k: u8) -> Result<UExpr> {
    lhs_of(
        &present(Family::SmallGln, n, Some(ell))?,
        "power-diagonal",
        &[k],
    )
}

fn chain(n: u8, w: &[(u8, u8)], c: LaurentInt) -> UExpr {
    let w: Word = w.iter().map(|&(i, j)| Gen::new(i, j)).collect();
    UExpr::chain(n, &w, c)
}

pub(super) fn examples(_: &SuiteParams) -> Vec<Check> {
    vec![
        Check::new("examples/sigma-3-1-2", |_| {
            let mut t = Tally::zero();
            let c = |s: &str| s.parse::<Composition>();
            let m = |k| one_minus_q_neg2(k, 1);
            let s312 = sigma_q(&c("3,1,2")?, 1);
            t.case(s312 == m(1) * m(2) * m(5), || {
                format!("sigma(3,1,2) = {}", s312.display(1))
            });
            t.case(s312 == m(5) * sigma_q(&c("3,1")?, 1), || {
                "sigma(3,1,2) != (1 - q^-10) sigma(3,1)".into()
            });
            t.case(sigma_q(&c("3,1")?, 1) == sigma_q(&c("3")?, 1), || {
                "sigma(3,1) != sigma(3)".into()
            });
            Ok(t.finish())
        }),
        Check::new("examples/v4-3-1-2", |_| {
            let l: Composition = "3,1,2".parse()?;
            let all: Vec<IndexTuple> = v_set(4, &l).collect();
            let mut t = Tally::zero();
            t.case(all.len() == 27, || format!("|V^4(3,1,2)| = {}", all.len()));
            t.case(v_set_size(4, &l) == 27, || "size formula".into());
            t.case(all.contains(&IndexTuple(vec![4, 2, 3, 4, 4, 1, 4])), || {
                "(4,2,3,4,4,1,4) missing".into()
            });
            for b in &all {
                t.case(b.is_in_v_set(4, &l), || {
                    format!("{:?} fails membership", b.0)
                });
            }
            Ok(t.finish())
        }),
        Check::new("examples/v2-singletons", |_| {
            let mut t = Tally::zero();
            for ell in 1..=7 {
                for l in compositions(ell)? {
                    let all: Vec<IndexTuple> = v_set(2, &l).collect();
                    let mut shape = vec![2u8];
                    for &part in l.parts() {
                        shape.extend(std::iter::repeat_n(1, part as usize - 1));
                        shape.push(2);
                    }
                    t.case(all == vec![IndexTuple(shape)], || {
                        format!("V^2({l}) = {all:?}")
                    });
                }
            }
            Ok(t.finish())
        }),
        Check::new("examples/cubic-two-by-two", |_| {
            let mut t = Tally::zero();
            let got = diagonal_lhs(2, 3, 2)?;
            t.case(got == cubic_display_n2(), || {
                format!("emitted {}", got.render())
            });
            let first = diagonal_lhs(2, 3, 1)?;
            t.case(first == chain(2, &[(1, 1); 3], LaurentInt::one()), || {
                format!("k = 1 emitted {}", first.render())
            });
            Ok(t.finish())
        }),
        Check::new("examples/quintic-two-by-two", |_| {
            let mut t = Tally::zero();
            let got = diagonal_lhs(2, 5, 2)?;
            t.case(got.len() == 16, || format!("{} terms", got.len()));
            t.case(got == quintic_display_n2(), || {
                format!("differs by {}", got.sub(&quintic_display_n2()).render())
            });
            Ok(t.finish())
        }),
        Check::new("examples/quintic-two-by-two-value", |_| {
            let mut t = Tally::zero();
            let got = diagonal_lhs(2, 5, 2)?;
            let ctx = CyclotomicCtx::new(5, 2)?;
            let alg = BraidedAlgebra::new(2)?;
            let shown = reduce(&alg.evaluate(&quintic_display_n2())?, &ctx);
            let emitted = reduce(&alg.evaluate(&got)?, &ctx);
            t.case(shown == emitted, || {
                format!(
                    "values differ at q = ε by {}",
                    shown.sub(&emitted).render('u')
                )
            });
            Ok(t.finish())
        }),
        Check::new("examples/cubic-general", |_| {
            let mut t = Tally::zero();
            for n in 2..=3u8 {
                let alg = BraidedAlgebra::new(n)?;
                for k in 1..=n {
                    let shown = general_cubic_display(n, k);
                    let got = diagonal_lhs(n, 3, k)?;
                    if n >= 3 {
                        t.case(got == shown, || {
                            format!("n = {n}, k = {k}: emitted {}", got.render())
                        });
                    }
                    let same = alg.evaluate(&got)? == alg.evaluate(&shown)?;
                    t.case(same, || format!("n = {n}, k = {k}: values differ"));
                }
            }
            Ok(t.finish())
        }),
        Check::new("examples/determinant-two-by-two", |_| {
            let tw = Twister::new(2)?;
            let got = tw.twist(&tw.algebra().frt().qdet())?;
            let shown = chain(2, &[(2, 2), (1, 1)], LaurentInt::one()).sub(&chain(
                2,
                &[(2, 1), (1, 2)],
                LaurentInt::q_pow(2, 2),
            ));
            let mut t = Tally::zero();
            t.case(got == tw.algebra().evaluate(&shown)?, || {
                "Psi(qdet) != d*a - q^2 c*b".into()
            });
            Ok(t.finish())
        }),
        Check::new("examples/determinant-three-by-three", |_| {
            let n = 3u8;
            let tw = Twister::new(n)?;
            let got = tw.twist(&tw.algebra().frt().qdet())?;
            let q = |sign: i64, e: i32| LaurentInt::monomial(Integer::from(sign), e * n as i32);
            let mut e = UExpr::zero(n);
            for (c, cols) in [
                (q(1, 0), [3, 2, 1]),
                (q(-1, 2), [3, 1, 2]),
                (q(-1, 2), [2, 3, 1]),
                (q(1, 3), [1, 3, 2]),
                (q(1, 4), [2, 1, 3]),
                (q(-1, 4), [1, 2, 3]),
            ] {
                e = e.add(&chain(n, &[(3, cols[0]), (2, cols[1]), (1, cols[2])], c));
            }
            let mut t = Tally::zero();
            t.case(braided_det_expr(n) == e, || {
                format!("braided_det(3) = {}", braided_det_expr(n).render())
            });
            t.case(got == tw.algebra().evaluate(&e)?, || {
                "Psi(qdet) differs from the solved expansion".into()
            });
            Ok(t.finish())
        }),
        Check::witness("examples/det3-display-witness", |_| {
            let tw = Twister::new(3)?;
            let got = tw.twist(&tw.algebra().frt().qdet())?;
            let shown = tw.algebra().evaluate(&det3_display())?;
            let mut t = Tally::witness();
            t.case(got == shown, || {
                format!(
                    "Psi(qdet) - display = {}",
                    got.sub(&shown).as_element().render('u')
                )
            });
            Ok(t.finish())
        }),
        Check::new("examples/small-sl3-determinant", |_| {
            let ctx = CyclotomicCtx::new(3, 3)?;
            let doc = present(Family::SmallSln, 3, Some(3))?;
            let got = lhs_of(&doc, "det-one", &[])?;
            let want = braided_det_expr(3);
            let mut t = Tally::zero();
            let reduced = |e: &UExpr| e.map_coeffs(|c| ctx.reduce(c));
            t.case(reduced(&got) == reduced(&want), || {
                format!("emitted {}", got.render())
            });
            Ok(t.finish())
        }),
    ]
}

/// `Σ_λ |V^k(λ)|` by sorting every tuple `(k, β₂, …, β_ℓ, k)` into the
/// composition its `k` entries cut out.
fn brute_tuple_total(k: u8, ell: u32) -> Result<u64> {
    let mut total = 0;
    let inner = ell as usize - 1;
    let mut cur = vec![1u8; inner];
    loop {
        let mut beta = vec![k];
        beta.extend(&cur);
        beta.push(k);
        let mut parts = Vec::new();
        let mut last = 0;
        for (i, &b) in beta.iter().enumerate().skip(1) {
            if b == k {
                parts.push((i - last) as u32);
                last = i;
            }
        }
        if IndexTuple(beta).is_in_v_set(k, &Composition::new(parts)?) {
            total += 1;
        }
        let Some(pos) = (0..inner).rev().find(|&i| cur[i] < k) else {
            return Ok(total);
        };
        cur[pos] += 1;
        for c in &mut cur[pos + 1..] {
            *c = 1;
        }
    }
}

pub(super) fn counts(p: &SuiteParams) -> Result<Vec<Check>> {
    let ell = p.ell_or_default();
    CyclotomicCtx::new(ell, 1)?;
    let ks: Vec<u8> = match p.k {
        Some(k) => vec![k],
        None => (1..=p.n).collect(),
    };
    let mut out = vec![Check::new("counts/compositions", |_| {
        let mut t = Tally::zero();
        for big in 1..=12u32 {
            let c = compositions(big)?.count() as u64;
            t.case(c == 1 << (big - 1), || {
                format!("N = {big}: {c} compositions")
            });
        }
        Ok(t.finish())
    })];
    for k in ks {
        out.push(Check::new(
            format!("counts/closed-form-ell{ell}-k{k}"),
            move |p| {
                let c = count_terms(p.n.max(k), ell, k)?;
                let mut t = Tally::zero();
                t.case(c.agrees(), || {
                    format!(
                        "enumerated {} monomials, closed form gives {}",
                        c.enumerated, c.closed_form
                    )
                });
                Ok(t.finish())
            },
        ));
        out.push(Check::new(
            format!("counts/enumeration-ell{ell}-k{k}"),
            move |p| {
                let c = count_terms(p.n.max(k), ell, k)?;
                let brute = brute_tuple_total(k, ell)?;
                let power = (k as u64).pow(ell - 1);
                let mut t = Tally::zero();
                t.case(brute == power, || {
                    format!("brute total {brute}, k^(ell-1) = {power}")
                });
                t.case(c.enumerated == power, || {
                    format!("enumerated {}, k^(ell-1) = {power}", c.enumerated)
                });
                for l in compositions(ell)? {
                    for b in v_set(k, &l) {
                        t.case(b.is_in_v_set(k, &l), || {
                            format!("{:?} not in V^{k}({l})", b.0)
                        });
                    }
                }
                Ok(t.finish())
            },
        ));
    }
    Ok(out)
}
