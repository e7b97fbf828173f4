//! Suites over the generic ring: coefficients, the FRT algebra, the R-form,
//! the covariantized product and the twisting map.

use rand::seq::SliceRandom;
use rand::Rng;

use super::random::{random_element, random_gen, random_laurent, random_word, rng_for};
use super::{Check, SuiteParams, Tally, Verdict};
use crate::braided::{
    admissible_indices, braided_det_expr_with, m2_display_relations, quadratic_relation,
    BraidedAlgebra, DetStatistic, QuadFamily, Rel3Form,
};
use crate::combinatorics::{compositions, Composition};
use crate::error::Result;
use crate::frt::{
    format_word, normal_words, Element, FrtAlgebra, Gen, Strategy, TensorElement, Word,
};
use crate::rform::{build_rform, CommutationForm, RForm, RtildeConvention, Variant};
use crate::ring::{
    is_zero_mod_cyclotomic, one_minus_q_neg2, q_int, sigma_q, CyclotomicCtx, LaurentInt,
};
use crate::twisting::{twist_quadratic_formula, ChainOrder, Twister};

fn show(w: &[Gen]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        format_word(w, 'x')
    }
}

fn product(factors: impl IntoIterator<Item = u32>, n: u32) -> LaurentInt {
    factors
        .into_iter()
        .fold(LaurentInt::one(), |acc, m| acc * one_minus_q_neg2(m, n))
}

pub(super) fn ring(p: &SuiteParams) -> Vec<Check> {
    let mut out = vec![
        Check::new("ring/axioms", |p| {
            let mut rng = rng_for(p.seed, "ring/axioms");
            let mut t = Tally::zero();
            for _ in 0..p.samples.max(1) * 4 {
                let (a, b, c) = (
                    random_laurent(&mut rng),
                    random_laurent(&mut rng),
                    random_laurent(&mut rng),
                );
                let show3 = || {
                    format!(
                        "a = {}, b = {}, c = {}",
                        a.display(1),
                        b.display(1),
                        c.display(1)
                    )
                };
                t.case((&a + &b) * &c == &a * &c + &b * &c, || {
                    format!("distributivity at {}", show3())
                });
                t.case((&a * &b) * &c == a.clone() * (&b * &c), || {
                    format!("associativity at {}", show3())
                });
                t.case(&a * &b == &b * &a, || {
                    format!("commutativity at {}", show3())
                });
                t.case((&a - &a).is_zero(), || format!("a - a at {}", show3()));
            }
            Ok(t.finish())
        }),
        Check::new("ring/q-integers", |p| {
            let n = p.n as u32;
            let mut t = Tally::zero();
            for k in 0..=12u32 {
                let lhs = q_int(k, n) * LaurentInt::q_minus_qinv(n);
                let rhs = LaurentInt::q_pow(n, k as i32) - LaurentInt::q_pow(n, -(k as i32));
                t.case(lhs == rhs, || {
                    format!("k = {k}: residual {}", (&lhs - &rhs).display(n))
                });
            }
            Ok(t.finish())
        }),
        Check::new("ring/sigma-example", |_| {
            let l: Composition = "3,1,2".parse()?;
            let expect = product([1, 2, 5], 1);
            let got = sigma_q(&l, 1);
            let mut t = Tally::zero();
            t.case(got == expect, || {
                format!("sigma(3,1,2) = {}", got.display(1))
            });
            Ok(t.finish())
        }),
        Check::new("ring/sigma-recursion", |_| {
            let mut t = Tally::zero();
            for big in 1..=8u32 {
                for l in compositions(big)? {
                    let got = sigma_q(&l, 1);
                    let expect = match l.truncate() {
                        Ok(head) => {
                            product((1..l.last_part()).map(|j| big - j), 1) * sigma_q(&head, 1)
                        }
                        Err(_) => product((1..big).map(|j| big - j), 1),
                    };
                    t.case(got == expect, || format!("lambda = ({l})"));
                }
            }
            Ok(t.finish())
        }),
        Check::new("ring/sigma-quotient", |_| {
            let mut t = Tally::zero();
            for big in 1..=8u32 {
                for l in compositions(big)? {
                    let num = product((1..big).map(|j| big - j), 1);
                    let parts = l.parts();
                    let mut tail = 0;
                    let mut den = Vec::new();
                    for &part in parts.iter().rev().take(parts.len() - 1) {
                        tail += part;
                        den.push(big - tail);
                    }
                    let lhs = sigma_q(&l, 1) * product(den, 1);
                    t.case(lhs == num, || format!("lambda = ({l})"));
                }
            }
            Ok(t.finish())
        }),
    ];
    let ells: Vec<u32> = match p.ell {
        Some(ell) => vec![ell],
        None => vec![3, 5, 7],
    };
    for ell in ells {
        out.push(Check::new(format!("ring/cyclotomic-ell{ell}"), move |p| {
            let n = p.n as u32;
            let ctx = CyclotomicCtx::new(ell, n)?;
            let mut rng = rng_for(p.seed, &format!("ring/cyclotomic-ell{ell}"));
            let mut t = Tally::zero();
            for _ in 0..p.samples.max(1) {
                let g = random_laurent(&mut rng);
                let f = ctx.phi() * &g;
                t.case(is_zero_mod_cyclotomic(&f, &ctx), || {
                    format!("Phi * ({}) not reduced to 0", g.display(n))
                });
                let shifted = &g * &LaurentInt::q_pow(n, ell as i32);
                t.case(ctx.reduce(&shifted) == ctx.reduce(&g), || {
                    format!("q^ell * ({}) differs", g.display(n))
                });
            }
            t.case(!is_zero_mod_cyclotomic(&LaurentInt::one(), &ctx), || {
                "1 reduced to 0".into()
            });
            Ok(t.finish())
        }));
    }
    out
}

pub(super) fn fr(p: &SuiteParams) -> Vec<Check> {
    let mut out = vec![
        Check::new("fr/confluence", |p| {
            let alg = FrtAlgebra::new(p.n)?;
            let mut rng = rng_for(p.seed, "fr/confluence");
            let mut t = Tally::zero();
            for _ in 0..p.samples.max(1) * 2 {
                let len = rng.gen_range(0..=6);
                let w = random_word(&mut rng, p.n, len);
                let nf = alg.normal_form(&w, &LaurentInt::one())?;
                let left = alg.normal_form_with(&w, Strategy::Leftmost);
                let right = alg.normal_form_with(&w, Strategy::Rightmost);
                t.case(nf == left && nf == right, || {
                    format!("strategies disagree on {}", show(&w))
                });
                let again = nf.terms().fold(Element::zero(p.n), |acc, (v, c)| {
                    acc.add(&alg.normal_form(v, c).expect("indices in range"))
                });
                t.case(again == nf, || {
                    format!("normal form of {} is not idempotent", show(&w))
                });
            }
            Ok(t.finish())
        }),
        Check::new("fr/associativity", |p| {
            let alg = FrtAlgebra::new(p.n)?;
            let mut rng = rng_for(p.seed, "fr/associativity");
            let mut t = Tally::zero();
            for _ in 0..p.samples.max(1) {
                let a = random_element(&mut rng, &alg, p.max_degree);
                let b = random_element(&mut rng, &alg, p.max_degree);
                let c = random_element(&mut rng, &alg, p.max_degree);
                let l = alg.multiply(&alg.multiply(&a, &b)?, &c)?;
                let r = alg.multiply(&a, &alg.multiply(&b, &c)?)?;
                t.case(l == r, || format!("(ab)c - a(bc) = {}", l.sub(&r)));
            }
            Ok(t.finish())
        }),
        Check::new("fr/coproduct", |p| {
            let alg = FrtAlgebra::new(p.n)?;
            let mut rng = rng_for(p.seed, "fr/coproduct");
            let mut t = Tally::zero();
            for _ in 0..p.samples.max(1) {
                let a = random_element(&mut rng, &alg, p.max_degree);
                let b = random_element(&mut rng, &alg, p.max_degree);
                let lhs = alg.coproduct(&alg.multiply(&a, &b)?)?;
                let rhs = alg.tensor_multiply(&alg.coproduct(&a)?, &alg.coproduct(&b)?);
                t.case(lhs == rhs, || {
                    format!("Delta(ab) != Delta(a)Delta(b) for a = {a}, b = {b}")
                });
                t.case(alg.coproduct2(&a)? == alg.coproduct2_right(&a)?, || {
                    format!("coassociativity fails at {a}")
                });
                let da = alg.coproduct(&a)?;
                t.case(
                    alg.counit_left(&da) == a && alg.counit_right(&da) == a,
                    || format!("counit laws fail at {a}"),
                );
                let ab = alg.multiply(&a, &b)?;
                t.case(alg.counit(&ab) == alg.counit(&a) * alg.counit(&b), || {
                    format!("counit not multiplicative at {a}, {b}")
                });
            }
            Ok(t.finish())
        }),
        Check::new("fr/qdet-central", |p| {
            let alg = FrtAlgebra::new(p.n)?;
            let d = alg.qdet();
            let mut t = Tally::zero();
            for g in Gen::all(p.n) {
                let x = alg.gen(g.row, g.col)?;
                let r = alg.multiply(&d, &x)?.sub(&alg.multiply(&x, &d)?);
                t.case(r.is_zero(), || format!("[qdet, {}] = {r}", show(&[g])));
            }
            Ok(t.finish())
        }),
    ];
    if p.n <= 3 {
        out.push(Check::new("fr/qdet-grouplike", |p| {
            let alg = FrtAlgebra::new(p.n)?;
            let d = alg.qdet();
            let mut t = Tally::zero();
            t.case(alg.coproduct(&d)? == TensorElement::pure(&d, &d), || {
                "Delta(qdet) != qdet (x) qdet".into()
            });
            t.case(alg.counit(&d).is_one(), || "counit(qdet) != 1".into());
            Ok(t.finish())
        }));
    }
    out
}

/// All pairs of normal words up to `d` when there are few, otherwise the
/// generator pairs plus a seeded sample.
fn word_pairs(n: u8, d: usize, samples: usize, key: &str, seed: u64) -> Vec<(Word, Word)> {
    let words: Vec<Word> = (0..=d).flat_map(|k| normal_words(n, k)).collect();
    if words.len() * words.len() <= 4096 {
        return words
            .iter()
            .flat_map(|a| words.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
    }
    let mut rng = rng_for(seed, key);
    let mut out: Vec<(Word, Word)> = Gen::all(n)
        .flat_map(|a| Gen::all(n).map(move |b| (Word::from_slice(&[a]), Word::from_slice(&[b]))))
        .collect();
    for _ in 0..samples.max(1) * 4 {
        let a = words.choose(&mut rng).expect("nonempty").clone();
        let b = words.choose(&mut rng).expect("nonempty").clone();
        out.push((a, b));
    }
    out
}

fn convolution_check(
    key: &'static str,
    l: Variant,
    m: Variant,
    swap: bool,
    conv: RtildeConvention,
    witness: bool,
) -> Check {
    let run = move |p: &SuiteParams| -> Result<Verdict> {
        let form = RForm::with_convention(p.n, conv)?;
        let mut t = if witness {
            Tally::witness()
        } else {
            Tally::zero()
        };
        for (a, b) in word_pairs(p.n, p.max_degree.min(3), p.samples, key, p.seed) {
            let r = form.convolution_residual(l, m, &a, &b, swap);
            t.case(r.is_zero(), || {
                format!(
                    "a = {}, b = {}: residual {}",
                    show(&a),
                    show(&b),
                    r.display(p.n as u32)
                )
            });
        }
        Ok(t.finish())
    };
    if witness {
        Check::witness(key, run)
    } else {
        Check::new(key, run)
    }
}

pub(super) fn rform(p: &SuiteParams) -> Vec<Check> {
    let cop = RtildeConvention::Cop;
    let mut out = vec![
        convolution_check(
            "rform/convolution-rinv-r",
            Variant::Rinv,
            Variant::R,
            false,
            cop,
            false,
        ),
        convolution_check(
            "rform/convolution-r-rinv",
            Variant::R,
            Variant::Rinv,
            false,
            cop,
            false,
        ),
        convolution_check(
            "rform/convolution-rtilde-r",
            Variant::Rtilde,
            Variant::R,
            true,
            cop,
            false,
        ),
        convolution_check(
            "rform/convolution-r-rtilde",
            Variant::R,
            Variant::Rtilde,
            true,
            cop,
            false,
        ),
        Check::new("rform/rtilde-integral", |p| {
            // Solving fails with a non-Laurent entry if some pivot is not a unit.
            let mut t = Tally::zero();
            let solved = RForm::with_convention(p.n, RtildeConvention::Cop);
            t.case(solved.is_ok(), || format!("{:?}", solved.as_ref().err()));
            Ok(t.finish())
        }),
        Check::new("rform/eval-vs-brute", |p| {
            let form = build_rform(p.n)?;
            let mut t = Tally::zero();
            for (a, b) in word_pairs(
                p.n,
                p.max_degree.min(3),
                p.samples,
                "rform/eval-vs-brute",
                p.seed,
            ) {
                if a.len() != b.len() {
                    continue;
                }
                for v in [Variant::R, Variant::Rinv, Variant::Rtilde] {
                    let fast = form.eval_r(v, &a, &b);
                    let slow = form.eval_r_brute(v, &a, &b);
                    t.case(fast == slow, || {
                        format!("{v:?}({}, {})", show(&a), show(&b))
                    });
                }
            }
            Ok(t.finish())
        }),
        Check::new("rform/commutation", |p| {
            let frt = FrtAlgebra::new(p.n)?;
            let form = build_rform(p.n)?;
            let mut t = Tally::zero();
            let mut pairs: Vec<(Word, Word)> = Gen::all(p.n)
                .flat_map(|a| {
                    Gen::all(p.n).map(move |b| (Word::from_slice(&[a]), Word::from_slice(&[b])))
                })
                .collect();
            let mut rng = rng_for(p.seed, "rform/commutation");
            for _ in 0..p.samples.max(1) {
                pairs.push((random_word(&mut rng, p.n, 2), random_word(&mut rng, p.n, 2)));
            }
            for (a, b) in pairs {
                let r = form.commutation_residual(&frt, &a, &b, CommutationForm::Standard)?;
                t.case(r.is_zero(), || {
                    format!("a = {}, b = {}: {r}", show(&a), show(&b))
                });
            }
            Ok(t.finish())
        }),
    ];
    if p.n >= 2 {
        out.push(Check::witness("rform/commutation-swapped-witness", |p| {
            let frt = FrtAlgebra::new(p.n)?;
            let form = build_rform(p.n)?;
            let mut t = Tally::witness();
            for a in Gen::all(p.n) {
                for b in Gen::all(p.n) {
                    let r =
                        form.commutation_residual(&frt, &[a], &[b], CommutationForm::Swapped)?;
                    t.case(r.is_zero(), || {
                        format!("a = {}, b = {}", show(&[a]), show(&[b]))
                    });
                }
            }
            Ok(t.finish())
        }));
        out.push(convolution_check(
            "rform/plain-rtilde-witness",
            Variant::Rtilde,
            Variant::R,
            true,
            RtildeConvention::Plain,
            true,
        ));
    }
    out
}

pub(super) fn braided(p: &SuiteParams) -> Vec<Check> {
    let mut out = vec![Check::new("braided/associativity", |p| {
        let alg = BraidedAlgebra::new(p.n)?;
        let gens: Vec<Gen> = Gen::all(p.n).collect();
        let triples: Vec<[Gen; 3]> = if gens.len().pow(3) <= 729 {
            let mut all = Vec::new();
            for &a in &gens {
                for &b in &gens {
                    all.extend(gens.iter().map(|&c| [a, b, c]));
                }
            }
            all
        } else {
            let mut rng = rng_for(p.seed, "braided/associativity");
            (0..p.samples.max(1) * 8)
                .map(|_| [0; 3].map(|_| random_gen(&mut rng, p.n)))
                .collect()
        };
        let mut t = Tally::zero();
        for [a, b, c] in triples {
            let (ua, ub, uc) = (
                alg.gen(a.row, a.col)?,
                alg.gen(b.row, b.col)?,
                alg.gen(c.row, c.col)?,
            );
            let l = alg.braided_multiply(&alg.braided_multiply(&ua, &ub)?, &uc)?;
            let r = alg.braided_multiply(&ua, &alg.braided_multiply(&ub, &uc)?)?;
            t.case(l == r, || {
                format!("({} {} {})", show(&[a]), show(&[b]), show(&[c]))
            });
        }
        Ok(t.finish())
    })];
    for family in QuadFamily::ALL {
        let tag = family.tag();
        out.push(Check::new(format!("braided/{tag}"), move |p| {
            let alg = BraidedAlgebra::new(p.n)?;
            let mut t = Tally::zero();
            for idx in admissible_indices(p.n, family) {
                let r = alg.check_quadratic_relation(family, &idx)?;
                t.case(r.is_zero(), || {
                    format!("indices {idx:?}: {}", r.as_element().render('u'))
                });
            }
            Ok(t.finish())
        }));
    }
    if p.n >= 3 {
        out.push(Check::witness(
            "braided/quadratic-3-as-printed-witness",
            |p| {
                let alg = BraidedAlgebra::new(p.n)?;
                let mut t = Tally::witness();
                for idx in admissible_indices(p.n, QuadFamily::Rel3) {
                    let rel = quadratic_relation(p.n, QuadFamily::Rel3, &idx, Rel3Form::AsPrinted)?;
                    let r = alg.relation_residual(&rel.lhs, &rel.rhs)?;
                    t.case(r.is_zero(), || format!("indices {idx:?}"));
                }
                Ok(t.finish())
            },
        ));
    }
    if p.n <= 3 {
        out.push(Check::new("braided/det-central", |p| {
            let alg = BraidedAlgebra::new(p.n)?;
            let d = alg.braided_det();
            let mut t = Tally::zero();
            for g in Gen::all(p.n) {
                let u = alg.gen(g.row, g.col)?;
                let r = alg
                    .braided_multiply(&d, &u)?
                    .sub(&alg.braided_multiply(&u, &d)?);
                t.case(r.is_zero(), || format!("[det, u{}]", show(&[g])));
            }
            Ok(t.finish())
        }));
        out.push(Check::new("braided/recover-product", |p| {
            let alg = BraidedAlgebra::new(p.n)?;
            let mut rng = rng_for(p.seed, "braided/recover-product");
            let mut t = Tally::zero();
            for _ in 0..p.samples.max(1) {
                let a = random_element(&mut rng, alg.frt(), 2);
                let b = random_element(&mut rng, alg.frt(), 2);
                let got = alg.recover_product(&a, &b)?;
                let want = alg.frt().multiply(&a, &b)?;
                t.case(got == want, || {
                    format!("a = {a}, b = {b}: residual {}", got.sub(&want))
                });
            }
            Ok(t.finish())
        }));
    }
    if p.n == 2 {
        out.push(Check::new("braided/two-by-two-corrected", |_| {
            m2_check(false, Tally::zero())
        }));
        out.push(Check::witness(
            "braided/two-by-two-as-printed-witness",
            |_| m2_check(true, Tally::witness()),
        ));
    }
    out
}

fn m2_check(as_printed: bool, mut t: Tally) -> Result<Verdict> {
    let alg = BraidedAlgebra::new(2)?;
    for (name, l, r) in m2_display_relations(as_printed) {
        let res = alg.relation_residual(&l, &r)?;
        t.case(res.is_zero(), || {
            format!("{name}: residual {}", res.as_element().render('u'))
        });
    }
    Ok(t.finish())
}

pub(super) fn twist(p: &SuiteParams) -> Vec<Check> {
    let mut out = vec![
        Check::new("twist/quadratic-formula", |p| {
            let tw = Twister::new(p.n)?;
            let mut t = Tally::zero();
            for a in Gen::all(p.n) {
                for b in Gen::all(p.n) {
                    let direct = tw.twist_word(&[a, b])?;
                    let formula = tw
                        .algebra()
                        .evaluate(&twist_quadratic_formula(p.n, a.row, a.col, b.row, b.col)?)?;
                    t.case(direct == formula, || format!("Psi({})", show(&[a, b])));
                }
            }
            Ok(t.finish())
        }),
        Check::new("twist/injective", |p| {
            let tw = Twister::new(p.n)?;
            let mut t = Tally::zero();
            for d in 0..=p.max_degree {
                let c = tw.injectivity_certificate(d);
                t.case(c.certifies(), || {
                    format!("degree {d}: determinant vanished at every sample point")
                });
            }
            Ok(t.finish())
        }),
        Check::new("twist/determinant", |p| {
            let tw = Twister::new(p.n)?;
            let got = tw.twist(&tw.algebra().frt().qdet())?;
            let want = tw.algebra().braided_det();
            let mut t = Tally::zero();
            t.case(got == want, || {
                format!("residual {}", got.sub(&want).as_element().render('u'))
            });
            Ok(t.finish())
        }),
        Check::new("twist/formal-evaluates", |p| {
            let tw = Twister::new(p.n)?;
            let mut t = Tally::zero();
            for d in 0..=p.max_degree.min(3) {
                for w in normal_words(p.n, d) {
                    let a = tw.algebra().frt().normal_form(&w, &LaurentInt::one())?;
                    let formal = tw.algebra().evaluate(&tw.twist_formal(&a)?)?;
                    t.case(formal == tw.twist(&a)?, || format!("Psi({})", show(&w)));
                }
            }
            Ok(t.finish())
        }),
        Check::new("twist/offdiagonal-powers", |p| {
            let tw = Twister::new(p.n)?;
            let mut t = Tally::zero();
            for g in Gen::all(p.n).filter(|g| !g.is_diagonal()) {
                for big_n in 0..=p.max_power {
                    let (s, e) = tw.twist_offdiag_power(g.row, g.col, big_n)?;
                    let w: Word = std::iter::repeat_n(g, big_n as usize).collect();
                    t.case(e.scale(&s) == tw.twist_word(&w)?, || {
                        format!("Psi({}^{big_n})", show(&[g]))
                    });
                }
            }
            Ok(t.finish())
        }),
        Check::new("twist/diagonal-closed", |p| {
            let tw = Twister::new(p.n)?;
            let mut t = Tally::zero();
            for k in 1..=p.n {
                for big_n in 2..=p.max_power {
                    let w: Word = std::iter::repeat_n(Gen::new(k, k), big_n as usize).collect();
                    let direct = tw.twist_word(&w)?;
                    for order in [ChainOrder::AsComposed, ChainOrder::ReversedSegments] {
                        let closed = tw.diag_power_closed_with(k, big_n, order)?;
                        t.case(closed == direct, || {
                            format!("k = {k}, N = {big_n}, {order:?}")
                        });
                    }
                }
            }
            Ok(t.finish())
        }),
        Check::new("twist/mixed-closed", |p| {
            let tw = Twister::new(p.n)?;
            let mut t = Tally::zero();
            for k in 1..=p.n {
                for l in 1..=p.n {
                    for big_n in 1..=p.max_power.min(4) {
                        let mut w: Word =
                            std::iter::repeat_n(Gen::new(k, k), big_n as usize).collect();
                        w.push(Gen::new(k, l));
                        let ok = tw.twist_mixed_closed(k, l, big_n)? == tw.twist_word(&w)?;
                        t.case(ok, || format!("k = {k}, l = {l}, N = {big_n}"));
                    }
                }
            }
            Ok(t.finish())
        }),
        Check::new("twist/recursion", |p| {
            let tw = Twister::new(p.n)?;
            let mut t = Tally::zero();
            for k in 1..=p.n {
                for l in 1..=p.n {
                    for big_n in 1..=p.max_power.min(4) {
                        let r = tw.recursion_residual(k, l, big_n)?;
                        t.case(r.is_zero(), || format!("k = {k}, l = {l}, N = {big_n}"));
                    }
                }
            }
            Ok(t.finish())
        }),
    ];
    if p.n >= 3 {
        out.push(Check::witness(
            "twist/determinant-exceedance-witness",
            |p| {
                let tw = Twister::new(p.n)?;
                let got = tw.twist(&tw.algebra().frt().qdet())?;
                let other = tw
                    .algebra()
                    .evaluate(&braided_det_expr_with(p.n, DetStatistic::Exceedance))?;
                let mut t = Tally::witness();
                t.case(got == other, || {
                    "weighting by exceedances does not give the twisted determinant".into()
                });
                Ok(t.finish())
            },
        ));
    }
    out
}
