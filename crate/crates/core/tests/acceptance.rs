//! Acceptance criteria, checked exactly. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use recalg::braided::{
    admissible_indices, braided_det_expr, m2_display_relations, quadratic_relation, BraidedAlgebra,
    QuadFamily, Rel3Form, UExpr,
};
use recalg::combinatorics::{compositions, v_set, Composition, IndexTuple};
use recalg::presentations::{count_terms, present, Family, PresentationDoc};
use recalg::ring::{one_minus_q_neg2, sigma_q, CyclotomicCtx};
use recalg::verify::{
    cubic_display_n2, det3_display, general_cubic_display, quintic_display_n2, run_suite, Status,
    Suite, SuiteParams,
};

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    cases: usize,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn result<T>(&mut self, label: &str, r: recalg::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{label}: error: {e}"));
                None
            }
        }
    }

    /// Runs a suite; `keys` restricts which checks count, each of which must be present.
    fn suite(&mut self, suite: Suite, params: SuiteParams, keys: Option<&[&str]>) {
        let label = format!("{suite} n={} ell={:?}", params.n, params.ell);
        let Some(report) = self.result(&label, run_suite(suite, &params)) else {
            return;
        };
        if let Some(keys) = keys {
            for key in keys {
                let found = report.checks.iter().any(|c| c.key == *key);
                self.check(found, || format!("{label}: no check {key}"));
            }
        }
        for c in &report.checks {
            if keys.is_some_and(|k| !k.contains(&c.key.as_str())) {
                continue;
            }
            self.check(c.status == Status::Pass, || {
                format!(
                    "{label}: {} failed: {}",
                    c.key,
                    c.detail.clone().unwrap_or_default()
                )
            });
        }
    }
}

fn params(n: u8) -> SuiteParams {
    SuiteParams {
        n,
        ..Default::default()
    }
}

fn lhs(doc: &PresentationDoc, tag: &str, idx: &[u8]) -> Option<UExpr> {
    doc.relation(tag, idx)
        .and_then(|r| r.as_uexprs(doc.n))
        .map(|(l, _)| l)
}

fn sigma_and_recursion(o: &mut Outcome) {
    let m = |k| one_minus_q_neg2(k, 1);
    let s = sigma_q(&"3,1,2".parse::<Composition>().unwrap(), 1);
    o.check(s == m(1) * m(2) * m(5), || {
        format!("sigma(3,1,2) = {}", s.display(1))
    });
    o.suite(
        Suite::Ring,
        params(2),
        Some(&["ring/sigma-example", "ring/sigma-recursion"]),
    );
}

fn index_tuples(o: &mut Outcome) {
    let l: Composition = "3,1,2".parse().unwrap();
    let all: Vec<IndexTuple> = v_set(4, &l).collect();
    o.check(all.len() == 27, || format!("|V^4(3,1,2)| = {}", all.len()));
    o.check(all.contains(&IndexTuple(vec![4, 2, 3, 4, 4, 1, 4])), || {
        "(4,2,3,4,4,1,4) not enumerated".into()
    });
    for ell in 1..=7 {
        for l in compositions(ell).unwrap() {
            let got: Vec<IndexTuple> = v_set(2, &l).collect();
            let mut shape = vec![2u8];
            for &p in l.parts() {
                shape.extend(std::iter::repeat_n(1, p as usize - 1));
                shape.push(2);
            }
            o.check(got == vec![IndexTuple(shape)], || {
                format!("V^2({l}) = {got:?}")
            });
        }
    }
}

fn frt_core(o: &mut Outcome) {
    for n in 1..=3 {
        o.suite(Suite::Fr, params(n), None);
    }
    o.suite(Suite::Fr, params(4), Some(&["fr/qdet-central"]));
}

fn rform(o: &mut Outcome) {
    for n in 1..=3 {
        o.suite(
            Suite::Rform,
            SuiteParams {
                max_degree: 2,
                ..params(n)
            },
            Some(&[
                "rform/convolution-r-rinv",
                "rform/convolution-rinv-r",
                "rform/convolution-r-rtilde",
                "rform/convolution-rtilde-r",
                "rform/commutation",
                "rform/rtilde-integral",
            ]),
        );
    }
}

fn braided_relations(o: &mut Outcome) {
    for n in 2..=4 {
        o.suite(
            Suite::Braided,
            params(n),
            Some(&[
                "braided/quadratic-1",
                "braided/quadratic-2",
                "braided/quadratic-3",
                "braided/quadratic-4",
            ]),
        );
        let Some(alg) = o.result("braided algebra", BraidedAlgebra::new(n)) else {
            continue;
        };
        for idx in admissible_indices(n, QuadFamily::Rel3) {
            let rel = quadratic_relation(n, QuadFamily::Rel3, &idx, Rel3Form::AsPrinted).unwrap();
            let r = alg.relation_residual(&rel.lhs, &rel.rhs).unwrap();
            o.check(r.is_zero(), || {
                format!("n = {n}: printed third family at {idx:?} has nonzero residual")
            });
        }
    }
    let alg = BraidedAlgebra::new(2).unwrap();
    for (name, l, r) in m2_display_relations(true) {
        let res = alg.relation_residual(&l, &r).unwrap();
        o.check(res.is_zero(), || {
            format!(
                "2 x 2 display {name}: residual {}",
                res.as_element().render('u')
            )
        });
    }
}

fn twisting(o: &mut Outcome) {
    o.suite(
        Suite::Twist,
        SuiteParams {
            max_power: 7,
            ..params(2)
        },
        None,
    );
    o.suite(
        Suite::Twist,
        SuiteParams {
            max_power: 6,
            budget: u64::MAX,
            ..params(3)
        },
        None,
    );
}

fn determinants(o: &mut Outcome) {
    for n in 2..=3 {
        o.suite(Suite::Twist, params(n), Some(&["twist/determinant"]));
        o.suite(Suite::Braided, params(n), Some(&["braided/det-central"]));
    }
    o.suite(
        Suite::Examples,
        params(3),
        Some(&["examples/determinant-three-by-three"]),
    );
    let got = braided_det_expr(3);
    let shown = det3_display();
    o.check(got == shown, || {
        format!(
            "braided_det(3) - printed display = {}",
            got.sub(&shown).render()
        )
    });
}

fn main_theorem(o: &mut Outcome) {
    for (n, ell) in [(2, 3), (2, 5), (3, 3), (2, 7)] {
        o.suite(
            Suite::Theorem,
            SuiteParams {
                ell: Some(ell),
                ..params(n)
            },
            None,
        );
    }
    for (n, ell) in [(2u8, 3u32), (3, 3), (2, 5)] {
        let Some(doc) = o.result("presentation", present(Family::SmallGln, n, Some(ell))) else {
            continue;
        };
        for k in 1..=n {
            let shown = match (n, ell, k) {
                (2, 3, 2) => cubic_display_n2(),
                (2, 5, 2) => quintic_display_n2(),
                (_, 3, _) => general_cubic_display(n, k),
                _ => continue,
            };
            match lhs(&doc, "power-diagonal", &[k]) {
                Some(got) => o.check(got == shown, || {
                    format!(
                        "n = {n}, ell = {ell}, k = {k}: emitted - display = {}",
                        got.sub(&shown).render()
                    )
                }),
                None => o.check(false, || {
                    format!("n = {n}, ell = {ell}: no diagonal relation for k = {k}")
                }),
            }
        }
    }
}

fn term_counts(o: &mut Outcome) {
    for ell in [3, 5] {
        for k in 1..=4 {
            let Some(c) = o.result("count", count_terms(4, ell, k)) else {
                continue;
            };
            o.check(c.agrees(), || {
                format!(
                    "ell = {ell}, k = {k}: enumerated {}, closed form {}",
                    c.enumerated, c.closed_form
                )
            });
        }
    }
}

fn small_sl3(o: &mut Outcome) {
    let Some(doc) = o.result("presentation", present(Family::SmallSln, 3, Some(3))) else {
        return;
    };
    let again = present(Family::SmallSln, 3, Some(3)).unwrap();
    o.check(doc.to_json_string() == again.to_json_string(), || {
        "JSON differs between runs".into()
    });
    o.check(doc.to_text() == again.to_text(), || {
        "text differs between runs".into()
    });
    o.check(doc.to_latex() == again.to_latex(), || {
        "LaTeX differs between runs".into()
    });
    let ctx = CyclotomicCtx::new(3, 3).unwrap();
    let reduced = |e: &UExpr| e.map_coeffs(|c| ctx.reduce(c));
    let dets: Vec<_> = doc.relations_tagged("det-one").collect();
    o.check(dets.len() == 1, || {
        format!("{} determinant relations", dets.len())
    });
    match lhs(&doc, "det-one", &[]) {
        Some(got) => {
            let shown = det3_display();
            o.check(reduced(&got) == reduced(&shown), || {
                format!(
                    "emitted - printed display at q = ε: {}",
                    reduced(&got.sub(&shown)).render()
                )
            })
        }
        None => o.check(false, || "no determinant relation".into()),
    }
}

type Criterion = (&'static str, Duration, fn(&mut Outcome));

const MINUTE: Duration = Duration::from_secs(60);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "sigma of (3,1,2) and the scalar recursion",
            Duration::from_secs(1),
            sigma_and_recursion,
        ),
        ("index tuple sets", Duration::from_secs(1), index_tuples),
        (
            "FRT bialgebra laws and the quantum determinant",
            MINUTE,
            frt_core,
        ),
        (
            "R-form inverses, commutation and integrality",
            MINUTE,
            rform,
        ),
        (
            "quadratic relations of the covariantized algebra",
            5 * MINUTE,
            braided_relations,
        ),
        (
            "twisting map against closed formulas",
            10 * MINUTE,
            twisting,
        ),
        ("braided determinants", 5 * MINUTE, determinants),
        (
            "power relations at roots of unity",
            10 * MINUTE,
            main_theorem,
        ),
        (
            "closed-form term count",
            Duration::from_secs(1),
            term_counts,
        ),
        ("small SL_3 presentation", 5 * MINUTE, small_sl3),
    ];
    let mut red = 0;
    for (i, (title, limit, run)) in criteria.iter().enumerate() {
        let mut o = Outcome::default();
        let start = Instant::now();
        run(&mut o);
        let took = start.elapsed();
        o.check(took <= *limit, || {
            format!("took {took:.2?}, limit {limit:?}")
        });
        let verdict = if o.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "{verdict} criterion {}: {title} [{} case(s), {took:.2?}]",
            i + 1,
            o.cases
        );
        for f in &o.failures {
            let mut f = f.clone();
            if f.len() > 300 {
                let cut = (0..=300).rev().find(|&c| f.is_char_boundary(c)).unwrap();
                f.truncate(cut);
                f.push_str(" ...");
            }
            println!("    {f}");
        }
        red += (!o.failures.is_empty()) as usize;
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - red,
        criteria.len()
    );
    if red == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
