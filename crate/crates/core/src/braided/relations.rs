//! The quadratic relations of the covariantized algebra of `O_q(M_n)`.

use serde::{Deserialize, Serialize};

use super::algebra::{BraidedAlgebra, BraidedElement};
use super::expr::UExpr;
use crate::error::{Error, Result};
use crate::frt::Gen;
use crate::ring::LaurentInt;

/// The four quadratic families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuadFamily {
    /// Same row: indices `(i, j, l)` with `j < l`.
    Rel1,
    /// Same column: indices `(i, k, j)` with `i < k`.
    Rel2,
    /// Indices `(i, j, k, l)` with `i < k`, `j < l`, from `x^i_l x^k_j = x^k_j x^i_l`.
    Rel3,
    /// Indices `(i, j, k, l)` with `i < k`, `j < l`, from the both-greater relation.
    Rel4,
}

impl QuadFamily {
    pub const ALL: [QuadFamily; 4] = [
        QuadFamily::Rel1,
        QuadFamily::Rel2,
        QuadFamily::Rel3,
        QuadFamily::Rel4,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            QuadFamily::Rel1 => "quadratic-1",
            QuadFamily::Rel2 => "quadratic-2",
            QuadFamily::Rel3 => "quadratic-3",
            QuadFamily::Rel4 => "quadratic-4",
        }
    }
}

/// How to read the `δ^i_l` term of the third family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel3Form {
    /// `-δ^i_l (q - q⁻¹)² q⁻¹ Σ_{b<l} u^k_b ⋆ u^b_j`, the printed variant.
    AsPrinted,
    /// `-δ^i_l (q - q⁻¹)² Σ_{b<l} u^k_b ⋆ u^b_j`, which is what twisting produces.
    Corrected,
}

/// `lhs = rhs` between formal chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadRelation {
    pub family: QuadFamily,
    pub indices: Vec<u8>,
    pub lhs: UExpr,
    pub rhs: UExpr,
}

fn qp(n: u8, k: i32) -> LaurentInt {
    LaurentInt::q_pow(n as u32, k)
}

fn d(a: u8, b: u8) -> i32 {
    (a == b) as i32
}

fn pair(n: u8, a: (u8, u8), b: (u8, u8), c: LaurentInt) -> UExpr {
    UExpr::chain(n, &[Gen::new(a.0, a.1), Gen::new(b.0, b.1)], c)
}

/// `Σ_{d < bound} u^{top}_d ⋆ u^d_{bottom}`.
fn ladder(n: u8, top: u8, bottom: u8, bound: u8) -> UExpr {
    let mut e = UExpr::zero(n);
    for m in 1..bound {
        e = e.add(&pair(n, (top, m), (m, bottom), LaurentInt::one()));
    }
    e
}

/// All admissible index tuples of a family, in lexicographic order.
pub fn admissible_indices(n: u8, family: QuadFamily) -> Vec<Vec<u8>> {
    let r = 1..=n;
    let mut out = Vec::new();
    match family {
        QuadFamily::Rel1 | QuadFamily::Rel2 => {
            for a in r.clone() {
                for b in r.clone() {
                    for c in r.clone() {
                        let ok = match family {
                            QuadFamily::Rel1 => b < c,
                            _ => a < b,
                        };
                        if ok {
                            out.push(vec![a, b, c]);
                        }
                    }
                }
            }
        }
        QuadFamily::Rel3 | QuadFamily::Rel4 => {
            for i in r.clone() {
                for j in r.clone() {
                    for k in r.clone() {
                        for l in r.clone() {
                            if i < k && j < l {
                                out.push(vec![i, j, k, l]);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Builds one relation of a family.
pub fn quadratic_relation(
    n: u8,
    family: QuadFamily,
    idx: &[u8],
    form: Rel3Form,
) -> Result<QuadRelation> {
    let bad = |why: &str| Error::IndexConstraint(format!("{family:?} {idx:?}: {why}"));
    if idx.iter().any(|&x| x == 0 || x > n) {
        return Err(bad("index out of range"));
    }
    let one = LaurentInt::one();
    let qq = LaurentInt::q_minus_qinv(n as u32);
    let one_m2 = &one - &qp(n, -2);
    let (lhs, rhs) = match family {
        QuadFamily::Rel1 => {
            let [i, j, l] = idx.try_into().map_err(|_| bad("expected (i, j, l)"))?;
            if j >= l {
                return Err(bad("need j < l"));
            }
            let lhs = pair(n, (i, l), (i, j), one.clone()).sub(&pair(
                n,
                (i, j),
                (i, l),
                qp(n, d(i, j) - d(i, l) + 1),
            ));
            let mut rhs = UExpr::zero(n);
            if i == j {
                rhs = rhs.add(&ladder(n, i, l, j).scale(&(qp(n, 2) - one.clone())));
            }
            if i == l {
                rhs = rhs.sub(&ladder(n, i, j, l).scale(&one_m2));
            }
            (lhs, rhs)
        }
        QuadFamily::Rel2 => {
            let [i, k, j] = idx.try_into().map_err(|_| bad("expected (i, k, j)"))?;
            if i >= k {
                return Err(bad("need i < k"));
            }
            let lhs = pair(n, (k, j), (i, j), one.clone()).sub(&pair(
                n,
                (i, j),
                (k, j),
                qp(n, d(j, k) - d(i, j) - 1),
            ));
            let mut rhs = UExpr::zero(n);
            if k == j {
                rhs = rhs.add(&ladder(n, i, j, j).scale(&one_m2));
            }
            if i == j {
                rhs = rhs.sub(&ladder(n, k, j, j).scale(&one_m2));
            }
            (lhs, rhs)
        }
        QuadFamily::Rel3 => {
            let [i, j, k, l] = idx.try_into().map_err(|_| bad("expected (i, j, k, l)"))?;
            if i >= k || j >= l {
                return Err(bad("need i < k and j < l"));
            }
            let lhs = pair(n, (k, j), (i, l), one.clone()).sub(&pair(
                n,
                (i, l),
                (k, j),
                qp(n, d(k, l) - d(i, j)),
            ));
            let mut rhs = pair(n, (k, l), (i, j), -(&qq * &qp(n, d(i, l) - d(i, j))));
            if i == l {
                let extra = match form {
                    Rel3Form::AsPrinted => qp(n, -1),
                    Rel3Form::Corrected => one.clone(),
                };
                rhs = rhs.sub(&ladder(n, k, j, l).scale(&(&(&qq * &qq) * &extra)));
            }
            if k == l {
                rhs = rhs.add(&ladder(n, i, j, l).scale(&(&qq * &qp(n, -d(i, j)))));
            }
            if i == j {
                rhs = rhs.sub(&ladder(n, k, l, j).scale(&one_m2));
            }
            (lhs, rhs)
        }
        QuadFamily::Rel4 => {
            let [i, j, k, l] = idx.try_into().map_err(|_| bad("expected (i, j, k, l)"))?;
            if i >= k || j >= l {
                return Err(bad("need i < k and j < l"));
            }
            let lhs = pair(n, (k, l), (i, j), one.clone()).sub(&pair(
                n,
                (i, j),
                (k, l),
                qp(n, d(j, k) - d(i, l)),
            ));
            let mut rhs = UExpr::zero(n);
            if k == j {
                rhs = rhs.add(&ladder(n, i, l, j).scale(&(&qq * &qp(n, -d(i, l)))));
            }
            if i == l {
                rhs = rhs.sub(&ladder(n, k, j, l).scale(&one_m2));
            }
            (lhs, rhs)
        }
    };
    Ok(QuadRelation {
        family,
        indices: idx.to_vec(),
        lhs,
        rhs,
    })
}

/// Every quadratic relation, families in order, indices lexicographic.
pub fn quadratic_relations(n: u8, form: Rel3Form) -> Vec<QuadRelation> {
    QuadFamily::ALL
        .iter()
        .flat_map(|&f| {
            admissible_indices(n, f)
                .into_iter()
                .map(move |idx| quadratic_relation(n, f, &idx, form).expect("admissible"))
        })
        .collect()
}

/// The six relations of the `n = 2` algebra with `a, b, c, d = u¹₁, u¹₂, u²₁, u²₂`,
/// either in the commonly printed form or with its two misprints fixed.
pub fn m2_display_relations(as_printed: bool) -> Vec<(&'static str, UExpr, UExpr)> {
    let n = 2;
    let (a, b, c, dd) = ((1, 1), (1, 2), (2, 1), (2, 2));
    let one = LaurentInt::one();
    let p = |x, y, k: LaurentInt| pair(n, x, y, k);
    let one_m2 = &one - &qp(n, -2);
    let ca_coeff = if as_printed { qp(n, 2) } else { qp(n, -2) };
    let rel3_rhs = if as_printed {
        // (1 - q²)(d - a)⋆a
        p(dd, a, &one - &qp(n, 2)).sub(&p(a, a, &one - &qp(n, 2)))
    } else {
        p(a, a, one_m2.clone()).sub(&p(dd, a, one_m2.clone()))
    };
    vec![
        ("b*a = q^2 a*b", p(b, a, one.clone()), p(a, b, qp(n, 2))),
        ("c*a = q^2 a*c", p(c, a, one.clone()), p(a, c, ca_coeff)),
        ("a*d = d*a", p(a, dd, one.clone()), p(dd, a, one.clone())),
        (
            "c*d - d*c = (1-q^-2) c*a",
            p(c, dd, one.clone()).sub(&p(dd, c, one.clone())),
            p(c, a, one_m2.clone()),
        ),
        (
            "d*b - b*d = (1-q^-2) a*b",
            p(dd, b, one.clone()).sub(&p(b, dd, one.clone())),
            p(a, b, one_m2),
        ),
        (
            "c*b - b*c = (1-q^2)(d-a)*a",
            p(c, b, one.clone()).sub(&p(b, c, one.clone())),
            rel3_rhs,
        ),
    ]
}

impl BraidedAlgebra {
    /// Evaluated `lhs - rhs`; zero when the relation holds.
    pub fn relation_residual(&self, lhs: &UExpr, rhs: &UExpr) -> Result<BraidedElement> {
        self.evaluate(&lhs.sub(rhs))
    }

    /// Residual of one quadratic relation in its corrected form.
    pub fn check_quadratic_relation(
        &self,
        family: QuadFamily,
        idx: &[u8],
    ) -> Result<BraidedElement> {
        let r = quadratic_relation(self.n(), family, idx, Rel3Form::Corrected)?;
        self.relation_residual(&r.lhs, &r.rhs)
    }
}
