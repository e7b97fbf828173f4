//! Closed formulas for `Ψ` on quadratic monomials and on powers of a generator.

use serde::{Deserialize, Serialize};

use super::map::Twister;
use crate::braided::{BraidedElement, UExpr};
use crate::combinatorics::{compositions, v_set, Composition, IndexTuple};
use crate::error::{Error, Result};
use crate::frt::{Gen, Word};
use crate::ring::{one_minus_q_neg2, sigma_q, LaurentInt};

/// How the segments of a `V^k(λ)` tuple are laid out in a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChainOrder {
    /// `u^{β₁}_{β₂} ⋆ ⋯ ⋆ u^{β_N}_{β_{N+1}}`.
    AsComposed,
    /// The segment of the last part first, the segment of `λ₁` last.
    ReversedSegments,
}

fn check_index(n: u8, i: u8) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange(n, i, i))
    } else {
        Ok(())
    }
}

fn qp(n: u8, k: i32) -> LaurentInt {
    LaurentInt::q_pow(n as u32, k)
}

fn delta(a: u8, b: u8) -> i32 {
    (a == b) as i32
}

/// The four-term expression for `Ψ(x^i_j x^k_l)`.
pub fn twist_quadratic_formula(n: u8, i: u8, j: u8, k: u8, l: u8) -> Result<UExpr> {
    for x in [i, j, k, l] {
        check_index(n, x)?;
    }
    let qq = LaurentInt::q_minus_qinv(n as u32);
    let pair = |a: (u8, u8), b: (u8, u8), c: LaurentInt| {
        UExpr::chain(n, &[Gen::new(a.0, a.1), Gen::new(b.0, b.1)], c)
    };
    let mut e = pair((i, j), (k, l), qp(n, delta(j, k) - delta(i, k)));
    if k == j {
        let c = &qq * &qp(n, -delta(i, k));
        for d in 1..j {
            e = e.add(&pair((i, d), (d, l), c.clone()));
        }
    }
    if k > i {
        e = e.sub(&pair((k, j), (i, l), &qq * &qp(n, delta(i, j))));
        if i == j {
            let c = &qq * &qq;
            for b in 1..j {
                e = e.sub(&pair((k, b), (b, l), c.clone()));
            }
        }
    }
    Ok(e)
}

/// `q^{-N(N-1)/2}`.
pub fn offdiag_power_scalar(n: u8, big_n: u32) -> LaurentInt {
    let e = big_n as i64 * (big_n as i64 - 1) / 2;
    qp(n, -(e as i32))
}

/// The chain of one `V^k(λ)` tuple.
pub fn v_chain(beta: &IndexTuple, lambda: &Composition, order: ChainOrder) -> Word {
    let gens: Vec<Gen> = beta.pairs().map(|(a, b)| Gen::new(a, b)).collect();
    match order {
        ChainOrder::AsComposed => gens.into_iter().collect(),
        ChainOrder::ReversedSegments => {
            let mut segs = Vec::new();
            let mut at = 0;
            for &p in lambda.parts() {
                segs.push(&gens[at..at + p as usize]);
                at += p as usize;
            }
            segs.into_iter().rev().flatten().copied().collect()
        }
    }
}

/// `Σ_{λ⊨N} σ_q(λ) Σ_{β∈V^k(λ)} u^{β₁}_{β₂} ⋆ ⋯ ⋆ u^{β_N}_{β_{N+1}}`.
/// Defined for every `N`; at `N = 0` and `N = 1` it is `1` and `u^k_k`.
pub fn diag_power_expr(n: u8, k: u8, big_n: u32, order: ChainOrder) -> Result<UExpr> {
    check_index(n, k)?;
    if big_n == 0 {
        return Ok(UExpr::one(n));
    }
    let mut e = UExpr::zero(n);
    for lambda in compositions(big_n)? {
        let s = sigma_q(&lambda, n as u32);
        for beta in v_set(k, &lambda) {
            e.add_chain(v_chain(&beta, &lambda, order), s.clone());
        }
    }
    Ok(e)
}

/// All `(β₁, …, β_{i+1})` with `β₁ = k` and later entries below `k`.
fn descending_tails(k: u8, i: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![k]];
    for _ in 0..i {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..k).map(move |b| {
                    let mut t2 = t.clone();
                    t2.push(b);
                    t2
                })
            })
            .collect();
    }
    out
}

/// `Σ_{i=0}^{N} Σ_β Π_{j≤i}(1 - q^{-2(N+1-j)}) Ψ((x^k_k)^{N-i}) ⋆ u^{β₁}_{β₂} ⋆ ⋯ ⋆ u^{β_{i+1}}_l`,
/// with each `Ψ((x^k_k)^{N-i})` replaced by its closed form.
pub fn mixed_closed_expr(n: u8, k: u8, l: u8, big_n: u32) -> Result<UExpr> {
    check_index(n, k)?;
    check_index(n, l)?;
    if big_n == 0 {
        return Err(Error::InvalidArgument("need N >= 1".into()));
    }
    let mut e = UExpr::zero(n);
    let mut coef = LaurentInt::one();
    for i in 0..=big_n {
        if i > 0 {
            coef = &coef * &one_minus_q_neg2(big_n + 1 - i, n as u32);
        }
        let head = diag_power_expr(n, k, big_n - i, ChainOrder::AsComposed)?;
        let mut tail = UExpr::zero(n);
        for beta in descending_tails(k, i as usize) {
            let mut w: Word = beta.windows(2).map(|p| Gen::new(p[0], p[1])).collect();
            w.push(Gen::new(beta[i as usize], l));
            tail.add_chain(w, LaurentInt::one());
        }
        e = e.add(&head.concat(&tail).scale(&coef));
    }
    Ok(e)
}

impl Twister {
    /// `(q^{-N(N-1)/2}, (u^k_l)^{⋆N})`, whose product is `Ψ((x^k_l)^N)` for `k ≠ l`.
    pub fn twist_offdiag_power(
        &self,
        k: u8,
        l: u8,
        big_n: u32,
    ) -> Result<(LaurentInt, BraidedElement)> {
        if k == l {
            return Err(Error::IndexConstraint(format!(
                "off-diagonal power needs k != l, got k = l = {k}"
            )));
        }
        let g = self.algebra().gen(k, l)?;
        Ok((
            offdiag_power_scalar(self.n(), big_n),
            self.algebra().braided_power(&g, big_n)?,
        ))
    }

    pub fn twist_diag_power_closed(&self, k: u8, big_n: u32) -> Result<BraidedElement> {
        self.diag_power_closed_with(k, big_n, ChainOrder::AsComposed)
    }

    pub fn diag_power_closed_with(
        &self,
        k: u8,
        big_n: u32,
        order: ChainOrder,
    ) -> Result<BraidedElement> {
        if big_n < 2 {
            return Err(Error::InvalidArgument(format!(
                "closed diagonal power needs N >= 2, got {big_n}"
            )));
        }
        self.algebra()
            .evaluate(&diag_power_expr(self.n(), k, big_n, order)?)
    }

    pub fn twist_mixed_closed(&self, k: u8, l: u8, big_n: u32) -> Result<BraidedElement> {
        self.algebra()
            .evaluate(&mixed_closed_expr(self.n(), k, l, big_n)?)
    }

    /// `Ψ((x^k_k)^N x^k_l) - Ψ((x^k_k)^N) ⋆ u^k_l - (1 - q^{-2N}) Σ_{β<k} Ψ((x^k_k)^{N-1} x^k_β) ⋆ u^β_l`,
    /// all twists computed iteratively.
    pub fn recursion_residual(&self, k: u8, l: u8, big_n: u32) -> Result<BraidedElement> {
        check_index(self.n(), k)?;
        check_index(self.n(), l)?;
        if big_n == 0 {
            return Err(Error::InvalidArgument("need N >= 1".into()));
        }
        let alg = self.algebra();
        let kk = Gen::new(k, k);
        let power = |m: u32, last: Option<Gen>| -> Result<BraidedElement> {
            let mut w: Word = std::iter::repeat_n(kk, m as usize).collect();
            w.extend(last);
            self.twist_word(&w)
        };
        let lhs = power(big_n, Some(Gen::new(k, l)))?;
        let mut rhs = alg.multiply_by_gen(&power(big_n, None)?, Gen::new(k, l))?;
        let c = one_minus_q_neg2(big_n, self.n() as u32);
        for b in 1..k {
            let t =
                alg.multiply_by_gen(&power(big_n - 1, Some(Gen::new(k, b)))?, Gen::new(b, l))?;
            rhs = rhs.add(&t.scale(&c));
        }
        Ok(lhs.sub(&rhs))
    }
}
