//! Reference formulas transcribed term by term, kept apart from the code that generates them.

use crate::braided::UExpr;
use crate::frt::{Gen, Word};
use crate::ring::{one_minus_q_neg2, Integer, LaurentInt};

/// `a, b, c, d = u¹₁, u¹₂, u²₁, u²₂`.
fn abcd(s: &str) -> Word {
    s.chars()
        .map(|ch| match ch {
            'a' => Gen::new(1, 1),
            'b' => Gen::new(1, 2),
            'c' => Gen::new(2, 1),
            'd' => Gen::new(2, 2),
            _ => unreachable!("letters are a-d"),
        })
        .collect()
}

/// Each entry: the `m` of the factors `1 - q^{-2m}` and the chain.
fn assemble(n: u8, terms: &[(&[u32], Word)]) -> UExpr {
    let mut e = UExpr::zero(n);
    for (factors, w) in terms {
        let c = factors.iter().fold(LaurentInt::one(), |acc, &m| {
            acc * one_minus_q_neg2(m, n as u32)
        });
        e.add_chain(w.clone(), c);
    }
    e
}

/// The cubic diagonal relation of the `2 × 2` case, left side.
pub fn cubic_display_n2() -> UExpr {
    assemble(
        2,
        &[
            (&[], abcd("ddd")),
            (&[1], abcd("dcb")),
            (&[2], abcd("cbd")),
            (&[1, 2], abcd("cab")),
        ],
    )
}

/// The sixteen-term quintic diagonal relation of the `2 × 2` case, left side.
pub fn quintic_display_n2() -> UExpr {
    assemble(
        2,
        &[
            (&[], abcd("ddddd")),
            (&[1], abcd("dddcb")),
            (&[2], abcd("ddcbd")),
            (&[3], abcd("dcbdd")),
            (&[4], abcd("cbddd")),
            (&[1, 2], abcd("ddcab")),
            (&[2, 3], abcd("dcabd")),
            (&[3, 4], abcd("cabdd")),
            (&[1, 3], abcd("cbcbd")),
            (&[1, 4], abcd("cbdcb")),
            (&[2, 4], abcd("dcbcb")),
            (&[1, 2, 4], abcd("cabcb")),
            (&[1, 3, 4], abcd("cbcab")),
            (&[1, 2, 3], abcd("dcaab")),
            (&[2, 3, 4], abcd("caabd")),
            (&[1, 2, 3, 4], abcd("caaab")),
        ],
    )
}

/// `(u^k_k)^3 + (1-q⁻²)Σ_{i<k} u^k_i u^i_k u^k_k + (1-q⁻⁴)Σ_{i<k} u^k_k u^k_i u^i_k
/// + (1-q⁻²)(1-q⁻⁴)Σ_{i,j<k} u^k_i u^i_j u^j_k`.
pub fn general_cubic_display(n: u8, k: u8) -> UExpr {
    let g = Gen::new;
    let mut terms: Vec<(&[u32], Word)> = vec![(&[], [g(k, k); 3].into_iter().collect())];
    for i in 1..k {
        terms.push((&[1], [g(k, i), g(i, k), g(k, k)].into_iter().collect()));
        terms.push((&[2], [g(k, k), g(k, i), g(i, k)].into_iter().collect()));
        for j in 1..k {
            terms.push((&[1, 2], [g(k, i), g(i, j), g(j, k)].into_iter().collect()));
        }
    }
    assemble(n, &terms)
}

/// The six-term `3 × 3` braided determinant as printed.
pub fn det3_display() -> UExpr {
    let n = 3;
    let mut e = UExpr::zero(n);
    let rows: [(i64, i32, [u8; 3]); 6] = [
        (1, 0, [3, 2, 1]),
        (-1, 2, [3, 1, 2]),
        (-1, 2, [1, 2, 3]),
        (-1, 2, [2, 3, 1]),
        (1, 3, [2, 1, 3]),
        (1, 4, [1, 3, 2]),
    ];
    for (sign, qexp, cols) in rows {
        let w: Word = [
            Gen::new(3, cols[0]),
            Gen::new(2, cols[1]),
            Gen::new(1, cols[2]),
        ]
        .into_iter()
        .collect();
        e.add_chain(
            w,
            LaurentInt::monomial(Integer::from(sign), qexp * n as i32),
        );
    }
    e
}
