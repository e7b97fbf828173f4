//! The twisting map `Ψ: A → B`, computed by peeling the last generator.

use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::braided::algebra::lookup;
use crate::braided::{BraidedAlgebra, BraidedElement, UExpr};
use crate::error::{Error, Result};
use crate::frt::{normal_words, Element, Gen, Word};
use crate::memo::Memo;
use crate::ring::LaurentInt;

/// The middle legs of one peel step, grouped by the index `ρ` of the final `u^ρ_t`.
type Peel = Vec<(u8, Vec<(Word, LaurentInt)>)>;

/// An element together with its twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistResult {
    pub input: Element,
    pub output: BraidedElement,
}

/// Evidence that `Ψ` is injective on one graded piece: the determinant of its
/// matrix in the PBW basis, evaluated at `v = point` modulo `prime`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityCertificate {
    pub degree: usize,
    pub dimension: usize,
    pub prime: u64,
    pub point: u64,
    pub det_mod_p: u64,
}

impl InjectivityCertificate {
    /// A nonzero image forces the exact determinant to be nonzero.
    pub fn certifies(&self) -> bool {
        self.det_mod_p != 0
    }
}

pub const CERT_PRIME: u64 = (1 << 61) - 1;
const CERT_POINTS: [u64; 4] = [1_000_003, 2_718_281_828, 3_141_592_653, 1_618_033_988];

pub struct Twister {
    alg: BraidedAlgebra,
    memo: Memo<Word, Arc<Element>>,
    formal_memo: Memo<Word, Arc<UExpr>>,
}

impl Twister {
    pub fn new(n: u8) -> Result<Self> {
        Ok(Self::with_algebra(BraidedAlgebra::new(n)?))
    }

    pub fn with_algebra(alg: BraidedAlgebra) -> Self {
        Twister {
            alg,
            memo: Memo::new(),
            formal_memo: Memo::new(),
        }
    }

    pub fn n(&self) -> u8 {
        self.alg.n()
    }

    pub fn algebra(&self) -> &BraidedAlgebra {
        &self.alg
    }

    /// One application of the peel identity to `w · x^s_t`:
    /// `Σ R⁻¹(w₁ ⊗ x^s_λ) R(w₃ ⊗ x^λ_ρ) · w₂ ⊗ u^ρ_t`.
    ///
    /// `R⁻¹` is scanned with a column chain that starts at `λ` and must end at `s`;
    /// `R` with a row chain from `λ` whose endpoint is `ρ`.
    fn peel(&self, w: &[Gen], s: u8) -> Peel {
        let n = self.n();
        let frt = self.alg.frt();
        let ix = &self.alg.index;
        let mut states: FxHashMap<(u8, u8, Word), LaurentInt> = FxHashMap::default();
        for lambda in 1..=n {
            states.insert((lambda, lambda, Word::new()), LaurentInt::one());
        }
        for &x in w {
            let mut next: FxHashMap<(u8, u8, Word), LaurentInt> = FxHashMap::default();
            for ((theta, kappa, mid), c) in &states {
                for (f1, s1, a) in lookup(&ix.rinv_row_col, (x.row, *theta)) {
                    let ca = c * a;
                    for (f2, s2, b) in lookup(&ix.r_col_row, (x.col, *kappa)) {
                        let coef = &ca * b;
                        for (m2, k) in frt.insert(mid, Gen::new(f1.col, f2.row)).iter() {
                            let slot = next.entry((s1.row, s2.col, m2.clone())).or_default();
                            *slot += &(&coef * k);
                        }
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            states = next;
        }
        let mut by_rho: FxHashMap<u8, FxHashMap<Word, LaurentInt>> = FxHashMap::default();
        for ((theta, rho, mid), c) in states {
            if theta == s {
                let slot = by_rho.entry(rho).or_default().entry(mid).or_default();
                *slot += &c;
            }
        }
        let mut out: Peel = by_rho
            .into_iter()
            .map(|(rho, m)| {
                let mut v: Vec<(Word, LaurentInt)> =
                    m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                v.sort_by(|a, b| a.0.cmp(&b.0));
                (rho, v)
            })
            .filter(|(_, v)| !v.is_empty())
            .collect();
        out.sort_by_key(|p| p.0);
        out
    }

    /// `Ψ` of a PBW-normal word.
    fn twist_normal(&self, w: &[Gen]) -> Arc<Element> {
        let n = self.n();
        if w.len() <= 1 {
            return Arc::new(Element::from_normal_terms(
                n,
                [(Word::from(w), LaurentInt::one())],
            ));
        }
        let key = Word::from(w);
        if let Some(hit) = self.memo.get(&key) {
            return hit;
        }
        let (head, g) = (&w[..w.len() - 1], w[w.len() - 1]);
        let mut out = BraidedElement::zero(n);
        for (rho, mids) in self.peel(head, g.row) {
            let mut inner = Element::zero(n);
            for (m, c) in &mids {
                inner = inner.add(&self.twist_normal(m).scale(c));
            }
            let prod = self
                .alg
                .multiply_by_gen(&BraidedElement::from_element(inner), Gen::new(rho, g.col))
                .expect("same context");
            out = out.add(&prod);
        }
        let out = Arc::new(out.into_element());
        self.memo.put(key, out.clone());
        out
    }

    pub fn twist(&self, a: &Element) -> Result<BraidedElement> {
        if a.n() != self.n() {
            return Err(Error::ContextMismatch(self.n(), a.n()));
        }
        let terms: Vec<(&Word, &LaurentInt)> = a.terms().collect();
        let parts: Vec<Element> = terms
            .par_iter()
            .map(|(w, c)| self.twist_normal(w).scale(c))
            .collect();
        let out = parts
            .into_iter()
            .fold(Element::zero(self.n()), |acc, p| acc.add(&p));
        Ok(BraidedElement::from_element(out))
    }

    /// `Ψ` of an arbitrary word, normalized in `A` first.
    pub fn twist_word(&self, w: &[Gen]) -> Result<BraidedElement> {
        let a = self.alg.frt().normal_form(w, &LaurentInt::one())?;
        self.twist(&a)
    }

    pub fn twist_result(&self, a: &Element) -> Result<TwistResult> {
        Ok(TwistResult {
            input: a.clone(),
            output: self.twist(a)?,
        })
    }

    fn formal_normal(&self, w: &[Gen]) -> Arc<UExpr> {
        let n = self.n();
        if w.len() <= 1 {
            return Arc::new(UExpr::chain(n, w, LaurentInt::one()));
        }
        let key = Word::from(w);
        if let Some(hit) = self.formal_memo.get(&key) {
            return hit;
        }
        let (head, g) = (&w[..w.len() - 1], w[w.len() - 1]);
        let mut out = UExpr::zero(n);
        for (rho, mids) in self.peel(head, g.row) {
            let tail = UExpr::gen(n, rho, g.col);
            for (m, c) in &mids {
                out = out.add(&self.formal_normal(m).concat(&tail).scale(c));
            }
        }
        let out = Arc::new(out);
        self.formal_memo.put(key, out.clone());
        out
    }

    /// `Ψ(a)` as unevaluated chains; evaluating gives [`Twister::twist`].
    pub fn twist_formal(&self, a: &Element) -> Result<UExpr> {
        if a.n() != self.n() {
            return Err(Error::ContextMismatch(self.n(), a.n()));
        }
        let mut out = UExpr::zero(self.n());
        for (w, c) in a.terms() {
            out = out.add(&self.formal_normal(w).scale(c));
        }
        Ok(out)
    }

    /// Determinant of `Ψ` on the degree-`d` piece, reduced at a few points until nonzero.
    pub fn injectivity_certificate(&self, degree: usize) -> InjectivityCertificate {
        let basis = normal_words(self.n(), degree);
        let pos: FxHashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let columns: Vec<Arc<Element>> = basis.par_iter().map(|w| self.twist_normal(w)).collect();
        let mut last = None;
        for &point in &CERT_POINTS {
            let mut m = vec![vec![0u64; basis.len()]; basis.len()];
            for (j, col) in columns.iter().enumerate() {
                for (w, c) in col.terms() {
                    m[pos[w]][j] = c.eval_mod(point, CERT_PRIME);
                }
            }
            let cert = InjectivityCertificate {
                degree,
                dimension: basis.len(),
                prime: CERT_PRIME,
                point,
                det_mod_p: det_mod(m, CERT_PRIME),
            };
            if cert.certifies() {
                return cert;
            }
            last = Some(cert);
        }
        last.expect("at least one point")
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::ring::laurent::pow_mod(a, p - 2, p)
}

fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let size = m.len();
    let mut det = 1u64;
    for c in 0..size {
        let Some(r) = (c..size).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if r != c {
            m.swap(r, c);
            det = (p - det) % p;
        }
        det = mul_mod(det, m[c][c], p);
        let inv = inv_mod(m[c][c], p);
        for r in c + 1..size {
            if m[r][c] == 0 {
                continue;
            }
            let f = mul_mod(m[r][c], inv, p);
            for k in c..size {
                let sub = mul_mod(f, m[c][k], p);
                m[r][k] = (m[r][k] + p - sub) % p;
            }
        }
    }
    det
}
