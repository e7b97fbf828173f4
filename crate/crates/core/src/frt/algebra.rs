//! The bialgebra `O_q(M_n)`: normal form, product, coproduct, counit, determinant.

use std::sync::Arc;

use rustc_hash::FxHashMap;
use smallvec::{smallvec, SmallVec};

use super::element::{Element, TensorElement, TripleTensorElement};
use super::perm::{inv_count, permutations};
use super::word::{is_normal, Gen, Word};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::ring::{Integer, LaurentInt};

pub(crate) type Terms = Arc<Vec<(Word, LaurentInt)>>;

/// Which descent a reference rewriter resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// The FRT algebra of `n × n` quantum matrices.
pub struct FrtAlgebra {
    n: u8,
    q: LaurentInt,
    q_minus_qinv: LaurentInt,
    insert_memo: Memo<(Word, Gen), Terms>,
    coproduct_memo: Memo<Word, Arc<TensorElement>>,
}

impl FrtAlgebra {
    pub fn new(n: u8) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadSize);
        }
        Ok(FrtAlgebra {
            n,
            q: LaurentInt::q_pow(n as u32, 1),
            q_minus_qinv: LaurentInt::q_minus_qinv(n as u32),
            insert_memo: Memo::new(),
            coproduct_memo: Memo::new(),
        })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn gen(&self, i: u8, j: u8) -> Result<Element> {
        Element::gen(self.n, i, j)
    }

    fn check(&self, e: &Element) -> Result<()> {
        if e.n() == self.n {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.n, e.n()))
        }
    }

    /// Rewrites `a b` with `a > b` into a combination of `c d` with `c <= d`.
    pub(crate) fn swap(&self, a: Gen, b: Gen) -> SmallVec<[(Gen, Gen, LaurentInt); 2]> {
        debug_assert!(a > b);
        if a.row == b.row || a.col == b.col {
            smallvec![(b, a, self.q.clone())]
        } else if a.col < b.col {
            smallvec![(b, a, LaurentInt::one())]
        } else {
            smallvec![
                (b, a, LaurentInt::one()),
                (
                    Gen::new(b.row, a.col),
                    Gen::new(a.row, b.col),
                    self.q_minus_qinv.clone()
                ),
            ]
        }
    }

    /// Normal form of `w · g` for a PBW-normal `w`.
    pub(crate) fn insert(&self, w: &[Gen], g: Gen) -> Terms {
        if w.last().is_none_or(|&l| l <= g) {
            let mut v: Word = w.into();
            v.push(g);
            return Arc::new(vec![(v, LaurentInt::one())]);
        }
        let key = (Word::from(w), g);
        if let Some(hit) = self.insert_memo.get(&key) {
            return hit;
        }
        let (prefix, last) = (&w[..w.len() - 1], w[w.len() - 1]);
        let mut acc: FxHashMap<Word, LaurentInt> = FxHashMap::default();
        for (x, y, c) in self.swap(last, g) {
            for (w2, c2) in self.insert(prefix, x).iter() {
                let c12 = &c * c2;
                for (w3, c3) in self.insert(w2, y).iter() {
                    let t = &c12 * c3;
                    let slot = acc.entry(w3.clone()).or_default();
                    *slot = &*slot + &t;
                }
            }
        }
        let mut out: Vec<(Word, LaurentInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let out = Arc::new(out);
        self.insert_memo.put(key, out.clone());
        out
    }

    /// Normal form of `prefix · w` for a PBW-normal `prefix` and arbitrary `w`.
    pub(crate) fn append_word(&self, prefix: &[Gen], w: &[Gen]) -> Vec<(Word, LaurentInt)> {
        let mut cur: Vec<(Word, LaurentInt)> = vec![(prefix.into(), LaurentInt::one())];
        for &g in w {
            let mut acc: FxHashMap<Word, LaurentInt> = FxHashMap::default();
            for (u, c) in &cur {
                for (u2, c2) in self.insert(u, g).iter() {
                    let slot = acc.entry(u2.clone()).or_default();
                    *slot = &*slot + &(c * c2);
                }
            }
            cur = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        cur.sort_by(|a, b| a.0.cmp(&b.0));
        cur
    }

    /// PBW normal form of `coeff · word`.
    pub fn normal_form(&self, word: &[Gen], coeff: &LaurentInt) -> Result<Element> {
        for g in word {
            g.check(self.n)?;
        }
        Ok(Element::from_normal_terms(
            self.n,
            self.append_word(&[], word)
                .into_iter()
                .map(|(w, c)| (w, &c * coeff)),
        ))
    }

    /// Reference rewriter that always resolves the leftmost or rightmost descent.
    pub fn normal_form_with(&self, word: &[Gen], strategy: Strategy) -> Element {
        let mut out = Element::zero(self.n);
        let mut work: Vec<(Word, LaurentInt)> = vec![(word.into(), LaurentInt::one())];
        while let Some((w, c)) = work.pop() {
            let mut descents = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
            let pos = match strategy {
                Strategy::Leftmost => descents.next(),
                Strategy::Rightmost => descents.next_back(),
            };
            let Some(i) = pos else {
                out.add_term(w, c);
                continue;
            };
            for (x, y, k) in self.swap(w[i], w[i + 1]) {
                let mut v = w.clone();
                v[i] = x;
                v[i + 1] = y;
                work.push((v, &c * &k));
            }
        }
        out
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        let mut out = Element::zero(self.n);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let c = ca * cb;
                for (w, k) in self.append_word(wa, wb) {
                    out.add_term(w, &k * &c);
                }
            }
        }
        Ok(out)
    }

    /// Product of raw words, normalized.
    pub fn multiply_words(&self, a: &[Gen], b: &[Gen]) -> Element {
        let mut w: Word = a.into();
        w.extend_from_slice(b);
        Element::from_normal_terms(self.n, self.append_word(&[], &w))
    }

    /// Every way of splitting a word's letters over `k` tensor legs:
    /// yields raw (unnormalized) legs.
    pub(crate) fn raw_coproduct_legs(&self, w: &[Gen], k: usize) -> Vec<SmallVec<[Word; 3]>> {
        let mut out: Vec<SmallVec<[Word; 3]>> = vec![smallvec![Word::new(); k]];
        for &g in w {
            let mut next = Vec::with_capacity(out.len() * (self.n as usize).pow(k as u32 - 1));
            for legs in &out {
                let mut stack: Vec<(usize, u8, SmallVec<[Word; 3]>)> =
                    vec![(0, g.row, legs.clone())];
                while let Some((leg, start, mut cur)) = stack.pop() {
                    if leg == k - 1 {
                        cur[leg].push(Gen::new(start, g.col));
                        next.push(cur);
                        continue;
                    }
                    for m in 1..=self.n {
                        let mut c = cur.clone();
                        c[leg].push(Gen::new(start, m));
                        stack.push((leg + 1, m, c));
                    }
                }
            }
            out = next;
        }
        out
    }

    fn coproduct_word(&self, w: &Word) -> Arc<TensorElement> {
        if let Some(hit) = self.coproduct_memo.get(w) {
            return hit;
        }
        let mut t = TensorElement::zero(self.n);
        for legs in self.raw_coproduct_legs(w, 2) {
            let l = self.append_word(&[], &legs[0]);
            let r = self.append_word(&[], &legs[1]);
            for (a, ca) in &l {
                for (b, cb) in &r {
                    t.add_term(a.clone(), b.clone(), ca * cb);
                }
            }
        }
        let t = Arc::new(t);
        self.coproduct_memo.put(w.clone(), t.clone());
        t
    }

    pub fn coproduct(&self, a: &Element) -> Result<TensorElement> {
        self.check(a)?;
        let mut out = TensorElement::zero(self.n);
        for (w, c) in a.terms() {
            for ((l, r), k) in self.coproduct_word(w).terms() {
                out.add_term(l.clone(), r.clone(), k * c);
            }
        }
        Ok(out)
    }

    /// `(Δ ⊗ id) Δ`.
    pub fn coproduct2(&self, a: &Element) -> Result<TripleTensorElement> {
        self.check(a)?;
        let mut out = TripleTensorElement::zero(self.n);
        for (w, c) in a.terms() {
            for ((l, r), k) in self.coproduct_word(w).terms() {
                let kc = k * c;
                for ((ll, lr), k2) in self.coproduct_word(l).terms() {
                    out.add_term(ll.clone(), lr.clone(), r.clone(), &kc * k2);
                }
            }
        }
        Ok(out)
    }

    /// `(id ⊗ Δ) Δ`.
    pub fn coproduct2_right(&self, a: &Element) -> Result<TripleTensorElement> {
        self.check(a)?;
        let mut out = TripleTensorElement::zero(self.n);
        for (w, c) in a.terms() {
            for ((l, r), k) in self.coproduct_word(w).terms() {
                let kc = k * c;
                for ((rl, rr), k2) in self.coproduct_word(r).terms() {
                    out.add_term(l.clone(), rl.clone(), rr.clone(), &kc * k2);
                }
            }
        }
        Ok(out)
    }

    pub fn counit_word(w: &[Gen]) -> bool {
        w.iter().all(|g| g.is_diagonal())
    }

    pub fn counit(&self, a: &Element) -> LaurentInt {
        a.terms()
            .filter(|(w, _)| Self::counit_word(w))
            .fold(LaurentInt::zero(), |acc, (_, c)| acc + c)
    }

    /// Componentwise product in `A ⊗ A`.
    pub fn tensor_multiply(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.n);
        for ((a, b), c) in x.terms() {
            for ((a2, b2), c2) in y.terms() {
                let cc = c * c2;
                let l = self.append_word(a, a2);
                let r = self.append_word(b, b2);
                for (wl, kl) in &l {
                    let ck = &cc * kl;
                    for (wr, kr) in &r {
                        out.add_term(wl.clone(), wr.clone(), &ck * kr);
                    }
                }
            }
        }
        out
    }

    /// `(ε ⊗ id)` and `(id ⊗ ε)` applied to a tensor.
    pub fn counit_left(&self, t: &TensorElement) -> Element {
        let mut out = Element::zero(self.n);
        for ((a, b), c) in t.terms() {
            if Self::counit_word(a) {
                out.add_term(b.clone(), c.clone());
            }
        }
        out
    }

    pub fn counit_right(&self, t: &TensorElement) -> Element {
        let mut out = Element::zero(self.n);
        for ((a, b), c) in t.terms() {
            if Self::counit_word(b) {
                out.add_term(a.clone(), c.clone());
            }
        }
        out
    }

    /// `Σ_σ (-q)^{-l(σ)} x^1_{σ(1)} ⋯ x^n_{σ(n)}`.
    pub fn qdet(&self) -> Element {
        let n = self.n;
        let mut out = Element::zero(n);
        for sigma in permutations(n) {
            let l = inv_count(&sigma) as i32;
            let sign = if l % 2 == 0 { 1 } else { -1 };
            let w: Word = sigma
                .iter()
                .enumerate()
                .map(|(i, &s)| Gen::new(i as u8 + 1, s))
                .collect();
            debug_assert!(is_normal(&w));
            out.add_term(w, LaurentInt::monomial(Integer::from(sign), -l * n as i32));
        }
        out
    }

    pub fn memo_sizes(&self) -> (usize, usize) {
        (self.insert_memo.len(), self.coproduct_memo.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frt::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn q(n: u8, k: i32) -> LaurentInt {
        LaurentInt::q_pow(n as u32, k)
    }

    #[test]
    fn basic_rewrites() {
        let a = FrtAlgebra::new(2).unwrap();
        let one = LaurentInt::one();
        let nf = a.normal_form(&w("x[2,1]*x[1,2]"), &one).unwrap();
        assert_eq!(
            nf,
            Element::from_normal_terms(2, [(w("x[1,2]*x[2,1]"), one.clone())])
        );
        let nf = a.normal_form(&w("x[2,2]*x[1,1]"), &one).unwrap();
        let expect = Element::from_normal_terms(
            2,
            [
                (w("x[1,1]*x[2,2]"), one.clone()),
                (w("x[1,2]*x[2,1]"), LaurentInt::q_minus_qinv(2)),
            ],
        );
        assert_eq!(nf, expect);
        let nf = a.normal_form(&w("x[1,2]*x[1,1]*x[1,2]"), &one).unwrap();
        assert_eq!(
            nf,
            Element::from_normal_terms(2, [(w("x[1,1]*x[1,2]^2"), q(2, 1))])
        );
    }

    #[test]
    fn q_commutation_of_generators() {
        let a = FrtAlgebra::new(2).unwrap();
        let p = a
            .multiply(&a.gen(1, 2).unwrap(), &a.gen(1, 1).unwrap())
            .unwrap();
        assert_eq!(
            p,
            Element::from_normal_terms(2, [(w("x[1,1]*x[1,2]"), q(2, 1))])
        );
        let p = a.multiply(&Element::one(2), &a.gen(2, 1).unwrap()).unwrap();
        assert_eq!(p, a.gen(2, 1).unwrap());
    }

    #[test]
    fn strategies_agree_on_reversed_words() {
        let a = FrtAlgebra::new(3).unwrap();
        let word = w("x[3,3]*x[3,2]*x[2,3]*x[2,1]*x[1,2]*x[1,1]");
        let one = LaurentInt::one();
        let l = a.normal_form_with(&word, Strategy::Leftmost);
        let r = a.normal_form_with(&word, Strategy::Rightmost);
        assert_eq!(l, r);
        assert_eq!(l, a.normal_form(&word, &one).unwrap());
    }

    #[test]
    fn coproduct_of_generator() {
        let a = FrtAlgebra::new(2).unwrap();
        let t = a.coproduct(&a.gen(1, 2).unwrap()).unwrap();
        let mut expect = TensorElement::zero(2);
        expect.add_term(w("x[1,1]"), w("x[1,2]"), LaurentInt::one());
        expect.add_term(w("x[1,2]"), w("x[2,2]"), LaurentInt::one());
        assert_eq!(t, expect);
        let t = a.coproduct(&Element::one(2)).unwrap();
        assert_eq!(t, TensorElement::pure(&Element::one(2), &Element::one(2)));
    }

    #[test]
    fn determinant_small_cases() {
        let a = FrtAlgebra::new(2).unwrap();
        let expect = Element::from_normal_terms(
            2,
            [
                (w("x[1,1]*x[2,2]"), LaurentInt::one()),
                (w("x[1,2]*x[2,1]"), -q(2, -1)),
            ],
        );
        assert_eq!(a.qdet(), expect);
        let a1 = FrtAlgebra::new(1).unwrap();
        assert_eq!(a1.qdet(), a1.gen(1, 1).unwrap());
        for n in 1..=3 {
            let a = FrtAlgebra::new(n).unwrap();
            assert!(a.counit(&a.qdet()).is_one());
        }
    }

    #[test]
    fn counit_values() {
        let a = FrtAlgebra::new(2).unwrap();
        let e = a
            .normal_form(&w("x[1,1]*x[2,2]"), &LaurentInt::one())
            .unwrap();
        assert!(a.counit(&e).is_one());
        assert!(a.counit(&a.gen(1, 2).unwrap()).is_zero());
    }
}
