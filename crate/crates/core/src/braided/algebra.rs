//! The covariantized product on the module underlying `O_q(M_n)`.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::expr::UExpr;
use crate::error::{Error, Result};
use crate::frt::algebra::Terms;
use crate::frt::{deficiency, exceedance, inv_count, permutations, Element, FrtAlgebra, Gen, Word};
use crate::memo::Memo;
use crate::rform::{build_rform, raw_legs, RForm, Variant};
use crate::ring::{Integer, LaurentInt};

/// An element of the covariantized algebra, stored in the PBW basis of `A`.
/// The generator `u^i_j` is the word `x^i_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidedElement(Element);

impl BraidedElement {
    /// Reinterprets an element of `A` through the module identification.
    pub fn from_element(e: Element) -> Self {
        BraidedElement(e)
    }

    pub fn as_element(&self) -> &Element {
        &self.0
    }

    pub fn into_element(self) -> Element {
        self.0
    }

    pub fn zero(n: u8) -> Self {
        BraidedElement(Element::zero(n))
    }

    pub fn one(n: u8) -> Self {
        BraidedElement(Element::one(n))
    }

    pub fn gen(n: u8, i: u8, j: u8) -> Result<Self> {
        Element::gen(n, i, j).map(BraidedElement)
    }

    pub fn n(&self) -> u8 {
        self.0.n()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &BraidedElement) -> BraidedElement {
        BraidedElement(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &BraidedElement) -> BraidedElement {
        BraidedElement(self.0.sub(&o.0))
    }

    pub fn scale(&self, c: &LaurentInt) -> BraidedElement {
        BraidedElement(self.0.scale(c))
    }

    pub fn to_json(&self) -> crate::frt::ElementJson {
        self.0.to_json_tagged(Some("braided"))
    }

    pub fn from_json(j: &crate::frt::ElementJson) -> Result<Self> {
        if j.algebra.as_deref() != Some("braided") {
            return Err(Error::Parse("expected \"algebra\": \"braided\"".into()));
        }
        Element::from_json(j).map(BraidedElement)
    }
}

impl fmt::Display for BraidedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BraidedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidedElement(n={}; {})", self.n(), self.0)
    }
}

type Entry = (Gen, Gen, LaurentInt);
type Index = FxHashMap<(u8, u8), Vec<Entry>>;

fn index_by(entries: &[Entry], key: impl Fn(&Entry) -> (u8, u8)) -> Index {
    let mut m: Index = FxHashMap::default();
    for e in entries {
        m.entry(key(e)).or_default().push(e.clone());
    }
    m
}

/// Nonzero form entries indexed by the two indices known during a chain scan.
pub(crate) struct ChainIndex {
    /// `R`, keyed by (first.row, second.row).
    pub r_rows: Index,
    /// `R`, keyed by (first.col, second.row).
    pub r_col_row: Index,
    /// `R̃`, keyed by (first.col, second.col).
    pub rt_cols: Index,
    /// `R⁻¹`, keyed by (first.row, second.col).
    pub rinv_row_col: Index,
}

static EMPTY: Vec<Entry> = Vec::new();

pub(crate) fn lookup(ix: &Index, k: (u8, u8)) -> &[Entry] {
    ix.get(&k).map(|v| v.as_slice()).unwrap_or(&EMPTY)
}

/// Covariantized algebra `a ⋆ b = a₂ b₃ R̃(a₃ ⊗ b₁) R(a₁ ⊗ b₂)` on top of `O_q(M_n)`.
pub struct BraidedAlgebra {
    frt: FrtAlgebra,
    form: RForm,
    pub(crate) index: ChainIndex,
    gen_memo: Memo<(Word, Gen), Terms>,
}

impl BraidedAlgebra {
    pub fn new(n: u8) -> Result<Self> {
        Self::with_form(build_rform(n)?)
    }

    pub fn with_form(form: RForm) -> Result<Self> {
        let n = form.n();
        let frt = FrtAlgebra::new(n)?;
        let index = ChainIndex {
            r_rows: index_by(form.nonzero(Variant::R), |(a, b, _)| (a.row, b.row)),
            r_col_row: index_by(form.nonzero(Variant::R), |(a, b, _)| (a.col, b.row)),
            rt_cols: index_by(form.nonzero(Variant::Rtilde), |(a, b, _)| (a.col, b.col)),
            rinv_row_col: index_by(form.nonzero(Variant::Rinv), |(a, b, _)| (a.row, b.col)),
        };
        Ok(BraidedAlgebra {
            frt,
            form,
            index,
            gen_memo: Memo::new(),
        })
    }

    pub fn n(&self) -> u8 {
        self.frt.n()
    }

    pub fn frt(&self) -> &FrtAlgebra {
        &self.frt
    }

    pub fn form(&self) -> &RForm {
        &self.form
    }

    pub fn gen(&self, i: u8, j: u8) -> Result<BraidedElement> {
        BraidedElement::gen(self.n(), i, j)
    }

    fn check(&self, e: &BraidedElement) -> Result<()> {
        if e.n() == self.n() {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.n(), e.n()))
        }
    }

    /// `w ⋆ x^s_t` for a PBW-normal `w`.
    ///
    /// With `b₁ ⊗ b₂ ⊗ b₃ = x^s_π ⊗ x^π_ρ ⊗ x^ρ_t`, the factor `R(a₁ ⊗ x^π_ρ)`
    /// walks a chain `π → ρ` forward through the letters of `a₁`, and
    /// `R̃(a₃ ⊗ x^s_π)` walks a chain from `π` that must end at `s`. Both are
    /// scanned letter by letter while the middle leg is kept normalized.
    pub(crate) fn word_times_gen(&self, w: &[Gen], g: Gen) -> Terms {
        let key = (Word::from(w), g);
        if let Some(hit) = self.gen_memo.get(&key) {
            return hit;
        }
        let n = self.n();
        let mut states: FxHashMap<(u8, u8, Word), LaurentInt> = FxHashMap::default();
        for pi in 1..=n {
            states.insert((pi, pi, Word::new()), LaurentInt::one());
        }
        for &x in w {
            let mut next: FxHashMap<(u8, u8, Word), LaurentInt> = FxHashMap::default();
            for ((kappa, theta, mid), c) in &states {
                for (f1, s1, rv) in lookup(&self.index.r_rows, (x.row, *kappa)) {
                    let crv = c * rv;
                    for (f2, s2, tv) in lookup(&self.index.rt_cols, (x.col, *theta)) {
                        let coef = &crv * tv;
                        for (m2, k) in self.frt.insert(mid, Gen::new(f1.col, f2.row)).iter() {
                            let slot = next.entry((s1.col, s2.row, m2.clone())).or_default();
                            *slot = &*slot + &(&coef * k);
                        }
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            states = next;
        }
        let mut acc: FxHashMap<Word, LaurentInt> = FxHashMap::default();
        for ((rho, theta, mid), c) in &states {
            if *theta != g.row {
                continue;
            }
            for (m2, k) in self.frt.insert(mid, Gen::new(*rho, g.col)).iter() {
                let slot = acc.entry(m2.clone()).or_default();
                *slot = &*slot + &(c * k);
            }
        }
        let mut out: Vec<(Word, LaurentInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let out = Arc::new(out);
        self.gen_memo.put(key, out.clone());
        out
    }

    /// `a ⋆ u^i_j`.
    pub fn multiply_by_gen(&self, a: &BraidedElement, g: Gen) -> Result<BraidedElement> {
        self.check(a)?;
        g.check(self.n())?;
        Ok(self.times_gen_unchecked(a, g))
    }

    fn times_gen_unchecked(&self, a: &BraidedElement, g: Gen) -> BraidedElement {
        let mut out = Element::zero(self.n());
        for (w, c) in a.as_element().terms() {
            for (w2, k) in self.word_times_gen(w, g).iter() {
                out.add_term(w2.clone(), c * k);
            }
        }
        BraidedElement(out)
    }

    pub fn braided_multiply(
        &self,
        a: &BraidedElement,
        b: &BraidedElement,
    ) -> Result<BraidedElement> {
        self.check(a)?;
        self.check(b)?;
        if b.as_element().terms().all(|(w, _)| w.len() == 1) {
            let mut out = BraidedElement::zero(self.n());
            for (w, c) in b.as_element().terms() {
                out = out.add(&self.times_gen_unchecked(a, w[0]).scale(c));
            }
            return Ok(out);
        }
        self.braided_multiply_general(a, b)
    }

    /// Direct evaluation of the defining formula over all `Δ²` legs.
    pub fn braided_multiply_general(
        &self,
        a: &BraidedElement,
        b: &BraidedElement,
    ) -> Result<BraidedElement> {
        self.check(a)?;
        self.check(b)?;
        let n = self.n();
        let mut out = Element::zero(n);
        for (wb, cb) in b.as_element().terms() {
            let blegs = raw_legs(n, wb, 3);
            for (wa, ca) in a.as_element().terms() {
                let cab = ca * cb;
                for al in raw_legs(n, wa, 3) {
                    for bl in &blegs {
                        let t = self.form.eval_r(Variant::Rtilde, &al[2], &bl[0]);
                        if t.is_zero() {
                            continue;
                        }
                        let r = self.form.eval_r(Variant::R, &al[0], &bl[1]);
                        if r.is_zero() {
                            continue;
                        }
                        let coef = &cab * &(t * r);
                        let mut mid: Word = al[1].clone();
                        mid.extend_from_slice(&bl[2]);
                        for (w, k) in self.frt.append_word(&[], &mid) {
                            out.add_term(w, &coef * &k);
                        }
                    }
                }
            }
        }
        Ok(BraidedElement(out))
    }

    /// `a^{⋆N}`, left-associated.
    pub fn braided_power(&self, a: &BraidedElement, big_n: u32) -> Result<BraidedElement> {
        self.check(a)?;
        let mut acc = BraidedElement::one(self.n());
        for _ in 0..big_n {
            acc = self.braided_multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// `u^{w_1} ⋆ u^{w_2} ⋆ ⋯`, left-associated.
    pub fn chain(&self, w: &[Gen]) -> Result<BraidedElement> {
        let mut acc = BraidedElement::one(self.n());
        for &g in w {
            acc = self.multiply_by_gen(&acc, g)?;
        }
        Ok(acc)
    }

    /// Evaluates formal chains, sharing common prefixes.
    pub fn evaluate(&self, e: &UExpr) -> Result<BraidedElement> {
        if e.n() != self.n() {
            return Err(Error::ContextMismatch(self.n(), e.n()));
        }
        for (w, _) in e.terms() {
            for g in w {
                g.check(self.n())?;
            }
        }
        let terms: Vec<(Word, LaurentInt)> =
            e.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        Ok(BraidedElement(self.eval_group(
            &Element::one(self.n()),
            0,
            &terms,
        )))
    }

    fn eval_group(&self, prefix: &Element, depth: usize, terms: &[(Word, LaurentInt)]) -> Element {
        let mut out = Element::zero(self.n());
        let mut groups: Vec<(Gen, &[(Word, LaurentInt)])> = Vec::new();
        let mut i = 0;
        while i < terms.len() {
            if terms[i].0.len() == depth {
                out = out.add(&prefix.scale(&terms[i].1));
                i += 1;
                continue;
            }
            let g = terms[i].0[depth];
            let mut j = i + 1;
            while j < terms.len() && terms[j].0.len() > depth && terms[j].0[depth] == g {
                j += 1;
            }
            groups.push((g, &terms[i..j]));
            i = j;
        }
        let parts: Vec<Element> = if depth < 2 && groups.len() > 1 {
            groups
                .par_iter()
                .map(|(g, sub)| {
                    let child = self
                        .times_gen_unchecked(&BraidedElement(prefix.clone()), *g)
                        .0;
                    self.eval_group(&child, depth + 1, sub)
                })
                .collect()
        } else {
            groups
                .iter()
                .map(|(g, sub)| {
                    let child = self
                        .times_gen_unchecked(&BraidedElement(prefix.clone()), *g)
                        .0;
                    self.eval_group(&child, depth + 1, sub)
                })
                .collect()
        };
        for p in parts {
            out = out.add(&p);
        }
        out
    }

    /// `Σ_σ (-q)^{l(σ)} q^{d(σ)} u^n_{σ(n)} ⋆ ⋯ ⋆ u^1_{σ(1)}` as chains, `d` the deficiency count.
    pub fn braided_det_expr(&self) -> UExpr {
        braided_det_expr(self.n())
    }

    pub fn braided_det(&self) -> BraidedElement {
        self.evaluate(&self.braided_det_expr())
            .expect("valid indices")
    }

    /// `Σ R⁻¹(a₁ ⊗ b₁) R(a₃ ⊗ b₂) a₂ ⋆ b₃`, which should recover the product of `A`.
    pub fn recover_product(&self, a: &Element, b: &Element) -> Result<Element> {
        let n = self.n();
        let mut out = BraidedElement::zero(n);
        for (wb, cb) in b.terms() {
            let blegs = raw_legs(n, wb, 3);
            for (wa, ca) in a.terms() {
                let cab = ca * cb;
                for al in raw_legs(n, wa, 3) {
                    for bl in &blegs {
                        let x = self.form.eval_r(Variant::Rinv, &al[0], &bl[0]);
                        if x.is_zero() {
                            continue;
                        }
                        let y = self.form.eval_r(Variant::R, &al[2], &bl[1]);
                        if y.is_zero() {
                            continue;
                        }
                        let l = BraidedElement(self.frt.normal_form(&al[1], &LaurentInt::one())?);
                        let r = BraidedElement(self.frt.normal_form(&bl[2], &LaurentInt::one())?);
                        out = out.add(&self.braided_multiply(&l, &r)?.scale(&(&cab * &(x * y))));
                    }
                }
            }
        }
        Ok(out.0)
    }
}

/// Which permutation statistic weights the determinant chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DetStatistic {
    /// `#{i : σ(i) < i}`; this is the one `Ψ(d_q)` produces.
    Deficiency,
    /// `#{i : σ(i) > i}`; agrees with the above only for `n ≤ 2`.
    Exceedance,
}

/// The braided determinant as formal chains.
pub fn braided_det_expr(n: u8) -> UExpr {
    braided_det_expr_with(n, DetStatistic::Deficiency)
}

/// `Σ_σ (-q)^{l(σ)} q^{s(σ)} u^n_{σ(n)} ⋆ ⋯ ⋆ u^1_{σ(1)}` for the chosen statistic `s`.
pub fn braided_det_expr_with(n: u8, stat: DetStatistic) -> UExpr {
    let mut e = UExpr::zero(n);
    for sigma in permutations(n) {
        let l = inv_count(&sigma) as i32;
        let s = match stat {
            DetStatistic::Deficiency => deficiency(&sigma),
            DetStatistic::Exceedance => exceedance(&sigma),
        } as i32;
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let w: Word = (1..=n)
            .rev()
            .map(|i| Gen::new(i, sigma[i as usize - 1]))
            .collect();
        e.add_chain(
            w,
            LaurentInt::monomial(Integer::from(sign), (l + s) * n as i32),
        );
    }
    e
}
