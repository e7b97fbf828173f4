//! Elements of `O_q(M_n)` in the PBW basis and their tensor powers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::{format_word, latex_word, Gen, Word};
use crate::error::{Error, Result};
use crate::render::{lincomb, Style};
use crate::ring::{LaurentInt, LaurentJson};

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, LaurentInt>, k: K, c: LaurentInt) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// A finite combination of PBW-normal words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    n: u8,
    terms: BTreeMap<Word, LaurentInt>,
}

impl Element {
    pub fn zero(n: u8) -> Self {
        Element {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u8) -> Self {
        Self::scalar(n, LaurentInt::one())
    }

    pub fn scalar(n: u8, c: LaurentInt) -> Self {
        let mut e = Self::zero(n);
        accumulate(&mut e.terms, Word::new(), c);
        e
    }

    /// The generator `x^i_j`.
    pub fn gen(n: u8, i: u8, j: u8) -> Result<Self> {
        let g = Gen::new(i, j).check(n)?;
        let mut w = Word::new();
        w.push(g);
        Ok(Self::from_normal_terms(n, [(w, LaurentInt::one())]))
    }

    /// Builds from words that are already PBW-normal.
    pub(crate) fn from_normal_terms<I: IntoIterator<Item = (Word, LaurentInt)>>(
        n: u8,
        it: I,
    ) -> Self {
        let mut e = Self::zero(n);
        for (w, c) in it {
            debug_assert!(super::word::is_normal(&w));
            accumulate(&mut e.terms, w, c);
        }
        e
    }

    pub(crate) fn add_term(&mut self, w: Word, c: LaurentInt) {
        accumulate(&mut self.terms, w, c);
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Gen]) -> LaurentInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Largest word length in the support.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    fn same_ctx(&self, other: &Element) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.n, other.n))
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.same_ctx(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            accumulate(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.try_add(&other.neg())
    }

    pub fn add(&self, other: &Element) -> Element {
        self.try_add(other).expect("context mismatch")
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.try_sub(other).expect("context mismatch")
    }

    pub fn neg(&self) -> Element {
        self.scale(&-LaurentInt::one())
    }

    pub fn scale(&self, c: &LaurentInt) -> Element {
        let mut out = Element::zero(self.n);
        for (w, d) in &self.terms {
            accumulate(&mut out.terms, w.clone(), d * c);
        }
        out
    }

    pub fn to_json(&self) -> ElementJson {
        self.to_json_tagged(None)
    }

    pub(crate) fn to_json_tagged(&self, algebra: Option<&str>) -> ElementJson {
        ElementJson {
            algebra: algebra.map(str::to_string),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| TermJson {
                    word: w.iter().map(|g| (g.row, g.col)).collect(),
                    coeff: c.to_json(self.n as u32),
                })
                .collect(),
        }
    }

    /// Rebuilds an element; every word must be PBW-normal.
    pub fn from_json(j: &ElementJson) -> Result<Element> {
        let mut out = Element::zero(j.n);
        for t in &j.terms {
            let w: Word = t
                .word
                .iter()
                .map(|&(i, k)| Gen::new(i, k).check(j.n))
                .collect::<Result<_>>()?;
            if !super::word::is_normal(&w) {
                return Err(Error::Parse(format!(
                    "word {} is not PBW-normal",
                    format_word(&w, 'x')
                )));
            }
            accumulate(&mut out.terms, w, t.coeff.clone().into_laurent());
        }
        Ok(out)
    }

    pub fn render(&self, letter: char) -> String {
        lincomb(
            self.terms.iter().map(|(w, c)| (format_word(w, letter), c)),
            Style::text(self.n as u32),
        )
    }

    pub fn render_latex(&self, letter: char, sep: &str) -> String {
        let style = Style {
            n: self.n as u32,
            var: "q",
            latex: true,
        };
        lincomb(
            self.terms
                .iter()
                .map(|(w, c)| (latex_word(w, letter, sep), c)),
            style,
        )
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('x'))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element(n={}; {})", self.n, self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub n: u8,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: Vec<(u8, u8)>,
    pub coeff: LaurentJson,
}

/// An element of `A ⊗ A` with normalized legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    pub(crate) n: u8,
    pub(crate) terms: BTreeMap<(Word, Word), LaurentInt>,
}

/// An element of `A ⊗ A ⊗ A` with normalized legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleTensorElement {
    pub(crate) n: u8,
    pub(crate) terms: BTreeMap<(Word, Word, Word), LaurentInt>,
}

impl TensorElement {
    pub fn zero(n: u8) -> Self {
        TensorElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &LaurentInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, a: Word, b: Word, c: LaurentInt) {
        accumulate(&mut self.terms, (a, b), c);
    }

    /// `a ⊗ b` for normalized elements.
    pub fn pure(a: &Element, b: &Element) -> Self {
        let mut t = TensorElement::zero(a.n);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(wa.clone(), wb.clone(), ca * cb);
            }
        }
        t
    }
}

impl TripleTensorElement {
    pub fn zero(n: u8) -> Self {
        TripleTensorElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word, Word), &LaurentInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, a: Word, b: Word, c: Word, k: LaurentInt) {
        accumulate(&mut self.terms, (a, b, c), k);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_context() {
        let a = Element::gen(2, 1, 2).unwrap();
        let b = Element::gen(3, 1, 2).unwrap();
        assert_eq!(a.try_add(&b), Err(Error::ContextMismatch(2, 3)));
        assert!(a.sub(&a).is_zero());
        assert!(Element::gen(2, 3, 1).is_err());
        assert_eq!(Element::one(2).degree(), 0);
    }

    #[test]
    fn json_round_trip() {
        let mut e = Element::gen(2, 1, 2)
            .unwrap()
            .scale(&LaurentInt::q_minus_qinv(2));
        e = e.add(&Element::one(2));
        let j = serde_json::to_string(&e.to_json()).unwrap();
        let back: ElementJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Element::from_json(&back).unwrap(), e);
        assert!(j.starts_with(r#"{"n":2,"terms":[{"word":[],"coeff""#));
    }

    #[test]
    fn display() {
        let e = Element::gen(2, 1, 2)
            .unwrap()
            .scale(&LaurentInt::q_minus_qinv(2))
            .sub(&Element::one(2));
        assert_eq!(e.to_string(), "-1 + (q - q^-1)·x[1,2]");
    }
}
