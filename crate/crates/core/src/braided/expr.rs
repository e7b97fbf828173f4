//! Formal linear combinations of braided chains `u^{a}_{b} ⋆ u^{c}_{d} ⋆ ⋯`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::frt::element::accumulate;
use crate::frt::{format_word, latex_word, ElementJson, Gen, TermJson, Word};
use crate::render::{lincomb, Style};
use crate::ring::LaurentInt;

/// Syntax, not a value: each word is a left-associated braided product of
/// generators. Evaluate with [`super::BraidedAlgebra::evaluate`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UExpr {
    n: u8,
    terms: BTreeMap<Word, LaurentInt>,
}

impl UExpr {
    pub fn zero(n: u8) -> Self {
        UExpr {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u8) -> Self {
        Self::chain(n, &[], LaurentInt::one())
    }

    pub fn chain(n: u8, w: &[Gen], c: LaurentInt) -> Self {
        let mut e = Self::zero(n);
        e.add_chain(w.into(), c);
        e
    }

    pub fn gen(n: u8, i: u8, j: u8) -> Self {
        Self::chain(n, &[Gen::new(i, j)], LaurentInt::one())
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn add_chain(&mut self, w: Word, c: LaurentInt) {
        accumulate(&mut self.terms, w, c);
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

    pub fn add(&self, o: &UExpr) -> UExpr {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_chain(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &UExpr) -> UExpr {
        self.add(&o.scale(&-LaurentInt::one()))
    }

    pub fn scale(&self, c: &LaurentInt) -> UExpr {
        let mut out = UExpr::zero(self.n);
        for (w, d) in &self.terms {
            out.add_chain(w.clone(), d * c);
        }
        out
    }

    /// Formal braided product: concatenation of chains.
    pub fn concat(&self, o: &UExpr) -> UExpr {
        let mut out = UExpr::zero(self.n);
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_chain(w, c * d);
            }
        }
        out
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentInt) -> LaurentInt) -> UExpr {
        let mut out = UExpr::zero(self.n);
        for (w, c) in &self.terms {
            out.add_chain(w.clone(), f(c));
        }
        out
    }

    pub fn render(&self) -> String {
        lincomb(
            self.terms.iter().map(|(w, c)| (chain_text(w), c)),
            Style::text(self.n as u32),
        )
    }

    pub fn render_latex(&self) -> String {
        let style = Style {
            n: self.n as u32,
            var: "q",
            latex: true,
        };
        lincomb(
            self.terms
                .iter()
                .map(|(w, c)| (latex_word(w, 'u', " \\underline{\\cdot} "), c)),
            style,
        )
    }

    /// Same wire shape as an element, tagged `"chains"`: words are unevaluated braided products.
    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            algebra: Some("chains".into()),
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

    pub fn from_json(j: &ElementJson) -> Result<UExpr> {
        if j.algebra.as_deref() != Some("chains") {
            return Err(Error::Parse("expected \"algebra\": \"chains\"".into()));
        }
        let mut out = UExpr::zero(j.n);
        for t in &j.terms {
            let w: Word = t
                .word
                .iter()
                .map(|&(i, k)| Gen::new(i, k).check(j.n))
                .collect::<Result<_>>()?;
            out.add_chain(w, t.coeff.clone().into_laurent());
        }
        Ok(out)
    }
}

pub(crate) fn chain_text(w: &[Gen]) -> String {
    format_word(w, 'u').replace('·', "⋆")
}

impl fmt::Display for UExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for UExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UExpr(n={}; {})", self.n, self)
    }
}
