//! Presentation documents: generators and relations as unevaluated syntax.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braided::{BraidedAlgebra, BraidedElement, UExpr};
use crate::error::{Error, Result};
use crate::frt::{Gen, Word};
use crate::ring::{CyclotomicCtx, Integer, LaurentInt, LaurentJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Mn,
    Gln,
    Sln,
    SmallGln,
    SmallSln,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Mn,
        Family::Gln,
        Family::Sln,
        Family::SmallGln,
        Family::SmallSln,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Mn => "mn",
            Family::Gln => "gln",
            Family::Sln => "sln",
            Family::SmallGln => "small-gln",
            Family::SmallSln => "small-sln",
        }
    }

    pub fn is_small(self) -> bool {
        matches!(self, Family::SmallGln | Family::SmallSln)
    }

    /// Conventional name of the algebra, e.g. `b_ε(SL_3)`.
    pub fn title(self, n: u8) -> String {
        match self {
            Family::Mn => format!("B_q(M_{n})"),
            Family::Gln => format!("B_q(GL_{n})"),
            Family::Sln => format!("B_q(SL_{n})"),
            Family::SmallGln => format!("b_ε(GL_{n})"),
            Family::SmallSln => format!("b_ε(SL_{n})"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown family {s:?}; expected mn, gln, sln, small-gln or small-sln"
                ))
            })
    }
}

/// A generator `u^i_j`, or the adjoined inverse `t` of the determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "SymbolWire", try_from = "SymbolWire")]
pub enum Symbol {
    U(Gen),
    T,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SymbolWire {
    U([u8; 2]),
    Named(String),
}

impl From<Symbol> for SymbolWire {
    fn from(s: Symbol) -> Self {
        match s {
            Symbol::U(g) => SymbolWire::U([g.row, g.col]),
            Symbol::T => SymbolWire::Named("t".into()),
        }
    }
}

impl TryFrom<SymbolWire> for Symbol {
    type Error = Error;
    fn try_from(w: SymbolWire) -> Result<Self> {
        match w {
            SymbolWire::U([i, j]) => Ok(Symbol::U(Gen::new(i, j))),
            SymbolWire::Named(s) if s == "t" => Ok(Symbol::T),
            SymbolWire::Named(s) => Err(Error::Parse(format!("unknown symbol {s:?}"))),
        }
    }
}

/// A scalar of a relation.
///
/// `value` is the generic Laurent polynomial. `factors` lists the `m` of a
/// product `Π (1 - q^{-2m})` when the scalar was built that way, and `reduced`
/// is the canonical cyclotomic representative in presentations at a root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff {
    pub value: LaurentInt,
    pub factors: Option<Vec<u32>>,
    pub reduced: Option<LaurentInt>,
}

impl Coeff {
    pub fn plain(value: LaurentInt) -> Self {
        Coeff {
            value,
            factors: None,
            reduced: None,
        }
    }

    pub fn one() -> Self {
        Coeff::plain(LaurentInt::one())
    }

    pub fn factored(value: LaurentInt, factors: Vec<u32>) -> Self {
        Coeff {
            value,
            factors: Some(factors),
            reduced: None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffWire {
    value: LaurentJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    reduced: Option<LaurentJson>,
}

/// One summand `coeff · w₁ ⋆ w₂ ⋆ ⋯`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub word: Vec<Symbol>,
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    coeff: CoeffWire,
    word: Vec<Symbol>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub tag: String,
    pub indices: Vec<u8>,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CoeffRing {
    /// `ℤ[v, v⁻¹]` with `q = v^n`.
    Laurent { n: u32 },
    /// `ℤ[v]/(Φ_ℓ(v^n))`; `modulus` lists the coefficients of `Φ_ℓ(v^n)` from degree 0.
    Cyclotomic {
        n: u32,
        ell: u32,
        modulus: Vec<Integer>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "DocWire", try_from = "DocWire")]
pub struct PresentationDoc {
    pub algebra: Family,
    pub n: u8,
    pub ell: Option<u32>,
    pub ring: CoeffRing,
    pub generators: Vec<Symbol>,
    pub relations: Vec<Relation>,
}

#[derive(Serialize, Deserialize)]
struct RelationWire {
    tag: String,
    indices: Vec<u8>,
    terms: Vec<TermWire>,
    equals: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
struct DocWire {
    algebra: Family,
    n: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ell: Option<u32>,
    ring: CoeffRing,
    generators: Vec<Symbol>,
    relations: Vec<RelationWire>,
}

impl From<PresentationDoc> for DocWire {
    fn from(d: PresentationDoc) -> Self {
        let n = d.n as u32;
        let side = |ts: &[Term]| ts.iter().map(|t| term_to_wire(t, n)).collect();
        DocWire {
            algebra: d.algebra,
            n: d.n,
            ell: d.ell,
            ring: d.ring,
            generators: d.generators,
            relations: d
                .relations
                .iter()
                .map(|r| RelationWire {
                    tag: r.tag.clone(),
                    indices: r.indices.clone(),
                    terms: side(&r.lhs),
                    equals: side(&r.rhs),
                })
                .collect(),
        }
    }
}

impl TryFrom<DocWire> for PresentationDoc {
    type Error = Error;
    fn try_from(d: DocWire) -> Result<Self> {
        let check = |s: &Symbol| match s {
            Symbol::U(g) => g.check(d.n).map(|_| ()),
            Symbol::T => Ok(()),
        };
        for s in &d.generators {
            check(s)?;
        }
        let mut relations = Vec::with_capacity(d.relations.len());
        for r in d.relations {
            let side = |ts: Vec<TermWire>| -> Result<Vec<Term>> {
                ts.into_iter()
                    .map(|t| {
                        for s in &t.word {
                            check(s)?;
                        }
                        Ok(term_from_wire(t))
                    })
                    .collect()
            };
            relations.push(Relation {
                tag: r.tag,
                indices: r.indices,
                lhs: side(r.terms)?,
                rhs: side(r.equals)?,
            });
        }
        Ok(PresentationDoc {
            algebra: d.algebra,
            n: d.n,
            ell: d.ell,
            ring: d.ring,
            generators: d.generators,
            relations,
        })
    }
}

fn term_to_wire(t: &Term, n: u32) -> TermWire {
    TermWire {
        coeff: CoeffWire {
            value: t.coeff.value.to_json(n),
            factors: t.coeff.factors.clone(),
            reduced: t.coeff.reduced.as_ref().map(|r| r.to_json(n)),
        },
        word: t.word.clone(),
    }
}

fn term_from_wire(w: TermWire) -> Term {
    Term {
        coeff: Coeff {
            value: w.coeff.value.into_laurent(),
            factors: w.coeff.factors,
            reduced: w.coeff.reduced.map(|r| r.into_laurent()),
        },
        word: w.word,
    }
}

impl PresentationDoc {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    /// Compact JSON with a trailing newline; identical input gives identical bytes.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn relation(&self, tag: &str, indices: &[u8]) -> Option<&Relation> {
        self.relations
            .iter()
            .find(|r| r.tag == tag && r.indices == indices)
    }

    pub fn relations_tagged<'a>(&'a self, tag: &'a str) -> impl Iterator<Item = &'a Relation> + 'a {
        self.relations.iter().filter(move |r| r.tag == tag)
    }
}

/// Converts formal chains to terms, keeping their order.
pub fn terms_from_uexpr(e: &UExpr) -> Vec<Term> {
    e.terms()
        .map(|(w, c)| Term {
            coeff: Coeff::plain(c.clone()),
            word: w.iter().map(|&g| Symbol::U(g)).collect(),
        })
        .collect()
}

pub fn unit_term() -> Term {
    Term {
        coeff: Coeff::one(),
        word: Vec::new(),
    }
}

impl Relation {
    pub fn involves_t(&self) -> bool {
        self.lhs
            .iter()
            .chain(&self.rhs)
            .any(|t| t.word.contains(&Symbol::T))
    }

    fn side_expr(n: u8, side: &[Term]) -> Option<UExpr> {
        let mut e = UExpr::zero(n);
        for t in side {
            let w: Option<Word> = t
                .word
                .iter()
                .map(|s| match s {
                    Symbol::U(g) => Some(*g),
                    Symbol::T => None,
                })
                .collect();
            e.add_chain(w?, t.coeff.value.clone());
        }
        Some(e)
    }

    /// Both sides as chains with generic coefficients; `None` when `t` occurs.
    pub fn as_uexprs(&self, n: u8) -> Option<(UExpr, UExpr)> {
        Some((
            Self::side_expr(n, &self.lhs)?,
            Self::side_expr(n, &self.rhs)?,
        ))
    }

    /// `lhs - rhs` evaluated in the covariantized algebra over the generic ring.
    pub fn residual(&self, alg: &BraidedAlgebra) -> Result<BraidedElement> {
        let (l, r) = self
            .as_uexprs(alg.n())
            .ok_or_else(|| Error::InvalidArgument(format!("relation {} involves t", self.tag)))?;
        alg.relation_residual(&l, &r)
    }
}

/// Replaces every coefficient by its canonical form at `q = ε`, dropping zeros.
pub fn specialize_uexpr(e: &UExpr, ctx: &CyclotomicCtx) -> UExpr {
    e.map_coeffs(|c| ctx.reduce(c))
}

/// Attaches canonical reductions to every coefficient of a generic document.
pub fn specialize_doc(doc: &PresentationDoc, ctx: &CyclotomicCtx) -> Result<PresentationDoc> {
    if ctx.n() != doc.n as u32 {
        return Err(Error::ContextMismatch(doc.n, ctx.n() as u8));
    }
    let fix = |side: &[Term]| -> Vec<Term> {
        side.iter()
            .filter_map(|t| {
                let r = ctx.reduce(&t.coeff.value);
                if r.is_zero() {
                    return None;
                }
                let mut t = t.clone();
                t.coeff.reduced = Some(r);
                Some(t)
            })
            .collect()
    };
    let mut out = doc.clone();
    out.ell = Some(ctx.ell());
    out.ring = CoeffRing::Cyclotomic {
        n: ctx.n(),
        ell: ctx.ell(),
        modulus: ctx.phi().terms().iter().fold(
            vec![Integer::ZERO; ctx.degree() as usize + 1],
            |mut v, (e, c)| {
                v[*e as usize] = c.clone();
                v
            },
        ),
    };
    for r in &mut out.relations {
        r.lhs = fix(&r.lhs);
        r.rhs = fix(&r.rhs);
    }
    Ok(out)
}
