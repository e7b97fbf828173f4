//! Text and LaTeX output of presentation documents.

use super::doc::{Coeff, CoeffRing, PresentationDoc, Relation, Symbol, Term};
use crate::render::{coeff_body, Style};
use crate::ring::LaurentInt;

#[derive(Clone, Copy)]
struct Syntax {
    n: u32,
    latex: bool,
    small: bool,
}

impl Syntax {
    fn var(&self) -> &'static str {
        match (self.small, self.latex) {
            (true, true) => "\\epsilon",
            (true, false) => "ε",
            (false, _) => "q",
        }
    }

    fn style(&self) -> Style<'static> {
        Style {
            n: self.n,
            var: self.var(),
            latex: self.latex,
        }
    }

    fn star(&self) -> &'static str {
        if self.latex {
            " \\underline{\\cdot} "
        } else {
            "⋆"
        }
    }

    fn mul(&self) -> &'static str {
        if self.latex {
            " "
        } else {
            "·"
        }
    }

    fn paren(&self, s: &str) -> String {
        if self.latex {
            format!("\\left({s}\\right)")
        } else {
            format!("({s})")
        }
    }
}

fn symbol(s: Symbol, syn: Syntax) -> String {
    match (s, syn.latex) {
        (Symbol::U(g), true) => format!("u^{{{}}}_{{{}}}", g.row, g.col),
        (Symbol::U(g), false) => format!("u[{},{}]", g.row, g.col),
        (Symbol::T, _) => "t".into(),
    }
}

/// Runs of a repeated letter are written as powers.
fn word(w: &[Symbol], syn: Syntax) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i + 1;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let base = symbol(w[i], syn);
        parts.push(match (j - i, syn.latex) {
            (1, _) => base,
            (k, true) => format!("\\left({base}\\right)^{{\\underline{{\\cdot}} {k}}}"),
            (k, false) => format!("{base}^{k}"),
        });
        i = j;
    }
    parts.join(syn.star())
}

/// Sign and printable magnitude; `None` for a unit magnitude.
fn coeff(c: &Coeff, syn: Syntax) -> (bool, Option<String>) {
    match &c.factors {
        Some(fs) if !fs.is_empty() => {
            let pieces: Vec<String> = fs
                .iter()
                .map(|&m| {
                    syn.paren(
                        &(LaurentInt::one() - LaurentInt::q_pow(syn.n, -2 * m as i32)).render(
                            syn.n,
                            syn.var(),
                            syn.latex,
                        ),
                    )
                })
                .collect();
            (false, Some(pieces.join(syn.mul())))
        }
        Some(_) => (false, None),
        None => coeff_body(&c.value, syn.style()),
    }
}

fn side(terms: &[Term], syn: Syntax) -> String {
    let mut out = String::new();
    for (idx, t) in terms.iter().enumerate() {
        let (neg, body) = coeff(&t.coeff, syn);
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let w = word(&t.word, syn);
        match (body, t.word.is_empty()) {
            (None, _) => out.push_str(&w),
            (Some(b), true) => out.push_str(&b),
            (Some(b), false) => {
                out.push_str(&b);
                out.push_str(syn.mul());
                out.push_str(&w);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn syntax(doc: &PresentationDoc, latex: bool) -> Syntax {
    Syntax {
        n: doc.n as u32,
        latex,
        small: matches!(doc.ring, CoeffRing::Cyclotomic { .. }),
    }
}

pub fn relation_text(doc: &PresentationDoc, r: &Relation) -> String {
    let syn = syntax(doc, false);
    format!("{} = {}", side(&r.lhs, syn), side(&r.rhs, syn))
}

pub fn relation_latex(doc: &PresentationDoc, r: &Relation) -> String {
    let syn = syntax(doc, true);
    format!("{} &= {}", side(&r.lhs, syn), side(&r.rhs, syn))
}

fn label(r: &Relation) -> String {
    if r.indices.is_empty() {
        r.tag.clone()
    } else {
        let ix: Vec<String> = r.indices.iter().map(|i| i.to_string()).collect();
        format!("{} ({})", r.tag, ix.join(","))
    }
}

impl PresentationDoc {
    pub fn to_text(&self) -> String {
        let syn = syntax(self, false);
        let mut out = format!("# {}", self.algebra.title(self.n));
        if let Some(ell) = self.ell {
            out.push_str(&format!(", ε a primitive root of unity of order {ell}"));
        }
        out.push('\n');
        let gens: Vec<String> = self.generators.iter().map(|&s| symbol(s, syn)).collect();
        out.push_str(&format!("# generators: {}\n", gens.join(", ")));
        out.push_str(&format!("# relations: {}\n", self.relations.len()));
        for r in &self.relations {
            out.push_str(&format!("[{}] {}\n", label(r), relation_text(self, r)));
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let syn = syntax(self, true);
        let title = self.algebra.title(self.n).replace('ε', "\\epsilon");
        let mut out = format!("% {title}\n");
        let gens: Vec<String> = self.generators.iter().map(|&s| symbol(s, syn)).collect();
        out.push_str(&format!("% generators: ${}$\n", gens.join(", ")));
        out.push_str("\\begin{align*}\n");
        let lines: Vec<String> = self
            .relations
            .iter()
            .map(|r| format!("{} && \\text{{{}}}", relation_latex(self, r), label(r)))
            .collect();
        out.push_str(&lines.join(" \\\\\n"));
        out.push_str("\n\\end{align*}\n");
        out
    }
}
