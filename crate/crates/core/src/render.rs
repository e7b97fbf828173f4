//! Shared text rendering for linear combinations.

use crate::ring::LaurentInt;

/// Syntax choices for coefficients and products.
#[derive(Clone, Copy, Debug)]
pub struct Style<'a> {
    pub n: u32,
    pub var: &'a str,
    pub latex: bool,
}

impl<'a> Style<'a> {
    pub fn text(n: u32) -> Self {
        Style {
            n,
            var: "q",
            latex: false,
        }
    }

    fn mul(&self) -> &'static str {
        if self.latex {
            " "
        } else {
            "·"
        }
    }
}

/// Renders `Σ c·w` with signs pulled out of monomial coefficients.
pub fn lincomb<'b, I>(items: I, style: Style<'_>) -> String
where
    I: IntoIterator<Item = (String, &'b LaurentInt)>,
{
    let mut out = String::new();
    for (idx, (word, c)) in items.into_iter().enumerate() {
        let (neg, body) = coeff_body(c, style);
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        match (body, word == "1") {
            (None, _) => out.push_str(&word),
            (Some(b), true) => out.push_str(&b),
            (Some(b), false) => {
                out.push_str(&b);
                out.push_str(style.mul());
                out.push_str(&word);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Splits a coefficient into a sign and a printable magnitude (`None` for ±1).
pub fn coeff_body(c: &LaurentInt, style: Style<'_>) -> (bool, Option<String>) {
    if c.len() == 1 {
        let neg = c.terms()[0].1.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if abs.is_one() {
            return (neg, None);
        }
        return (neg, Some(abs.render(style.n, style.var, style.latex)));
    }
    let s = c.render(style.n, style.var, style.latex);
    if style.latex {
        (false, Some(format!("\\left({s}\\right)")))
    } else {
        (false, Some(format!("({s})")))
    }
}
