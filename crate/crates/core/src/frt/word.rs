//! Generators `x^i_j`, words, and their text syntax.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// The generator `x^row_col` (1-based). The derived order is row-major.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub row: u8,
    pub col: u8,
}

impl Gen {
    pub const fn new(row: u8, col: u8) -> Self {
        Gen { row, col }
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }

    pub fn check(self, n: u8) -> Result<Self> {
        if self.row == 0 || self.col == 0 || self.row > n || self.col > n {
            Err(Error::IndexOutOfRange(self.row, self.col, n))
        } else {
            Ok(self)
        }
    }

    /// All `n²` generators in row-major order.
    pub fn all(n: u8) -> impl Iterator<Item = Gen> {
        (1..=n).flat_map(move |i| (1..=n).map(move |j| Gen::new(i, j)))
    }
}

pub type Word = SmallVec<[Gen; 8]>;

pub fn is_normal(w: &[Gen]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

/// All PBW-normal words of length `d` over `n²` generators, in lexicographic order.
pub fn normal_words(n: u8, d: usize) -> Vec<Word> {
    let gens: Vec<Gen> = Gen::all(n).collect();
    let mut out = vec![Word::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &out {
            let start = w
                .last()
                .map_or(0, |l| gens.iter().position(|g| g == l).unwrap());
            for g in &gens[start..] {
                let mut v = w.clone();
                v.push(*g);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Writes `x[1,2]·x[2,1]`; the empty word is `1`.
pub fn format_word(w: &[Gen], letter: char) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = w
        .iter()
        .map(|g| format!("{letter}[{},{}]", g.row, g.col))
        .collect();
    parts.join("·")
}

/// LaTeX form, e.g. `u^{1}_{2} \cdot u^{2}_{1}`; repeated letters stay explicit.
pub fn latex_word(w: &[Gen], letter: char, sep: &str) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = w
        .iter()
        .map(|g| format!("{letter}^{{{}}}_{{{}}}", g.row, g.col))
        .collect();
    parts.join(sep)
}

/// Parses `x[i,j]` factors separated by `·`, `*` or whitespace, each with an
/// optional `^k`. The letter may be `x` or `u`; `1` denotes the empty word.
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s == "1" {
        return Ok(Word::new());
    }
    let mut out = Word::new();
    let normalized = s.replace(['·', '⋆'], "*");
    for tok in normalized
        .split(|c: char| c == '*' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let bad = || Error::Parse(format!("bad factor {tok:?}"));
        let rest = tok
            .strip_prefix('x')
            .or_else(|| tok.strip_prefix('u'))
            .ok_or_else(bad)?;
        let rest = rest.strip_prefix('[').ok_or_else(bad)?;
        let close = rest.find(']').ok_or_else(bad)?;
        let (inner, tail) = (&rest[..close], &rest[close + 1..]);
        let mut it = inner.split(',').map(|p| p.trim().parse::<u8>());
        let (Some(Ok(i)), Some(Ok(j)), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad());
        };
        if i == 0 || j == 0 {
            return Err(Error::Parse(format!("indices start at 1 in {tok:?}")));
        }
        let power = if tail.is_empty() {
            1
        } else {
            tail.strip_prefix('^')
                .and_then(|p| p.parse::<usize>().ok())
                .ok_or_else(bad)?
        };
        out.extend(std::iter::repeat_n(Gen::new(i, j), power));
    }
    if out.is_empty() {
        return Err(Error::Parse("empty word".into()));
    }
    Ok(out)
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::smallvec;

    #[test]
    fn parse_forms() {
        let w = parse_word("x[1,1]^3").unwrap();
        assert_eq!(w.as_slice(), &[Gen::new(1, 1); 3]);
        let w = parse_word("x[1,2]·x[2,1] * u[2,2]").unwrap();
        assert_eq!(
            w.as_slice(),
            &[Gen::new(1, 2), Gen::new(2, 1), Gen::new(2, 2)]
        );
        assert!(parse_word("1").unwrap().is_empty());
        assert!(parse_word("y[1,1]").is_err());
        assert!(parse_word("x[1,]").is_err());
        assert!(parse_word("x[1,1]^").is_err());
    }

    #[test]
    fn format_round_trip() {
        let w: Word = smallvec![Gen::new(1, 2), Gen::new(2, 1)];
        let s = format_word(&w, 'x');
        assert_eq!(s, "x[1,2]·x[2,1]");
        assert_eq!(parse_word(&s).unwrap(), w);
    }

    #[test]
    fn normal_word_counts() {
        // Multisets of size d from n² letters.
        assert_eq!(normal_words(2, 2).len(), 10);
        assert_eq!(normal_words(3, 3).len(), 165);
        assert!(normal_words(2, 3).iter().all(|w| is_normal(w)));
    }
}
