//! Sparse Laurent polynomials in `v` with exact integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::integer::Integer;

/// An element of `Z[v, v^-1]`. Terms are kept sorted by ascending exponent
/// and no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    terms: Vec<(i32, Integer)>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        LaurentInt { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Integer::ONE, 0)
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        Self::monomial(c.into(), 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: Integer, e: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentInt {
                terms: vec![(e, c)],
            }
        }
    }

    pub fn v_pow(e: i32) -> Self {
        Self::monomial(Integer::ONE, e)
    }

    /// `q^k` where `q = v^n`.
    pub fn q_pow(n: u32, k: i32) -> Self {
        Self::v_pow(n as i32 * k)
    }

    /// `q - q^-1`.
    pub fn q_minus_qinv(n: u32) -> Self {
        Self::q_pow(n, 1) - Self::q_pow(n, -1)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i32, Integer)>>(it: I) -> Self {
        let mut v: Vec<(i32, Integer)> = it.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, Integer)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = &*lc + &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentInt { terms: out }
    }

    pub fn terms(&self) -> &[(i32, Integer)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    pub fn coeff(&self, e: i32) -> Integer {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Integer::ZERO,
        }
    }

    /// `Some((e, s))` when `self = s * v^e` with `s = ±1`, i.e. when `self` is a unit.
    pub fn as_unit(&self) -> Option<(i32, i64)> {
        match self.terms.as_slice() {
            [(e, Integer::Small(s))] if *s == 1 || *s == -1 => Some((*e, *s)),
            _ => None,
        }
    }

    /// Inverse of a unit, `None` otherwise.
    pub fn unit_inverse(&self) -> Option<Self> {
        self.as_unit()
            .map(|(e, s)| Self::monomial(Integer::from(s), -e))
    }

    /// Multiplies by `v^e`.
    pub fn shift(&self, e: i32) -> Self {
        LaurentInt {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Integer) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentInt {
            terms: self.terms.iter().map(|(x, d)| (*x, d * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// True when every exponent is a multiple of `n`, i.e. the value lies in `Z[q, q^-1]`.
    pub fn is_q_expressible(&self, n: u32) -> bool {
        self.terms.iter().all(|(e, _)| e.rem_euclid(n as i32) == 0)
    }

    /// Substitutes `v -> v^k` (for `k > 0`).
    pub fn substitute_power(&self, k: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// Value at `v = x` modulo the prime `p`; `x` must be nonzero mod `p`.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let xinv = pow_mod(x, p - 2, p);
        let mut acc: u128 = 0;
        for (e, c) in &self.terms {
            let base = if *e >= 0 {
                pow_mod(x, *e as u64, p)
            } else {
                pow_mod(xinv, (-*e) as u64, p)
            };
            acc = (acc + base as u128 * c.rem_euclid_u64(p) as u128) % p as u128;
        }
        acc as u64
    }

    /// Renders with `q` when possible, falling back to `v`.
    pub fn display(&self, n: u32) -> Rendered<'_> {
        Rendered {
            poly: self,
            n,
            var: "q",
            latex: false,
        }
    }

    /// Renders in `q` with a custom symbol and syntax.
    pub fn render(&self, n: u32, var: &str, latex: bool) -> String {
        Rendered {
            poly: self,
            n,
            var,
            latex,
        }
        .to_string()
    }

    pub fn to_json(&self, n: u32) -> LaurentJson {
        LaurentJson {
            var: "v".into(),
            n,
            terms: self.terms.clone(),
        }
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r: u64 = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Wire form of a coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub var: String,
    pub n: u32,
    pub terms: Vec<(i32, Integer)>,
}

impl LaurentJson {
    pub fn into_laurent(self) -> LaurentInt {
        LaurentInt::from_terms(self.terms)
    }
}

fn merge(a: &LaurentInt, b: &LaurentInt, negate_b: bool) -> LaurentInt {
    let (x, y) = (&a.terms, &b.terms);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &Integer| if negate_b { -c } else { c.clone() };
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => {
                out.push(x[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((y[j].0, nb(&y[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b {
                    &x[i].1 - &y[j].1
                } else {
                    &x[i].1 + &y[j].1
                };
                if !c.is_zero() {
                    out.push((x[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(x[i..].iter().cloned());
    out.extend(y[j..].iter().map(|(e, c)| (*e, nb(c))));
    LaurentInt { terms: out }
}

impl<'a> Add<&'a LaurentInt> for &'a LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        merge(self, rhs, false)
    }
}

impl<'a> Sub<&'a LaurentInt> for &'a LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        merge(self, rhs, true)
    }
}

impl<'a> Mul<&'a LaurentInt> for &'a LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        if self.is_zero() || rhs.is_zero() {
            return LaurentInt::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return LaurentInt {
                terms: rhs.terms.iter().map(|(f, d)| (e + f, c * d)).collect(),
            };
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return LaurentInt {
                terms: self.terms.iter().map(|(f, d)| (e + f, d * c)).collect(),
            };
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let span = (hi - lo + 1) as usize;
        if span <= 4 * self.terms.len() * rhs.terms.len() + 64 {
            let mut dense = vec![Integer::ZERO; span];
            for (e, c) in &self.terms {
                for (f, d) in &rhs.terms {
                    let slot = &mut dense[(e + f - lo) as usize];
                    *slot = &*slot + &(c * d);
                }
            }
            let terms = dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect();
            LaurentInt { terms }
        } else {
            LaurentInt::from_terms(
                self.terms
                    .iter()
                    .flat_map(|(e, c)| rhs.terms.iter().map(move |(f, d)| (e + f, c * d))),
            )
        }
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        LaurentInt {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentInt> for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: LaurentInt) -> LaurentInt {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentInt> for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: &LaurentInt) -> LaurentInt {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentInt> for LaurentInt {
    fn add_assign(&mut self, rhs: &LaurentInt) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentInt> for LaurentInt {
    fn sub_assign(&mut self, rhs: &LaurentInt) {
        *self = &*self - rhs;
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(1))
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(1))
    }
}

pub struct Rendered<'a> {
    poly: &'a LaurentInt,
    n: u32,
    var: &'a str,
    latex: bool,
}

impl fmt::Display for Rendered<'_> {
    // Highest power first, so that `1 - q^-2` reads as in print.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let in_q = self.poly.is_q_expressible(self.n);
        let (var, div) = if in_q {
            (self.var, self.n as i32)
        } else {
            ("v", 1)
        };
        for (idx, (e, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let k = e / div;
            if k == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            match (k, self.latex) {
                (1, _) => f.write_str(var)?,
                (_, true) => write!(f, "{var}^{{{k}}}")?,
                (_, false) => write!(f, "{var}^{k}")?,
            }
        }
        Ok(())
    }
}
