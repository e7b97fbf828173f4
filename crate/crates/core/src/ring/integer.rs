//! Machine-word integers that promote to arbitrary precision on overflow.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact integer. Values that fit in an `i64` are always stored as `Small`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Large(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(s) => Integer::Small(s),
            None => Integer::Large(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(s) => BigInt::from(*s),
            Integer::Large(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(s) => *s < 0,
            Integer::Large(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(s) => match s.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::Large(BigInt::from(*s).abs()),
            },
            Integer::Large(b) => Integer::from_big(b.abs()),
        }
    }

    /// Residue in `0..p`.
    pub fn rem_euclid_u64(&self, p: u64) -> u64 {
        match self {
            Integer::Small(s) => (*s as i128).rem_euclid(p as i128) as u64,
            Integer::Large(b) => {
                let r = b % BigInt::from(p);
                let r = if r.is_negative() {
                    r + BigInt::from(p)
                } else {
                    r
                };
                r.to_u64().expect("residue fits")
            }
        }
    }

    pub fn pow(&self, e: u32) -> Integer {
        let mut acc = Integer::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn checked_div_exact(&self, d: &Integer) -> Option<Integer> {
        if d.is_zero() {
            return None;
        }
        if let (Integer::Small(a), Integer::Small(b)) = (self, d) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (r == 0).then_some(Integer::Small(q));
            }
        }
        let (a, b) = (self.to_big(), d.to_big());
        let r = &a % &b;
        r.is_zero().then(|| Integer::from_big(a / b))
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Integer::from_big(v)
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Integer> for &'a Integer {
    type Output = Integer;
    fn add(self, rhs: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(c) = a.checked_add(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Integer> for &'a Integer {
    type Output = Integer;
    fn sub(self, rhs: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(c) = a.checked_sub(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_big() - rhs.to_big())
    }
}

impl<'a> Mul<&'a Integer> for &'a Integer {
    type Output = Integer;
    fn mul(self, rhs: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(c) = a.checked_mul(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_big() * rhs.to_big())
    }
}

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match self {
            Integer::Small(a) => match a.checked_neg() {
                Some(c) => Integer::Small(c),
                None => Integer::Large(-BigInt::from(*a)),
            },
            Integer::Large(b) => Integer::from_big(-b),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Integer> for Integer {
            type Output = Integer;
            fn $m(self, rhs: Integer) -> Integer {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::ONE
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(s) => write!(f, "{s}"),
            Integer::Large(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Small values serialize as JSON numbers, large ones as decimal strings.
impl Serialize for Integer {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Integer::Small(v) => s.serialize_i64(*v),
            Integer::Large(b) => s.serialize_str(&b.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Integer {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Integer;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Integer, E> {
                Ok(Integer::Small(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Integer, E> {
                Ok(Integer::from_big(BigInt::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Integer, E> {
                v.parse::<BigInt>()
                    .map(Integer::from_big)
                    .map_err(|_| E::custom(format!("bad integer {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}
