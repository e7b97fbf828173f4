//! Compositions and the index-tuple sets `V^k(λ)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonempty sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition { parts })
    }

    /// The one-part composition `(n)`.
    pub fn single(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `λ_{-i}`, the `i`-th part from the end (1-based).
    pub fn part_from_end(&self, i: usize) -> u32 {
        self.parts[self.parts.len() - i]
    }

    pub fn last_part(&self) -> u32 {
        *self.parts.last().expect("nonempty")
    }

    /// `λ_{[1,-2]}`: drops the last part.
    pub fn truncate(&self) -> Result<Self> {
        if self.parts.len() < 2 {
            return Err(Error::TruncateSinglePart);
        }
        Ok(Composition {
            parts: self.parts[..self.parts.len() - 1].to_vec(),
        })
    }

    /// 1-based positions of the entries fixed to `k` in a tuple of `V^k(λ)`.
    pub fn boundary_positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 1usize;
        out.push(acc);
        for &p in &self.parts {
            acc += p as usize;
            out.push(acc);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad composition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// All `2^{N-1}` compositions of `n`. Mask bit `i` set means a cut after
/// position `i + 1`; masks are visited in ascending order.
pub fn compositions(n: u32) -> Result<Compositions> {
    if n == 0 {
        return Err(Error::NonPositiveWeight);
    }
    if n > 63 {
        return Err(Error::InvalidArgument(format!(
            "weight {n} too large to enumerate"
        )));
    }
    Ok(Compositions {
        n,
        mask: 0,
        end: 1u64 << (n - 1),
    })
}

pub struct Compositions {
    n: u32,
    mask: u64,
    end: u64,
}

impl Iterator for Compositions {
    type Item = Composition;
    fn next(&mut self) -> Option<Composition> {
        if self.mask >= self.end {
            return None;
        }
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..self.n - 1 {
            if self.mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        self.mask += 1;
        Some(Composition { parts })
    }
}

/// A tuple `(β_1, ..., β_{N+1})` of indices in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexTuple(pub Vec<u8>);

impl IndexTuple {
    /// Membership predicate for `V^k(λ)`.
    pub fn is_in_v_set(&self, k: u8, lambda: &Composition) -> bool {
        let n = lambda.weight() as usize;
        if self.0.len() != n + 1 {
            return false;
        }
        let fixed = lambda.boundary_positions();
        self.0.iter().enumerate().all(|(i, &b)| {
            if fixed.contains(&(i + 1)) {
                b == k
            } else {
                b >= 1 && b < k
            }
        })
    }

    /// Consecutive pairs `(β_i, β_{i+1})`, read as generators `u^{β_i}_{β_{i+1}}`.
    pub fn pairs(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Streams `V^k(λ)` in odometer order (last free position varies fastest).
pub fn v_set(k: u8, lambda: &Composition) -> VSet {
    let len = lambda.weight() as usize + 1;
    let fixed = lambda.boundary_positions();
    let free: Vec<usize> = (1..=len)
        .filter(|p| !fixed.contains(p))
        .map(|p| p - 1)
        .collect();
    let mut cur = vec![k; len];
    let exhausted = k <= 1 && !free.is_empty();
    for &f in &free {
        cur[f] = 1;
    }
    VSet {
        k,
        free,
        cur,
        done: exhausted,
    }
}

pub struct VSet {
    k: u8,
    free: Vec<usize>,
    cur: Vec<u8>,
    done: bool,
}

impl Iterator for VSet {
    type Item = IndexTuple;
    fn next(&mut self) -> Option<IndexTuple> {
        if self.done {
            return None;
        }
        let out = IndexTuple(self.cur.clone());
        let mut advanced = false;
        for &f in self.free.iter().rev() {
            if self.cur[f] + 1 < self.k {
                self.cur[f] += 1;
                advanced = true;
                break;
            }
            self.cur[f] = 1;
        }
        if !advanced {
            self.done = true;
        }
        Some(out)
    }
}

/// `(k-1)^{N-|λ|}` without enumerating.
pub fn v_set_size(k: u8, lambda: &Composition) -> u128 {
    let free = lambda.weight() as usize - lambda.length();
    (k.saturating_sub(1) as u128).pow(free as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_enumeration() {
        let all: Vec<_> = compositions(3).unwrap().collect();
        assert_eq!(all, vec![c(&[3]), c(&[1, 2]), c(&[2, 1]), c(&[1, 1, 1])]);
        assert_eq!(compositions(6).unwrap().count(), 32);
        assert!(compositions(0).is_err());
    }

    #[test]
    fn accessors() {
        let l = c(&[3, 1, 2]);
        assert_eq!((l.length(), l.weight()), (3, 6));
        assert_eq!(l.truncate().unwrap(), c(&[3, 1]));
        assert_eq!(l.last_part(), 2);
        assert_eq!(l.part_from_end(3), 3);
        assert_eq!(c(&[5]).truncate(), Err(Error::TruncateSinglePart));
        assert_eq!(Composition::new(vec![]), Err(Error::EmptyComposition));
    }

    #[test]
    fn parse_and_print() {
        let l: Composition = "3,1,2".parse().unwrap();
        assert_eq!(l, c(&[3, 1, 2]));
        assert_eq!(l.to_string(), "3,1,2");
        assert!("3,,1".parse::<Composition>().is_err());
        assert!("0,1".parse::<Composition>().is_err());
    }

    #[test]
    fn v_set_example() {
        let l = c(&[3, 1, 2]);
        let all: Vec<_> = v_set(4, &l).collect();
        assert_eq!(all.len(), 27);
        assert!(all.contains(&IndexTuple(vec![4, 2, 3, 4, 4, 1, 4])));
        assert!(all.iter().all(|t| t.is_in_v_set(4, &l)));
        assert_eq!(
            v_set(3, &c(&[1, 1, 1])).collect::<Vec<_>>(),
            vec![IndexTuple(vec![3; 4])]
        );
    }

    #[test]
    fn k_one_is_empty_unless_all_ones() {
        assert_eq!(v_set(1, &c(&[2, 1])).count(), 0);
        assert_eq!(v_set(1, &c(&[1, 1])).count(), 1);
    }

    #[test]
    fn v2_singletons() {
        for n in 1..=7 {
            for l in compositions(n).unwrap() {
                let all: Vec<_> = v_set(2, &l).collect();
                let mut expect = vec![2u8];
                for &p in l.parts() {
                    expect.extend(std::iter::repeat_n(1, p as usize - 1));
                    expect.push(2);
                }
                assert_eq!(all, vec![IndexTuple(expect)]);
            }
        }
    }
}
