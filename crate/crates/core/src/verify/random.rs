//! Seeded generators for randomized checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::frt::{Element, FrtAlgebra, Gen, Word};
use crate::ring::{Integer, LaurentInt};

/// A generator seeded from the run seed and a check key, so each check sees
/// the same stream regardless of scheduling.
pub fn rng_for(seed: u64, key: &str) -> ChaCha8Rng {
    // FNV-1a over the key, folded into the seed.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in key.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// Up to four terms, exponents in `[-6, 6]`, coefficients in `[-9, 9]`.
pub fn random_laurent(rng: &mut impl Rng) -> LaurentInt {
    let len = rng.gen_range(0..=4);
    LaurentInt::from_terms((0..len).map(|_| {
        (
            rng.gen_range(-6..=6),
            Integer::from(rng.gen_range(-9i64..=9)),
        )
    }))
}

pub fn random_gen(rng: &mut impl Rng, n: u8) -> Gen {
    Gen::new(rng.gen_range(1..=n), rng.gen_range(1..=n))
}

pub fn random_word(rng: &mut impl Rng, n: u8, len: usize) -> Word {
    (0..len).map(|_| random_gen(rng, n)).collect()
}

/// A normalized element with up to three terms of degree at most `max_degree`.
pub fn random_element(rng: &mut impl Rng, alg: &FrtAlgebra, max_degree: usize) -> Element {
    let n = alg.n();
    let mut out = Element::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(0..=max_degree);
        let w = random_word(rng, n, d);
        let mut c = random_laurent(rng);
        if c.is_zero() {
            c = LaurentInt::one();
        }
        out = out.add(&alg.normal_form(&w, &c).expect("indices in range"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let draw = |key: &str| -> Vec<u32> {
            let mut r = rng_for(7, key);
            (0..5).map(|_| r.gen()).collect()
        };
        assert_eq!(draw("x"), draw("x"));
        assert_ne!(draw("x"), draw("y"));
        let alg = FrtAlgebra::new(2).unwrap();
        let e1 = random_element(&mut rng_for(7, "x"), &alg, 3);
        let e2 = random_element(&mut rng_for(7, "x"), &alg, 3);
        assert_eq!(e1, e2);
    }
}
