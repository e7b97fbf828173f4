//! q-integers and the composition scalars σ_q(λ).

use super::integer::Integer;
use super::laurent::LaurentInt;
use crate::combinatorics::Composition;

/// `[k]_q = q^{k-1} + q^{k-3} + ... + q^{1-k}` with `q = v^n`.
pub fn q_int(k: u32, n: u32) -> LaurentInt {
    LaurentInt::from_terms((0..k).map(|i| ((k as i32 - 1 - 2 * i as i32) * n as i32, Integer::ONE)))
}

pub fn q_factorial(k: u32, n: u32) -> LaurentInt {
    (1..=k).fold(LaurentInt::one(), |acc, i| acc * q_int(i, n))
}

/// `1 - q^{-2m}`.
pub fn one_minus_q_neg2(m: u32, n: u32) -> LaurentInt {
    LaurentInt::one() - LaurentInt::q_pow(n, -2 * m as i32)
}

/// The factors of σ_q(λ) produced by peeling parts from the end.
pub fn sigma_factors(lambda: &Composition) -> Vec<u32> {
    let mut out = Vec::new();
    let mut weight = lambda.weight();
    for &part in lambda.parts().iter().rev() {
        // A last part of size p contributes 1 - q^{-2(W-j)} for j < p.
        for j in 1..part {
            out.push(weight - j);
        }
        weight -= part;
    }
    out.sort_unstable();
    out
}

/// σ_q(λ), computed by the part-peeling recursion so no division occurs.
pub fn sigma_q(lambda: &Composition, n: u32) -> LaurentInt {
    sigma_factors(lambda)
        .into_iter()
        .fold(LaurentInt::one(), |acc, m| acc * one_minus_q_neg2(m, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions;

    #[test]
    fn small_q_integers() {
        assert!(q_int(0, 1).is_zero());
        assert!(q_int(1, 3).is_one());
        let expect = LaurentInt::q_pow(2, 2) + LaurentInt::one() + LaurentInt::q_pow(2, -2);
        assert_eq!(q_int(3, 2), expect);
        assert_eq!(q_factorial(3, 1), q_int(3, 1) * q_int(2, 1));
    }

    #[test]
    fn sigma_example() {
        let l: Composition = "3,1,2".parse().unwrap();
        let expect = one_minus_q_neg2(1, 1) * one_minus_q_neg2(2, 1) * one_minus_q_neg2(5, 1);
        assert_eq!(sigma_q(&l, 1), expect);
        assert_eq!(sigma_factors(&l), vec![1, 2, 5]);
        let ones = Composition::new(vec![1; 7]).unwrap();
        assert!(sigma_q(&ones, 2).is_one());
    }

    #[test]
    fn recursion_holds() {
        for big in 1..=8 {
            for l in compositions(big).unwrap() {
                let Ok(t) = l.truncate() else {
                    let base =
                        (1..big).fold(LaurentInt::one(), |a, j| a * one_minus_q_neg2(big - j, 1));
                    assert_eq!(sigma_q(&l, 1), base);
                    continue;
                };
                let head = (1..l.last_part())
                    .fold(LaurentInt::one(), |a, j| a * one_minus_q_neg2(big - j, 1));
                assert_eq!(sigma_q(&l, 1), head * sigma_q(&t, 1));
            }
        }
    }
}
