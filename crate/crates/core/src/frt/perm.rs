//! Permutations of `1..=n` and their statistics.

use itertools::Itertools;

/// All permutations of `1..=n` in lexicographic order, one-line notation.
pub fn permutations(n: u8) -> Vec<Vec<u8>> {
    (1..=n).permutations(n as usize).collect()
}

/// Number of inversions `l(σ)`.
pub fn inv_count(sigma: &[u8]) -> u32 {
    let mut c = 0;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                c += 1;
            }
        }
    }
    c
}

/// Number of exceedances `e(σ) = #{i : σ(i) > i}`.
pub fn exceedance(sigma: &[u8]) -> u32 {
    sigma
        .iter()
        .enumerate()
        .filter(|(i, &s)| s as usize > i + 1)
        .count() as u32
}

/// Number of deficiencies `#{i : σ(i) < i}`, the exceedance count of `σ⁻¹`.
pub fn deficiency(sigma: &[u8]) -> u32 {
    sigma
        .iter()
        .enumerate()
        .filter(|(i, &s)| (s as usize) < i + 1)
        .count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics() {
        assert_eq!(inv_count(&[3, 2, 1]), 3);
        assert_eq!(exceedance(&[3, 2, 1]), 1);
        assert_eq!(inv_count(&[1, 2, 3]), 0);
        assert_eq!(exceedance(&[2, 3, 1]), 2);
        assert_eq!(deficiency(&[2, 3, 1]), 1);
        assert_eq!(deficiency(&[3, 1, 2]), 2);
        assert_eq!(permutations(4).len(), 24);
        let total: u32 = permutations(4).iter().map(|s| inv_count(s)).sum();
        assert_eq!(total, 24 * 6 / 2);
    }
}
