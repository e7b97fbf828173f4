//! Reduction modulo `Φ_ℓ(q)` with `q = v^n`.

use super::integer::Integer;
use super::laurent::LaurentInt;
use crate::error::{Error, Result};

/// Ascending integer coefficients of the `ℓ`-th cyclotomic polynomial.
pub fn cyclotomic_phi(ell: u32) -> Vec<Integer> {
    assert!(ell >= 1, "cyclotomic index must be positive");
    let mut num = vec![Integer::ZERO; ell as usize + 1];
    num[0] = Integer::from(-1);
    num[ell as usize] = Integer::ONE;
    for d in (1..ell).filter(|d| ell.is_multiple_of(*d)) {
        num = poly_div_exact(&num, &cyclotomic_phi(d));
    }
    num
}

// Exact quotient by a monic divisor.
fn poly_div_exact(num: &[Integer], den: &[Integer]) -> Vec<Integer> {
    let (q, r) = poly_divrem_monic(num, den);
    debug_assert!(r.iter().all(Integer::is_zero));
    q
}

fn poly_divrem_monic(num: &[Integer], den: &[Integer]) -> (Vec<Integer>, Vec<Integer>) {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut r = num.to_vec();
    if r.len() <= dd {
        return (Vec::new(), r);
    }
    let mut q = vec![Integer::ZERO; r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            r[i + j] = &r[i + j] - &(&c * dj);
        }
        q[i] = c;
    }
    r.truncate(dd);
    (q, r)
}

fn euler_phi(mut m: u32) -> u32 {
    let mut out = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// Specialization data for a primitive `ℓ`-th root of unity `ε = q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCtx {
    ell: u32,
    n: u32,
    /// `Φ_ℓ(v^n)` as an ordinary polynomial in `v`.
    phi: LaurentInt,
}

impl CyclotomicCtx {
    pub fn new(ell: u32, n: u32) -> Result<Self> {
        if ell < 3 || ell.is_multiple_of(2) {
            return Err(Error::BadOrder(ell));
        }
        if n == 0 {
            return Err(Error::BadSize);
        }
        let phi = LaurentInt::from_terms(
            cyclotomic_phi(ell)
                .into_iter()
                .enumerate()
                .map(|(i, c)| (i as i32 * n as i32, c)),
        );
        Ok(CyclotomicCtx { ell, n, phi })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn phi(&self) -> &LaurentInt {
        &self.phi
    }

    /// Degree `n·φ(ℓ)` of `Φ_ℓ(v^n)`; canonical forms have smaller degree.
    pub fn degree(&self) -> u32 {
        self.n * euler_phi(self.ell)
    }

    /// Canonical representative of degree below [`Self::degree`].
    ///
    /// `Φ_ℓ(q)` divides `q^ℓ - 1`, so `v^{nℓ} ≡ 1` and every exponent can be
    /// folded into `0..nℓ` before a single monic division.
    pub fn reduce(&self, f: &LaurentInt) -> LaurentInt {
        let period = (self.n * self.ell) as i32;
        let mut dense = vec![Integer::ZERO; period as usize];
        for (e, c) in f.terms() {
            let slot = &mut dense[e.rem_euclid(period) as usize];
            *slot = &*slot + c;
        }
        let den: Vec<Integer> = (0..=self.degree() as i32)
            .map(|e| self.phi.coeff(e))
            .collect();
        let (_, r) = poly_divrem_monic(&dense, &den);
        LaurentInt::from_terms(r.into_iter().enumerate().map(|(i, c)| (i as i32, c)))
    }

    pub fn is_zero(&self, f: &LaurentInt) -> bool {
        self.reduce(f).is_zero()
    }
}

/// True iff `f` vanishes at `q = ε`, i.e. lies in the ideal generated by `Φ_ℓ(v^n)`.
pub fn is_zero_mod_cyclotomic(f: &LaurentInt, ctx: &CyclotomicCtx) -> bool {
    ctx.is_zero(f)
}
