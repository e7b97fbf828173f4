//! The dual R-matrix pairing and its two inverses, evaluated on words.

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::frt::{Element, FrtAlgebra, Gen, Word};
use crate::memo::Memo;
use crate::ring::LaurentInt;

/// Two ways of writing the commutation rule of a dual quasitriangular form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CommutationForm {
    /// `Σ b₁a₁ R(a₂ ⊗ b₂) = Σ R(a₁ ⊗ b₁) a₂b₂`.
    Standard,
    /// `Σ R(a₁ ⊗ b₁) b₂a₂ = Σ a₁b₁ R(a₂ ⊗ b₂)`; fails for this `R`.
    Swapped,
}

/// Which bilinear form to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    /// `R`.
    R,
    /// The convolution inverse `R⁻¹ = R∘(S⊗id)`.
    Rinv,
    /// The second-slot inverse `R̃ = R∘(id⊗S)`.
    Rtilde,
}

/// Candidate characterizations of `R̃` on generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RtildeConvention {
    /// `Σ R(x^i_m ⊗ x^p_l) R̃(x^m_j ⊗ x^k_p) = δ^i_j δ^k_l`: the inverse of `R`
    /// in `Hom(A ⊗ A^cop, k)`. This is the one that reproduces the braided relations.
    Cop,
    /// `Σ R̃(x^i_m ⊗ x^k_p) R(x^m_j ⊗ x^p_l) = δ^i_j δ^k_l`. Kept as a witness: it
    /// merely reproduces `R⁻¹`.
    Plain,
}

/// Values `T(x^i_j ⊗ x^k_l)` for `1 ≤ i,j,k,l ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenTable {
    n: u8,
    data: Vec<LaurentInt>,
}

impl GenTable {
    fn zeros(n: u8) -> Self {
        GenTable {
            n,
            data: vec![LaurentInt::zero(); (n as usize).pow(4)],
        }
    }

    fn idx(&self, i: u8, j: u8, k: u8, l: u8) -> usize {
        let n = self.n as usize;
        (((i as usize - 1) * n + (j as usize - 1)) * n + (k as usize - 1)) * n + (l as usize - 1)
    }

    pub fn get(&self, i: u8, j: u8, k: u8, l: u8) -> &LaurentInt {
        &self.data[self.idx(i, j, k, l)]
    }

    fn set(&mut self, i: u8, j: u8, k: u8, l: u8, v: LaurentInt) {
        let x = self.idx(i, j, k, l);
        self.data[x] = v;
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Nonzero entries as `(first, second, value)`.
    pub fn nonzero(&self) -> Vec<(Gen, Gen, LaurentInt)> {
        let mut out = Vec::new();
        for a in Gen::all(self.n) {
            for b in Gen::all(self.n) {
                let v = self.get(a.row, a.col, b.row, b.col);
                if !v.is_zero() {
                    out.push((a, b, v.clone()));
                }
            }
        }
        out
    }

    /// Rows indexed by `(i,j)` and columns by `(k,l)`, both row-major.
    pub fn as_matrix(&self) -> Vec<Vec<LaurentInt>> {
        Gen::all(self.n)
            .map(|a| {
                Gen::all(self.n)
                    .map(|b| self.get(a.row, a.col, b.row, b.col).clone())
                    .collect()
            })
            .collect()
    }
}

fn delta(a: u8, b: u8) -> bool {
    a == b
}

/// `R(x^i_j ⊗ x^k_l) = q^{-1/n}(δ^i_j δ^k_l q^{δ_jl} + (q - q⁻¹)[j > l] δ^i_l δ^k_j)`.
pub fn r_table(n: u8) -> GenTable {
    let nn = n as i32;
    let mut t = GenTable::zeros(n);
    for (i, j, k, l) in quads(n) {
        let mut v = LaurentInt::zero();
        if delta(i, j) && delta(k, l) {
            v = LaurentInt::v_pow(if j == l { nn } else { 0 });
        }
        if j > l && delta(i, l) && delta(k, j) {
            v = v + LaurentInt::q_minus_qinv(n as u32);
        }
        t.set(i, j, k, l, v.shift(-1));
    }
    t
}

/// `R⁻¹(x^i_j ⊗ x^k_l) = q^{1/n}(δ^i_j δ^k_l q^{-δ_jl} - (q - q⁻¹)[j > l] δ^i_l δ^k_j)`.
pub fn rinv_table(n: u8) -> GenTable {
    let nn = n as i32;
    let mut t = GenTable::zeros(n);
    for (i, j, k, l) in quads(n) {
        let mut v = LaurentInt::zero();
        if delta(i, j) && delta(k, l) {
            v = LaurentInt::v_pow(if j == l { -nn } else { 0 });
        }
        if j > l && delta(i, l) && delta(k, j) {
            v = v - LaurentInt::q_minus_qinv(n as u32);
        }
        t.set(i, j, k, l, v.shift(1));
    }
    t
}

fn quads(n: u8) -> impl Iterator<Item = (u8, u8, u8, u8)> {
    (1..=n).flat_map(move |i| {
        (1..=n).flat_map(move |j| (1..=n).flat_map(move |k| (1..=n).map(move |l| (i, j, k, l))))
    })
}

/// Inverts a square matrix over `Z[v, v^-1]` by Gauss-Jordan elimination,
/// pivoting only on units so every step stays exact.
pub fn invert_unit_pivot(m: &[Vec<LaurentInt>]) -> Result<Vec<Vec<LaurentInt>>> {
    let size = m.len();
    let mut a: Vec<Vec<LaurentInt>> = m.to_vec();
    let mut inv: Vec<Vec<LaurentInt>> = (0..size)
        .map(|r| {
            (0..size)
                .map(|c| {
                    if r == c {
                        LaurentInt::one()
                    } else {
                        LaurentInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..size {
        let Some(p) = (col..size).find(|&r| a[r][col].as_unit().is_some()) else {
            let what = if (col..size).all(|r| a[r][col].is_zero()) {
                "singular"
            } else {
                "no unit pivot"
            };
            return Err(Error::NonLaurent(format!("column {col}: {what}")));
        };
        a.swap(col, p);
        inv.swap(col, p);
        let pinv = a[col][col].unit_inverse().expect("unit");
        for c in 0..size {
            a[col][c] = &a[col][c] * &pinv;
            inv[col][c] = &inv[col][c] * &pinv;
        }
        for r in 0..size {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..size {
                let (x, y) = (&a[col][c] * &f, &inv[col][c] * &f);
                a[r][c] = &a[r][c] - &x;
                inv[r][c] = &inv[r][c] - &y;
            }
        }
    }
    Ok(inv)
}

/// Solves the generator-level identity characterizing `R̃` under a convention.
pub fn solve_rtilde(r: &GenTable, conv: RtildeConvention) -> Result<GenTable> {
    let n = r.n;
    let pairs: Vec<(u8, u8)> = (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).collect();
    let mut out = GenTable::zeros(n);
    match conv {
        RtildeConvention::Cop => {
            // M[(i,l),(m,p)] = R(i,m,p,l); R̃(m,j,k,p) = M⁻¹[(m,p),(j,k)].
            let m: Vec<Vec<LaurentInt>> = pairs
                .iter()
                .map(|&(i, l)| {
                    pairs
                        .iter()
                        .map(|&(mm, p)| r.get(i, mm, p, l).clone())
                        .collect()
                })
                .collect();
            let inv = invert_unit_pivot(&m)?;
            for (ri, &(mm, p)) in pairs.iter().enumerate() {
                for (ci, &(j, k)) in pairs.iter().enumerate() {
                    out.set(mm, j, k, p, inv[ri][ci].clone());
                }
            }
        }
        RtildeConvention::Plain => {
            // M[(m,p),(j,l)] = R(m,j,p,l); R̃(i,m,k,p) = M⁻¹[(i,k),(m,p)].
            let m: Vec<Vec<LaurentInt>> = pairs
                .iter()
                .map(|&(mm, p)| {
                    pairs
                        .iter()
                        .map(|&(j, l)| r.get(mm, j, p, l).clone())
                        .collect()
                })
                .collect();
            let inv = invert_unit_pivot(&m)?;
            for (ri, &(i, k)) in pairs.iter().enumerate() {
                for (ci, &(mm, p)) in pairs.iter().enumerate() {
                    out.set(i, mm, k, p, inv[ri][ci].clone());
                }
            }
        }
    }
    Ok(out)
}

/// The three generator tables plus the extension to words.
pub struct RForm {
    n: u8,
    r: GenTable,
    rinv: GenTable,
    rtilde: GenTable,
    nonzero: [Vec<(Gen, Gen, LaurentInt)>; 3],
    memo: Memo<(Variant, Word, Word), LaurentInt>,
}

pub fn build_rform(n: u8) -> Result<RForm> {
    RForm::with_convention(n, RtildeConvention::Cop)
}

fn counit(w: &[Gen]) -> LaurentInt {
    if w.iter().all(|g| g.is_diagonal()) {
        LaurentInt::one()
    } else {
        LaurentInt::zero()
    }
}

/// Raw `Δ^{k-1}` of a word: every assignment of intermediate indices.
pub(crate) fn raw_legs(n: u8, w: &[Gen], k: usize) -> Vec<SmallVec<[Word; 4]>> {
    let mut out: Vec<SmallVec<[Word; 4]>> = vec![SmallVec::from_elem(Word::new(), k)];
    for &g in w {
        let mut next = Vec::new();
        for legs in &out {
            let mut stack: Vec<(usize, u8, SmallVec<[Word; 4]>)> = vec![(0, g.row, legs.clone())];
            while let Some((leg, start, mut cur)) = stack.pop() {
                if leg == k - 1 {
                    cur[leg].push(Gen::new(start, g.col));
                    next.push(cur);
                    continue;
                }
                for m in 1..=n {
                    let mut c = cur.clone();
                    c[leg].push(Gen::new(start, m));
                    stack.push((leg + 1, m, c));
                }
            }
        }
        out = next;
    }
    out
}

impl RForm {
    pub fn with_convention(n: u8, conv: RtildeConvention) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadSize);
        }
        let r = r_table(n);
        let rinv = rinv_table(n);
        let rtilde = solve_rtilde(&r, conv)?;
        let nonzero = [r.nonzero(), rinv.nonzero(), rtilde.nonzero()];
        Ok(RForm {
            n,
            r,
            rinv,
            rtilde,
            nonzero,
            memo: Memo::new(),
        })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn table(&self, v: Variant) -> &GenTable {
        match v {
            Variant::R => &self.r,
            Variant::Rinv => &self.rinv,
            Variant::Rtilde => &self.rtilde,
        }
    }

    /// Nonzero generator entries of a variant.
    pub fn nonzero(&self, v: Variant) -> &[(Gen, Gen, LaurentInt)] {
        &self.nonzero[v as usize]
    }

    pub fn gen_value(&self, v: Variant, a: Gen, b: Gen) -> &LaurentInt {
        self.table(v).get(a.row, a.col, b.row, b.col)
    }

    /// The pairing on arbitrary words, by leg splitting:
    ///
    /// * `R(xy⊗z) = R(x⊗z₁)R(y⊗z₂)`, `R(a⊗bc) = R(a₁⊗c)R(a₂⊗b)`
    /// * `R⁻¹(ab⊗c) = R⁻¹(b⊗c₁)R⁻¹(a⊗c₂)`, `R⁻¹(a⊗bc) = R⁻¹(a₁⊗b)R⁻¹(a₂⊗c)`
    /// * `R̃(ab⊗c) = R̃(a⊗c₂)R̃(b⊗c₁)`, `R̃(a⊗bc) = R̃(a₁⊗b)R̃(a₂⊗c)`
    pub fn eval_r(&self, v: Variant, a: &[Gen], b: &[Gen]) -> LaurentInt {
        if a.is_empty() {
            return counit(b);
        }
        if b.is_empty() {
            return counit(a);
        }
        if a.len() == 1 && b.len() == 1 {
            return self.gen_value(v, a[0], b[0]).clone();
        }
        let key = (v, Word::from(a), Word::from(b));
        if let Some(hit) = self.memo.get(&key) {
            return hit;
        }
        let mut acc = LaurentInt::zero();
        if a.len() >= 2 {
            let (x, y) = a.split_at(1);
            for legs in raw_legs(self.n, b, 2) {
                let (p, s) = match v {
                    Variant::R => (self.eval_r(v, x, &legs[0]), self.eval_r(v, y, &legs[1])),
                    Variant::Rinv | Variant::Rtilde => {
                        (self.eval_r(v, y, &legs[0]), self.eval_r(v, x, &legs[1]))
                    }
                };
                if !p.is_zero() && !s.is_zero() {
                    acc += &(p * s);
                }
            }
        } else {
            let (x, y) = b.split_at(1);
            for legs in raw_legs(self.n, a, 2) {
                let (p, s) = match v {
                    Variant::R => (self.eval_r(v, &legs[0], y), self.eval_r(v, &legs[1], x)),
                    Variant::Rinv | Variant::Rtilde => {
                        (self.eval_r(v, &legs[0], x), self.eval_r(v, &legs[1], y))
                    }
                };
                if !p.is_zero() && !s.is_zero() {
                    acc += &(p * s);
                }
            }
        }
        self.memo.put(key, acc.clone());
        acc
    }

    /// Oracle: expands both slots completely into generator pairings via
    /// iterated coproducts, without memoization or recursion on words.
    pub fn eval_r_brute(&self, v: Variant, a: &[Gen], b: &[Gen]) -> LaurentInt {
        if a.is_empty() {
            return counit(b);
        }
        if b.is_empty() {
            return counit(a);
        }
        let p = a.len();
        let mut total = LaurentInt::zero();
        for blegs in raw_legs(self.n, b, p) {
            // Letter i of `a` meets leg `i` (R) or leg `p-1-i` (R⁻¹, R̃).
            let mut prod = LaurentInt::one();
            for (i, &x) in a.iter().enumerate() {
                let leg = match v {
                    Variant::R => &blegs[i],
                    _ => &blegs[p - 1 - i],
                };
                prod = prod * self.eval_gen_word_brute(v, x, leg);
                if prod.is_zero() {
                    break;
                }
            }
            total += &prod;
        }
        total
    }

    fn eval_gen_word_brute(&self, v: Variant, x: Gen, w: &[Gen]) -> LaurentInt {
        if w.is_empty() {
            return counit(&[x]);
        }
        let r = w.len();
        let mut total = LaurentInt::zero();
        for xlegs in raw_legs(self.n, &[x], r) {
            let mut prod = LaurentInt::one();
            for (j, leg) in xlegs.iter().enumerate() {
                // Leg j of x meets letter r-1-j (R) or letter j (R⁻¹, R̃).
                let y = match v {
                    Variant::R => w[r - 1 - j],
                    _ => w[j],
                };
                prod = prod * self.gen_value(v, leg[0], y).clone();
                if prod.is_zero() {
                    break;
                }
            }
            total += &prod;
        }
        total
    }

    /// Residual of `Σ L(a₁ ⊗ b_s) M(a₂ ⊗ b_t) - ε(a)ε(b)` where `(s,t)` is
    /// `(1,2)` when `swap_b` is false and `(2,1)` otherwise.
    pub fn convolution_residual(
        &self,
        l: Variant,
        m: Variant,
        a: &[Gen],
        b: &[Gen],
        swap_b: bool,
    ) -> LaurentInt {
        let mut acc = LaurentInt::zero();
        let bl = raw_legs(self.n, b, 2);
        for al in raw_legs(self.n, a, 2) {
            for bb in &bl {
                let (b1, b2) = if swap_b {
                    (&bb[1], &bb[0])
                } else {
                    (&bb[0], &bb[1])
                };
                let x = self.eval_r(l, &al[0], b1);
                if x.is_zero() {
                    continue;
                }
                acc += &(x * self.eval_r(m, &al[1], b2));
            }
        }
        acc - counit(a) * counit(b)
    }

    /// Left side minus right side of the chosen commutation rule, in `A`.
    pub fn commutation_residual(
        &self,
        frt: &FrtAlgebra,
        a: &[Gen],
        b: &[Gen],
        form: CommutationForm,
    ) -> Result<Element> {
        if frt.n() != self.n {
            return Err(Error::ContextMismatch(self.n, frt.n()));
        }
        let mut out = Element::zero(self.n);
        let bl = raw_legs(self.n, b, 2);
        for al in raw_legs(self.n, a, 2) {
            for bb in &bl {
                let outer = self.eval_r(Variant::R, &al[0], &bb[0]);
                let inner = self.eval_r(Variant::R, &al[1], &bb[1]);
                let (lhs, rhs) = match form {
                    CommutationForm::Standard => (
                        frt.multiply_words(&bb[0], &al[0]).scale(&inner),
                        frt.multiply_words(&al[1], &bb[1]).scale(&outer),
                    ),
                    CommutationForm::Swapped => (
                        frt.multiply_words(&bb[1], &al[1]).scale(&outer),
                        frt.multiply_words(&al[0], &bb[0]).scale(&inner),
                    ),
                };
                out = out.add(&lhs).sub(&rhs);
            }
        }
        Ok(out)
    }

    pub fn memo_size(&self) -> usize {
        self.memo.len()
    }
}

/// JSON matrices of the three tables, entries as coefficient JSON.
pub fn dump_tables(form: &RForm) -> serde_json::Value {
    let n = form.n as u32;
    let mat = |v: Variant| -> serde_json::Value {
        let m = form.table(v).as_matrix();
        serde_json::Value::Array(
            m.iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|c| serde_json::to_value(c.to_json(n)).unwrap())
                            .collect(),
                    )
                })
                .collect(),
        )
    };
    serde_json::json!({
        "n": form.n,
        "index_order": "rows (i,j), columns (k,l), row-major",
        "R": mat(Variant::R),
        "Rinv": mat(Variant::Rinv),
        "Rtilde": mat(Variant::Rtilde),
    })
}

#[cfg(test)]
fn unit(v: i64, e: i32) -> LaurentInt {
    LaurentInt::monomial(crate::ring::Integer::from(v), e)
}
