//! The coefficient ring `Z[v, v^-1]` with `q = v^n`, and its specializations.

pub mod cyclotomic;
pub mod integer;
pub mod laurent;
pub mod qnum;

pub use cyclotomic::{cyclotomic_phi, is_zero_mod_cyclotomic, CyclotomicCtx};
pub use integer::Integer;
pub use laurent::{LaurentInt, LaurentJson};
pub use qnum::{one_minus_q_neg2, q_factorial, q_int, sigma_factors, sigma_q};
