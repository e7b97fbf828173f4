//! The quantum matrix bialgebra `O_q(M_n)`.

pub mod algebra;
pub mod element;
pub mod perm;
pub mod word;

pub use algebra::{FrtAlgebra, Strategy};
pub use element::{Element, ElementJson, TensorElement, TermJson, TripleTensorElement};
pub use perm::{deficiency, exceedance, inv_count, permutations};
pub use word::{format_word, is_normal, latex_word, normal_words, parse_word, Gen, Word};
