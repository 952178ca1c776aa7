//! The affine algebra with generators `g_i`, `1_lambda`, `X_1^{+-1}`, in its
//! PBW basis `X^alpha 1_lambda g_w`.
//!
//! Multiplication is computed as a left action on basis monomials: `1_lambda`
//! filters, `X^alpha` shifts exponents, and `g_i` acts by
//!
//! ```text
//! g_i X^a 1_mu g_v = X^{s_i a} 1_{s_i mu} g_i g_v
//!                  + [mu_i = mu_{i+1}] (q - q^-1) X_{i+1} (X^a - X^{s_i a}) / (X_{i+1} - X_i) 1_mu g_v
//! ```
//!
//! with `g_i g_v = g_{s_i v} + (q - q^-1) e_i g_v` when `s_i` is a left
//! descent of `v`.

mod element;
mod relations;
mod word;

pub(crate) use element::qq;
pub use element::{HhatElement, Monomial};
pub use relations::hhat_relation_suite;
pub use word::{apply_letter, nf, GenWord, Letter};
