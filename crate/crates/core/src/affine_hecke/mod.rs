//! The extended affine Hecke algebra of `GL_n` in its Bernstein and
//! Iwahori-Matsumoto bases, parabolic tensor subalgebras, the embedding into
//! the idempotent presentation, and canonical bases on Bruhat intervals.
//!
//! Conventions: `T_i^2 = 1 + (q - q^-1) T_i`, `T_i Z_i T_i = Z_{i+1}`,
//! `T_pi = Z_1 T_1 ... T_{n-1}`, so `Z^a = T_{t_a}` for
//! `a_1 <= ... <= a_n`, and `T_{s_0} = T_pi^-1 T_1 T_pi`.

mod bernstein;
pub mod im;
mod kl;
mod phi;
mod tensor;

pub use bernstein::BernsteinElem;
pub use im::{BasisChange, IMExpansion};
pub use kl::{canonical_solve, is_canonical, kl_basis, kl_polynomial, kl_suite, KLBasisElem};
pub use phi::{c_hat, flat, g_hat, phi, phi_inverse, phi_suite, phi_tensor, transported_bar};
pub use tensor::{Parabolic, TensorElem, TensorExpansion};
