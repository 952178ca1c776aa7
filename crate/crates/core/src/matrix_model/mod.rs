//! The matrix model: orbit blocks of matrices over the idempotent truncations
//! `1_{l0} H 1_{l0}`, its standard and canonical bases, and the mutually
//! inverse maps `Psi` and `Phi` to the idempotent presentation.

mod element;
mod model;
mod suites;
mod tau;

pub use element::{sorted, BlockKey, EElement};
pub use model::{block_decompose, block_rank_total, MatrixModel, OrbitBlock, Triple};
pub use suites::{canonical_lift_suite, involution_suite, iso_suite, small_monomials, tau_suite};
pub use tau::{make_tau, random_sort_word, selection_sort_word, tau_from_word, TauPair};
