//! Symmetric and extended affine Weyl groups, residue tuples and column
//! multitableaux.

mod affine_weyl;
mod perm;
mod residue;
mod tableau;

pub use affine_weyl::{bruhat_interval_below, bruhat_leq, enumerate_ball, ExtAffineElem, DEFAULT_GUARD};
pub use perm::Perm;
pub use residue::{factorial, multinomial, ResidueTuple};
pub use tableau::{tableau_from_tuple, tuple_from_tableau, Multitableau};
