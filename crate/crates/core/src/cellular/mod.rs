//! Generalised matrix algebras, chains of cell ideals and their tensor
//! products, with a checker for concrete cell ideals.

mod chain;
mod gma;
mod ideal;
mod instances;
mod mlaurent;
mod suite;

pub use chain::{chain_tensor, ChainSpec, Layer};
pub use gma::{BMatrix, GenMatrixAlgebra};
pub use ideal::{cell_ideal_check, CellIdealInstance};
pub use instances::{
    corrupt_one_image, finite_orbit_instance, identity_instance, longest_stabilizer_element, stabilizer_poincare,
};
pub use mlaurent::{MLaurent, Sigma};
pub use suite::cellular_suite;
