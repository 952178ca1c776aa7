//! Exact computation in the affine Yokonuma-Hecke algebra and its matrix model.

pub mod affine_hecke;
pub mod cellular;
pub mod coeffs;
pub mod combinatorics;
pub mod error;
pub mod idem_presentation;
pub mod matrix_model;
pub mod report;
pub mod sample;
pub mod yokonuma;

pub use coeffs::{CycScalar, Laurent, Scalar};
pub use error::{Error, Result};
