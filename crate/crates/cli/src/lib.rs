//! Command-line front end for the `affine-yh` library.

pub mod commands;
pub mod doc;

pub use commands::{run, Cli, Command, Outcome, Suite};
pub use doc::{Algebra, CoeffDoc, Element, ElementDoc, TermDoc};
