//! Command-line front-end for inverse system computations.

pub mod commands;
pub mod format;

pub use commands::run;
