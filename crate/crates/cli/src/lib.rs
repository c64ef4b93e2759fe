//! Command-line driver and operator language for the opalg workbench.

pub mod app;
pub mod dsl;
pub mod runner;
