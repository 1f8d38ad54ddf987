//! Text formats and the `catk` command-line tool.

pub mod cli;
pub mod dsl;
pub mod term;

pub use cli::run;
