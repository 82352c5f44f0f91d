//! File formats, JSON reports and the `hfl` command line for
//! [`hyperfinite`].

pub mod cli;
pub mod format;
pub mod report;

pub use cli::{run, Config, Outcome};
