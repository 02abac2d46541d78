//! Command-line front end: graph files in, JSON or text reports out.

pub mod commands;
pub mod graph_io;
pub mod report;

pub use commands::{execute, run, Cli, Outcome};
