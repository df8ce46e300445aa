//! Command-line front end: argument model, commands and report rendering.

pub mod commands;
pub mod config;
pub mod output;

pub use commands::{run, CliError, Outcome};
pub use config::RunConfig;
