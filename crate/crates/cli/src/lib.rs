//! Command-line front end for `pdyn-core`: expression parsing, command
//! dispatch and deterministic text or JSON output.

mod commands;
pub mod parse;
pub mod render;

pub use commands::{execute, Cli, CliError, Command, Experiment, FieldSpec, Outcome};
