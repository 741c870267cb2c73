//! Library side of the `spinchain` command-line tool.

pub mod commands;
pub mod config;
pub mod error;
pub mod table;
pub mod validate;

pub use error::{CliError, Result};
