//! Library side of the `sgsop` command-line tool: file parsing, subcommands
//! and report rendering.

pub mod codefile;
pub mod commands;
pub mod error;
pub mod render;

pub use codefile::{parse_code_file, CodeFile, FileKind};
pub use error::{exit, CliError};
