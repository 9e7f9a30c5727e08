//! Configuration and serialization for the `hurwitz` command-line tool.

pub mod config;
pub mod io;

pub use config::{CliError, ReferenceSequence, RunConfig};
