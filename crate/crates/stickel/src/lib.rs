//! Batch driver around `stickel-core`: fixture files, on-disk caches,
//! report formats and the run loop behind the `stickel` binary.

pub mod cache;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod report;
pub mod runner;

pub use config::{Check, OutputFormat, RunConfig};
pub use error::CliError;
pub use runner::{run, Outcome};
