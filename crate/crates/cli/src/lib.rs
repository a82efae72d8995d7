pub mod commands;
pub mod config;
pub mod error;
pub mod sweep;

pub use commands::{execute, run, run_to};
pub use config::{CommandName, Flags, JobConfig};
pub use error::{CliError, CliResult};
