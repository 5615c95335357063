//! Library side of the `ccr` command-line tool: instance files, solver
//! dispatch and reports.

pub mod commands;
pub mod error;
pub mod instance;

pub use commands::{Algorithm, Report, SolveOptions};
pub use error::CliError;
pub use instance::{Instance, InstanceFile};
