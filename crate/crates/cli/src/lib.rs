//! Text formats and commands for the `treepath` binary.

pub mod commands;
pub mod error;
pub mod instance;
pub mod solution;

pub use error::{CliError, InputError};
pub use instance::{Instance, Loaded, PathSpec};
pub use solution::{KernelWitness, Solution};
