use thiserror::Error;
use treepath::{PriorityError, SolveError, TreeError};

/// Anything wrong with what the user handed us; exit status 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Path { line: usize, source: TreeError },
    #[error("line {line}: dipath has no arcs")]
    EmptyPath { line: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Priority(#[from] PriorityError),
    #[error("the kernel needs a priority block")]
    MissingPriority,
    #[error("solution is for {found}, expected {expected}")]
    WrongKind { expected: &'static str, found: &'static str },
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error(transparent)]
    Solve(SolveError),
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Tree(t) => CliError::Input(InputError::Tree(t)),
            SolveError::Priority(p) => CliError::Input(InputError::Priority(p)),
            other => CliError::Solve(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Verify(_) | CliError::Solve(_) => 1,
        }
    }
}
