use thiserror::Error;

/// Errors raised by the optimizer library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller broke an operation's precondition (mismatched lengths, empty sets).
    #[error("contract violation: {0}")]
    Contract(String),
    /// Invalid configuration (bad population sizes, unknown problem, ...).
    #[error("configuration error: {0}")]
    Config(String),
    /// A decision vector outside the problem's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The evaluation budget is spent; the run is complete.
    #[error("evaluation budget exhausted")]
    BudgetExhausted,
    /// Malformed reference-set or archive file contents.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_same_len(what: &str, a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::Contract(format!("{what}: length mismatch ({a} vs {b})")))
    }
}
