use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid canonical shape (a={a}, c={c}, k={k}, last={last}): {reason}")]
    InvalidShape {
        a: u64,
        c: u64,
        k: u64,
        last: u64,
        reason: &'static str,
    },
    #[error("infeasible parameters a={a}, c={c} for volume {n}: {reason}")]
    Infeasible {
        a: u64,
        c: u64,
        n: u64,
        reason: &'static str,
    },
    #[error("not a column profile: {0}")]
    NotAProfile(String),
    #[error("{mode} enumeration for n={n} exceeds budget {limit}")]
    BudgetExceeded {
        mode: &'static str,
        n: u64,
        limit: u64,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
