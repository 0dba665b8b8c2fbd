use thiserror::Error;

/// Errors raised while building or interrogating a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table shape mismatch: {0}")]
    BadShape(String),
    #[error("not a group: {reason}")]
    NotAGroup {
        reason: String,
        /// First failing triple `(a, b, c)` when associativity is violated.
        triple: Option<(u32, u32, u32)>,
    },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("{what} exceeds budget ({value} > {limit})")]
    BudgetExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("x -> x^{k} does not define an action of C{m} on C{n}")]
    BadAction { n: usize, m: usize, k: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not a Sylow subgroup")]
    NotSylow,
    #[error("subgroup of order {0} is not primary")]
    NotPrimary(usize),
    #[error("{0} primes exceeds the dispersion search cap of 8")]
    TooManyPrimes(usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl GroupError {
    pub fn is_budget(&self) -> bool {
        matches!(self, GroupError::BudgetExceeded { .. })
    }
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
