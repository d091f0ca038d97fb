use thiserror::Error;

use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("antisymmetry violated: {0}")]
    Antisymmetry(String),

    /// A structure failed the identities it is required to satisfy.
    #[error("{what} failed: {report}")]
    Axioms { what: &'static str, report: Report },

    #[error("not a strong factorization: {0}")]
    Factorization(String),

    #[error("forbidden component in decomposition: {0}")]
    ForbiddenComponent(String),

    #[error("map is not invertible: {0}")]
    NotInvertible(String),

    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("enumeration budget exceeded: {needed} candidates, budget {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("requires a finite field")]
    InfiniteField,

    /// 2 or 3 is not invertible, so the factorial weights of the Maurer-Cartan series are undefined.
    #[error("characteristic {0} does not allow division by 2 and 3")]
    Characteristic(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("parse error at line {line}: {message}")]
    ParseAt { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn axioms(what: &'static str, report: Report) -> Error {
        Error::Axioms { what, report }
    }

    /// Input errors, as opposed to mathematical failures.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::Axioms { .. }
                | Error::Factorization(_)
                | Error::ForbiddenComponent(_)
                | Error::NotAutomorphism(_)
                | Error::NotInvertible(_)
        )
    }
}
