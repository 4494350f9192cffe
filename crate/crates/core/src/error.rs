use thiserror::Error;

use crate::lengths::LengthSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// The search ran out of node or wall-time budget before reaching a verdict.
    ///
    /// `partial` holds lengths that are certainly realized (a lower-bound subset of
    /// the true set of lengths) when the interrupted operation was a length query.
    #[error("inconclusive: search budget exhausted after {explored} candidates")]
    Inconclusive {
        explored: u64,
        partial: Option<LengthSet>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Error::Inconclusive { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
