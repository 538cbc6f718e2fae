use thiserror::Error;

use crate::report::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid carrier: {0}")]
    InvalidCarrier(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("grade {0} outside [0, 1]")]
    GradeOutOfRange(String),

    #[error("not an intuitionistic fuzzy set: mu + lambda > 1 at element {0}")]
    NotIntuitionistic(usize),

    #[error("precondition violated: {what}")]
    Precondition {
        what: String,
        report: Option<Box<AxiomReport>>,
    },

    #[error("{what}: axioms fail")]
    AxiomsFailed {
        what: String,
        report: Box<AxiomReport>,
    },

    #[error("postcondition violated: {0}")]
    Postcondition(String),

    #[error("{what} {size} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    /// A fundamental quotient operation was not single-valued.
    #[error("quotient operation not single-valued: {0}")]
    SingleValuedness(String),

    #[error("structural error: {0}")]
    Structural(String),
}

impl Error {
    pub(crate) fn precondition(what: impl Into<String>) -> Self {
        Error::Precondition {
            what: what.into(),
            report: None,
        }
    }

    pub(crate) fn precondition_with(what: impl Into<String>, report: AxiomReport) -> Self {
        Error::Precondition {
            what: what.into(),
            report: Some(Box::new(report)),
        }
    }
}
