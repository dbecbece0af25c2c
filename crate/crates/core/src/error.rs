use thiserror::Error;

/// Errors raised by the evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the region where the quantity is defined
    /// (or where the chosen representation converges).
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// Degree or order beyond what double precision can represent.
    #[error("range error in {op}: {reason}")]
    Range { op: &'static str, reason: String },

    /// A Gamma function argument hit a pole.
    #[error("gamma pole in {op} at summation index r = {r} (argument {arg})")]
    Pole {
        op: &'static str,
        r: usize,
        arg: f64,
    },

    /// A series and its quadrature fallback both failed to reach the tolerance.
    #[error("{op} did not converge: estimate {estimate:e} with error {abs_err:e}")]
    NotConverged {
        op: &'static str,
        estimate: f64,
        abs_err: f64,
    },
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }

    pub(crate) fn range(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Range {
            op,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
