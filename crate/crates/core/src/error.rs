use thiserror::Error;

use crate::report::VerificationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// SO(3) input outside the repairable band; carries the validation report.
    #[error("SO(3) parameters rejected (max residual {:.3e})", .0.max_residual())]
    So3Invalid(VerificationReport),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("inconsistent system: {0}")]
    Inconsistent(String),

    #[error("degenerate solution: {0}")]
    Degenerate(String),

    #[error("rapidity {0} exceeds the supported range |theta| <= 20")]
    RapidityOverflow(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
