use thiserror::Error;

use crate::quadrature::QuadratureResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("{name} = {value} is outside the supported range [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("brute-force budget exceeded: more than {cap} lattice points")]
    BudgetExceeded { cap: u64 },

    #[error(
        "quadrature tolerance {tol:e} not met after {} subdivisions (best {} +/- {:e})",
        best.subdivisions, best.value, best.error_estimate
    )]
    ToleranceNotMet { tol: f64, best: QuadratureResult },

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("invalid form: {0}")]
    InvalidForm(String),

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
