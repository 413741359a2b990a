//! Error type shared by the arithmetic layer.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("singular evaluation: {0}")]
    SingularEvaluation(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("series expansion has non-integral coefficients (lowest denominator coefficient {0})")]
    NonIntegralSeries(String),
}
