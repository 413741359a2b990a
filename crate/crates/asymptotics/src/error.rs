use laurent_core::LaurentError;
use spin_network::SpinError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymError {
    #[error("singular evaluation at exp(i pi / {den}): {detail}")]
    SingularEvaluation { den: u64, detail: String },
    #[error("leading terms cancel to working precision: {0}")]
    Cancellation(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Spin(#[from] SpinError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}
