use diagram_io::DiagramError;
use laurent_core::LaurentError;
use skein_bracket::SkeinError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinError {
    #[error("inadmissible colors {0:?}")]
    Inadmissible(Vec<usize>),
    #[error("graph is not planar: {0}")]
    NonPlanar(String),
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Skein(#[from] SkeinError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
