use diagram_io::DiagramError;
use laurent_core::LaurentError;
use temperley_lieb::TlError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("skein element has free boundary points")]
    OpenSkein,
    #[error("state sum is capped at {cap} crossings, diagram has {got}")]
    TooLarge { cap: usize, got: usize },
    #[error("reduced colored Jones polynomial is not Laurent: {0}")]
    NotLaurent(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Tl(#[from] TlError),
}
