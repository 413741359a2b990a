use diagram_io::DiagramError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KhError {
    #[error("diagram has {got} crossings; the cap is {cap}")]
    TooLarge { cap: usize, got: usize },
    #[error("alignment failed: {0}")]
    AlignmentFailed(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
