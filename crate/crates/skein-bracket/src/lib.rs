//! Kauffman bracket of closed skein elements.
//!
//! A skein element is a closed planar diagram built from crossings and
//! projector boxes. The default evaluator contracts it node by node while
//! tracking how the absorbed region pairs its boundary arcs; brute-force
//! state sums are kept as oracles. On top of the bracket sit colored Jones
//! polynomials, limiting skein elements of twist templates and their
//! normalized limits.

pub mod build;
pub mod colored;
pub mod error;
pub mod naive;
pub mod sweep;

pub use build::{skein_of_diagram, CabledSkein};
pub use colored::{
    agreeing_coefficients, colored_bracket, colored_jones, colored_skein,
    colored_skein_on_edges, framing_factor, jones_infinity, limiting_skein,
    top_channel_eigenvalue, twist_normalized, valuation,
};
pub use error::SkeinError;
pub use naive::{bracket_naive, bracket_state_sum, NAIVE_CAP};
pub use sweep::{bracket, bracket_fraction, sweep_order};
pub use temperley_lieb::{SkeinElement, SkeinNode};

use diagram_io::Diagram;
use laurent_core::LaurentPoly;

/// The Kauffman bracket of a diagram.
pub fn bracket_diagram(d: &Diagram) -> Result<LaurentPoly, SkeinError> {
    let b = bracket(&skein_of_diagram(d))?;
    Ok(b.to_laurent().expect("crossing-only brackets are Laurent"))
}
