//! Planar link diagrams.
//!
//! Diagrams are given as PD codes, oriented by tracing components, and can be
//! cabled, mirrored and smoothed. Twist templates mark regions that are
//! filled with any number of half-twists to produce a family of diagrams.

pub mod cable;
pub mod error;
pub mod library;
pub mod pd;
pub mod state;
pub mod template;
pub mod wiring;

pub use cable::{braid_closure, cable, cable_with_braid, Cabled, NodeKind, SlotEnds, Twist};
pub use error::DiagramError;
pub use pd::{parse_pd, Diagram};
pub use state::{resolve, smoothing_pairs, KauffmanState, Resolution};
pub use template::{Slot, TwistTemplate};
pub use wiring::{End, Port, Resolved, Wiring};

/// The sum of crossing signs.
pub fn writhe(d: &Diagram) -> i64 {
    d.writhe()
}

/// Fills slot `i` of `t` with `k[i]` half-twists.
pub fn twist_fill(t: &TwistTemplate, k: &[usize]) -> Result<Diagram, DiagramError> {
    t.twist_fill(k)
}
