//! The Temperley-Lieb algebra over the fraction field of `Z[A, A^-1]`.
//!
//! Elements are linear combinations of planar matchings. Products stack
//! diagrams and replace each closed loop by `-A^2 - A^-2`. Jones-Wenzl
//! projectors are built recursively and cached per strand count.

pub mod element;
pub mod matching;
pub mod projector;
pub mod skein;

pub use element::{join, loop_power, multiply, TLElement, TlError};
pub use matching::Matching;
pub use projector::{absorb_check, check_projector, jones_wenzl, jones_wenzl_two_sided, ProjectorCheck};
pub use skein::{insert_into_skein, NodePort, SkeinElement, SkeinNode};
