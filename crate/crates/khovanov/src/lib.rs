//! Integer Khovanov homology from the delooped cube of resolutions, its
//! graded Euler characteristic, torus-braid approximants and a measure of
//! how far twist families stabilize.

pub mod braid;
pub mod cube;
pub mod error;
pub mod homology;
pub mod snf;
pub mod stable;

pub use braid::{colored_cable, colored_kh_approx, torus_braid_approximant, torus_braid_word};
pub use cube::{ckh, ckh_capped, CubeComplex, Generator, CROSSING_CAP};
pub use error::KhError;
pub use homology::{euler_characteristic, homology, BigradedGroups, KhGroup};
pub use snf::{dense_invariants, smith_summary, SmithSummary};
pub use stable::{align, first_difference, stable_range};
