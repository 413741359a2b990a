//! Exact arithmetic in `Z[A, A^-1]` and its fraction field.
//!
//! Everything downstream (projector coefficients, brackets, theta and
//! tetrahedron values) is expressed in these types. Floating point appears
//! only in [`eval`], after exact reduction.

mod cyclotomic;
mod error;
pub mod eval;
mod gcd;
mod poly;
mod quantum;
mod rational;
mod series;
mod text;

pub use cyclotomic::{cyclotomic, vanishes_at_primitive_root};
pub use error::LaurentError;
pub use eval::{eval_complex, MpComplex, DEFAULT_DIGITS};
pub use gcd::{laurent_divide, laurent_gcd};
pub use poly::LaurentPoly;
pub use quantum::{loop_value, qfactorial, qint, qratio, unknot_colored};
pub use rational::RationalFunc;
pub use series::series_truncate;

pub use astro_float::BigFloat;
pub use num_bigint::BigInt;
