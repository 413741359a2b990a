//! Root-of-unity evaluation of skein values, growth-rate sequences and the
//! volume of the regular ideal octahedron.

pub mod error;
pub mod growth;
pub mod lobachevsky;
pub mod root;

pub use error::AsymError;
pub use growth::{
    jones_infinity_at_root, jones_infinity_value, octahedron_color, octahedron_rate,
    octahedron_value, root_identity, root_identity_uniform, unit_trace, volume_experiment,
    GrowthRow, GrowthSeries, VolumeExperiment, DEFAULT_GRID, EXACT_LIMIT,
};
pub use lobachevsky::{lobachevsky, lobachevsky_series, v8, v8_f64, MAX_DIGITS};
pub use root::{eval_at_root, root_point, Expansion, RootTable};
