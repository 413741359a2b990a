//! Spin networks: theta and tetrahedral evaluations, planar trivalent
//! graphs with colored edges, their reduction to theta graphs, and the
//! fusion expansion of cabled twist regions.

pub mod closed;
pub mod error;
pub mod fusion;
pub mod ktg;
pub mod reduce;
pub mod values;

pub use closed::{tet_closed, theta_closed};
pub use error::SpinError;
pub use fusion::{
    fused_skein, fusion_check, fusion_coefficient, fusion_expand, fusion_sum,
    jones_infinity_closed_form, template_ktg, template_trace, twist_eigenvalue, FusionTerm,
};
pub use ktg::{admissible, full_twist, twist_power, EdgeEnd, Ktg, KtgEdge};
pub use reduce::{reduce_to_theta, Move, ReductionTrace};
pub use values::{sixj, sixj_skein, theta, theta_skein, SKEIN_COLOR_CAP};
