//! Growth-rate sequences at `A = exp(iπ/2n)`.

use crate::error::AsymError;
use crate::lobachevsky::v8;
use crate::root::{eval_at_root, Expansion, RootTable};
use diagram_io::TwistTemplate;
use laurent_core::eval::to_f64;
use laurent_core::{unknot_colored, MpComplex};
use rayon::prelude::*;
use spin_network::{jones_infinity_closed_form, sixj, template_trace, theta, Move, ReductionTrace, SpinError};
use std::f64::consts::PI;

/// Largest `n` evaluated through exact rational functions; larger `n` use
/// the regularized closed forms.
pub const EXACT_LIMIT: usize = 8;

/// Default grid for growth experiments.
pub const DEFAULT_GRID: [usize; 13] = [2, 3, 4, 5, 6, 7, 8, 10, 15, 20, 30, 40, 50];

#[derive(Clone, Debug)]
pub struct GrowthRow {
    pub n: usize,
    pub value: MpComplex,
    /// `log |value|`.
    pub log_abs: f64,
    /// `(scale / n) log |value|`.
    pub rate: f64,
    /// `scale * log |value|`, the same quantity without the `1/n`.
    pub unscaled: f64,
}

impl GrowthRow {
    fn new(n: usize, value: MpComplex, scale: f64) -> Self {
        let log_abs = value.ln_abs_f64();
        Self {
            n,
            value,
            log_abs,
            rate: scale * log_abs / n as f64,
            unscaled: scale * log_abs,
        }
    }

    pub fn abs(&self) -> f64 {
        self.value.abs_f64()
    }
}

#[derive(Clone, Debug)]
pub struct GrowthSeries {
    /// The factor in front of `log|value| / n` (π or 2π).
    pub scale: f64,
    pub rows: Vec<GrowthRow>,
}

impl GrowthSeries {
    pub fn rates(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.rate).collect()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].rate < w[1].rate)
    }

    pub fn last_rate(&self) -> Option<f64> {
        self.rows.last().map(|r| r.rate)
    }
}

fn check_grid(ns: &[usize]) -> Result<(), AsymError> {
    if ns.first() == Some(&0) || ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AsymError::Invalid(format!(
            "n values must be positive and strictly increasing: {ns:?}"
        )));
    }
    Ok(())
}

fn series(
    ns: &[usize],
    scale: f64,
    value: impl Fn(usize) -> Result<MpComplex, AsymError> + Sync,
) -> Result<GrowthSeries, AsymError> {
    check_grid(ns)?;
    let rows = ns
        .par_iter()
        .map(|&n| value(n).map(|v| GrowthRow::new(n, v, scale)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GrowthSeries { scale, rows })
}

/// The uniform color used for the octahedral growth at `n`: the largest
/// even color whose projector is regular at `exp(iπ/2n)`.
pub fn octahedron_color(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        (n - 1) & !1
    }
}

/// `Tet(a,...,a) / theta(a,a,a)` at the root for `a = octahedron_color(n)`.
pub fn octahedron_value(n: usize, digits: usize) -> Result<MpComplex, AsymError> {
    let a = octahedron_color(n);
    if n <= EXACT_LIMIT {
        let f = sixj(a, a, a, a, a, a)?.checked_div(&theta(a, a, a)?)?;
        return eval_at_root(&f, n, digits);
    }
    let t = RootTable::new(n, 2 * a + 1, digits)?;
    let r = t.div(&t.tet([a; 6])?, &t.theta(a, a, a)?);
    t.value(&r)
}

/// Rates `(π/n) log |Tet(a^6) / theta(a,a,a)|` over the grid.
pub fn octahedron_rate(ns: &[usize], digits: usize) -> Result<GrowthSeries, AsymError> {
    series(ns, PI, |n| octahedron_value(n, digits))
}

/// The reduction trace of a template at color one, which fixes the move
/// sequence for every color: the reducer only looks at face sizes and at
/// color equality, and both are unchanged when all colors are scaled.
pub fn unit_trace(t: &TwistTemplate) -> Result<ReductionTrace, AsymError> {
    let trace = template_trace(t, 1)?;
    if let Some(m) = trace.moves.iter().find(|m| !matches!(m, Move::Triangle { .. })) {
        return Err(SpinError::HypothesisViolated(format!("reduction used a {} move", m.name())).into());
    }
    Ok(trace)
}

/// `J_infinity` at the root from the unit trace with colors scaled by `n`.
pub fn jones_infinity_at_root(unit: &ReductionTrace, n: usize, digits: usize) -> Result<MpComplex, AsymError> {
    let mut kmax = 2 * n;
    let mut scaled = Vec::new();
    for m in &unit.moves {
        if let Move::Triangle { legs, sides, .. } = m {
            let [a, b, c] = legs.map(|x| x * n);
            let [x, y, z] = sides.map(|x| x * n);
            kmax = kmax.max(a + b + c + x + y + z);
            scaled.push(([a, b, c, x, z, y], [a, b, c]));
        }
    }
    for f in &unit.finals {
        kmax = kmax.max(f.iter().sum::<usize>() * n);
    }
    let t = RootTable::new(n, kmax + 2, digits)?;
    let mut acc: Expansion = t.div(&t.qint(1)?, &t.unknot(n)?);
    for (tet, tri) in &scaled {
        acc = t.mul(&acc, &t.div(&t.tet(*tet)?, &t.theta(tri[0], tri[1], tri[2])?));
    }
    for f in &unit.finals {
        acc = t.mul(&acc, &t.theta(f[0] * n, f[1] * n, f[2] * n)?);
    }
    for &c in &unit.loops {
        acc = t.mul(&acc, &t.unknot(c * n)?);
    }
    t.value(&acc)
}

/// The outcome of a volume experiment on a twist template.
#[derive(Clone, Debug)]
pub struct VolumeExperiment {
    /// Number of triangle moves in the reduction.
    pub triangles: usize,
    /// `2 T v8`.
    pub target: f64,
    /// Rates `(2π/n) log |J_infinity|`.
    pub series: GrowthSeries,
    /// `2T` times the octahedral rate per row: the growth of `(6j/theta)^T`
    /// at the octahedral color, without the final `theta/O` factor.
    pub formula_rates: Vec<f64>,
}

impl VolumeExperiment {
    /// `target - last rate`.
    pub fn gap(&self) -> Option<f64> {
        self.series.last_rate().map(|r| self.target - r)
    }
}

/// `J_infinity` at the root for one `n`.
pub fn jones_infinity_value(t: &TwistTemplate, n: usize, digits: usize) -> Result<MpComplex, AsymError> {
    if n <= EXACT_LIMIT {
        eval_at_root(&jones_infinity_closed_form(t, n)?, n, digits)
    } else {
        jones_infinity_at_root(&unit_trace(t)?, n, digits)
    }
}

pub fn volume_experiment(t: &TwistTemplate, ns: &[usize], digits: usize) -> Result<VolumeExperiment, AsymError> {
    let unit = unit_trace(t)?;
    let triangles = unit.triangles;
    let series = series(ns, 2.0 * PI, |n| jones_infinity_value(t, n, digits))?;
    let octa = octahedron_rate(ns, digits)?;
    let formula_rates = octa.rows.iter().map(|r| 2.0 * triangles as f64 * r.rate).collect();
    Ok(VolumeExperiment {
        triangles,
        target: 2.0 * triangles as f64 * to_f64(&v8(20)),
        series,
        formula_rates,
    })
}

/// `theta(n, n, 2n) / O(n)` at the root: the theta of the limiting skein of
/// a template without twist regions, normalized by the colored unknot.
pub fn root_identity(n: usize, digits: usize) -> Result<MpComplex, AsymError> {
    let f = theta(n, n, 2 * n)?.div_poly(&unknot_colored(n as u32))?;
    eval_at_root(&f, n, digits)
}

/// `theta(n, n, n) / O(n)` at the root, taken literally.
pub fn root_identity_uniform(n: usize, digits: usize) -> Result<MpComplex, AsymError> {
    let f = theta(n, n, n)?.div_poly(&unknot_colored(n as u32))?;
    eval_at_root(&f, n, digits)
}
