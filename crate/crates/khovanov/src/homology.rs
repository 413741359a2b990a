//! Bigraded homology groups of a cube complex.

use crate::cube::CubeComplex;
use crate::snf::{smith_summary, SmithSummary};
use laurent_core::LaurentPoly;
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

/// One bigraded piece: `Z^rank` plus cyclic groups of the given orders.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct KhGroup {
    pub rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl KhGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Nonzero groups indexed by homological degree `i` and quantum degree `j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BigradedGroups {
    pub entries: BTreeMap<(i64, i64), KhGroup>,
}

impl BigradedGroups {
    pub fn get(&self, i: i64, j: i64) -> KhGroup {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn total_rank(&self) -> usize {
        self.entries.values().map(|g| g.rank).sum()
    }

    /// Every torsion summand as `(i, j, order)`.
    pub fn torsion_entries(&self) -> Vec<(i64, i64, BigInt)> {
        self.entries
            .iter()
            .flat_map(|(&(i, j), g)| g.torsion.iter().map(move |t| (i, j, t.clone())))
            .collect()
    }

    /// The groups moved by `(di, dj)`.
    pub fn shifted(&self, di: i64, dj: i64) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), g)| ((i + di, j + dj), g.clone()))
                .collect(),
        }
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, _)| i).min()
    }

    /// Groups in homological degree `i`, by quantum degree.
    pub fn column(&self, i: i64) -> BTreeMap<i64, KhGroup> {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), g)| (j, g.clone()))
            .collect()
    }
}

/// `sum (-1)^(i+j) r A^(2j)`.
pub(crate) fn signed_sum(terms: impl IntoIterator<Item = (i64, i64, i64)>) -> LaurentPoly {
    let mut by_exp: BTreeMap<i64, i64> = BTreeMap::new();
    for (i, j, r) in terms {
        let sign = if (i + j).rem_euclid(2) == 0 { 1 } else { -1 };
        *by_exp.entry(2 * j).or_default() += sign * r;
    }
    LaurentPoly::from_terms(by_exp.into_iter().map(|(e, c)| (e, BigInt::from(c))))
}

/// Graded Euler characteristic `sum (-1)^(i+j) rank A^(2j)`; torsion is
/// ignored.
pub fn euler_characteristic(g: &BigradedGroups) -> LaurentPoly {
    signed_sum(g.entries.iter().map(|(&(i, j), k)| (i, j, k.rank as i64)))
}

/// Homology of a complex, block by block in the quantum grading.
pub fn homology(c: &CubeComplex) -> BigradedGroups {
    let degrees = c.generators.len();
    // Position of every generator inside its (degree, j) block.
    let mut block_index: Vec<Vec<usize>> = Vec::with_capacity(degrees);
    let mut block_size: Vec<HashMap<i64, usize>> = Vec::with_capacity(degrees);
    for gens in &c.generators {
        let mut sizes: HashMap<i64, usize> = HashMap::new();
        let idx = gens
            .iter()
            .map(|g| {
                let s = sizes.entry(g.j).or_default();
                *s += 1;
                *s - 1
            })
            .collect();
        block_index.push(idx);
        block_size.push(sizes);
    }
    // Smith summaries of every block of every differential.
    let summaries: Vec<HashMap<i64, SmithSummary>> = (0..degrees)
        .into_par_iter()
        .map(|h| {
            let Some(entries) = c.differentials.get(h) else {
                return HashMap::new();
            };
            if h + 1 >= degrees {
                return HashMap::new();
            }
            let mut blocks: HashMap<i64, Vec<(usize, usize, i64)>> = HashMap::new();
            for &(r, col, v) in entries {
                let j = c.generators[h][col].j;
                debug_assert_eq!(c.generators[h + 1][r].j, j, "differentials preserve j");
                blocks
                    .entry(j)
                    .or_default()
                    .push((block_index[h + 1][r], block_index[h][col], v));
            }
            blocks
                .into_par_iter()
                .map(|(j, e)| {
                    let rows = block_size[h + 1][&j];
                    let cols = block_size[h][&j];
                    (j, smith_summary(rows, cols, &e))
                })
                .collect()
        })
        .collect();
    let mut entries = BTreeMap::new();
    for h in 0..degrees {
        for (&j, &dim) in &block_size[h] {
            let out_rank = summaries[h].get(&j).map_or(0, |s| s.rank);
            let incoming = if h > 0 { summaries[h - 1].get(&j) } else { None };
            let in_rank = incoming.map_or(0, |s| s.rank);
            let group = KhGroup {
                rank: dim - out_rank - in_rank,
                torsion: incoming.map_or_else(Vec::new, |s| s.torsion.clone()),
            };
            if !group.is_zero() {
                entries.insert((c.lowest + h as i64, j), group);
            }
        }
    }
    BigradedGroups { entries }
}
