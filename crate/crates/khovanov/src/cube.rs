//! The delooped cube of resolutions.
//!
//! Cube bit `1` at a crossing is its A-smoothing and bit `0` its
//! B-smoothing, so edges of the cube turn a B-smoothing into an A-smoothing.
//! Every circle of a resolution is delooped into two generators labelled
//! `+1` and `-1`; a generator of the complex is a state together with one
//! label per circle.

use crate::error::KhError;
use diagram_io::{resolve, Diagram, KauffmanState};
use laurent_core::LaurentPoly;
use rayon::prelude::*;
use std::collections::HashMap;

/// Default crossing cap for [`ckh`].
pub const CROSSING_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generator {
    /// Cube bits, bit `c` for crossing `c`.
    pub state: u64,
    /// Bit `t` set when circle `t` carries the label `+1`.
    pub plus: u64,
    pub circles: u32,
    /// Homological degree after the crossing shift.
    pub i: i64,
    /// Quantum degree after the crossing shift.
    pub j: i64,
}

/// A chain complex of free abelian groups with integer differentials.
#[derive(Clone, Debug, Default)]
pub struct CubeComplex {
    /// Generators by homological degree, lowest degree first.
    pub generators: Vec<Vec<Generator>>,
    /// `differentials[h]` maps degree `h` to degree `h + 1`, stored as
    /// `(target, source, value)` triples of generator positions.
    pub differentials: Vec<Vec<(usize, usize, i64)>>,
    /// Homological degree of `generators[0]`.
    pub lowest: i64,
}

/// Circles of one resolution: the circle of every edge label, free loops
/// numbered last.
struct Circles {
    count: usize,
    of: HashMap<u32, usize>,
}

fn circles(d: &Diagram, state: u64) -> Result<Circles, KhError> {
    let c = d.crossing_count();
    // Kauffman bit `true` is the B-smoothing, cube bit `0`.
    let bits = (0..c).map(|x| state >> x & 1 == 0).collect();
    let r = resolve(d, &KauffmanState::new(bits))?;
    Ok(Circles {
        count: r.loop_count,
        of: r.circle_of,
    })
}

/// Images of a labelling under one cube edge, with coefficients.
fn edge_map(
    before: &Circles,
    after: &Circles,
    free: usize,
    quad: [u32; 4],
    plus: u64,
) -> Vec<(u64, i64)> {
    let at_crossing = |c: &Circles| {
        let mut v: Vec<usize> = quad.iter().map(|l| c.of[l]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let (old, new) = (at_crossing(before), at_crossing(after));
    // Circles away from the crossing keep their labels.
    let mut carried = 0u64;
    let mut moved = vec![false; before.count];
    for (label, &x) in &before.of {
        if !old.contains(&x) && !moved[x] {
            moved[x] = true;
            if plus >> x & 1 == 1 {
                carried |= 1 << after.of[label];
            }
        }
    }
    let shift_free = after.count - free;
    for t in 0..free {
        if plus >> (before.count - free + t) & 1 == 1 {
            carried |= 1 << (shift_free + t);
        }
    }
    let bit = |x: usize| 1u64 << x;
    match (old.as_slice(), new.as_slice()) {
        // Merge: + + -> +, + - -> -, - - -> 0.
        (&[x, y], &[z]) => match (plus >> x & 1, plus >> y & 1) {
            (1, 1) => vec![(carried | bit(z), 1)],
            (0, 0) => Vec::new(),
            _ => vec![(carried, 1)],
        },
        // Split: + -> (+ -) + (- +), - -> (- -).
        (&[x], &[y, z]) => {
            if plus >> x & 1 == 1 {
                vec![(carried | bit(y), 1), (carried | bit(z), 1)]
            } else {
                vec![(carried, 1)]
            }
        }
        _ => unreachable!("a cube edge merges or splits"),
    }
}

/// The Khovanov complex of a diagram, with crossing cap [`CROSSING_CAP`].
pub fn ckh(d: &Diagram) -> Result<CubeComplex, KhError> {
    ckh_capped(d, CROSSING_CAP)
}

/// The Khovanov complex of a diagram with an explicit crossing cap.
pub fn ckh_capped(d: &Diagram, cap: usize) -> Result<CubeComplex, KhError> {
    let c = d.crossing_count();
    if c > cap.min(63) {
        return Err(KhError::TooLarge { cap, got: c });
    }
    let (n_plus, n_minus) = d.sign_counts();
    // Mirror of the usual shifts: the homological 0-resolution is the
    // all-B state.
    let (n_plus, n_minus) = (n_plus as i64, n_minus as i64);
    let states: Vec<u64> = (0..1u64 << c).collect();
    let resolutions: Vec<Circles> = states
        .par_iter()
        .map(|&s| circles(d, s))
        .collect::<Result<_, _>>()?;
    let free = d.loops();
    // Position of the first generator of every state within its degree.
    let mut offset = vec![0usize; states.len()];
    let mut generators: Vec<Vec<Generator>> = vec![Vec::new(); c + 1];
    for &s in &states {
        let h = s.count_ones() as usize;
        offset[s as usize] = generators[h].len();
        let r = resolutions[s as usize].count as u32;
        for plus in 0..1u64 << r {
            let labels = 2 * plus.count_ones() as i64 - r as i64;
            generators[h].push(Generator {
                state: s,
                plus,
                circles: r,
                i: h as i64 - n_plus,
                j: labels + h as i64 + n_minus - 2 * n_plus,
            });
        }
    }
    let differentials: Vec<Vec<(usize, usize, i64)>> = (0..c)
        .into_par_iter()
        .map(|h| {
            let mut out = Vec::new();
            for (col, g) in generators[h].iter().enumerate() {
                for x in 0..c {
                    if g.state >> x & 1 == 1 {
                        continue;
                    }
                    let target = g.state | 1 << x;
                    let sign = if (g.state & ((1 << x) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                    let images = edge_map(
                        &resolutions[g.state as usize],
                        &resolutions[target as usize],
                        free,
                        d.crossings()[x],
                        g.plus,
                    );
                    for (plus, v) in images {
                        out.push((offset[target as usize] + plus as usize, col, sign * v));
                    }
                }
            }
            out
        })
        .collect();
    let complex = CubeComplex {
        generators,
        differentials,
        lowest: -n_plus,
    };
    assert!(complex.d_squared_is_zero(), "composite of differentials is nonzero");
    Ok(complex)
}

impl CubeComplex {
    /// Whether every composite of consecutive differentials vanishes.
    pub fn d_squared_is_zero(&self) -> bool {
        (1..self.differentials.len()).into_par_iter().all(|h| {
            let mut first: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
            for &(r, c, v) in &self.differentials[h - 1] {
                first.entry(c).or_default().push((r, v));
            }
            let mut second: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
            for &(r, c, v) in &self.differentials[h] {
                second.entry(c).or_default().push((r, v));
            }
            first.values().all(|column| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(mid, v) in column {
                    for &(r, w) in second.get(&mid).map(Vec::as_slice).unwrap_or(&[]) {
                        *acc.entry(r).or_default() += v * w;
                    }
                }
                acc.values().all(|&x| x == 0)
            })
        })
    }

    /// `sum (-1)^(i+j) A^(2j)` over all generators.
    pub fn chain_euler(&self) -> LaurentPoly {
        let mut counts: HashMap<(i64, i64), i64> = HashMap::new();
        for gens in &self.generators {
            for g in gens {
                *counts.entry((g.i, g.j)).or_default() += 1;
            }
        }
        crate::homology::signed_sum(counts.into_iter().map(|((i, j), r)| (i, j, r)))
    }

    pub fn generator_count(&self) -> usize {
        self.generators.iter().map(Vec::len).sum()
    }
}
