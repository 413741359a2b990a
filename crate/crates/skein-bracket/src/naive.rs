//! Brute-force state sums used as test oracles.

use crate::error::SkeinError;
use diagram_io::{resolve, Diagram, KauffmanState};
use laurent_core::{loop_value, LaurentPoly, RationalFunc};
use std::collections::BTreeMap;
use temperley_lieb::{insert_into_skein, SkeinElement, SkeinNode};

/// Largest crossing count the brute-force sums accept.
pub const NAIVE_CAP: usize = 20;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

/// Sums `A^(a-b) delta^loops` over the tallies `(a - b, loops) -> count`.
fn assemble(tally: &BTreeMap<(i64, usize), i64>) -> LaurentPoly {
    let delta = loop_value();
    tally
        .iter()
        .fold(LaurentPoly::zero(), |acc, (&(e, loops), &count)| {
            &acc + &(&delta.pow(loops as u32) * &LaurentPoly::monomial(count, e))
        })
}

/// Expands every box into matchings, then enumerates all `2^c` crossing
/// states and counts loops by union-find.
pub fn bracket_naive(s: &SkeinElement) -> Result<RationalFunc, SkeinError> {
    if !s.is_closed() {
        return Err(SkeinError::OpenSkein);
    }
    if let Some(v) = s
        .nodes()
        .iter()
        .position(|n| matches!(n, SkeinNode::Box(_)))
    {
        let SkeinNode::Box(b) = &s.nodes()[v] else {
            unreachable!()
        };
        let mut total = RationalFunc::zero();
        for (c, sub) in insert_into_skein(s, v, b)? {
            total = &total + &(&c * &bracket_naive(&sub)?);
        }
        return Ok(total);
    }
    let c = s.nodes().len();
    if c > NAIVE_CAP {
        return Err(SkeinError::TooLarge { cap: NAIVE_CAP, got: c });
    }
    let mut tally = BTreeMap::new();
    for state in 0u64..(1 << c) {
        let mut parent: Vec<usize> = (0..4 * c).collect();
        for &((u, p), (v, q)) in s.arcs() {
            union(&mut parent, 4 * u + p, 4 * v + q);
        }
        let mut e = 0i64;
        for x in 0..c {
            if state >> x & 1 == 0 {
                union(&mut parent, 4 * x, 4 * x + 1);
                union(&mut parent, 4 * x + 2, 4 * x + 3);
                e += 1;
            } else {
                union(&mut parent, 4 * x, 4 * x + 3);
                union(&mut parent, 4 * x + 1, 4 * x + 2);
                e -= 1;
            }
        }
        let loops = (0..4 * c).filter(|&i| find(&mut parent, i) == i).count() + s.loops();
        *tally.entry((e, loops)).or_insert(0) += 1;
    }
    Ok(RationalFunc::from_poly(assemble(&tally)))
}

/// The state sum of a diagram using the smoothing rules of `diagram-io`:
/// bit 0 is the A-smoothing with weight `A`, bit 1 the B-smoothing with
/// weight `A^-1`.
pub fn bracket_state_sum(d: &Diagram) -> Result<LaurentPoly, SkeinError> {
    let c = d.crossing_count();
    if c > NAIVE_CAP {
        return Err(SkeinError::TooLarge { cap: NAIVE_CAP, got: c });
    }
    let mut tally = BTreeMap::new();
    for index in 0u64..(1 << c) {
        let s = KauffmanState::from_index(index, c);
        let a = s.a_count() as i64;
        let r = resolve(d, &s)?;
        *tally.entry((2 * a - c as i64, r.loop_count)).or_insert(0) += 1;
    }
    Ok(assemble(&tally))
}
