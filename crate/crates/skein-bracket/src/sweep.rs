//! Sweep contraction of closed skein elements.
//!
//! Nodes are absorbed one at a time. The absorbed region is bounded by a
//! list of open arcs (the frontier); a partial state records how the region
//! pairs up those arcs, and the map from pairings to coefficients is updated
//! with every resolution of the next node. Loops closed inside the region
//! are paid for immediately with powers of `-A^2 - A^-2`.
//!
//! Box coefficients are rational. Each box is rescaled to Laurent numerators
//! over its own common denominator, so the sweep runs in `Z[A, A^-1]` and the
//! product of denominators is divided out once at the end.

use crate::error::SkeinError;
use laurent_core::{laurent_divide, laurent_gcd, LaurentPoly, RationalFunc};
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::Arc;
use temperley_lieb::{loop_power, SkeinElement, SkeinNode, TLElement};

/// State counts at which a step fans out over threads.
const PARALLEL_STATES: usize = 256;

/// Ways to resolve one node: partner arrays over its ports with weights.
struct Resolutions {
    options: Vec<(Vec<usize>, LaurentPoly)>,
    den: LaurentPoly,
}

fn crossing_resolutions() -> Resolutions {
    Resolutions {
        options: vec![
            (vec![1, 0, 3, 2], LaurentPoly::monomial(1, 1)),
            (vec![3, 2, 1, 0], LaurentPoly::monomial(1, -1)),
        ],
        den: LaurentPoly::one(),
    }
}

fn box_resolutions(b: &TLElement) -> Resolutions {
    let mut den = LaurentPoly::one();
    for c in b.terms().values() {
        let g = laurent_gcd(&den, c.den());
        den = &den * &laurent_divide(c.den(), &g).expect("gcd divides");
    }
    let options = b
        .terms()
        .iter()
        .map(|(m, c)| {
            let scale = laurent_divide(&den, c.den()).expect("common denominator");
            (m.partners(), c.num() * &scale)
        })
        .collect();
    Resolutions { options, den }
}

/// Partner of every port: `link[v][p] = (u, q)`.
fn port_links(s: &SkeinElement) -> Vec<Vec<(usize, usize)>> {
    let mut link: Vec<Vec<(usize, usize)>> = s
        .nodes()
        .iter()
        .map(|v| vec![(usize::MAX, 0); v.arity()])
        .collect();
    for &(a, b) in s.arcs() {
        link[a.0][a.1] = b;
        link[b.0][b.1] = a;
    }
    link
}

/// Greedy absorption order from a given start node, with the widest and the
/// summed frontier sizes along the way.
fn greedy_from(link: &[Vec<(usize, usize)>], start: usize) -> (Vec<usize>, usize, usize) {
    let count = link.len();
    let mut done = vec![false; count];
    let mut conn = vec![0usize; count];
    let open: Vec<usize> = link
        .iter()
        .enumerate()
        .map(|(v, ports)| ports.iter().filter(|(u, _)| *u != v).count())
        .collect();
    let mut order = Vec::with_capacity(count);
    let (mut frontier, mut widest, mut total) = (0usize, 0usize, 0usize);
    let mut next = Some(start);
    while let Some(v) = next {
        done[v] = true;
        order.push(v);
        frontier = frontier + open[v] - 2 * conn[v];
        widest = widest.max(frontier);
        total += frontier;
        for &(u, _) in &link[v] {
            if u != v && !done[u] {
                conn[u] += 1;
            }
        }
        next = (0..count)
            .filter(|&u| !done[u])
            .min_by_key(|&u| (open[u] as isize - 2 * conn[u] as isize, usize::MAX - conn[u], u));
    }
    (order, widest, total)
}

/// The absorption order used by [`bracket`]: the best greedy run over a set
/// of start nodes, compared by widest frontier and then total frontier.
pub fn sweep_order(s: &SkeinElement) -> Vec<usize> {
    let link = port_links(s);
    let count = link.len();
    if count == 0 {
        return Vec::new();
    }
    let starts: Vec<usize> = if count <= 128 {
        (0..count).collect()
    } else {
        (0..32).map(|i| i * count / 32).collect()
    };
    starts
        .into_par_iter()
        .map(|v| greedy_from(&link, v))
        .min_by_key(|(order, widest, total)| (*widest, *total, order[0]))
        .map(|(order, _, _)| order)
        .expect("at least one start")
}

/// How the frontier changes when one node is absorbed.
struct Step {
    /// Points are old frontier slots `0..old` then ports `old..old+arity`.
    old: usize,
    /// Wire partner of each point, if the wire stays inside the new region.
    wire: Vec<Option<usize>>,
    /// New frontier index of each point that remains open.
    new_index: Vec<Option<usize>>,
    new_len: usize,
}

/// Partial states: frontier pairing to Laurent coefficient.
type States = HashMap<Vec<u16>, LaurentPoly>;

fn apply(
    step: &Step,
    pairing: &[u16],
    coeff: &LaurentPoly,
    res: &Resolutions,
    out: &mut HashMap<(Vec<u16>, usize), LaurentPoly>,
) {
    let points = step.wire.len();
    for (rho, w) in &res.options {
        let inner = |x: usize| -> usize {
            if x < step.old {
                pairing[x] as usize
            } else {
                step.old + rho[x - step.old]
            }
        };
        let mut seen = vec![false; points];
        let mut next = vec![0u16; step.new_len];
        for start in 0..points {
            let Some(a) = step.new_index[start] else {
                continue;
            };
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut x = inner(start);
            loop {
                seen[x] = true;
                match step.wire[x] {
                    Some(y) => {
                        seen[y] = true;
                        x = inner(y);
                    }
                    None => break,
                }
            }
            let b = step.new_index[x].expect("path ends on the frontier");
            next[a] = b as u16;
            next[b] = a as u16;
        }
        let mut loops = 0;
        for start in 0..points {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                let y = inner(x);
                seen[y] = true;
                x = step.wire[y].expect("closed path");
            }
        }
        let c = coeff * w;
        match out.get_mut(&(next.clone(), loops)) {
            Some(v) => *v += &c,
            None => {
                out.insert((next, loops), c);
            }
        }
    }
}

fn advance(states: States, step: &Step, res: &Resolutions) -> States {
    let grouped: HashMap<(Vec<u16>, usize), LaurentPoly> = if states.len() >= PARALLEL_STATES {
        let entries: Vec<(Vec<u16>, LaurentPoly)> = states.into_iter().collect();
        entries
            .par_iter()
            .fold(HashMap::new, |mut acc, (p, c)| {
                apply(step, p, c, res, &mut acc);
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    match a.get_mut(&k) {
                        Some(x) => *x += &v,
                        None => {
                            a.insert(k, v);
                        }
                    }
                }
                a
            })
    } else {
        let mut acc = HashMap::new();
        for (p, c) in &states {
            apply(step, p, c, res, &mut acc);
        }
        acc
    };
    let mut out: States = HashMap::with_capacity(grouped.len());
    for ((p, loops), c) in grouped {
        if c.is_zero() {
            continue;
        }
        let c = if loops == 0 { c } else { &c * &loop_power(loops) };
        match out.get_mut(&p) {
            Some(v) => *v += &c,
            None => {
                out.insert(p, c);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Kauffman bracket of a closed skein element by sweep contraction.
pub fn bracket(s: &SkeinElement) -> Result<RationalFunc, SkeinError> {
    let (num, den) = bracket_fraction(s)?;
    Ok(RationalFunc::new(num, den)?)
}

/// The bracket as an unreduced fraction: a Laurent numerator over the
/// product of the box denominators.
pub fn bracket_fraction(s: &SkeinElement) -> Result<(LaurentPoly, LaurentPoly), SkeinError> {
    if !s.is_closed() {
        return Err(SkeinError::OpenSkein);
    }
    let link = port_links(s);
    let order = sweep_order(s);
    let mut box_cache: HashMap<*const TLElement, Arc<Resolutions>> = HashMap::new();
    let crossing = Arc::new(crossing_resolutions());
    let resolutions: Vec<Arc<Resolutions>> = s
        .nodes()
        .iter()
        .map(|v| match v {
            SkeinNode::Crossing => crossing.clone(),
            SkeinNode::Box(b) => box_cache
                .entry(Arc::as_ptr(b))
                .or_insert_with(|| Arc::new(box_resolutions(b)))
                .clone(),
        })
        .collect();

    let mut done = vec![false; link.len()];
    // Frontier entries are the absorbed-side ports of open arcs.
    let mut frontier: Vec<(usize, usize)> = Vec::new();
    let mut states: States = HashMap::from([(Vec::new(), LaurentPoly::one())]);
    for &v in &order {
        let old = frontier.len();
        let arity = link[v].len();
        let position: HashMap<(usize, usize), usize> =
            frontier.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut wire = vec![None; old + arity];
        let mut consumed = vec![false; old];
        let mut added = Vec::new();
        for p in 0..arity {
            let (u, q) = link[v][p];
            if u == v {
                wire[old + p] = Some(old + q);
            } else if done[u] {
                let i = position[&(u, q)];
                consumed[i] = true;
                wire[i] = Some(old + p);
                wire[old + p] = Some(i);
            } else {
                added.push(p);
            }
        }
        let mut new_index = vec![None; old + arity];
        let mut next_frontier = Vec::new();
        for i in 0..old {
            if !consumed[i] {
                new_index[i] = Some(next_frontier.len());
                next_frontier.push(frontier[i]);
            }
        }
        for &p in &added {
            new_index[old + p] = Some(next_frontier.len());
            next_frontier.push((v, p));
        }
        let step = Step {
            old,
            wire,
            new_index,
            new_len: next_frontier.len(),
        };
        states = advance(states, &step, &resolutions[v]);
        frontier = next_frontier;
        done[v] = true;
    }
    debug_assert!(frontier.is_empty());
    let num = states
        .remove(&Vec::new())
        .unwrap_or_else(LaurentPoly::zero);
    let num = if s.loops() == 0 {
        num
    } else {
        &num * &loop_power(s.loops())
    };
    let den = resolutions
        .iter()
        .fold(LaurentPoly::one(), |acc, r| &acc * &r.den);
    Ok((num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use laurent_core::loop_value;
    use temperley_lieb::jones_wenzl;

    fn kinked_loop() -> SkeinElement {
        // Ports 1 and 2 joined: the A-smoothing splits off a loop.
        SkeinElement::new(
            vec![SkeinNode::Crossing],
            vec![((0, 1), (0, 2)), ((0, 3), (0, 0))],
            0,
        )
    }

    #[test]
    fn empty_and_loops() {
        assert!(bracket(&SkeinElement::circles(0)).unwrap().is_one());
        let two = bracket(&SkeinElement::circles(2)).unwrap();
        assert_eq!(two, RationalFunc::from_poly(loop_value().pow(2)));
    }

    #[test]
    fn single_kink() {
        let b = bracket(&kinked_loop()).unwrap();
        // A-smoothing: one loop; B-smoothing: two loops.
        let expected = &LaurentPoly::monomial(-1, -3) * &loop_value();
        assert_eq!(b, RationalFunc::from_poly(expected));
    }

    #[test]
    fn projector_closure() {
        for n in 1..=4 {
            let b = bracket(&SkeinElement::box_closure(jones_wenzl(n))).unwrap();
            assert_eq!(b, RationalFunc::from_poly(laurent_core::unknot_colored(n as u32)));
        }
    }

    #[test]
    fn open_elements_are_rejected() {
        let s = SkeinElement::new(vec![SkeinNode::Crossing], vec![((0, 0), (0, 1))], 0);
        assert_eq!(bracket(&s), Err(SkeinError::OpenSkein));
    }
}
