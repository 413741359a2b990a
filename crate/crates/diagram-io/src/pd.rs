//! Planar diagram codes.
//!
//! A crossing `X[a,b,c,d]` lists the four edge labels counterclockwise,
//! starting from the incoming under-strand, so the under-strand runs from `a`
//! to `c`. The crossing is positive when the over-strand runs from `d` to `b`.

use crate::error::DiagramError;
use crate::wiring::Port;
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

/// Position of an edge end: crossing index and slot `0..4` in its quadruple.
pub type Occurrence = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagram {
    crossings: Vec<[u32; 4]>,
    loops: usize,
    signs: Vec<i8>,
    /// Edge labels of each component with crossings, in traversal order,
    /// starting from the smallest label of the component.
    components: Vec<Vec<u32>>,
}

/// One token of the textual PD format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    X([u32; 4]),
    T([u32; 4]),
    U,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, DiagramError> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    let skip_space = |i: &mut usize| {
        while *i < chars.len() && (chars[*i].is_whitespace() || chars[*i] == ',') {
            *i += 1;
        }
    };
    loop {
        skip_space(&mut i);
        if i >= chars.len() {
            break;
        }
        let head = chars[i];
        match head {
            'U' => {
                out.push(Token::U);
                i += 1;
                continue;
            }
            'X' | 'T' => {}
            other => {
                return Err(DiagramError::Parse(format!(
                    "unexpected character {other:?} at offset {i}"
                )))
            }
        }
        i += 1;
        if chars.get(i) != Some(&'[') {
            return Err(DiagramError::Parse(format!("expected '[' after {head}")));
        }
        let close = chars[i..]
            .iter()
            .position(|&c| c == ']')
            .map(|p| p + i)
            .ok_or_else(|| DiagramError::Parse(format!("unterminated {head}[")))?;
        let body: String = chars[i + 1..close].iter().collect();
        let labels = body
            .split(',')
            .map(|s| {
                let s = s.trim();
                s.parse::<u32>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| DiagramError::Parse(format!("bad edge label {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let quad: [u32; 4] = labels.try_into().map_err(|v: Vec<u32>| {
            DiagramError::Parse(format!("{head}[...] needs 4 labels, found {}", v.len()))
        })?;
        out.push(if head == 'X' {
            Token::X(quad)
        } else {
            Token::T(quad)
        });
        i = close + 1;
    }
    Ok(out)
}

/// Parses whitespace-separated `X[a,b,c,d]` and `U` tokens.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(DiagramError::Parse(
            "empty diagram; use the token U for an unknot".into(),
        ));
    }
    let mut crossings = Vec::new();
    let mut loops = 0;
    for t in tokens {
        match t {
            Token::X(q) => crossings.push(q),
            Token::U => loops += 1,
            Token::T(_) => {
                return Err(DiagramError::Parse(
                    "twist slot T[...] is only allowed in templates".into(),
                ))
            }
        }
    }
    Diagram::from_pd(crossings, loops)
}

/// Groups the occurrences of every label, requiring exactly two each.
pub(crate) fn occurrences(
    quads: &[[u32; 4]],
) -> Result<BTreeMap<u32, [Occurrence; 2]>, DiagramError> {
    let mut seen: BTreeMap<u32, Vec<Occurrence>> = BTreeMap::new();
    for (i, q) in quads.iter().enumerate() {
        for (p, &l) in q.iter().enumerate() {
            if l == 0 {
                return Err(DiagramError::Topology("edge label 0 is not allowed".into()));
            }
            seen.entry(l).or_default().push((i, p));
        }
    }
    seen.into_iter()
        .map(|(l, v)| match v.as_slice() {
            [x, y] => Ok((l, [*x, *y])),
            _ => Err(DiagramError::Topology(format!(
                "edge label {l} occurs {} times, expected 2",
                v.len()
            ))),
        })
        .collect()
}

/// Checks that the 4-valent graph given by the quadruples (ports listed
/// counterclockwise) is embedded in the sphere: V - E + F = 2 per connected
/// component.
pub(crate) fn check_planar(
    quads: &[[u32; 4]],
    occ: &BTreeMap<u32, [Occurrence; 2]>,
) -> Result<(), DiagramError> {
    if quads.is_empty() {
        return Ok(());
    }
    let other = |l: u32, o: Occurrence| -> Occurrence {
        let [x, y] = occ[&l];
        if x == o {
            y
        } else {
            x
        }
    };
    // A dart leaves crossing i through position p.
    let mut visited: HashSet<Occurrence> = HashSet::new();
    let mut faces = 0usize;
    for i in 0..quads.len() {
        for p in 0..4 {
            if visited.contains(&(i, p)) {
                continue;
            }
            faces += 1;
            let mut cur = (i, p);
            while visited.insert(cur) {
                let l = quads[cur.0][cur.1];
                let (j, q) = other(l, cur);
                cur = (j, (q + 3) % 4);
            }
        }
    }
    // Connected components of the crossing graph.
    let mut parent: Vec<usize> = (0..quads.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for [(i, _), (j, _)] in occ.values() {
        let (a, b) = (find(&mut parent, *i), find(&mut parent, *j));
        parent[a] = b;
    }
    let pieces = (0..quads.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count();
    let v = quads.len() as i64;
    let e = 2 * v;
    if v - e + faces as i64 != 2 * pieces as i64 {
        return Err(DiagramError::Topology(format!(
            "diagram is not planar (V={v}, E={e}, F={faces}, pieces={pieces})"
        )));
    }
    Ok(())
}

impl Diagram {
    /// Validates PD quadruples and derives orientation, signs and components.
    pub fn from_pd(crossings: Vec<[u32; 4]>, loops: usize) -> Result<Self, DiagramError> {
        let occ = occurrences(&crossings)?;
        check_planar(&crossings, &occ)?;
        let other = |l: u32, o: Occurrence| -> Occurrence {
            let [x, y] = occ[&l];
            if x == o {
                y
            } else {
                x
            }
        };
        let mut visited: HashSet<u32> = HashSet::new();
        let mut heads: HashSet<Occurrence> = HashSet::new();
        let mut components = Vec::new();
        for (&start, &[_, second]) in &occ {
            if visited.contains(&start) {
                continue;
            }
            // Walk with `second` as the head of `start`.
            let mut seq: Vec<(u32, Occurrence)> = Vec::new();
            let (mut label, mut head) = (start, second);
            loop {
                visited.insert(label);
                seq.push((label, head));
                let exit = (head.0, (head.1 + 2) % 4);
                label = crossings[exit.0][exit.1];
                head = other(label, exit);
                if label == start && head == second {
                    break;
                }
            }
            let forward = seq.iter().filter(|(_, h)| h.1 == 0).count();
            let backward = seq.iter().filter(|(_, h)| h.1 == 2).count();
            if forward > 0 && backward > 0 {
                return Err(DiagramError::Topology(format!(
                    "component through edge {start} has no consistent orientation"
                )));
            }
            let reverse = if backward > 0 {
                true
            } else if forward > 0 {
                false
            } else {
                // The component only passes over: orient it so labels increase.
                let m = start;
                let pos = seq.iter().position(|(l, _)| *l == m).unwrap();
                let next = seq[(pos + 1) % seq.len()].0;
                let prev = seq[(pos + seq.len() - 1) % seq.len()].0;
                next != m + 1 && prev == m + 1
            };
            if reverse {
                seq.reverse();
                for item in seq.iter_mut() {
                    item.1 = other(item.0, item.1);
                }
            }
            let rot = seq.iter().position(|(l, _)| *l == start).unwrap();
            seq.rotate_left(rot);
            heads.extend(seq.iter().map(|(_, h)| *h));
            components.push(seq.into_iter().map(|(l, _)| l).collect());
        }
        let signs = (0..crossings.len())
            .map(|i| if heads.contains(&(i, 3)) { 1 } else { -1 })
            .collect();
        Ok(Self {
            crossings,
            loops,
            signs,
            components,
        })
    }

    /// Builds a diagram from crossing nodes joined by arcs.
    ///
    /// Every node has ports `0..4` counterclockwise with the under-strand on
    /// ports 0 and 2. `hints` lists ports through which a strand should enter
    /// its node; the first hint met on each component fixes its direction.
    /// Labels are assigned consecutively along each component.
    pub fn from_planar(
        nodes: usize,
        arcs: &[(Port, Port)],
        loops: usize,
        hints: &[Port],
    ) -> Result<Self, DiagramError> {
        let mut at: Vec<Option<(usize, usize)>> = vec![None; 4 * nodes];
        for (k, &(a, b)) in arcs.iter().enumerate() {
            for (side, p) in [(0, a), (1, b)] {
                let slot = &mut at[4 * p.node + p.port];
                if slot.is_some() {
                    return Err(DiagramError::Topology(format!(
                        "port {}/{} used twice",
                        p.node, p.port
                    )));
                }
                *slot = Some((k, side));
            }
        }
        if let Some(idx) = at.iter().position(|s| s.is_none()) {
            return Err(DiagramError::Topology(format!(
                "port {}/{} is not connected",
                idx / 4,
                idx % 4
            )));
        }
        let end = |k: usize, side: usize| if side == 0 { arcs[k].0 } else { arcs[k].1 };
        let mut label = vec![0u32; arcs.len()];
        let mut is_head = vec![false; 4 * nodes];
        let mut next_label = 1u32;
        let starts = hints
            .iter()
            .map(|h| at[4 * h.node + h.port].unwrap())
            .chain((0..arcs.len()).map(|k| (k, 1)));
        for (k0, head_side) in starts {
            if label[k0] != 0 {
                continue;
            }
            let (mut k, mut hs) = (k0, head_side);
            while label[k] == 0 {
                label[k] = next_label;
                next_label += 1;
                let h = end(k, hs);
                is_head[4 * h.node + h.port] = true;
                let exit = 4 * h.node + (h.port + 2) % 4;
                let (nk, side) = at[exit].unwrap();
                k = nk;
                hs = 1 - side;
            }
        }
        let lab = |node: usize, port: usize| label[at[4 * node + port].unwrap().0];
        let crossings = (0..nodes)
            .map(|i| {
                let s = if is_head[4 * i] { 0 } else { 2 };
                [0, 1, 2, 3].map(|d| lab(i, (s + d) % 4))
            })
            .collect();
        Self::from_pd(crossings, loops)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of crossingless unknotted components (`U` tokens).
    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn component_count(&self) -> usize {
        self.components.len() + self.loops
    }

    /// Edge labels of each component that has crossings, in traversal order.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    /// The two ends of every edge label, in order of appearance.
    pub fn edge_ends(&self) -> BTreeMap<u32, [Occurrence; 2]> {
        occurrences(&self.crossings).expect("validated at construction")
    }

    /// Number of positive and negative crossings.
    pub fn sign_counts(&self) -> (usize, usize) {
        let pos = self.signs.iter().filter(|&&s| s > 0).count();
        (pos, self.signs.len() - pos)
    }

    /// The mirror image: every crossing changes which strand is over.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], &s)| if s > 0 { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        Self::from_pd(crossings, self.loops).expect("mirror of a valid diagram")
    }

    /// Disjoint union with another diagram, relabeling the other's edges.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.crossings.iter().flatten().copied().max().unwrap_or(0);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|q| q.map(|l| l + shift)));
        Self::from_pd(crossings, self.loops + other.loops).expect("union of valid diagrams")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "crossings": self.crossings,
            "loops": self.loops,
            "signs": self.signs,
            "components": self.component_count(),
            "writhe": self.writhe(),
        })
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
            .collect();
        parts.extend(std::iter::repeat("U".to_string()).take(self.loops));
        write!(f, "{}", parts.join(" "))
    }
}

impl std::str::FromStr for Diagram {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn trefoil_parses_with_negative_writhe() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.mirror().writhe(), 3);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert!(matches!(parse_pd("X[1,2,3]"), Err(DiagramError::Parse(_))));
        assert!(matches!(parse_pd(""), Err(DiagramError::Parse(_))));
        assert!(matches!(parse_pd("X[1,2,3,4]"), Err(DiagramError::Topology(_))));
        assert!(matches!(parse_pd("Y[1,2,3,4]"), Err(DiagramError::Parse(_))));
    }

    #[test]
    fn unknot_token_gives_one_component() {
        let d = parse_pd("U").unwrap();
        assert_eq!((d.crossing_count(), d.component_count(), d.writhe()), (0, 1, 0));
    }

    #[test]
    fn hopf_link_has_two_components() {
        let d = parse_pd("X[4,1,3,2] X[2,3,1,4]").unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe().abs(), 2);
    }

    #[test]
    fn non_planar_gluing_is_rejected() {
        // Two crossings glued with a twist that forces genus one.
        let r = Diagram::from_pd(vec![[1, 2, 3, 4], [1, 3, 2, 4]], 0);
        assert!(r.is_err());
    }

    #[test]
    fn display_round_trips() {
        let d = parse_pd("X[1,4,2,5]  X[3,6,4,1]\nX[5,2,6,3] U").unwrap();
        assert_eq!(parse_pd(&d.to_string()).unwrap(), d);
    }
}
