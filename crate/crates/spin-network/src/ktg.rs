//! Planar trivalent graphs with colored edges.
//!
//! The embedding is a rotation system: every vertex lists its three edge
//! ends counterclockwise. Edges run from `ends[0]` to `ends[1]`. A box of
//! color `m` on an edge has its bottom at the first end; seen from either
//! vertex, the strands of the edge are numbered left to right.

use crate::error::SpinError;
use laurent_core::{unknot_colored, LaurentPoly, RationalFunc};
use skein_bracket::bracket;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use temperley_lieb::{jones_wenzl, SkeinElement, SkeinNode, TLElement};

/// One end of an edge: `(edge, 0)` is its start, `(edge, 1)` its end.
pub type EdgeEnd = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KtgEdge {
    pub ends: [usize; 2],
    pub color: usize,
    /// Full twists of the edge's band.
    pub framing: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ktg {
    rotation: Vec<[EdgeEnd; 3]>,
    edges: Vec<KtgEdge>,
    /// Colors of closed loops that meet no vertex.
    loops: Vec<usize>,
}

/// `(a, b, c)` is admissible when `a + b + c` is even and the triangle
/// inequalities hold.
pub fn admissible(a: usize, b: usize, c: usize) -> bool {
    (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b
}

/// Twist factor of a full twist on an edge of color `c`.
pub fn full_twist(c: usize) -> LaurentPoly {
    let c = c as i64;
    LaurentPoly::monomial(if c % 2 == 0 { 1 } else { -1 }, c * c + 2 * c)
}

/// `full_twist(c)` raised to an integer power.
pub fn twist_power(c: usize, twists: i64) -> Result<RationalFunc, SpinError> {
    let t = full_twist(c).pow(twists.unsigned_abs() as u32);
    if twists >= 0 {
        Ok(RationalFunc::from_poly(t))
    } else {
        Ok(RationalFunc::one().div_poly(&t)?)
    }
}

impl Ktg {
    /// Builds a graph; checks trivalence, admissibility and planarity.
    pub fn new(
        rotation: Vec<[EdgeEnd; 3]>,
        edges: Vec<KtgEdge>,
        loops: Vec<usize>,
    ) -> Result<Self, SpinError> {
        let g = Self {
            rotation,
            edges,
            loops,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), SpinError> {
        let mut seen = vec![[false; 2]; self.edges.len()];
        for (v, ends) in self.rotation.iter().enumerate() {
            for &(e, s) in ends {
                if e >= self.edges.len() || s > 1 || self.edges[e].ends[s] != v {
                    return Err(SpinError::Malformed(format!(
                        "vertex {v} lists edge end ({e},{s}) that does not meet it"
                    )));
                }
                if std::mem::replace(&mut seen[e][s], true) {
                    return Err(SpinError::Malformed(format!("edge end ({e},{s}) used twice")));
                }
            }
            let [a, b, c] = ends.map(|(e, _)| self.edges[e].color);
            if !admissible(a, b, c) {
                return Err(SpinError::Inadmissible(vec![a, b, c]));
            }
        }
        if let Some(e) = seen.iter().position(|s| !(s[0] && s[1])) {
            return Err(SpinError::Malformed(format!("edge {e} has a free end")));
        }
        let (faces, pieces) = (self.faces().len(), self.piece_count());
        let euler = self.rotation.len() as i64 - self.edges.len() as i64 + faces as i64;
        if euler != 2 * pieces as i64 {
            return Err(SpinError::NonPlanar(format!(
                "V - E + F = {euler} over {pieces} connected pieces"
            )));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edges(&self) -> &[KtgEdge] {
        &self.edges
    }

    pub fn rotation(&self) -> &[[EdgeEnd; 3]] {
        &self.rotation
    }

    pub fn loops(&self) -> &[usize] {
        &self.loops
    }

    /// The theta graph with edge colors `a, b, c`.
    pub fn theta(a: usize, b: usize, c: usize) -> Result<Self, SpinError> {
        let edges = [a, b, c]
            .iter()
            .map(|&color| KtgEdge {
                ends: [0, 1],
                color,
                framing: 0,
            })
            .collect();
        Self::new(
            vec![[(0, 0), (1, 0), (2, 0)], [(0, 1), (2, 1), (1, 1)]],
            edges,
            Vec::new(),
        )
    }

    /// The tetrahedron whose vertices carry the triples `(a,b,c)`,
    /// `(c,e,f)`, `(a,e,d)` and `(b,d,f)`.
    pub fn tetrahedron(colors: [usize; 6]) -> Result<Self, SpinError> {
        // Vertices 0..4 carry the four triples; edges a..f are 0..6.
        let ends = [[0, 2], [0, 3], [0, 1], [2, 3], [1, 2], [1, 3]];
        let edges = ends
            .iter()
            .zip(colors)
            .map(|(&ends, color)| KtgEdge {
                ends,
                color,
                framing: 0,
            })
            .collect();
        // Vertex 0 in the middle, 1 on top, 2 bottom left, 3 bottom right.
        let rotation = vec![
            [(2, 0), (0, 0), (1, 0)],
            [(4, 0), (2, 1), (5, 0)],
            [(3, 0), (0, 1), (4, 1)],
            [(5, 1), (1, 1), (3, 1)],
        ];
        Self::new(rotation, edges, Vec::new())
    }

    /// The vertex at the other end of an edge end.
    pub fn opposite(&self, (e, s): EdgeEnd) -> EdgeEnd {
        (e, 1 - s)
    }

    /// Position of an edge end in its vertex's rotation.
    pub fn slot_of(&self, (e, s): EdgeEnd) -> (usize, usize) {
        let v = self.edges[e].ends[s];
        let i = self.rotation[v]
            .iter()
            .position(|&x| x == (e, s))
            .expect("validated rotation");
        (v, i)
    }

    /// Faces as cyclic lists of edge ends, each the end where the face's
    /// boundary leaves a vertex. Arriving at a vertex, the boundary turns to
    /// the next end counterclockwise.
    pub fn faces(&self) -> Vec<Vec<EdgeEnd>> {
        let mut used: BTreeMap<EdgeEnd, bool> = BTreeMap::new();
        let mut faces = Vec::new();
        for v in 0..self.rotation.len() {
            for &start in &self.rotation[v] {
                if used.contains_key(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut dart = start;
                loop {
                    used.insert(dart, true);
                    face.push(dart);
                    let (w, i) = self.slot_of(self.opposite(dart));
                    dart = self.rotation[w][(i + 1) % 3];
                    if dart == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    fn piece_count(&self) -> usize {
        let n = self.rotation.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.ends[0]), find(&mut parent, e.ends[1]));
            parent[a] = b;
        }
        (0..n).filter(|&v| find(&mut parent, v) == v).count()
    }

    /// The closed skein element: a projector box on every colored edge and
    /// planar arcs inside every vertex.
    pub fn to_skein(&self) -> SkeinElement {
        let mut nodes = Vec::new();
        let mut box_of = vec![None; self.edges.len()];
        let mut cache: BTreeMap<usize, Arc<TLElement>> = BTreeMap::new();
        for (e, edge) in self.edges.iter().enumerate() {
            if edge.color > 0 {
                let p = cache
                    .entry(edge.color)
                    .or_insert_with(|| jones_wenzl(edge.color))
                    .clone();
                box_of[e] = Some(nodes.len());
                nodes.push(SkeinNode::Box(p));
            }
        }
        // Ports of an edge end, left to right as seen from its vertex.
        let view = |(e, s): EdgeEnd| -> Vec<(usize, usize)> {
            let m = self.edges[e].color;
            let Some(b) = box_of[e] else {
                return Vec::new();
            };
            if s == 0 {
                (0..m).map(|i| (b, m + i)).collect()
            } else {
                (0..m).rev().map(|i| (b, i)).collect()
            }
        };
        let mut arcs = Vec::new();
        for ends in &self.rotation {
            let colors = ends.map(|(e, _)| self.edges[e].color);
            for i in 0..3 {
                let (x, y) = (ends[i], ends[(i + 1) % 3]);
                let count = (colors[i] + colors[(i + 1) % 3] - colors[(i + 2) % 3]) / 2;
                let (vx, vy) = (view(x), view(y));
                let my = vy.len();
                for t in 0..count {
                    arcs.push((vx[t], vy[my - 1 - t]));
                }
            }
        }
        SkeinElement::new(nodes, arcs, 0)
    }

    /// The bracket of the graph, including edge framings and free loops.
    pub fn evaluate(&self) -> Result<RationalFunc, SpinError> {
        let mut value = bracket(&self.to_skein())?;
        for e in &self.edges {
            if e.framing != 0 {
                value = &value * &twist_power(e.color, e.framing)?;
            }
        }
        for &c in &self.loops {
            value = value.mul_poly(&unknot_colored(c as u32));
        }
        Ok(value)
    }

    /// Parses the text format: `V id [e1 e2 e3]` and
    /// `E id v1 v2 color framing` lines, `L color` for a free loop, `#`
    /// comments. Without an explicit edge list a vertex takes its ends in
    /// order of appearance as its counterclockwise rotation; an edge listed
    /// twice at one vertex is a loop edge.
    pub fn parse(text: &str) -> Result<Self, SpinError> {
        let bad = |line: &str| SpinError::Parse(format!("malformed line {line:?}"));
        let mut vertex_ids: BTreeMap<i64, usize> = BTreeMap::new();
        let mut vertex_lists: Vec<Option<Vec<i64>>> = Vec::new();
        let mut edge_ids: BTreeMap<i64, usize> = BTreeMap::new();
        let mut edge_lines = Vec::new();
        let mut loops = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let nums = fields[1..]
                .iter()
                .map(|f| f.parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad(line))?;
            match fields[0] {
                "V" => {
                    if nums.len() != 1 && nums.len() != 4 {
                        return Err(bad(line));
                    }
                    let idx = vertex_ids.len();
                    if vertex_ids.insert(nums[0], idx).is_some() {
                        return Err(SpinError::Parse(format!("vertex {} declared twice", nums[0])));
                    }
                    vertex_lists.push((nums.len() == 4).then(|| nums[1..].to_vec()));
                }
                "E" => {
                    if nums.len() != 5 || nums[3] < 0 {
                        return Err(bad(line));
                    }
                    let idx = edge_ids.len();
                    if edge_ids.insert(nums[0], idx).is_some() {
                        return Err(SpinError::Parse(format!("edge {} declared twice", nums[0])));
                    }
                    edge_lines.push(nums);
                }
                "L" => {
                    if nums.len() != 1 || nums[0] < 0 {
                        return Err(bad(line));
                    }
                    loops.push(nums[0] as usize);
                }
                _ => return Err(bad(line)),
            }
        }
        let vertex = |id: i64| {
            vertex_ids
                .get(&id)
                .copied()
                .ok_or_else(|| SpinError::Parse(format!("unknown vertex {id}")))
        };
        let mut edges = Vec::new();
        let mut appearance: Vec<Vec<EdgeEnd>> = vec![Vec::new(); vertex_ids.len()];
        for (e, nums) in edge_lines.iter().enumerate() {
            let ends = [vertex(nums[1])?, vertex(nums[2])?];
            appearance[ends[0]].push((e, 0));
            appearance[ends[1]].push((e, 1));
            edges.push(KtgEdge {
                ends,
                color: nums[3] as usize,
                framing: nums[4],
            });
        }
        let mut rotation = Vec::new();
        for (v, list) in vertex_lists.iter().enumerate() {
            let ends: Vec<EdgeEnd> = match list {
                None => appearance[v].clone(),
                Some(ids) => {
                    let mut out = Vec::new();
                    for id in ids {
                        let e = *edge_ids
                            .get(id)
                            .ok_or_else(|| SpinError::Parse(format!("unknown edge {id}")))?;
                        let s = if edges[e].ends[0] == v && !out.contains(&(e, 0)) {
                            0
                        } else {
                            1
                        };
                        out.push((e, s));
                    }
                    out
                }
            };
            let ends: [EdgeEnd; 3] = ends.try_into().map_err(|_| {
                SpinError::Malformed(format!("vertex {v} does not have exactly three edge ends"))
            })?;
            rotation.push(ends);
        }
        Self::new(rotation, edges, loops)
    }
}

impl fmt::Display for Ktg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, ends) in self.rotation.iter().enumerate() {
            writeln!(f, "V {} {} {} {}", v, ends[0].0, ends[1].0, ends[2].0)?;
        }
        for (e, edge) in self.edges.iter().enumerate() {
            writeln!(
                f,
                "E {} {} {} {} {}",
                e, edge.ends[0], edge.ends[1], edge.color, edge.framing
            )?;
        }
        for c in &self.loops {
            writeln!(f, "L {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use laurent_core::loop_value;

    #[test]
    fn theta_and_tetrahedron_are_planar() {
        let t = Ktg::theta(1, 1, 2).unwrap();
        assert_eq!(t.faces().len(), 3);
        let k4 = Ktg::tetrahedron([2; 6]).unwrap();
        assert_eq!(k4.faces().len(), 4);
        assert!(k4.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn twisted_rotation_is_not_planar() {
        let edges = (0..3)
            .map(|_| KtgEdge {
                ends: [0, 1],
                color: 2,
                framing: 0,
            })
            .collect();
        let same = vec![[(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 1), (2, 1)]];
        assert!(matches!(
            Ktg::new(same, edges, Vec::new()),
            Err(SpinError::NonPlanar(_))
        ));
    }

    #[test]
    fn small_thetas() {
        let t = Ktg::theta(1, 1, 0).unwrap().evaluate().unwrap();
        assert_eq!(t, RationalFunc::from_poly(loop_value()));
        assert!(Ktg::theta(0, 0, 0).unwrap().evaluate().unwrap().is_one());
        assert!(matches!(Ktg::theta(1, 1, 1), Err(SpinError::Inadmissible(_))));
    }

    #[test]
    fn text_round_trip() {
        let k4 = Ktg::tetrahedron([2, 2, 2, 2, 2, 2]).unwrap();
        let back = Ktg::parse(&k4.to_string()).unwrap();
        assert_eq!(back, k4);
        let theta = Ktg::parse("V 1\nV 2 1 3 2\nE 1 1 2 2 0\nE 2 1 2 2 0\nE 3 1 2 2 0\n").unwrap();
        assert_eq!(theta.faces().len(), 3);
        let twisted = Ktg::parse("V 1\nV 2\nE 1 1 2 2 0\nE 2 1 2 2 0\nE 3 1 2 2 0\n");
        assert!(matches!(twisted, Err(SpinError::NonPlanar(_))));
    }
}
