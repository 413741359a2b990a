//! Reduction of a planar trivalent graph to theta graphs.
//!
//! Each step either removes a colorless edge, undoes the framing of an edge,
//! collapses a bigon face (the inverse of a fusion) or contracts a
//! triangular face to a vertex. The product of the step factors times the
//! final theta values and free loops is the bracket of the graph.

use crate::error::SpinError;
use crate::ktg::{twist_power, EdgeEnd, Ktg, KtgEdge};
use crate::values::{sixj, theta};
use laurent_core::{unknot_colored, RationalFunc};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Removes `twists` full twists from an edge of the given color.
    Untwist { color: usize, twists: i64, factor: RationalFunc },
    /// Deletes an edge of color zero and smooths its end vertices.
    Erase,
    /// Replaces a bigon with sides `sides` between two legs of color `leg`
    /// by a single edge.
    Bubble { leg: usize, sides: [usize; 2], factor: RationalFunc },
    /// Contracts a triangle with legs `legs` and sides `sides` to a vertex.
    Triangle { legs: [usize; 3], sides: [usize; 3], factor: RationalFunc },
    /// A step that shows the graph evaluates to zero.
    Vanish(String),
}

impl Move {
    pub fn factor(&self) -> RationalFunc {
        match self {
            Move::Untwist { factor, .. }
            | Move::Bubble { factor, .. }
            | Move::Triangle { factor, .. } => factor.clone(),
            Move::Erase => RationalFunc::one(),
            Move::Vanish(_) => RationalFunc::zero(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Move::Untwist { .. } => "untwist",
            Move::Erase => "erase",
            Move::Bubble { .. } => "bubble",
            Move::Triangle { .. } => "triangle",
            Move::Vanish(_) => "vanish",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Untwist { color, twists, factor } => {
                write!(f, "untwist color {color} by {twists}: {factor}")
            }
            Move::Erase => write!(f, "erase color 0 edge"),
            Move::Bubble { leg, sides, factor } => {
                write!(f, "bubble leg {leg} sides {sides:?}: {factor}")
            }
            Move::Triangle { legs, sides, factor } => {
                write!(f, "triangle legs {legs:?} sides {sides:?}: {factor}")
            }
            Move::Vanish(why) => write!(f, "vanish: {why}"),
        }
    }
}

/// The moves applied to a graph, in order, with what is left at the end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub moves: Vec<Move>,
    /// Number of triangle moves.
    pub triangles: usize,
    /// Product of all move factors.
    pub factor: RationalFunc,
    /// Colors of the theta graphs left at the end.
    pub finals: Vec<[usize; 3]>,
    /// Colors of the free loops left at the end.
    pub loops: Vec<usize>,
}

impl ReductionTrace {
    /// Whether every move is a triangle move.
    pub fn triangles_only(&self) -> bool {
        self.moves.iter().all(|m| matches!(m, Move::Triangle { .. }))
    }

    /// `factor * prod theta(finals) * prod O(loops)`.
    pub fn value(&self) -> Result<RationalFunc, SpinError> {
        let mut v = self.factor.clone();
        if v.is_zero() {
            return Ok(v);
        }
        for &[a, b, c] in &self.finals {
            v = &v * &theta(a, b, c)?;
        }
        for &c in &self.loops {
            v = v.mul_poly(&unknot_colored(c as u32));
        }
        Ok(v)
    }
}

/// A graph under surgery: removed vertices and edges are `None`.
struct Work {
    rotation: Vec<Option<[EdgeEnd; 3]>>,
    edges: Vec<Option<KtgEdge>>,
    loops: Vec<usize>,
}

impl Work {
    fn new(g: &Ktg) -> Self {
        Self {
            rotation: g.rotation().iter().map(|r| Some(*r)).collect(),
            edges: g.edges().iter().map(|e| Some(e.clone())).collect(),
            loops: g.loops().to_vec(),
        }
    }

    /// Joins two edge ends whose vertices are gone into one edge.
    fn join(&mut self, (ex, sx): EdgeEnd, (ey, sy): EdgeEnd) {
        if ex == ey {
            let e = self.edges[ex].take().expect("live edge");
            self.loops.push(e.color);
            return;
        }
        let y = self.edges[ey].take().expect("live edge");
        let far = (ey, 1 - sy);
        let w = y.ends[far.1];
        let x = self.edges[ex].as_mut().expect("live edge");
        debug_assert_eq!(x.color, y.color);
        x.ends[sx] = w;
        x.framing += y.framing;
        let slot = self.rotation[w]
            .as_mut()
            .expect("far end on a live vertex")
            .iter_mut()
            .find(|end| **end == far)
            .expect("far end listed at its vertex");
        *slot = (ex, sx);
    }

    /// Deletes an edge and smooths every vertex it touched.
    fn drop_edge(&mut self, e: usize) {
        let edge = self.edges[e].take().expect("live edge");
        for v in edge.ends {
            let Some(ends) = self.rotation[v].take() else {
                continue;
            };
            let rest: Vec<EdgeEnd> = ends.into_iter().filter(|x| x.0 != e).collect();
            match rest.as_slice() {
                [x, y] => self.join(*x, *y),
                [x] => self.drop_edge(x.0),
                _ => {}
            }
        }
    }

    fn finish(self) -> Result<Ktg, SpinError> {
        let mut vertex_index = vec![usize::MAX; self.rotation.len()];
        let mut next = 0;
        for (v, r) in self.rotation.iter().enumerate() {
            if r.is_some() {
                vertex_index[v] = next;
                next += 1;
            }
        }
        let mut edge_index = vec![usize::MAX; self.edges.len()];
        let mut edges = Vec::new();
        for (e, edge) in self.edges.into_iter().enumerate() {
            if let Some(mut edge) = edge {
                edge_index[e] = edges.len();
                edge.ends = edge.ends.map(|v| vertex_index[v]);
                edges.push(edge);
            }
        }
        let rotation = self
            .rotation
            .into_iter()
            .flatten()
            .map(|r| r.map(|(e, s)| (edge_index[e], s)))
            .collect();
        Ktg::new(rotation, edges, self.loops)
    }
}

/// Vertices of each connected piece.
fn pieces(g: &Ktg) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut piece = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if piece[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        piece[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &(e, s) in &g.rotation()[v] {
                let w = g.edges()[e].ends[1 - s];
                if piece[w] == usize::MAX {
                    piece[w] = id;
                    stack.push(w);
                }
            }
        }
        out.push(members);
    }
    out
}

struct Reducer {
    moves: Vec<Move>,
    factor: RationalFunc,
    finals: Vec<[usize; 3]>,
    loops: Vec<usize>,
}

impl Reducer {
    fn push(&mut self, m: Move) {
        self.factor = &self.factor * &m.factor();
        self.moves.push(m);
    }

    /// Removes colorless edges and framings. Returns `None` when a tadpole
    /// makes the graph vanish.
    fn clean(&mut self, g: Ktg) -> Result<Option<Ktg>, SpinError> {
        let mut w = Work::new(&g);
        for e in 0..w.edges.len() {
            let Some(edge) = w.edges[e].as_mut() else {
                continue;
            };
            if edge.framing != 0 {
                let (color, twists) = (edge.color, edge.framing);
                edge.framing = 0;
                let factor = twist_power(color, twists)?;
                self.push(Move::Untwist { color, twists, factor });
            }
        }
        while let Some(e) = (0..w.edges.len()).find(|&e| w.edges[e].as_ref().is_some_and(|x| x.color == 0)) {
            w.drop_edge(e);
            self.push(Move::Erase);
        }
        // Framing carried into joined edges and loops by the erasures.
        for e in 0..w.edges.len() {
            if let Some(edge) = w.edges[e].as_mut() {
                if edge.framing != 0 {
                    let (color, twists) = (edge.color, edge.framing);
                    edge.framing = 0;
                    let factor = twist_power(color, twists)?;
                    self.push(Move::Untwist { color, twists, factor });
                }
            }
        }
        for e in 0..w.edges.len() {
            if let Some(edge) = w.edges[e].as_ref() {
                if edge.ends[0] == edge.ends[1] {
                    self.push(Move::Vanish(format!(
                        "edge of color {} returns to its own vertex",
                        edge.color
                    )));
                    return Ok(None);
                }
            }
        }
        let g = w.finish()?;
        Ok(Some(g))
    }

    /// Moves theta pieces and free loops into the final lists.
    fn strip_thetas(&mut self, g: Ktg) -> Result<Ktg, SpinError> {
        let mut w = Work::new(&g);
        self.loops.append(&mut w.loops);
        for piece in pieces(&g) {
            if piece.len() != 2 {
                continue;
            }
            let ends = w.rotation[piece[0]].take().expect("live vertex");
            w.rotation[piece[1]] = None;
            self.finals.push(ends.map(|(e, _)| {
                w.edges[e].take().expect("theta edge").color
            }));
        }
        w.finish()
    }

    fn bubble(&mut self, g: &Ktg, face: &[EdgeEnd]) -> Result<Ktg, SpinError> {
        let (d0, d1) = (face[0], face[1]);
        let p0 = g.edges()[d0.0].ends[d0.1];
        let p1 = g.edges()[d1.0].ends[d1.1];
        let leg = |v: usize| -> EdgeEnd {
            *g.rotation()[v]
                .iter()
                .find(|x| x.0 != d0.0 && x.0 != d1.0)
                .expect("trivalent vertex")
        };
        let (l0, l1) = (leg(p0), leg(p1));
        let (c0, c1) = (g.edges()[l0.0].color, g.edges()[l1.0].color);
        let sides = [g.edges()[d0.0].color, g.edges()[d1.0].color];
        let mut w = Work::new(g);
        if c0 != c1 {
            self.push(Move::Vanish(format!("bubble between legs of colors {c0} and {c1}")));
            return w.finish();
        }
        let factor = theta(c0, sides[0], sides[1])?.div_poly(&unknot_colored(c0 as u32))?;
        self.push(Move::Bubble { leg: c0, sides, factor });
        w.rotation[p0] = None;
        w.rotation[p1] = None;
        w.edges[d0.0] = None;
        w.edges[d1.0] = None;
        w.join(l0, l1);
        w.finish()
    }

    fn triangle(&mut self, g: &Ktg, face: &[EdgeEnd]) -> Result<Ktg, SpinError> {
        // Corner i is where dart i leaves; its leg is the end that follows
        // the arriving dart twice counterclockwise.
        let corner = |i: usize| g.edges()[face[i].0].ends[face[i].1];
        let legs: Vec<EdgeEnd> = (0..3)
            .map(|i| {
                let arriving = g.opposite(face[(i + 2) % 3]);
                let (v, j) = g.slot_of(arriving);
                g.rotation()[v][(j + 2) % 3]
            })
            .collect();
        let color = |x: EdgeEnd| g.edges()[x.0].color;
        let [a, b, c] = [color(legs[0]), color(legs[1]), color(legs[2])];
        let [x, y, z] = [color(face[0]), color(face[1]), color(face[2])];
        let factor = sixj(a, b, c, x, z, y)?.checked_div(&theta(a, b, c)?)?;
        self.push(Move::Triangle {
            legs: [a, b, c],
            sides: [x, y, z],
            factor,
        });
        let mut w = Work::new(g);
        for i in 0..3 {
            w.rotation[corner(i)] = None;
            w.edges[face[i].0] = None;
        }
        let new = w.rotation.len();
        w.rotation.push(Some([legs[0], legs[2], legs[1]]));
        for &(e, s) in &legs {
            w.edges[e].as_mut().expect("leg edge").ends[s] = new;
        }
        w.finish()
    }
}

/// Reduces a graph to theta graphs and loops by bigon and triangle moves.
///
/// Fails with [`SpinError::HypothesisViolated`] when some piece has no
/// face with fewer than four sides.
pub fn reduce_to_theta(g: &Ktg) -> Result<ReductionTrace, SpinError> {
    let mut r = Reducer {
        moves: Vec::new(),
        factor: RationalFunc::one(),
        finals: Vec::new(),
        loops: Vec::new(),
    };
    let mut g = g.clone();
    loop {
        let Some(clean) = r.clean(g)? else {
            break;
        };
        g = r.strip_thetas(clean)?;
        if g.vertex_count() == 0 {
            break;
        }
        let faces = g.faces();
        let smallest = faces.iter().min_by_key(|f| f.len()).expect("graph has faces");
        g = match smallest.len() {
            2 => {
                let next = r.bubble(&g, smallest)?;
                if r.factor.is_zero() {
                    break;
                }
                next
            }
            3 => r.triangle(&g, smallest)?,
            k => {
                return Err(SpinError::HypothesisViolated(format!(
                    "smallest face has {k} sides; only bigon and triangle moves are available"
                )))
            }
        };
    }
    if r.factor.is_zero() {
        r.finals.clear();
        r.loops.clear();
    }
    let triangles = r
        .moves
        .iter()
        .filter(|m| matches!(m, Move::Triangle { .. }))
        .count();
    Ok(ReductionTrace {
        moves: r.moves,
        triangles,
        factor: r.factor,
        finals: r.finals,
        loops: r.loops,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_is_already_reduced() {
        let t = reduce_to_theta(&Ktg::theta(2, 2, 2).unwrap()).unwrap();
        assert!(t.moves.is_empty());
        assert_eq!((t.triangles, t.finals.clone()), (0, vec![[2, 2, 2]]));
    }

    #[test]
    fn tetrahedron_takes_one_triangle() {
        let g = Ktg::tetrahedron([2; 6]).unwrap();
        let t = reduce_to_theta(&g).unwrap();
        assert_eq!(t.triangles, 1);
        assert_eq!(t.moves.len(), 1);
        assert_eq!(t.value().unwrap(), g.evaluate().unwrap());
    }
}
