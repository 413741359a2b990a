//! Blackboard cabling and slot filling.
//!
//! A [`Cabled`] value is the n-cable of a 4-valent planar graph whose nodes
//! are crossings or twist slots. Every crossing becomes an `n x n` grid of
//! crossings; every slot keeps four open bundles of `n` virtual ends that a
//! caller fills with half-twists, boxes or any other planar piece.
//!
//! Bundle ends are listed counterclockwise around the node they belong to.
//! An edge joining side `p` of node `u` to side `q` of node `v` connects the
//! `k`-th end at `u` with the `(n-1-k)`-th end at `v`.

use crate::error::DiagramError;
use crate::pd::{occurrences, Diagram};
use crate::template::TwistTemplate;
use crate::wiring::{End, Port, Wiring};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The two half-twists of a pair of strands running upward.
///
/// `Negative` is the crossing whose A-smoothing is the cup-cap joining the
/// two strands; `Positive` is its mirror.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Twist {
    Negative,
    Positive,
}

impl Twist {
    pub fn from_sign(sign: i64) -> Option<Self> {
        match sign {
            -1 => Some(Twist::Negative),
            1 => Some(Twist::Positive),
            _ => None,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Twist::Negative => -1,
            Twist::Positive => 1,
        }
    }

    /// Whether the under-strand joins bottom-right to top-left.
    fn under_odd(self) -> bool {
        self == Twist::Positive
    }

    /// The bottom side where the over-strand enters when both run upward.
    fn over_entry(self) -> usize {
        match self {
            Twist::Negative => 1,
            Twist::Positive => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// Four ports counterclockwise, the under-strand on ports 0 and 2.
    Crossing,
    /// A node owned by the caller; the tag is the caller's own index.
    External(usize),
}

/// Open bundles of an unfilled slot, indexed bottom-left, bottom-right,
/// top-right, top-left.
#[derive(Clone, Debug)]
pub struct SlotEnds {
    pub sides: [Vec<End>; 4],
    pub twist: Twist,
    filled: bool,
}

#[derive(Clone, Debug)]
pub struct Cabled {
    pub n: usize,
    pub wiring: Wiring,
    nodes: Vec<NodeKind>,
    slots: Vec<SlotEnds>,
    edge_strands: BTreeMap<u32, Vec<usize>>,
    /// Strands of each component that passes through no slot, listed per
    /// component: first the components with crossings, then loops.
    base_strands: Vec<Vec<usize>>,
    hints: Vec<Port>,
}

/// A node of the graph to be cabled.
#[derive(Clone, Copy, Debug)]
enum GraphNode {
    /// A crossing in PD order, with the side where the over-strand enters
    /// when the orientation is known.
    Crossing(Option<usize>),
    Slot(usize),
}

impl Cabled {
    fn empty(n: usize) -> Self {
        assert!(n >= 1, "cable width must be positive");
        Self {
            n,
            wiring: Wiring::new(),
            nodes: Vec::new(),
            slots: Vec::new(),
            edge_strands: BTreeMap::new(),
            base_strands: Vec::new(),
            hints: Vec::new(),
        }
    }

    /// The n-cable of a diagram.
    pub fn from_diagram(d: &Diagram, n: usize) -> Self {
        let nodes: Vec<GraphNode> = d
            .signs()
            .iter()
            .map(|&s| GraphNode::Crossing(Some(if s > 0 { 3 } else { 1 })))
            .collect();
        let mut c = Self::build(n, &nodes, d.crossings(), &[]);
        for comp in d.components() {
            let base = *comp.iter().min().expect("components are nonempty");
            c.base_strands.push(c.edge_strands[&base].clone());
        }
        for _ in 0..d.loops() {
            let ids = c.add_loop_bundle();
            c.base_strands.push(ids);
        }
        c
    }

    /// The n-cable of a template; slots stay open.
    pub fn from_template(t: &TwistTemplate, n: usize) -> Self {
        let mut nodes = vec![GraphNode::Crossing(None); t.crossings().len()];
        nodes.extend((0..t.slots().len()).map(GraphNode::Slot));
        let mut quads: Vec<[u32; 4]> = t.crossings().to_vec();
        quads.extend(t.slots().iter().map(|s| s.ends));
        let twists: Vec<Twist> = t.slots().iter().map(|s| s.twist).collect();
        let mut c = Self::build(n, &nodes, &quads, &twists);
        for base in t.free_component_labels() {
            c.base_strands.push(c.edge_strands[&base].clone());
        }
        for _ in 0..t.loops() {
            let ids = c.add_loop_bundle();
            c.base_strands.push(ids);
        }
        c
    }

    fn build(n: usize, nodes: &[GraphNode], quads: &[[u32; 4]], twists: &[Twist]) -> Self {
        let mut c = Self::empty(n);
        let sides: Vec<[Vec<End>; 4]> = nodes
            .iter()
            .map(|node| match node {
                GraphNode::Crossing(over) => c.grid(n, false, *over),
                GraphNode::Slot(s) => {
                    let sides: [Vec<End>; 4] =
                        std::array::from_fn(|_| (0..n).map(|_| c.wiring.new_virtual()).collect());
                    c.slots.push(SlotEnds {
                        sides: sides.clone(),
                        twist: twists[*s],
                        filled: false,
                    });
                    sides
                }
            })
            .collect();
        let occ = occurrences(quads).expect("validated by the caller");
        for (label, [(u, p), (v, q)]) in occ {
            // Left to right when looking from the first end toward the second.
            let ids = (0..n)
                .rev()
                .map(|k| c.wiring.add_strand(sides[u][p][k], sides[v][q][n - 1 - k]))
                .collect();
            c.edge_strands.insert(label, ids);
        }
        c
    }

    fn add_loop_bundle(&mut self) -> Vec<usize> {
        (0..self.n)
            .map(|_| {
                let a = self.wiring.new_virtual();
                let b = self.wiring.new_virtual();
                self.wiring.identify(a, b);
                self.wiring.add_strand(a, b)
            })
            .collect()
    }

    /// Adds an `m x m` grid of crossings replacing one crossing whose
    /// under-strand joins sides 0 and 2 (or sides 1 and 3 when `under_odd`).
    /// The under-strand is hinted to enter through the lower of its sides and
    /// the over-strand through `over_entry` when given.
    /// Returns the ends of each side, counterclockwise.
    pub fn grid(&mut self, m: usize, under_odd: bool, over_entry: Option<usize>) -> [Vec<End>; 4] {
        let r = usize::from(under_odd);
        let over_port = over_entry.map(|side| {
            let p = (side + 4 - r) % 4;
            assert!(p == 1 || p == 3, "over-strand cannot enter on an under side");
            p
        });
        let first = self.nodes.len();
        self.nodes
            .extend(std::iter::repeat(NodeKind::Crossing).take(m * m));
        // Node (x, y), 0-based from the south-west corner, ports S, E, N, W.
        let node = |x: usize, y: usize| first + y * m + x;
        for y in 0..m {
            for x in 0..m {
                self.hints.push(Port::new(node(x, y), 0));
                if let Some(p) = over_port {
                    self.hints.push(Port::new(node(x, y), p));
                }
                if y + 1 < m {
                    self.wiring
                        .add_strand(Port::new(node(x, y), 2), Port::new(node(x, y + 1), 0));
                }
                if x + 1 < m {
                    self.wiring
                        .add_strand(Port::new(node(x, y), 1), Port::new(node(x + 1, y), 3));
                }
            }
        }
        let south: Vec<End> = (0..m).map(|k| Port::new(node(k, 0), 0).into()).collect();
        let east: Vec<End> = (0..m).map(|k| Port::new(node(m - 1, k), 1).into()).collect();
        let north: Vec<End> = (0..m)
            .map(|k| Port::new(node(m - 1 - k, m - 1), 2).into())
            .collect();
        let west: Vec<End> = (0..m)
            .map(|k| Port::new(node(0, m - 1 - k), 3).into())
            .collect();
        let senw = [south, east, north, west];
        std::array::from_fn(|side| senw[(side + 4 - r) % 4].clone())
    }

    /// Allocates a node owned by the caller.
    pub fn add_external_node(&mut self, tag: usize) -> usize {
        self.nodes.push(NodeKind::External(tag));
        self.nodes.len() - 1
    }

    pub fn nodes(&self) -> &[NodeKind] {
        &self.nodes
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn slot(&self, i: usize) -> &SlotEnds {
        &self.slots[i]
    }

    /// Marks slot `i` as filled and returns its open ends.
    pub fn take_slot(&mut self, i: usize) -> [Vec<End>; 4] {
        let s = &mut self.slots[i];
        assert!(!s.filled, "slot {i} filled twice");
        s.filled = true;
        s.sides.clone()
    }

    /// Strand ids of every edge of the cabled graph, ordered left to right
    /// when looking from the edge's first occurrence toward its second.
    pub fn edge_strands(&self) -> &BTreeMap<u32, Vec<usize>> {
        &self.edge_strands
    }

    /// For each component avoiding all slots, the strands of one edge.
    pub fn base_strands(&self) -> &[Vec<usize>] {
        &self.base_strands
    }

    /// Fills slot `i` with `k` cabled half-twists of the slot's sign.
    pub fn fill_twists(&mut self, i: usize, k: usize) {
        let n = self.n;
        let twist = self.slots[i].twist;
        let [a, b, c, d] = self.take_slot(i);
        if k == 0 {
            for t in 0..n {
                self.wiring.identify(a[t], d[n - 1 - t]);
                self.wiring.identify(b[t], c[n - 1 - t]);
            }
            return;
        }
        let grids: Vec<[Vec<End>; 4]> = (0..k).map(|_| self.grid(n, twist.under_odd(), Some(twist.over_entry())))
            .collect();
        for t in 0..n {
            self.wiring.identify(a[t], grids[0][0][t]);
            self.wiring.identify(b[t], grids[0][1][t]);
            self.wiring.identify(c[t], grids[k - 1][2][t]);
            self.wiring.identify(d[t], grids[k - 1][3][t]);
        }
        for j in 0..k - 1 {
            for t in 0..n {
                self.wiring
                    .add_strand(grids[j][3][t], grids[j + 1][0][n - 1 - t]);
                self.wiring
                    .add_strand(grids[j][2][t], grids[j + 1][1][n - 1 - t]);
            }
        }
    }

    /// Cuts the given strands (ordered left to right) and splices in a braid
    /// whose letters are `(generator, twist)` with generators `1..len`.
    pub fn insert_braid(&mut self, strands: &[usize], letters: &[(usize, Twist)]) {
        let ends: Vec<(End, End)> = strands
            .iter()
            .map(|&s| self.wiring.remove_strand(s))
            .collect();
        let mut cur: Vec<End> = ends.iter().map(|e| e.0).collect();
        for &(g, twist) in letters {
            assert!(
                g >= 1 && g < strands.len(),
                "braid generator {g} out of range"
            );
            let [bl, br, tr, tl] = self.grid(1, twist.under_odd(), Some(twist.over_entry()));
            self.wiring.add_strand(cur[g - 1], bl[0]);
            self.wiring.add_strand(cur[g], br[0]);
            cur[g - 1] = tl[0];
            cur[g] = tr[0];
        }
        for (c, e) in cur.into_iter().zip(ends) {
            self.wiring.add_strand(c, e.1);
        }
    }

    /// Converts to a PD diagram. Fails if a slot is open or a caller-owned
    /// node is present.
    pub fn to_diagram(&self) -> Result<Diagram, DiagramError> {
        if let Some(i) = self.slots.iter().position(|s| !s.filled) {
            return Err(DiagramError::Topology(format!("slot {} is not filled", i + 1)));
        }
        if self.nodes.iter().any(|k| matches!(k, NodeKind::External(_))) {
            return Err(DiagramError::Topology(
                "diagram contains non-crossing nodes".into(),
            ));
        }
        let r = self.wiring.resolve();
        Diagram::from_planar(self.nodes.len(), &r.arcs, r.loops, &self.hints)
    }
}

/// The blackboard n-cable of a diagram.
pub fn cable(d: &Diagram, n: usize) -> Diagram {
    Cabled::from_diagram(d, n)
        .to_diagram()
        .expect("cable of a valid diagram")
}

/// The n-cable with a braid spliced into the base edge of every component.
pub fn cable_with_braid(d: &Diagram, n: usize, letters: &[(usize, Twist)]) -> Diagram {
    let mut c = Cabled::from_diagram(d, n);
    for ids in c.base_strands.clone() {
        c.insert_braid(&ids, letters);
    }
    c.to_diagram().expect("cable of a valid diagram")
}

/// The closure of a braid on `strands` strands.
pub fn braid_closure(strands: usize, letters: &[(usize, Twist)]) -> Diagram {
    let mut c = Cabled::empty(strands);
    let ids = c.add_loop_bundle();
    c.insert_braid(&ids, letters);
    c.to_diagram().expect("braid closure is planar")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_pd;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn cable_counts() {
        let d = parse_pd(TREFOIL).unwrap();
        let c2 = cable(&d, 2);
        assert_eq!(c2.crossing_count(), 12);
        assert_eq!(c2.component_count(), 2);
        assert_eq!(c2.writhe(), 4 * d.writhe());
        let c1 = cable(&d, 1);
        assert_eq!(c1.crossing_count(), 3);
        assert_eq!(c1.writhe(), d.writhe());
        let u3 = cable(&parse_pd("U").unwrap(), 3);
        assert_eq!((u3.crossing_count(), u3.component_count()), (0, 3));
    }

    #[test]
    fn braid_closures() {
        use Twist::*;
        let trefoil = braid_closure(2, &[(1, Positive), (1, Positive), (1, Positive)]);
        assert_eq!(trefoil.component_count(), 1);
        assert_eq!(trefoil.writhe(), 3);
        let hopf = braid_closure(2, &[(1, Negative), (1, Negative)]);
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(hopf.writhe(), -2);
        let unlink = braid_closure(3, &[]);
        assert_eq!(unlink.component_count(), 3);
    }
}
