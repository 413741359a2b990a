//! Closed planar diagrams built from crossings and projector boxes.

use crate::element::{TLElement, TlError};
use laurent_core::RationalFunc;
use std::sync::Arc;

/// A port of a node: `(node index, port index)`.
pub type NodePort = (usize, usize);

#[derive(Clone, Debug)]
pub enum SkeinNode {
    /// Four ports counterclockwise with the under-strand on ports 0 and 2;
    /// the A-smoothing joins `(0,1)` and `(2,3)`.
    Crossing,
    /// A box of `m` strands: ports `0..m` on top and `m..2m` on the bottom,
    /// both left to right.
    Box(Arc<TLElement>),
}

impl SkeinNode {
    pub fn arity(&self) -> usize {
        match self {
            SkeinNode::Crossing => 4,
            SkeinNode::Box(b) => 2 * b.strands(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SkeinElement {
    nodes: Vec<SkeinNode>,
    arcs: Vec<(NodePort, NodePort)>,
    loops: usize,
}

impl SkeinElement {
    /// Builds an element; panics if a port is out of range or used twice.
    pub fn new(nodes: Vec<SkeinNode>, arcs: Vec<(NodePort, NodePort)>, loops: usize) -> Self {
        let s = Self { nodes, arcs, loops };
        let mut used: Vec<Vec<bool>> = s.nodes.iter().map(|v| vec![false; v.arity()]).collect();
        for &(a, b) in &s.arcs {
            for (v, p) in [a, b] {
                assert!(v < s.nodes.len() && p < s.nodes[v].arity(), "port {v}/{p} out of range");
                assert!(!used[v][p], "port {v}/{p} used twice");
                used[v][p] = true;
            }
        }
        s
    }

    /// `loops` disjoint circles.
    pub fn circles(loops: usize) -> Self {
        Self::new(Vec::new(), Vec::new(), loops)
    }

    /// The closure of a box: top point `i` joined to bottom point `i`.
    pub fn box_closure(b: Arc<TLElement>) -> Self {
        let m = b.strands();
        let arcs = (0..m).map(|i| ((0, i), (0, m + i))).collect();
        Self::new(vec![SkeinNode::Box(b)], arcs, 0)
    }

    pub fn nodes(&self) -> &[SkeinNode] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[(NodePort, NodePort)] {
        &self.arcs
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn crossing_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|v| matches!(v, SkeinNode::Crossing))
            .count()
    }

    pub fn box_count(&self) -> usize {
        self.nodes.len() - self.crossing_count()
    }

    /// True when every port is joined by an arc.
    pub fn is_closed(&self) -> bool {
        2 * self.arcs.len() == self.nodes.iter().map(SkeinNode::arity).sum::<usize>()
    }

    /// Replaces node `v` by a crossingless pairing of its ports given as a
    /// partner array. The node is removed and later nodes shift down by one.
    pub fn substitute(&self, v: usize, pairing: &[usize]) -> Self {
        let arity = self.nodes[v].arity();
        assert_eq!(pairing.len(), arity, "pairing arity");
        // Arc partner of each port of v.
        let mut outer: Vec<Option<NodePort>> = vec![None; arity];
        let mut rest = Vec::with_capacity(self.arcs.len());
        for &(a, b) in &self.arcs {
            match (a.0 == v, b.0 == v) {
                (false, false) => rest.push((a, b)),
                (true, false) => outer[a.1] = Some(b),
                (false, true) => outer[b.1] = Some(a),
                (true, true) => {
                    outer[a.1] = Some(a);
                    outer[b.1] = Some(b);
                }
            }
        }
        // `outer[p] == Some((v, p))` marks an arc from p to another port of v;
        // recover the other end from the arc list.
        let mut self_arc: Vec<Option<usize>> = vec![None; arity];
        for &(a, b) in &self.arcs {
            if a.0 == v && b.0 == v {
                self_arc[a.1] = Some(b.1);
                self_arc[b.1] = Some(a.1);
            }
        }
        let mut seen = vec![false; arity];
        let mut loops = self.loops;
        let mut joined = Vec::new();
        for start in 0..arity {
            if seen[start] || self_arc[start].is_some() {
                continue;
            }
            let Some(from) = outer[start] else {
                continue;
            };
            // Enter v at `start`, leave by the pairing, follow self arcs.
            let mut p = start;
            let to = loop {
                seen[p] = true;
                let q = pairing[p];
                seen[q] = true;
                match self_arc[q] {
                    Some(r) => p = r,
                    None => break outer[q],
                }
            };
            if let Some(to) = to {
                joined.push((from, to));
            }
        }
        for start in 0..arity {
            if seen[start] || self_arc[start].is_none() || outer[start].is_none() {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                let q = pairing[p];
                seen[q] = true;
                p = self_arc[q].expect("closed cycle through self arcs");
            }
        }
        let shift = |(u, p): NodePort| -> NodePort { (if u > v { u - 1 } else { u }, p) };
        let mut nodes = self.nodes.clone();
        nodes.remove(v);
        let arcs = rest
            .into_iter()
            .chain(joined)
            .map(|(a, b)| (shift(a), shift(b)))
            .collect();
        Self { nodes, arcs, loops }
    }
}

/// Expands box node `v` of `host` into its matchings, weighted by the
/// coefficients of `element`.
pub fn insert_into_skein(
    host: &SkeinElement,
    v: usize,
    element: &TLElement,
) -> Result<Vec<(RationalFunc, SkeinElement)>, TlError> {
    let arity = host.nodes()[v].arity();
    if arity != 2 * element.strands() {
        return Err(TlError::ArityMismatch {
            host: arity / 2,
            element: element.strands(),
        });
    }
    Ok(element
        .terms()
        .iter()
        .map(|(m, c)| (c.clone(), host.substitute(v, &m.partners())))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projector::jones_wenzl;

    #[test]
    fn closure_of_p1_is_one_loop() {
        let host = SkeinElement::box_closure(jones_wenzl(1));
        let ex = insert_into_skein(&host, 0, &jones_wenzl(1)).unwrap();
        assert_eq!(ex.len(), 1);
        assert!(ex[0].0.is_one());
        assert_eq!((ex[0].1.loops(), ex[0].1.nodes().len()), (1, 0));
    }

    #[test]
    fn closure_of_p2_expands_to_two_and_one_loops() {
        let p2 = jones_wenzl(2);
        let host = SkeinElement::box_closure(p2.clone());
        let mut loops: Vec<usize> = insert_into_skein(&host, 0, &p2)
            .unwrap()
            .iter()
            .map(|(_, s)| s.loops())
            .collect();
        loops.sort();
        assert_eq!(loops, vec![1, 2]);
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let host = SkeinElement::box_closure(jones_wenzl(2));
        assert!(insert_into_skein(&host, 0, &jones_wenzl(3)).is_err());
    }
}
