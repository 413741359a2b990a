//! Turning diagrams and cabled graphs into closed skein elements.

use diagram_io::{Cabled, Diagram, End, NodeKind, Port};
use std::sync::Arc;
use temperley_lieb::{SkeinElement, SkeinNode, TLElement};

/// The skein element of a PD diagram: crossing `i` keeps its PD positions
/// as ports.
pub fn skein_of_diagram(d: &Diagram) -> SkeinElement {
    let nodes = vec![SkeinNode::Crossing; d.crossing_count()];
    let arcs = d
        .edge_ends()
        .values()
        .map(|&[a, b]| (a, b))
        .collect();
    SkeinElement::new(nodes, arcs, d.loops())
}

/// A cabled graph together with the projector boxes spliced into it.
///
/// Box ports follow the `temperley-lieb` convention: top `0..m` and bottom
/// `m..2m`, both left to right.
#[derive(Clone, Debug)]
pub struct CabledSkein {
    pub cabled: Cabled,
    boxes: Vec<Arc<TLElement>>,
}

impl CabledSkein {
    pub fn new(cabled: Cabled) -> Self {
        Self {
            cabled,
            boxes: Vec::new(),
        }
    }

    /// Adds a box node and returns its node index in the cabled graph.
    pub fn add_box(&mut self, b: Arc<TLElement>) -> usize {
        self.boxes.push(b);
        self.cabled.add_external_node(self.boxes.len() - 1)
    }

    /// Cuts the given strands, ordered left to right looking from their
    /// first ends toward their second ends, and splices in a box with its
    /// bottom on the first-end side.
    pub fn box_on_strands(&mut self, ids: &[usize], b: Arc<TLElement>) {
        let m = ids.len();
        assert_eq!(b.strands(), m, "box width must match the strand count");
        let v = self.add_box(b);
        for (i, &id) in ids.iter().enumerate() {
            let (tail, head) = self.cabled.wiring.remove_strand(id);
            self.cabled.wiring.add_strand(tail, Port::new(v, m + i));
            self.cabled.wiring.add_strand(Port::new(v, i), head);
        }
    }

    /// Identifies open virtual ends with ports of box `v`.
    pub fn attach(&mut self, v: usize, ends: impl IntoIterator<Item = (End, usize)>) {
        for (e, port) in ends {
            self.cabled.wiring.identify(e, Port::new(v, port));
        }
    }

    pub fn into_skein(self) -> SkeinElement {
        let r = self.cabled.wiring.resolve();
        let nodes = self
            .cabled
            .nodes()
            .iter()
            .map(|k| match k {
                NodeKind::Crossing => SkeinNode::Crossing,
                NodeKind::External(tag) => SkeinNode::Box(self.boxes[*tag].clone()),
            })
            .collect();
        let arcs = r
            .arcs
            .iter()
            .map(|(a, b)| ((a.node, a.port), (b.node, b.port)))
            .collect();
        SkeinElement::new(nodes, arcs, r.loops)
    }
}
