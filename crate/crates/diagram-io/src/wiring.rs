//! Strand bookkeeping for building planar diagrams piece by piece.
//!
//! A [`Wiring`] holds strands between ends. An end is either a port of a node
//! (a crossing or a box owned by the caller) or a virtual point. Virtual points
//! are placeholders that are later identified with a port or wired to another
//! virtual point; [`Wiring::resolve`] follows the wires and returns the arcs
//! between ports together with the number of closed loops that touch no port.

use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub node: usize,
    pub port: usize,
}

impl Port {
    pub fn new(node: usize, port: usize) -> Self {
        Self { node, port }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum End {
    Port(Port),
    Virtual(usize),
}

impl From<Port> for End {
    fn from(p: Port) -> Self {
        End::Port(p)
    }
}

/// Result of [`Wiring::resolve`]: arcs between ports and free loops.
#[derive(Clone, Debug, Default)]
pub struct Resolved {
    pub arcs: Vec<(Port, Port)>,
    pub loops: usize,
}

#[derive(Clone, Debug, Default)]
pub struct Wiring {
    strands: Vec<Option<(End, End)>>,
    virtual_count: usize,
    links: HashMap<usize, End>,
}

impl Wiring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn new_virtual(&mut self) -> End {
        self.virtual_count += 1;
        End::Virtual(self.virtual_count - 1)
    }

    pub fn add_strand(&mut self, a: impl Into<End>, b: impl Into<End>) -> usize {
        self.strands.push(Some((a.into(), b.into())));
        self.strands.len() - 1
    }

    pub fn strand(&self, id: usize) -> Option<(End, End)> {
        self.strands.get(id).copied().flatten()
    }

    /// Removes a strand and returns its two ends.
    pub fn remove_strand(&mut self, id: usize) -> (End, End) {
        self.strands[id].take().expect("strand already removed")
    }

    /// Declares that the virtual point `v` is the same point as `e`.
    pub fn identify(&mut self, v: End, e: impl Into<End>) {
        let End::Virtual(vi) = v else {
            panic!("only virtual ends can be identified");
        };
        let e = e.into();
        assert!(
            self.links.insert(vi, e).is_none(),
            "virtual end {vi} identified twice"
        );
        if let End::Virtual(wi) = e {
            assert!(
                self.links.insert(wi, v).is_none(),
                "virtual end {wi} identified twice"
            );
        }
    }

    /// Follows every wire and returns port-to-port arcs plus loop count.
    ///
    /// Panics if a port is used by more than one strand or a virtual end is
    /// left dangling; both indicate a construction bug in the caller.
    pub fn resolve(&self) -> Resolved {
        let substitute = |e: End| -> End {
            match e {
                End::Virtual(v) => match self.links.get(&v) {
                    Some(End::Port(p)) => End::Port(*p),
                    _ => e,
                },
                _ => e,
            }
        };
        let strands: Vec<(End, End)> = self
            .strands
            .iter()
            .flatten()
            .map(|&(a, b)| (substitute(a), substitute(b)))
            .collect();
        let mut at: HashMap<End, (usize, usize)> = HashMap::with_capacity(2 * strands.len());
        for (i, &(a, b)) in strands.iter().enumerate() {
            for (side, e) in [(0, a), (1, b)] {
                if let Some(prev) = at.insert(e, (i, side)) {
                    panic!("end {e:?} used by strands {} and {i}", prev.0);
                }
            }
        }
        let other = |(i, side): (usize, usize)| -> End {
            let (a, b) = strands[i];
            if side == 0 {
                b
            } else {
                a
            }
        };
        let mut used = vec![false; strands.len()];
        let mut out = Resolved::default();
        for start in 0..strands.len() {
            if used[start] {
                continue;
            }
            let (a, b) = strands[start];
            let begin = match (a, b) {
                (End::Port(_), _) => (start, 0),
                (_, End::Port(_)) => (start, 1),
                _ => continue,
            };
            let End::Port(first) = (if begin.1 == 0 { a } else { b }) else {
                unreachable!()
            };
            let mut cur = begin;
            loop {
                used[cur.0] = true;
                match other(cur) {
                    End::Port(p) => {
                        out.arcs.push((first, p));
                        break;
                    }
                    End::Virtual(v) => {
                        let w = self.wire_partner(v);
                        let next = *at
                            .get(&w)
                            .unwrap_or_else(|| panic!("virtual end {w:?} is dangling"));
                        cur = next;
                    }
                }
            }
        }
        for start in 0..strands.len() {
            if used[start] {
                continue;
            }
            out.loops += 1;
            let mut cur = (start, 0);
            while !used[cur.0] {
                used[cur.0] = true;
                let End::Virtual(v) = other(cur) else {
                    unreachable!("port ends were consumed by the arc pass")
                };
                cur = at[&self.wire_partner(v)];
            }
        }
        out
    }

    fn wire_partner(&self, v: usize) -> End {
        match self.links.get(&v) {
            Some(e @ End::Virtual(_)) => *e,
            _ => panic!("virtual end {v} has no wire partner"),
        }
    }
}
