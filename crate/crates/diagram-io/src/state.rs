//! Kauffman states and their smoothings.

use crate::error::DiagramError;
use crate::pd::Diagram;
use serde::Serialize;
use std::collections::HashMap;

/// A choice of smoothing per crossing: bit `false` is the A-smoothing,
/// which joins `(a,b)` and `(c,d)` of `X[a,b,c,d]`; bit `true` is the
/// B-smoothing, which joins `(a,d)` and `(b,c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KauffmanState {
    bits: Vec<bool>,
}

impl KauffmanState {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// State `i` of `c` crossings: bit `k` of `i` is crossing `k`.
    pub fn from_index(index: u64, c: usize) -> Self {
        Self {
            bits: (0..c).map(|k| (index >> k) & 1 == 1).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        text.trim()
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(DiagramError::Parse(format!("state bit {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Number of A-smoothings.
    pub fn a_count(&self) -> usize {
        self.bits.iter().filter(|b| !**b).count()
    }
}

/// The circles of a smoothed diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub loop_count: usize,
    /// For each crossing, the two label pairs joined by its smoothing.
    pub smoothings: Vec<[(u32, u32); 2]>,
    /// Circle index of every edge label; `U` circles come last.
    pub circle_of: HashMap<u32, usize>,
}

/// The label pairs joined at `X[a,b,c,d]` by the chosen smoothing.
pub fn smoothing_pairs(q: [u32; 4], b_smoothing: bool) -> [(u32, u32); 2] {
    let [a, b, c, d] = q;
    if b_smoothing {
        [(a, d), (b, c)]
    } else {
        [(a, b), (c, d)]
    }
}

pub fn resolve(d: &Diagram, s: &KauffmanState) -> Result<Resolution, DiagramError> {
    if s.len() != d.crossing_count() {
        return Err(DiagramError::StateLength {
            expected: d.crossing_count(),
            got: s.len(),
        });
    }
    let mut index: HashMap<u32, usize> = HashMap::new();
    for q in d.crossings() {
        for &l in q {
            let n = index.len();
            index.entry(l).or_insert(n);
        }
    }
    let mut parent: Vec<usize> = (0..index.len()).collect();
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
    let mut smoothings = Vec::with_capacity(d.crossing_count());
    for (q, &bit) in d.crossings().iter().zip(s.bits()) {
        let pairs = smoothing_pairs(*q, bit);
        for (x, y) in pairs {
            let (rx, ry) = (find(&mut parent, index[&x]), find(&mut parent, index[&y]));
            parent[rx] = ry;
        }
        smoothings.push(pairs);
    }
    let mut root_id: HashMap<usize, usize> = HashMap::new();
    let mut labels: Vec<u32> = index.keys().copied().collect();
    labels.sort_unstable();
    let mut circle_of = HashMap::new();
    for l in labels {
        let r = find(&mut parent, index[&l]);
        let n = root_id.len();
        let id = *root_id.entry(r).or_insert(n);
        circle_of.insert(l, id);
    }
    Ok(Resolution {
        loop_count: root_id.len() + d.loops(),
        smoothings,
        circle_of,
    })
}
