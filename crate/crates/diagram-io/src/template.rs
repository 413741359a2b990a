//! Twist templates: diagrams with marked twist slots.
//!
//! In the PD line a slot is a placeholder `T[a,b,c,d]` listing the edges at
//! its bottom-left, bottom-right, top-right and top-left corners
//! (counterclockwise). With zero twists the strands run `a -> d` and
//! `b -> c`. Each slot needs a line `twist i: (a,b) sign` naming the two
//! bottom edges of the `i`-th placeholder and the sign of its half-twists.

use crate::cable::{Cabled, Twist};
use crate::error::DiagramError;
use crate::pd::{check_planar, occurrences, tokenize, Diagram, Occurrence, Token};
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub ends: [u32; 4],
    pub twist: Twist,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistTemplate {
    crossings: Vec<[u32; 4]>,
    slots: Vec<Slot>,
    loops: usize,
}

fn parse_twist_line(line: &str) -> Result<(usize, u32, u32, i64), DiagramError> {
    let bad = || DiagramError::Parse(format!("malformed slot line {line:?}"));
    let rest = line.trim().strip_prefix("twist").ok_or_else(bad)?;
    let (idx, rest) = rest.split_once(':').ok_or_else(bad)?;
    let idx: usize = idx.trim().parse().map_err(|_| bad())?;
    let rest = rest.trim().strip_prefix('(').ok_or_else(bad)?;
    let (pair, sign) = rest.split_once(')').ok_or_else(bad)?;
    let (a, b) = pair.split_once(',').ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    let sign: i64 = sign.trim().parse().map_err(|_| bad())?;
    Ok((idx, a, b, sign))
}

impl TwistTemplate {
    pub fn new(
        crossings: Vec<[u32; 4]>,
        slots: Vec<Slot>,
        loops: usize,
    ) -> Result<Self, DiagramError> {
        let mut quads = crossings.clone();
        quads.extend(slots.iter().map(|s| s.ends));
        let occ = occurrences(&quads)?;
        check_planar(&quads, &occ)?;
        let t = Self {
            crossings,
            slots,
            loops,
        };
        // Orientation consistency of the base crossings is checked by filling.
        t.twist_fill(&vec![0; t.slots.len()])?;
        Ok(t)
    }

    /// Parses a diagram file: PD tokens (with `T[...]` slots) on any lines,
    /// `twist i: (a,b) sign` slot lines, and `#` comments.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let mut pd = String::new();
        let mut lines = BTreeMap::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line.starts_with("twist") {
                let (i, a, b, sign) = parse_twist_line(line)?;
                if lines.insert(i, (a, b, sign)).is_some() {
                    return Err(DiagramError::Parse(format!("slot {i} declared twice")));
                }
            } else {
                pd.push_str(line);
                pd.push(' ');
            }
        }
        let tokens = tokenize(&pd)?;
        if tokens.is_empty() {
            return Err(DiagramError::Parse(
                "empty diagram; use the token U for an unknot".into(),
            ));
        }
        let mut crossings = Vec::new();
        let mut slot_ends = Vec::new();
        let mut loops = 0;
        for t in tokens {
            match t {
                Token::X(q) => crossings.push(q),
                Token::T(q) => slot_ends.push(q),
                Token::U => loops += 1,
            }
        }
        if lines.len() != slot_ends.len() || lines.keys().copied().ne(1..=slot_ends.len()) {
            return Err(DiagramError::Topology(format!(
                "{} slot placeholders but slot lines for {:?}",
                slot_ends.len(),
                lines.keys().collect::<Vec<_>>()
            )));
        }
        let slots = slot_ends
            .iter()
            .zip(lines.values())
            .enumerate()
            .map(|(i, (&ends, &(a, b, sign)))| {
                if (a, b) != (ends[0], ends[1]) {
                    return Err(DiagramError::Topology(format!(
                        "slot {} line names ({a},{b}) but its bottom edges are ({},{})",
                        i + 1,
                        ends[0],
                        ends[1]
                    )));
                }
                let twist = Twist::from_sign(sign).ok_or_else(|| {
                    DiagramError::Parse(format!("slot sign must be +1 or -1, got {sign}"))
                })?;
                Ok(Slot { ends, twist })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(crossings, slots, loops)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    /// Fills slot `i` with `k[i]` half-twists. Crossings are numbered with the
    /// template crossings first, then each slot's twists in slot order.
    pub fn twist_fill(&self, k: &[usize]) -> Result<Diagram, DiagramError> {
        if k.len() != self.slots.len() {
            return Err(DiagramError::Topology(format!(
                "twist vector has {} entries for {} slots",
                k.len(),
                self.slots.len()
            )));
        }
        let mut c = Cabled::from_template(self, 1);
        for (i, &ki) in k.iter().enumerate() {
            c.fill_twists(i, ki);
        }
        c.to_diagram()
    }

    /// The smallest edge label of every component that passes through no
    /// slot when all slots hold zero twists.
    pub fn free_component_labels(&self) -> Vec<u32> {
        let mut quads = self.crossings.clone();
        quads.extend(self.slots.iter().map(|s| s.ends));
        let occ = occurrences(&quads).expect("validated at construction");
        let x = self.crossings.len();
        let through = |(i, p): Occurrence| -> Occurrence {
            if i < x {
                (i, (p + 2) % 4)
            } else {
                (i, 3 - p)
            }
        };
        let mut seen: HashSet<u32> = HashSet::new();
        let mut out = Vec::new();
        for (&start, &[_, second]) in &occ {
            if seen.contains(&start) {
                continue;
            }
            let (mut label, mut head) = (start, second);
            let mut free = true;
            loop {
                seen.insert(label);
                free &= head.0 < x;
                let exit = through(head);
                free &= exit.0 < x;
                label = quads[exit.0][exit.1];
                let [a, b] = occ[&label];
                head = if a == exit { b } else { a };
                if label == start && head == second {
                    break;
                }
            }
            if free {
                out.push(start);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "crossings": self.crossings,
            "slots": self.slots.iter().map(|s| serde_json::json!({
                "ends": s.ends,
                "sign": s.twist.sign(),
            })).collect::<Vec<_>>(),
            "loops": self.loops,
        })
    }
}

impl fmt::Display for TwistTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
            .collect();
        parts.extend(
            self.slots
                .iter()
                .map(|s| format!("T[{},{},{},{}]", s.ends[0], s.ends[1], s.ends[2], s.ends[3])),
        );
        parts.extend(std::iter::repeat("U".to_string()).take(self.loops));
        writeln!(f, "{}", parts.join(" "))?;
        for (i, s) in self.slots.iter().enumerate() {
            writeln!(
                f,
                "twist {}: ({},{}) {}",
                i + 1,
                s.ends[0],
                s.ends[1],
                s.twist.sign()
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_slot_family() {
        let t = TwistTemplate::parse("T[1,2,2,1]\ntwist 1: (1,2) -1\n").unwrap();
        assert_eq!(t.twist_fill(&[0]).unwrap().component_count(), 2);
        assert_eq!(t.twist_fill(&[1]).unwrap().component_count(), 1);
        let hopf = t.twist_fill(&[2]).unwrap();
        assert_eq!((hopf.crossing_count(), hopf.component_count()), (2, 2));
        let tre = t.twist_fill(&[3]).unwrap();
        assert_eq!((tre.crossing_count(), tre.component_count()), (3, 1));
        assert_eq!(tre.writhe().abs(), 3);
    }

    #[test]
    fn slot_line_must_match_placeholder() {
        assert!(TwistTemplate::parse("T[1,2,2,1]\ntwist 1: (2,1) -1").is_err());
        assert!(TwistTemplate::parse("T[1,2,2,1]").is_err());
        assert!(TwistTemplate::parse("T[1,2,2,1]\ntwist 1: (1,2) 2").is_err());
    }

    #[test]
    fn free_components_skip_slots() {
        let t = TwistTemplate::parse("T[1,2,2,1] X[3,5,4,6] X[5,3,6,4]\ntwist 1: (1,2) 1")
            .unwrap();
        assert_eq!(t.free_component_labels().len(), 2);
        let d = t.twist_fill(&[0]).unwrap();
        assert_eq!(d.component_count(), 4);
    }

    #[test]
    fn display_round_trips() {
        let t = TwistTemplate::parse("T[1,2,3,4] T[3,2,1,4]\ntwist 1: (1,2) -1\ntwist 2: (3,2) -1")
            .unwrap();
        assert_eq!(TwistTemplate::parse(&t.to_string()).unwrap(), t);
    }
}
