//! A small corpus of diagrams and templates.

use crate::cable::Twist;
use crate::pd::{parse_pd, Diagram};
use crate::template::TwistTemplate;

pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
pub const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
pub const CINQUEFOIL: &str = "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]";
pub const THREE_TWIST: &str = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]";
pub const STEVEDORE: &str =
    "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]";
pub const HOPF: &str = "X[4,1,3,2] X[2,3,1,4]";

/// Named diagrams used across the test suites.
pub fn corpus() -> Vec<(&'static str, Diagram)> {
    [
        ("unknot", "U"),
        ("trefoil", TREFOIL),
        ("figure-eight", FIGURE_EIGHT),
        ("cinquefoil", CINQUEFOIL),
        ("three-twist", THREE_TWIST),
        ("stevedore", STEVEDORE),
        ("hopf", HOPF),
    ]
    .into_iter()
    .map(|(name, pd)| (name, parse_pd(pd).expect("corpus diagram parses")))
    .collect()
}

fn sign_text(twist: Twist) -> i64 {
    twist.sign()
}

/// One slot closed into a 2-braid: `k` twists give the (2,k) torus link.
pub fn one_slot(twist: Twist) -> TwistTemplate {
    TwistTemplate::parse(&format!("T[1,2,2,1]\ntwist 1: (1,2) {}", sign_text(twist)))
        .expect("one-slot template")
}

/// Two slots whose zero-twist closure is a two-component unlink and whose
/// trivalent graph is the complete graph on four vertices.
pub fn two_slot(twist: Twist) -> TwistTemplate {
    let s = sign_text(twist);
    TwistTemplate::parse(&format!(
        "T[1,2,3,4] T[3,2,1,4]\ntwist 1: (1,2) {s}\ntwist 2: (3,2) {s}"
    ))
    .expect("two-slot template")
}

/// Three slots arranged as a pretzel; its trivalent graph is a prism.
pub fn pretzel(twist: Twist) -> TwistTemplate {
    let s = sign_text(twist);
    TwistTemplate::parse(&format!(
        "T[6,4,1,3] T[4,5,2,1] T[5,6,3,2]\ntwist 1: (6,4) {s}\ntwist 2: (4,5) {s}\ntwist 3: (5,6) {s}"
    ))
    .expect("pretzel template")
}

/// The template with no slots whose only component is an unknot.
pub fn unknot() -> TwistTemplate {
    TwistTemplate::parse("U").expect("unknot template")
}
