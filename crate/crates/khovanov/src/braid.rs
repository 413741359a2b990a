//! Torus braids as finite stand-ins for projectors, and the cabled
//! homology they give.

use crate::cube::ckh_capped;
use crate::error::KhError;
use crate::homology::{homology, BigradedGroups};
use diagram_io::{braid_closure, cable_with_braid, Diagram, Twist, TwistTemplate};

/// The word `(s_1 s_2 ... s_{n-1})^length` with every letter the crossing
/// whose A-smoothing is the cup-cap.
pub fn torus_braid_word(n: usize, length: usize) -> Vec<(usize, Twist)> {
    assert!(n >= 2, "torus braids need at least two strands");
    (0..length)
        .flat_map(|_| (1..n).map(|g| (g, Twist::Negative)))
        .collect()
}

/// The closure of [`torus_braid_word`].
pub fn torus_braid_approximant(n: usize, length: usize) -> Diagram {
    braid_closure(n, &torus_braid_word(n, length))
}

/// The n-cable of a filled template with a torus braid of the given length
/// in place of `p_n` on every component.
pub fn colored_cable(t: &TwistTemplate, n: usize, k: &[usize], length: usize) -> Result<Diagram, KhError> {
    let d = t.twist_fill(k)?;
    Ok(if n == 1 {
        d
    } else {
        cable_with_braid(&d, n, &torus_braid_word(n, length))
    })
}

/// Homology of [`colored_cable`], refusing diagrams above `cap` crossings.
pub fn colored_kh_approx(
    t: &TwistTemplate,
    n: usize,
    k: &[usize],
    length: usize,
    cap: usize,
) -> Result<BigradedGroups, KhError> {
    let d = colored_cable(t, n, k, length)?;
    Ok(homology(&ckh_capped(&d, cap)?))
}
