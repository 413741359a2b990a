//! Theta and 6j values with per-argument caches.
//!
//! Small colors are evaluated as skein elements; above
//! [`SKEIN_COLOR_CAP`] the closed forms take over.

use crate::closed::{tet_closed, theta_closed};
use crate::error::SpinError;
use crate::ktg::{admissible, Ktg};
use laurent_core::RationalFunc;
use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

/// Largest color evaluated through the skein definition by default.
pub const SKEIN_COLOR_CAP: usize = 6;

type Cache<K> = OnceLock<RwLock<HashMap<K, RationalFunc>>>;

fn cached<K: Eq + Hash + Copy>(
    cache: &'static Cache<K>,
    key: K,
    compute: impl FnOnce() -> Result<RationalFunc, SpinError>,
) -> Result<RationalFunc, SpinError> {
    let map = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = map.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = compute()?;
    map.write().unwrap().insert(key, v.clone());
    Ok(v)
}

fn check_theta(a: usize, b: usize, c: usize) -> Result<(), SpinError> {
    if admissible(a, b, c) {
        Ok(())
    } else {
        Err(SpinError::Inadmissible(vec![a, b, c]))
    }
}

fn check_tet(colors: [usize; 6]) -> Result<(), SpinError> {
    let [a, b, c, d, e, f] = colors;
    for t in [[a, b, c], [c, e, f], [a, e, d], [b, d, f]] {
        check_theta(t[0], t[1], t[2])?;
    }
    Ok(())
}

/// The theta network evaluated as a skein element.
pub fn theta_skein(a: usize, b: usize, c: usize) -> Result<RationalFunc, SpinError> {
    check_theta(a, b, c)?;
    Ktg::theta(a, b, c)?.evaluate()
}

/// The tetrahedral network evaluated as a skein element.
pub fn sixj_skein(colors: [usize; 6]) -> Result<RationalFunc, SpinError> {
    check_tet(colors)?;
    Ktg::tetrahedron(colors)?.evaluate()
}

/// `theta(a, b, c)`: skein evaluation up to the color cap, closed form above.
pub fn theta(a: usize, b: usize, c: usize) -> Result<RationalFunc, SpinError> {
    check_theta(a, b, c)?;
    let mut key = [a, b, c];
    key.sort_unstable();
    static CACHE: Cache<[usize; 3]> = OnceLock::new();
    cached(&CACHE, key, || {
        if key[2] <= SKEIN_COLOR_CAP {
            theta_skein(a, b, c)
        } else {
            Ok(theta_closed(a, b, c))
        }
    })
}

/// The tetrahedral network with vertex triples `(a,b,c)`, `(c,e,f)`,
/// `(a,e,d)` and `(b,d,f)`.
pub fn sixj(a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> Result<RationalFunc, SpinError> {
    let colors = [a, b, c, d, e, f];
    check_tet(colors)?;
    static CACHE: Cache<[usize; 6]> = OnceLock::new();
    cached(&CACHE, colors, || {
        if colors.iter().all(|&x| x <= SKEIN_COLOR_CAP) {
            sixj_skein(colors)
        } else {
            Ok(tet_closed(colors))
        }
    })
}
