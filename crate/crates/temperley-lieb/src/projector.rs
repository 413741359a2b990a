//! Jones-Wenzl projectors.

use crate::element::TLElement;
use crate::matching::Matching;
use laurent_core::{qratio, unknot_colored, RationalFunc};
use std::sync::{Arc, OnceLock, RwLock};

/// `Delta_k = (-1)^k [k+1]`, the closure of `p_k`.
fn delta(k: usize) -> RationalFunc {
    RationalFunc::from_poly(unknot_colored(k as u32))
}

/// The product `e_{n-1} e_{n-2} ... e_k` as a single matching.
fn descending_word(n: usize, k: usize) -> Matching {
    let mut m = Matching::generator(n, n - 1);
    for i in (k..n - 1).rev() {
        let (next, loops) = m.compose(&Matching::generator(n, i));
        debug_assert_eq!(loops, 0);
        m = next;
    }
    m
}

/// One step of the one-sided recursion:
/// `p_n = q + sum_k ([k] / [n]) q e_{n-1} ... e_k` with `q = p_{n-1} (x) 1`.
fn next_projector(prev: &TLElement) -> TLElement {
    let n = prev.strands() + 1;
    let q = prev.tensor_identity(1);
    let mut out = q.clone();
    for k in 1..n {
        let c = qratio(k as u32, n as u32);
        let w = TLElement::basis(descending_word(n, k));
        let term = q.multiply(&w).expect("same strand count").scale(&c);
        out = out.add(&term).expect("same strand count");
    }
    out
}

fn cache() -> &'static RwLock<Vec<Arc<TLElement>>> {
    static CACHE: OnceLock<RwLock<Vec<Arc<TLElement>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Arc::new(TLElement::identity(1))]))
}

/// The Jones-Wenzl projector `p_n`, cached per `n`.
pub fn jones_wenzl(n: usize) -> Arc<TLElement> {
    assert!(n >= 1, "projectors are defined for n >= 1");
    if let Some(p) = cache().read().unwrap().get(n - 1) {
        return p.clone();
    }
    let mut table = cache().write().unwrap();
    while table.len() < n {
        let next = next_projector(table.last().unwrap());
        table.push(Arc::new(next));
    }
    table[n - 1].clone()
}

/// The projector by the two-sided recursion
/// `p_n = q - (Delta_{n-2} / Delta_{n-1}) q e_{n-1} q`, uncached.
pub fn jones_wenzl_two_sided(n: usize) -> TLElement {
    assert!(n >= 1);
    let mut p = TLElement::identity(1);
    for m in 2..=n {
        let q = p.tensor_identity(1);
        let c = -delta(m - 2).checked_div(&delta(m - 1)).unwrap();
        let mid = q
            .multiply(&TLElement::generator(m, m - 1))
            .and_then(|x| x.multiply(&q))
            .unwrap();
        p = q.add(&mid.scale(&c)).unwrap();
    }
    p
}

/// Outcome of checking the four defining properties of a projector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorCheck {
    /// `e_i p = p e_i = 0` for every generator.
    pub killed_by_generators: bool,
    /// The identity matching has coefficient one.
    pub identity_coefficient_one: bool,
    /// `p p = p`.
    pub idempotent: bool,
    /// The closure equals `(-1)^n [n+1]`.
    pub closure_matches: bool,
}

impl ProjectorCheck {
    pub fn all(&self) -> bool {
        self.killed_by_generators
            && self.identity_coefficient_one
            && self.idempotent
            && self.closure_matches
    }
}

pub fn check_projector(p: &TLElement) -> ProjectorCheck {
    let n = p.strands();
    let killed_by_generators = (1..n).all(|i| {
        let e = TLElement::generator(n, i);
        e.multiply(p).unwrap().is_zero() && p.multiply(&e).unwrap().is_zero()
    });
    ProjectorCheck {
        killed_by_generators,
        identity_coefficient_one: p.coeff(&Matching::identity(n)).is_one(),
        idempotent: &p.multiply(p).unwrap() == p,
        closure_matches: p.closure() == delta(n),
    }
}

/// Whether `p_n (p_m (x) id_{n-m}) = p_n`.
pub fn absorb_check(m: usize, n: usize) -> bool {
    assert!(1 <= m && m <= n);
    let pn = jones_wenzl(n);
    let small = jones_wenzl(m).tensor_identity(n - m);
    pn.multiply(&small).map(|x| &x == pn.as_ref()).unwrap_or(false)
        && small.multiply(&pn).map(|x| &x == pn.as_ref()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use laurent_core::{qint, LaurentPoly};

    #[test]
    fn p1_is_identity() {
        assert_eq!(*jones_wenzl(1), TLElement::identity(1));
    }

    #[test]
    fn p2_matches_the_two_strand_solution() {
        let expected = TLElement::identity(2)
            .add(&TLElement::generator(2, 1).scale(
                &RationalFunc::new(LaurentPoly::one(), qint(2)).unwrap(),
            ))
            .unwrap();
        assert_eq!(*jones_wenzl(2), expected);
    }

    #[test]
    fn p3_closure_is_colored_unknot() {
        let expected = RationalFunc::from_poly(-qint(4));
        assert_eq!(jones_wenzl(3).closure(), expected);
    }

    #[test]
    fn one_sided_agrees_with_two_sided() {
        for n in 1..=5 {
            assert_eq!(*jones_wenzl(n), jones_wenzl_two_sided(n), "n = {n}");
        }
    }
}
