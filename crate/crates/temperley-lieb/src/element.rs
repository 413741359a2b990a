//! Elements of `TL_n` with coefficients in the fraction field.

use crate::matching::Matching;
use laurent_core::{loop_value, LaurentPoly, RationalFunc};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TlError {
    #[error("strand mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("box arity mismatch: host box has {host} strands, element has {element}")]
    ArityMismatch { host: usize, element: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct TLElement {
    n: usize,
    terms: BTreeMap<Matching, RationalFunc>,
}

/// `delta^k` for the loop value `delta = -A^2 - A^-2`.
pub fn loop_power(k: usize) -> LaurentPoly {
    loop_value().pow(k as u32)
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(m: Matching) -> Self {
        Self::term(m, RationalFunc::one())
    }

    pub fn term(m: Matching, c: RationalFunc) -> Self {
        let mut x = Self::zero(m.strands());
        x.add_term(m, c);
        x
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Matching::identity(n))
    }

    pub fn generator(n: usize, i: usize) -> Self {
        Self::basis(Matching::generator(n, i))
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Matching, RationalFunc> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Matching) -> RationalFunc {
        self.terms.get(m).cloned().unwrap_or_else(RationalFunc::zero)
    }

    pub fn add_term(&mut self, m: Matching, c: RationalFunc) {
        assert_eq!(m.strands(), self.n, "strand mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TlError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TlError> {
        self.add(&other.scale(&-RationalFunc::one()))
    }

    pub fn scale(&self, c: &RationalFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<(), TlError> {
        if self.n != other.n {
            return Err(TlError::StrandMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// The product `self * other`, `self` stacked on top of `other`.
    pub fn multiply(&self, other: &Self) -> Result<Self, TlError> {
        self.check(other)?;
        // Group products by (matching, loops) before touching coefficients.
        let mut acc: BTreeMap<(Matching, usize), RationalFunc> = BTreeMap::new();
        for (mx, cx) in &self.terms {
            for (my, cy) in &other.terms {
                let (m, loops) = mx.compose(my);
                let c = cx * cy;
                match acc.get_mut(&(m, loops)) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert((m, loops), c);
                    }
                }
            }
        }
        let mut out = Self::zero(self.n);
        for ((m, loops), c) in acc {
            out.add_term(m, c.mul_poly(&loop_power(loops)));
        }
        Ok(out)
    }

    /// Side-by-side placement, `self` on the left.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n + other.n);
        for (mx, cx) in &self.terms {
            for (my, cy) in &other.terms {
                out.add_term(mx.tensor(my), cx * cy);
            }
        }
        out
    }

    /// `self` with `k` extra vertical strands on the right.
    pub fn tensor_identity(&self, k: usize) -> Self {
        self.tensor(&Self::identity(k))
    }

    /// Closes top point `i` to bottom point `i` and evaluates loops.
    pub fn closure(&self) -> RationalFunc {
        let mut by_loops: BTreeMap<usize, RationalFunc> = BTreeMap::new();
        for (m, c) in &self.terms {
            let l = m.closure_loops();
            let e = by_loops.entry(l).or_insert_with(RationalFunc::zero);
            *e = &*e + c;
        }
        by_loops
            .into_iter()
            .fold(RationalFunc::zero(), |acc, (l, c)| {
                &acc + &c.mul_poly(&loop_power(l))
            })
    }

    /// Vertical reflection of every matching.
    pub fn flip(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.flip(), c.clone())).collect(),
        }
    }
}

/// Closes `x` against `y` top-to-top and bottom-to-bottom.
pub fn join(x: &TLElement, y: &TLElement) -> Result<RationalFunc, TlError> {
    x.check(y)?;
    let mut by_loops: BTreeMap<usize, RationalFunc> = BTreeMap::new();
    for (mx, cx) in &x.terms {
        for (my, cy) in &y.terms {
            let l = mx.join_loops(my);
            let e = by_loops.entry(l).or_insert_with(RationalFunc::zero);
            *e = &*e + &(cx * cy);
        }
    }
    Ok(by_loops
        .into_iter()
        .fold(RationalFunc::zero(), |acc, (l, c)| {
            &acc + &c.mul_poly(&loop_power(l))
        }))
}

/// Product of two elements; see [`TLElement::multiply`].
pub fn multiply(x: &TLElement, y: &TLElement) -> Result<TLElement, TlError> {
    x.multiply(y)
}

impl fmt::Debug for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (m, c) in &self.terms {
            writeln!(f, "{c} * {m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_squared_is_delta_e() {
        let e = TLElement::generator(2, 1);
        let delta = RationalFunc::from_poly(loop_value());
        assert_eq!(e.multiply(&e).unwrap(), e.scale(&delta));
    }

    #[test]
    fn identity_is_neutral() {
        let x = TLElement::generator(3, 1)
            .add(&TLElement::generator(3, 2).scale(&RationalFunc::from_int(3)))
            .unwrap();
        assert_eq!(TLElement::identity(3).multiply(&x).unwrap(), x);
        assert_eq!(x.multiply(&TLElement::identity(3)).unwrap(), x);
    }

    #[test]
    fn joins() {
        let delta = RationalFunc::from_poly(loop_value());
        let id = TLElement::identity(3);
        assert_eq!(join(&id, &id).unwrap(), delta.pow(3).unwrap());
        let e = TLElement::generator(2, 1);
        assert_eq!(join(&e, &e).unwrap(), delta.pow(2).unwrap());
    }

    #[test]
    fn mismatched_strands_are_rejected() {
        let r = TLElement::identity(2).multiply(&TLElement::identity(3));
        assert_eq!(r, Err(TlError::StrandMismatch(2, 3)));
    }
}
