//! Sparse integer Laurent polynomials in the variable `A`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// An integer Laurent polynomial `sum c_e A^e`.
///
/// Terms are kept sorted by ascending exponent and no stored coefficient is
/// zero, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * A^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// The variable `A`.
    pub fn a() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// combining repeated exponents and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(BigInt::zero) += c.into();
        }
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Builds from terms already sorted by strictly increasing exponent with
    /// no zero coefficients.
    /// Builds from a dense coefficient vector whose entry `i` is the
    /// coefficient of `A^(low + i)`.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (low + i as i64, c))
            .collect();
        Self { terms }
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// Coefficient of `A^e` (zero if absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Returns `(exponent, coefficient)` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            Some((self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `c * A^k`.
    pub fn mul_monomial(&self, c: &BigInt, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (e + k, x * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The substitution `A -> A^-1`.
    pub fn invert_variable(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        Self { terms }
    }

    /// The substitution `A -> A^m` for a positive integer `m`.
    pub fn substitute_power(&self, m: i64) -> Self {
        assert!(m > 0, "substitute_power needs a positive power");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * m, c.clone())).collect(),
        }
    }

    /// Keeps only the terms with exponent `<= order`.
    pub fn truncate_above(&self, order: i64) -> Self {
        Self {
            terms: self.terms.iter().filter(|t| t.0 <= order).cloned().collect(),
        }
    }

    /// Sum of coefficients, i.e. the value at `A = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|t| &t.1).sum()
    }

    /// Value at an integer point `A = x` for polynomials without negative
    /// exponents; `None` otherwise.
    pub fn eval_integer(&self, x: &BigInt) -> Option<BigInt> {
        if self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = BigInt::zero();
        let mut prev = self.max_exp().unwrap_or(0);
        for (e, c) in self.terms.iter().rev() {
            for _ in *e..prev {
                acc *= x;
            }
            acc += c;
            prev = *e;
        }
        for _ in 0..prev {
            acc *= x;
        }
        Some(acc)
    }

    /// Largest coefficient magnitude (zero for the zero polynomial).
    pub fn max_norm(&self) -> BigInt {
        self.terms
            .iter()
            .map(|t| t.1.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate_other {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((e, c)) = other.as_monomial() {
            return self.mul_monomial(c, e);
        }
        if let Some((e, c)) = self.as_monomial() {
            return other.mul_monomial(c, e);
        }
        let low = self.terms[0].0 + other.terms[0].0;
        let high = self.max_exp().unwrap() + other.max_exp().unwrap();
        let span = (high - low + 1) as usize;
        let pairs = self.terms.len() * other.terms.len();
        if span <= 4 * pairs + 64 {
            let mut dense = vec![BigInt::zero(); span];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    dense[(ea + eb - low) as usize] += ca * cb;
                }
            }
            Self::from_dense(low, dense)
        } else {
            let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    *map.entry(ea + eb).or_insert_with(BigInt::zero) += ca * cb;
                }
            }
            Self {
                terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            }
        }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        self.merge(&rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self.merge(&rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.product(rhs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.product(&rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, true);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn zero_has_empty_support() {
        assert!(LaurentPoly::zero().terms().is_empty());
        let x = p(&[(2, 1), (-2, 1)]);
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn from_terms_combines_and_drops_zeros() {
        let x = p(&[(1, 2), (1, -2), (0, 3), (-1, 1), (0, -1)]);
        assert_eq!(x.terms(), &[(-1, BigInt::from(1)), (0, BigInt::from(2))]);
    }

    #[test]
    fn multiplication_matches_hand_expansion() {
        let x = p(&[(1, 1), (-1, 1)]);
        assert_eq!(&x * &x, p(&[(2, 1), (0, 2), (-2, 1)]));
        let sparse = p(&[(0, 1), (1000, 1)]);
        assert_eq!(&sparse * &sparse, p(&[(0, 1), (1000, 2), (2000, 1)]));
    }

    #[test]
    fn pow_and_inversion() {
        let x = p(&[(2, 1), (0, 1)]);
        assert_eq!(x.pow(3), p(&[(6, 1), (4, 3), (2, 3), (0, 1)]));
        assert_eq!(x.invert_variable(), p(&[(-2, 1), (0, 1)]));
        assert_eq!(x.pow(0), LaurentPoly::one());
    }

    #[test]
    fn integer_evaluation() {
        let x = p(&[(0, 1), (2, -3), (5, 1)]);
        assert_eq!(x.eval_integer(&BigInt::from(2)), Some(BigInt::from(1 - 12 + 32)));
        assert_eq!(p(&[(-1, 1)]).eval_integer(&BigInt::from(2)), None);
    }
}
