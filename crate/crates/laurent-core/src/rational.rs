//! The fraction field of `Z[A, A^-1]`.

use crate::error::LaurentError;
use crate::gcd::{divide_exact, from_dense, gcd, to_dense, Dense};
use crate::poly::LaurentPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A quotient `num / den` of Laurent polynomials in reduced form.
///
/// The stored form is canonical: `gcd(num, den)` is a unit, `den` has lowest
/// exponent zero and a positive lowest coefficient. Two values are equal as
/// rational functions exactly when their stored forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunc {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (sn, dn) = to_dense(&num);
        let (sd, dd) = to_dense(&den);
        let g = gcd(&dn, &dd);
        let dn = divide_exact(&dn, &g).expect("gcd divides numerator");
        let dd = divide_exact(&dd, &g).expect("gcd divides denominator");
        Ok(Self::normalized(sn - sd, dn, dd))
    }

    /// Assembles `A^shift * dn / dd` where `dn / dd` is already coprime and
    /// both have nonzero constant terms.
    fn normalized(shift: i64, mut dn: Dense, mut dd: Dense) -> Self {
        if dd[0].is_negative() {
            dn.iter_mut().for_each(|c| *c = -std::mem::take(c));
            dd.iter_mut().for_each(|c| *c = -std::mem::take(c));
        }
        Self {
            num: from_dense(shift, dn),
            den: from_dense(0, dd),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the reduced denominator is `1`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial this value equals, if it is one.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent().then(|| self.num.clone())
    }

    /// Checks `self * den == num` by cross-multiplication for an arbitrary
    /// (unreduced) representation `num / den`.
    pub fn equals_fraction(&self, num: &LaurentPoly, den: &LaurentPoly) -> bool {
        &self.num * den == &self.den * num
    }

    pub fn inverse(&self) -> Result<Self, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        let (sn, dn) = to_dense(&self.num);
        let (_, dd) = to_dense(&self.den);
        Ok(Self::normalized(-sn, dd, dn))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, LaurentError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self, LaurentError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(Self {
            num: base.num.pow(e),
            den: base.den.pow(e),
        }
        .renormalize())
    }

    /// Multiplies by `c * A^k` without a gcd computation.
    pub fn mul_monomial(&self, c: &BigInt, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul_monomial(c, k), self.den.clone()).expect("nonzero denominator")
    }

    /// Multiplies by a Laurent polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        self * &Self::from_poly(p.clone())
    }

    /// Divides by a nonzero Laurent polynomial.
    pub fn div_poly(&self, p: &LaurentPoly) -> Result<Self, LaurentError> {
        if p.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        self.checked_div(&Self::from_poly(p.clone()))
    }

    /// The substitution `A -> A^-1`.
    pub fn invert_variable(&self) -> Self {
        Self::new(self.num.invert_variable(), self.den.invert_variable())
            .expect("nonzero denominator")
    }

    /// Restores the sign convention after an operation that kept coprimality.
    fn renormalize(self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let (sn, dn) = to_dense(&self.num);
        let (sd, dd) = to_dense(&self.den);
        Self::normalized(sn - sd, dn, dd)
    }

    fn sum(&self, other: &Self, negate: bool) -> Self {
        let rhs_num = if negate { -&other.num } else { other.num.clone() };
        if self.den == other.den {
            return Self::new(&self.num + &rhs_num, self.den.clone()).expect("nonzero");
        }
        if self.is_laurent() {
            return Self::new(&(&self.num * &other.den) + &rhs_num, other.den.clone())
                .expect("nonzero");
        }
        if other.is_laurent() {
            return Self::new(&self.num + &(&rhs_num * &self.den), self.den.clone())
                .expect("nonzero");
        }
        let (_, d1) = to_dense(&self.den);
        let (_, d2) = to_dense(&other.den);
        let g = gcd(&d1, &d2);
        let c1 = from_dense(0, divide_exact(&d1, &g).expect("gcd divides"));
        let c2 = from_dense(0, divide_exact(&d2, &g).expect("gcd divides"));
        let num = &(&self.num * &c2) + &(&rhs_num * &c1);
        let den = &self.den * &c2;
        Self::new(num, den).expect("nonzero")
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_laurent() && other.is_laurent() {
            return Self::from_poly(&self.num * &other.num);
        }
        // Cross-cancel: both inputs are reduced, so after removing
        // gcd(a, d) and gcd(c, b) the product is reduced as well.
        let (sa, a) = to_dense(&self.num);
        let (sb, b) = to_dense(&self.den);
        let (sc, c) = to_dense(&other.num);
        let (sd, d) = to_dense(&other.den);
        let g1 = gcd(&a, &d);
        let g2 = gcd(&c, &b);
        let a = divide_exact(&a, &g1).expect("gcd divides");
        let d = divide_exact(&d, &g1).expect("gcd divides");
        let c = divide_exact(&c, &g2).expect("gcd divides");
        let b = divide_exact(&b, &g2).expect("gcd divides");
        let num = from_dense(0, a) * from_dense(0, c);
        let den = from_dense(0, b) * from_dense(0, d);
        let (_, dn) = to_dense(&num);
        let (_, dd) = to_dense(&den);
        Self::normalized(sa + sc - sb - sd, dn, dd)
    }
}

impl From<LaurentPoly> for RationalFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: &RationalFunc) -> RationalFunc {
        self.sum(rhs, false)
    }
}

impl Add for RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: RationalFunc) -> RationalFunc {
        self.sum(&rhs, false)
    }
}

impl Sub for &RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: &RationalFunc) -> RationalFunc {
        self.sum(rhs, true)
    }
}

impl Sub for RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: RationalFunc) -> RationalFunc {
        self.sum(&rhs, true)
    }
}

impl Mul for &RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: &RationalFunc) -> RationalFunc {
        self.product(rhs)
    }
}

impl Mul for RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: RationalFunc) -> RationalFunc {
        self.product(&rhs)
    }
}

impl Neg for &RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        RationalFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        RationalFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl One for RationalFunc {
    fn one() -> Self {
        RationalFunc::one()
    }
}
