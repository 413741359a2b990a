//! Quantum integers, the loop value and colored unknots.

use crate::poly::LaurentPoly;
use crate::rational::RationalFunc;
use num_bigint::BigInt;

/// The quantum integer `[n] = sum_{t=0}^{n-1} A^(2(n-1-2t))`; `[0] = 0`.
pub fn qint(n: u32) -> LaurentPoly {
    let n = n as i64;
    LaurentPoly::from_terms((0..n).map(|t| (2 * (n - 1 - 2 * t), BigInt::from(1))))
}

/// The value of a single crossingless loop, `-A^2 - A^-2`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// The closure of the n-th projector, `O(n) = (-1)^n [n+1]`.
pub fn unknot_colored(n: u32) -> LaurentPoly {
    let q = qint(n + 1);
    if n % 2 == 0 {
        q
    } else {
        -q
    }
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn qfactorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k))
}

/// `[a]/[b]` as a reduced rational function.
pub fn qratio(a: u32, b: u32) -> RationalFunc {
    RationalFunc::new(qint(a), qint(b)).expect("[b] is nonzero for b >= 1")
}
