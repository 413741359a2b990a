//! Cyclotomic polynomials in `A`, used to decide exactly whether a Laurent
//! polynomial vanishes at a root of unity.

use crate::gcd::laurent_divide;
use crate::poly::LaurentPoly;

/// The m-th cyclotomic polynomial `Phi_m(A)`.
pub fn cyclotomic(m: u64) -> LaurentPoly {
    assert!(m >= 1, "cyclotomic index must be positive");
    let mut p = LaurentPoly::from_terms([(m as i64, 1), (0, -1)]);
    for d in 1..m {
        if m % d == 0 {
            p = laurent_divide(&p, &cyclotomic(d)).expect("Phi_d divides A^m - 1");
        }
    }
    p
}

/// True when `p` vanishes at every primitive m-th root of unity.
pub fn vanishes_at_primitive_root(p: &LaurentPoly, m: u64) -> bool {
    p.is_zero() || laurent_divide(p, &cyclotomic(m)).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::qint;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), LaurentPoly::from_terms([(1, 1), (0, -1)]));
        assert_eq!(cyclotomic(4), LaurentPoly::from_terms([(2, 1), (0, 1)]));
        assert_eq!(cyclotomic(8), LaurentPoly::from_terms([(4, 1), (0, 1)]));
    }

    #[test]
    fn quantum_integer_zeros() {
        // [k] vanishes at A = exp(i pi / 2n), a primitive 4n-th root, iff n | k.
        for n in 2..6u64 {
            for k in 1..(3 * n as u32) {
                assert_eq!(vanishes_at_primitive_root(&qint(k), 4 * n), k as u64 % n == 0, "n={n} k={k}");
            }
        }
    }
}
