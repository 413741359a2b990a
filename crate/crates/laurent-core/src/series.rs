//! Laurent expansion around `A = 0`.

use crate::error::LaurentError;
use crate::poly::LaurentPoly;
use crate::rational::RationalFunc;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Expands `f` as a Laurent series around `A = 0` and returns every term of
/// exponent `<= order`, all exact.
///
/// The expansion is integral when the lowest coefficient of the denominator
/// is a unit; otherwise `NonIntegralSeries` is returned at the first
/// coefficient that fails to divide.
pub fn series_truncate(f: &RationalFunc, order: i64) -> Result<LaurentPoly, LaurentError> {
    if f.is_laurent() {
        return Ok(f.num().truncate_above(order));
    }
    let den = f.den();
    let d_low = den.min_exp().expect("nonzero denominator");
    let d0 = den.coeff(d_low);
    let mut rem: BTreeMap<i64, BigInt> = f.num().terms().iter().cloned().collect();
    let mut out = Vec::new();
    while let Some((&e, _)) = rem.iter().next() {
        let q_exp = e - d_low;
        if q_exp > order {
            break;
        }
        let top = rem.remove(&e).unwrap();
        let (q, r) = top.div_rem(&d0);
        if !r.is_zero() {
            return Err(LaurentError::NonIntegralSeries(d0.to_string()));
        }
        for (de, dc) in den.terms().iter().skip(1) {
            let slot = rem.entry(q_exp + de).or_insert_with(BigInt::zero);
            *slot -= &q * dc;
            if slot.is_zero() {
                rem.remove(&(q_exp + de));
            }
        }
        out.push((q_exp, q));
    }
    Ok(LaurentPoly::from_terms(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::qint;

    #[test]
    fn geometric_series() {
        let f = RationalFunc::new(LaurentPoly::one(), LaurentPoly::from_terms([(0, 1), (4, -1)]))
            .unwrap();
        let s = series_truncate(&f, 8).unwrap();
        assert_eq!(s, LaurentPoly::from_terms([(0, 1), (4, 1), (8, 1)]));
    }

    #[test]
    fn quantum_ratio_matches_brute_division() {
        let f = RationalFunc::new(qint(3), qint(2)).unwrap();
        let s = series_truncate(&f, 6).unwrap();
        // Brute force: multiply back and compare low-order terms.
        let back = &s * &qint(2);
        let target = qint(3);
        let lowest = back.min_exp().unwrap();
        for e in lowest..=(6 - 2) {
            assert_eq!(back.coeff(e), target.coeff(e), "exponent {e}");
        }
    }

    #[test]
    fn laurent_input_is_truncated() {
        let f = RationalFunc::from_poly(qint(3));
        assert_eq!(series_truncate(&f, 0).unwrap(), LaurentPoly::from_terms([(-4, 1), (0, 1)]));
    }

    #[test]
    fn non_unit_leading_coefficient_is_reported() {
        let f = RationalFunc::new(LaurentPoly::one(), LaurentPoly::from_terms([(0, 2), (1, 1)]))
            .unwrap();
        assert!(matches!(series_truncate(&f, 3), Err(LaurentError::NonIntegralSeries(_))));
    }
}
