use laurent_core::eval::bits_for_digits;
use laurent_core::{
    eval_complex, series_truncate, BigInt, LaurentError, LaurentPoly, MpComplex, RationalFunc,
    DEFAULT_DIGITS,
};
use proptest::prelude::*;

fn arb_poly(max_terms: usize, span: i64, coeff: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-span..=span, -coeff..=coeff), 0..=max_terms)
        .prop_map(|t| LaurentPoly::from_terms(t.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn arb_nonzero(max_terms: usize, span: i64, coeff: i64) -> impl Strategy<Value = LaurentPoly> {
    arb_poly(max_terms, span, coeff).prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_rational() -> impl Strategy<Value = RationalFunc> {
    (arb_poly(4, 6, 5), arb_nonzero(4, 6, 5))
        .prop_map(|(n, d)| RationalFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiplication_distributes(f in arb_poly(6, 8, 9), g in arb_poly(6, 8, 9), h in arb_poly(6, 8, 9)) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn no_zero_coefficients_are_stored(f in arb_poly(6, 8, 3), g in arb_poly(6, 8, 3)) {
        let s = &f - &g;
        prop_assert!(s.terms().iter().all(|(_, c)| c != &BigInt::from(0)));
        prop_assert_eq!((&f - &f).terms().len(), 0);
    }

    #[test]
    fn text_form_round_trips(f in arb_poly(8, 20, 1000)) {
        let text = f.to_string();
        prop_assert_eq!(text.parse::<LaurentPoly>().unwrap(), f);
    }

    #[test]
    fn field_axioms_hold(x in arb_rational(), y in arb_rational(), z in arb_rational()) {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&x.checked_div(&y).unwrap() * &y, x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reduction_is_cross_multiplication_consistent(n in arb_poly(5, 6, 7), d in arb_nonzero(5, 6, 7), m in arb_nonzero(3, 3, 3)) {
        let num = &n * &m;
        let den = &d * &m;
        let r = RationalFunc::new(num.clone(), den.clone()).unwrap();
        prop_assert!(r.equals_fraction(&num, &den));
        prop_assert!(r.equals_fraction(&n, &d));
        let low = r.den().terms().first().unwrap();
        prop_assert_eq!(low.0, 0);
        prop_assert!(low.1 > BigInt::from(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn evaluation_is_multiplicative(f in arb_rational(), g in arb_rational(), re in -1.5f64..1.5, im in -1.5f64..1.5) {
        prop_assume!(re.abs() + im.abs() > 0.2);
        let prec = bits_for_digits(DEFAULT_DIGITS);
        let z = MpComplex::from_f64(re, im, prec);
        let (fz, gz, fgz) = match (
            eval_complex(&f, &z, DEFAULT_DIGITS),
            eval_complex(&g, &z, DEFAULT_DIGITS),
            eval_complex(&(&f * &g), &z, DEFAULT_DIGITS),
        ) {
            (Ok(a), Ok(b), Ok(c)) => (a, b, c),
            _ => return Ok(()),
        };
        let prod = fz.mul(&gz);
        if prod.abs_f64() > 1e-40 {
            prop_assert!(prod.relative_distance(&fgz) < 1e-55);
        }
    }

    #[test]
    fn series_agrees_with_evaluation_near_zero(n in arb_poly(4, 4, 3), tail in arb_poly(3, 3, 2), low_sign in prop::bool::ANY, shift in -2i64..3) {
        // Denominator with unit lowest coefficient so the expansion is integral.
        let unit = LaurentPoly::monomial(if low_sign { 1 } else { -1 }, 0);
        let d = (&unit + &tail.truncate_above(3).shift(4)).shift(shift);
        prop_assume!(!d.is_zero());
        let f = RationalFunc::new(n, d).unwrap();
        prop_assume!(!f.is_zero());
        let low = f.num().min_exp().unwrap() - f.den().min_exp().unwrap();
        let order = low + 10;
        let s = series_truncate(&f, order).unwrap();
        let prec = bits_for_digits(DEFAULT_DIGITS);
        let z = MpComplex::from_f64(0.01, 0.0, prec);
        let exact = eval_complex(&f, &z, DEFAULT_DIGITS).unwrap();
        let approx = eval_complex(&RationalFunc::from_poly(s), &z, DEFAULT_DIGITS).unwrap();
        let bound = 1e8 * 0.01f64.powi((order + 1) as i32);
        prop_assert!(exact.sub(&approx).abs_f64() <= bound);
    }
}

#[test]
fn zero_denominator_is_an_error() {
    assert_eq!(
        RationalFunc::new(LaurentPoly::one(), LaurentPoly::zero()),
        Err(LaurentError::ZeroDenominator)
    );
}
