//! The Lobachevsky function and the octahedral volume constant.
//!
//! `Λ(θ) = Σ_{m≥1} sin(2mθ) / (2m²)` converges too slowly to give many
//! digits directly. The summation used here is the Clausen expansion
//! `Λ(θ) = Cl₂(2θ)/2` with
//! `Cl₂(x) = x − x log|x| + Σ_{k≥1} |B_{2k}| x^{2k+1} / (2k (2k+1)!)`,
//! valid for `|x| < 2π`. Since `|B_{2k}| / (2k)! ≤ 4 (2π)^{-2k}`, the tail
//! after `K` terms is at most `4|x| r^{K+1} / ((2K+2)(2K+3)(1−r))` with
//! `r = (x / 2π)²`. Arguments are reduced to `|x| ≤ π`, so `r ≤ 1/4`.

use astro_float::{BigFloat, Consts, RoundingMode};
use laurent_core::eval::{bigfloat_from_bigint, bits_for_digits};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cell::RefCell;

/// Largest number of digits accepted by [`v8`] and [`lobachevsky`].
pub const MAX_DIGITS: usize = 400;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

pub(crate) fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// `|B_2|, |B_4|, ..., |B_{2k}|` as reduced fractions.
fn bernoulli_abs(k: usize) -> Vec<(BigInt, BigInt)> {
    let top = 2 * k;
    let mut b: Vec<(BigInt, BigInt)> = vec![(BigInt::one(), BigInt::one())];
    // After the update at step m, binom[j] holds C(m+1, j).
    let mut binom: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
    for m in 1..=top {
        let mut next = vec![BigInt::one(); m + 2];
        for j in 1..=m {
            next[j] = &binom[j - 1] + &binom[j];
        }
        binom = next;
        if m > 1 && m % 2 == 1 {
            b.push((BigInt::zero(), BigInt::one()));
            continue;
        }
        let (mut num, mut den) = (BigInt::zero(), BigInt::one());
        for (j, (bn, bd)) in b.iter().enumerate() {
            if bn.is_zero() {
                continue;
            }
            num = &num * bd + &binom[j] * bn * &den;
            den *= bd;
            let g = num.gcd(&den);
            num /= &g;
            den /= &g;
        }
        let den = den * BigInt::from(m + 1);
        let g = num.gcd(&den);
        b.push((-num / &g, den / g));
    }
    (1..=k).map(|i| (b[2 * i].0.abs(), b[2 * i].1.clone())).collect()
}

/// Number of Clausen terms that bring the tail below `10^-digits` at `|x|`.
fn clausen_terms(x: f64, digits: usize) -> usize {
    let r = (x / (2.0 * std::f64::consts::PI)).powi(2);
    let goal = -(digits as f64 + 3.0) * std::f64::consts::LN_10;
    let mut k = 1usize;
    loop {
        let kf = k as f64;
        let bound = (4.0 * x).ln() + (kf + 1.0) * r.ln()
            - ((2.0 * kf + 2.0) * (2.0 * kf + 3.0) * (1.0 - r)).ln();
        if bound < goal {
            return k;
        }
        k += 1;
    }
}

/// `Λ(π p / q)` to `digits` significant digits.
pub fn lobachevsky(p: i64, q: i64, digits: usize) -> BigFloat {
    assert!(q > 0, "denominator must be positive");
    assert!((1..=MAX_DIGITS).contains(&digits), "digits must lie in 1..={MAX_DIGITS}");
    let prec = bits_for_digits(digits) + 32;
    // Λ has period π: reduce p/q to [-1/2, 1/2].
    let r = p.rem_euclid(q);
    let r = if 2 * r > q { r - q } else { r };
    if r == 0 {
        return BigFloat::from_word(0, prec);
    }
    let terms = clausen_terms(2.0 * std::f64::consts::PI * r.abs() as f64 / q as f64, digits);
    let bern = bernoulli_abs(terms);
    with_consts(|cc| {
        let pi = cc.pi(prec, RM);
        let x = pi
            .mul(&BigFloat::from_i64(2 * r, prec), prec, RM)
            .div(&BigFloat::from_i64(q, prec), prec, RM);
        let ln = x.abs().ln(prec, RM, cc);
        let mut sum = x.sub(&x.mul(&ln, prec, RM), prec, RM);
        let x2 = x.mul(&x, prec, RM);
        let mut power = x.clone();
        let mut fact = BigFloat::from_word(1, prec);
        for (i, (bn, bd)) in bern.iter().enumerate() {
            let k = i as u64 + 1;
            power = power.mul(&x2, prec, RM);
            fact = fact
                .mul(&BigFloat::from_word(2 * k, prec), prec, RM)
                .mul(&BigFloat::from_word(2 * k + 1, prec), prec, RM);
            let coeff = bigfloat_from_bigint(bn, prec)
                .div(&bigfloat_from_bigint(bd, prec), prec, RM)
                .div(&fact, prec, RM)
                .div(&BigFloat::from_word(2 * k, prec), prec, RM);
            sum = sum.add(&coeff.mul(&power, prec, RM), prec, RM);
        }
        sum.div(&BigFloat::from_word(2, prec), prec, RM)
    })
}

/// The defining series `Σ_{m=1}^{M} sin(2mπp/q) / (2m²)` in double
/// precision, with the bound `1/(2M)` on the omitted tail.
pub fn lobachevsky_series(p: i64, q: i64, terms: usize) -> (f64, f64) {
    assert!(q > 0 && terms > 0);
    let theta = std::f64::consts::PI * p as f64 / q as f64;
    let sum = (1..=terms)
        .map(|m| {
            let m = m as f64;
            (2.0 * m * theta).sin() / (2.0 * m * m)
        })
        .sum();
    (sum, 0.5 / terms as f64)
}

/// The volume of the regular ideal octahedron, `8 Λ(π/4)`.
pub fn v8(digits: usize) -> BigFloat {
    let prec = bits_for_digits(digits) + 32;
    lobachevsky(1, 4, digits).mul(&BigFloat::from_word(8, prec), prec, RM)
}

/// [`v8`] as an `f64`.
pub fn v8_f64() -> f64 {
    laurent_core::eval::to_f64(&v8(20))
}

#[cfg(test)]
mod tests {
    use super::*;
    use laurent_core::eval::format_decimal;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_abs(4);
        let want = [(1, 6), (1, 30), (1, 42), (1, 30)];
        for (got, (n, d)) in b.iter().zip(want) {
            assert_eq!(got, &(BigInt::from(n), BigInt::from(d)));
        }
        assert_eq!(bernoulli_abs(6)[5], (BigInt::from(691), BigInt::from(2730)));
    }

    #[test]
    fn ten_digits() {
        assert_eq!(format_decimal(&v8(10), 10), "3.663862377e0");
    }

    #[test]
    fn zeros_of_lobachevsky() {
        assert!(lobachevsky(0, 1, 30).is_zero());
        assert!(lobachevsky(3, 1, 30).is_zero());
        let half = laurent_core::eval::to_f64(&lobachevsky(1, 2, 40));
        assert!(half.abs() < 1e-38, "{half}");
    }

    #[test]
    fn odd_and_periodic() {
        let a = lobachevsky(1, 5, 30);
        let b = lobachevsky(-1, 5, 30);
        let c = lobachevsky(6, 5, 30);
        let prec = bits_for_digits(30);
        assert!(laurent_core::eval::to_f64(&a.add(&b, prec, RM)).abs() < 1e-29);
        assert!(laurent_core::eval::to_f64(&a.sub(&c, prec, RM)).abs() < 1e-29);
    }
}
