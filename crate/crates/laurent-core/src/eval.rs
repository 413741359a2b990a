//! High-precision complex evaluation of exact values.

use crate::error::LaurentError;
use crate::poly::LaurentPoly;
use crate::rational::RationalFunc;
use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::BigInt;
use num_traits::Signed;
use std::cell::RefCell;
use std::fmt;

/// Default number of significant decimal digits.
pub const DEFAULT_DIGITS: usize = 60;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Binary precision that carries `digits` decimal digits plus guard bits.
pub fn bits_for_digits(digits: usize) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 64
}

/// Converts an arbitrary-precision integer exactly (given enough precision).
pub fn bigfloat_from_bigint(x: &BigInt, prec: usize) -> BigFloat {
    let words: Vec<Word> = x.magnitude().to_u64_digits();
    if words.is_empty() {
        return BigFloat::from_word(0, prec);
    }
    let sign = if x.is_negative() { Sign::Neg } else { Sign::Pos };
    let exp = (64 * words.len()) as i32;
    let v = BigFloat::from_words(&words, sign, exp);
    let mut r = v.clone();
    if r.set_precision(prec.max(64 * words.len()), RM).is_err() {
        return v;
    }
    r
}

/// Natural logarithm of `|x|` as an `f64`, robust against exponents outside
/// the `f64` range. Returns negative infinity for zero.
pub fn ln_abs_f64(x: &BigFloat) -> f64 {
    match x.as_raw_parts() {
        Some((m, _, _, e, _)) if !x.is_zero() => {
            let top = *m.last().unwrap() as f64 / 2f64.powi(64);
            top.ln() + e as f64 * std::f64::consts::LN_2
        }
        _ => f64::NEG_INFINITY,
    }
}

/// Nearest `f64` to `x` (saturating to infinities).
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let l = ln_abs_f64(x);
    let mag = l.exp();
    if x.is_negative() {
        -mag
    } else {
        mag
    }
}

/// Decimal string with `digits` significant digits.
pub fn format_decimal(x: &BigFloat, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let p = bits_for_digits(digits);
    let mut y = x.clone();
    let _ = y.set_precision(p, RM);
    let s = with_consts(|cc| y.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
    // astro-float prints `d.ddd...e[+-]x`; keep `digits` significant digits.
    let (mant, exp) = s.split_once('e').unwrap_or((&s, "0"));
    let (sign, mant) = mant.strip_prefix('-').map(|m| ("-", m)).unwrap_or(("", mant));
    let all: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
    let keep = digits.max(1).min(all.len());
    let mut kept = all[..keep].to_vec();
    let mut exp: i64 = exp.trim_start_matches('+').parse().unwrap_or(0);
    // Round half up on the first dropped digit.
    if all.get(keep).is_some_and(|&d| d >= 5) {
        let mut i = keep;
        loop {
            if i == 0 {
                kept.insert(0, 1);
                kept.pop();
                exp += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let kept: String = kept.iter().map(|d| char::from(b'0' + d)).collect();
    let (head, tail) = kept.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{exp}")
    } else {
        format!("{sign}{head}.{tail}e{exp}")
    }
}

/// A complex number with arbitrary-precision real and imaginary parts.
#[derive(Clone, Debug)]
pub struct MpComplex {
    pub re: BigFloat,
    pub im: BigFloat,
    prec: usize,
}

impl MpComplex {
    pub fn new(re: BigFloat, im: BigFloat, prec: usize) -> Self {
        Self { re, im, prec }
    }

    pub fn zero(prec: usize) -> Self {
        Self::from_f64(0.0, 0.0, prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_f64(1.0, 0.0, prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        Self {
            re: BigFloat::from_f64(re, prec),
            im: BigFloat::from_f64(im, prec),
            prec,
        }
    }

    pub fn from_real(re: BigFloat, prec: usize) -> Self {
        Self {
            re,
            im: BigFloat::from_word(0, prec),
            prec,
        }
    }

    pub fn from_bigint(x: &BigInt, prec: usize) -> Self {
        Self::from_real(bigfloat_from_bigint(x, prec), prec)
    }

    /// `exp(i * pi * num / den)`.
    pub fn exp_i_pi(num: i64, den: i64, prec: usize) -> Self {
        assert!(den != 0, "zero denominator in angle");
        let p = prec + 32;
        with_consts(|cc| {
            let pi = cc.pi(p, RM);
            let angle = pi
                .mul(&BigFloat::from_i64(num, p), p, RM)
                .div(&BigFloat::from_i64(den, p), p, RM);
            let c = angle.cos(p, RM, cc);
            let s = angle.sin(p, RM, cc);
            Self { re: c, im: s, prec }
        })
    }

    /// `exp(x + i * pi * num / den)` for a real `x`.
    pub fn exp_shifted_root(x: &BigFloat, num: i64, den: i64, prec: usize) -> Self {
        let r = Self::exp_i_pi(num, den, prec);
        let m = with_consts(|cc| x.exp(prec + 32, RM, cc));
        Self {
            re: r.re.mul(&m, prec + 32, RM),
            im: r.im.mul(&m, prec + 32, RM),
            prec,
        }
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        Self {
            re: self.re.add(&o.re, p, RM),
            im: self.im.add(&o.im, p, RM),
            prec: p,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        Self {
            re: self.re.sub(&o.re, p, RM),
            im: self.im.sub(&o.im, p, RM),
            prec: p,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Self { re, im, prec: p }
    }

    pub fn scale(&self, k: &BigFloat) -> Self {
        let p = self.prec;
        Self {
            re: self.re.mul(k, p, RM),
            im: self.im.mul(k, p, RM),
            prec: p,
        }
    }

    pub fn norm_sqr(&self) -> BigFloat {
        let p = self.prec;
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt(self.prec, RM)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn div(&self, o: &Self) -> Result<Self, LaurentError> {
        if o.is_zero() {
            return Err(LaurentError::SingularEvaluation("division by zero".into()));
        }
        let p = self.prec.max(o.prec);
        let n = o.norm_sqr();
        let conj = Self {
            re: o.re.clone(),
            im: o.im.neg(),
            prec: p,
        };
        let t = self.mul(&conj);
        Ok(Self {
            re: t.re.div(&n, p, RM),
            im: t.im.div(&n, p, RM),
            prec: p,
        })
    }

    pub fn powi(&self, k: i64) -> Result<Self, LaurentError> {
        let base = if k < 0 {
            Self::one(self.prec).div(self)?
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut b = base;
        let mut acc = Self::one(self.prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    pub fn re_f64(&self) -> f64 {
        to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        to_f64(&self.im)
    }

    pub fn abs_f64(&self) -> f64 {
        to_f64(&self.abs())
    }

    /// `ln |z|` as an `f64` (negative infinity at zero).
    pub fn ln_abs_f64(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        0.5 * ln_abs_f64(&self.norm_sqr())
    }

    /// `|self - other| / max(|other|, 1)` as an `f64`.
    pub fn relative_distance(&self, other: &Self) -> f64 {
        let d = self.sub(other).abs_f64();
        d / other.abs_f64().max(1.0)
    }

    pub fn to_decimal(&self, digits: usize) -> String {
        format!(
            "{} + {}i",
            format_decimal(&self.re, digits),
            format_decimal(&self.im, digits)
        )
    }
}

impl fmt::Display for MpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

/// Working precision for evaluating `p` with `digits` correct digits.
fn working_bits(polys: &[&LaurentPoly], digits: usize, z_log2: f64) -> usize {
    let mut extra = 0usize;
    for p in polys {
        let coeff_bits = p.max_norm().bits() as usize;
        let span = match (p.min_exp(), p.max_exp()) {
            (Some(lo), Some(hi)) => (hi - lo) as f64,
            _ => 0.0,
        };
        let growth = (span * z_log2.abs()).ceil() as usize;
        let count = (p.len().max(1) as f64).log2().ceil() as usize;
        extra = extra.max(coeff_bits + growth + count);
    }
    bits_for_digits(digits) + extra
}

/// Evaluates a Laurent polynomial; also returns the bound
/// `sum |c_e| |z|^e` used to judge cancellation.
pub fn eval_poly(p: &LaurentPoly, z: &MpComplex) -> Result<(MpComplex, BigFloat), LaurentError> {
    let prec = z.prec;
    let mut acc = MpComplex::zero(prec);
    let mut bound = BigFloat::from_word(0, prec);
    let Some(low) = p.min_exp() else {
        return Ok((acc, bound));
    };
    let zabs = z.abs();
    // Horner in z on the shifted polynomial, then multiply by z^low.
    let mut prev = p.max_exp().unwrap();
    let mut babs = BigFloat::from_word(0, prec);
    for (e, c) in p.terms().iter().rev() {
        let gap = prev - e;
        if gap > 0 {
            acc = acc.mul(&z.powi(gap)?);
            babs = babs.mul(&zabs.powi(gap as usize, prec, RM), prec, RM);
        }
        let cf = bigfloat_from_bigint(c, prec);
        acc = acc.add(&MpComplex::from_real(cf.clone(), prec));
        babs = babs.add(&cf.abs(), prec, RM);
        prev = *e;
    }
    let tail = prev - low;
    debug_assert_eq!(tail, 0);
    let zl = z.powi(low)?;
    acc = acc.mul(&zl);
    bound = bound.add(&babs.mul(&zl.abs(), prec, RM), prec, RM);
    Ok((acc, bound))
}

/// Evaluates `f` at `z` with `digits` significant digits.
///
/// Numerator and denominator of the reduced form are evaluated separately
/// and then divided. A denominator that vanishes to working precision is
/// reported as `SingularEvaluation`; a numerator that vanishes gives zero.
pub fn eval_complex(f: &RationalFunc, z: &MpComplex, digits: usize) -> Result<MpComplex, LaurentError> {
    let z_log2 = ln_abs_f64(&z.abs()) / std::f64::consts::LN_2;
    let bits = working_bits(&[f.num(), f.den()], digits, if z_log2.is_finite() { z_log2 } else { 0.0 });
    let zz = MpComplex {
        re: z.re.clone(),
        im: z.im.clone(),
        prec: bits,
    };
    let (n, nb) = eval_poly(f.num(), &zz)?;
    let (d, db) = eval_poly(f.den(), &zz)?;
    let threshold = -(bits_for_digits(digits) as f64) * std::f64::consts::LN_2 + 20.0;
    let rel_den = d.ln_abs_f64() - ln_abs_f64(&db);
    if d.is_zero() || rel_den < threshold {
        return Err(LaurentError::SingularEvaluation(format!(
            "denominator {} vanishes at the evaluation point",
            f.den()
        )));
    }
    let rel_num = n.ln_abs_f64() - ln_abs_f64(&nb);
    let out_prec = bits_for_digits(digits);
    if n.is_zero() || rel_num < threshold {
        return Ok(MpComplex::zero(out_prec));
    }
    let q = n.div(&d)?;
    Ok(MpComplex {
        re: q.re,
        im: q.im,
        prec: out_prec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{loop_value, qint};

    #[test]
    fn loop_value_at_i_is_two() {
        let z = MpComplex::from_f64(0.0, 1.0, 256);
        let v = eval_complex(&RationalFunc::from_poly(loop_value()), &z, 30).unwrap();
        assert!((v.re_f64() - 2.0).abs() < 1e-25);
        assert!(v.im_f64().abs() < 1e-25);
    }

    #[test]
    fn quantum_two_vanishes_at_eighth_root() {
        let z = MpComplex::exp_i_pi(1, 4, 256);
        let v = eval_complex(&RationalFunc::from_poly(qint(2)), &z, 30).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn pole_is_reported() {
        let z = MpComplex::exp_i_pi(1, 4, 256);
        let f = RationalFunc::new(LaurentPoly::one(), qint(2)).unwrap();
        assert!(matches!(eval_complex(&f, &z, 30), Err(LaurentError::SingularEvaluation(_))));
    }

    #[test]
    fn bigint_conversion_is_exact() {
        let x: BigInt = "-123456789012345678901234567890123".parse().unwrap();
        let f = bigfloat_from_bigint(&x, 256);
        assert_eq!(format_decimal(&f, 33), "-1.23456789012345678901234567890123e32");
    }

    #[test]
    fn decimal_output_rounds() {
        let f = BigFloat::from_f64(0.19996, 128);
        assert_eq!(format_decimal(&f, 3), "2.00e-1");
        assert_eq!(format_decimal(&BigFloat::from_f64(9.996, 128), 3), "1.00e1");
        assert_eq!(format_decimal(&BigFloat::from_f64(1.234, 128), 3), "1.23e0");
    }
}
