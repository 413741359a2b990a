//! Evaluation at the root of unity `A = exp(iπ/2n)`.
//!
//! Exact values are reduced first and then substituted. For colors beyond
//! the reach of exact arithmetic the closed forms are evaluated with the
//! order of vanishing tracked: along `A = exp(i(π/2n + ε))` every quantum
//! integer is `[k] = sin(k(π/n + 2ε)) / sin(π/n + 2ε)`, a power series in
//! `ε` that starts at `ε^1` exactly when `n | k`. Quantities are carried as
//! truncated series with their order of vanishing, and the constant term
//! of an order-zero result is the value of the reduced rational function.

use crate::error::AsymError;
use crate::lobachevsky::with_consts;
use astro_float::{BigFloat, RoundingMode};
use laurent_core::eval::{bits_for_digits, ln_abs_f64};
use laurent_core::{eval_complex, vanishes_at_primitive_root, LaurentError, MpComplex, RationalFunc};
use spin_network::{admissible, SpinError};

const RM: RoundingMode = RoundingMode::ToEven;

/// Extra bits carried by the regularized evaluator to absorb cancellation.
const GUARD_BITS: usize = 192;

/// `exp(iπ/2n)`, a primitive `4n`-th root of unity.
pub fn root_point(n: usize, digits: usize) -> MpComplex {
    MpComplex::exp_i_pi(1, 2 * n as i64, bits_for_digits(digits))
}

/// `f(exp(iπ/2n))` for a reduced rational function.
pub fn eval_at_root(f: &RationalFunc, n: usize, digits: usize) -> Result<MpComplex, AsymError> {
    if n == 0 {
        return Err(AsymError::Invalid("n must be positive".into()));
    }
    match eval_complex(f, &root_point(n, digits), digits) {
        Ok(v) => Ok(v),
        Err(LaurentError::SingularEvaluation(detail)) => {
            let m = 4 * n as u64;
            let detail = if vanishes_at_primitive_root(f.den(), m) {
                format!("denominator {} is divisible by the cyclotomic polynomial Phi_{m}", f.den())
            } else {
                detail
            };
            Err(AsymError::SingularEvaluation { den: 2 * n as u64, detail })
        }
        Err(e) => Err(e.into()),
    }
}

/// Number of Taylor coefficients carried per quantity.
const SERIES_LEN: usize = 8;

/// A truncated expansion `ε^order (c_0 + c_1 ε + ...)` of a quantity along
/// `A = exp(i(π/2n + ε))`. Only the stored coefficients are known.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub order: i64,
    pub coeffs: Vec<BigFloat>,
}

impl Expansion {
    fn constant(x: BigFloat) -> Self {
        Self {
            order: 0,
            coeffs: vec![x],
        }
    }

    fn mul(&self, o: &Self, prec: usize) -> Self {
        let len = self.coeffs.len().min(o.coeffs.len());
        let coeffs = (0..len)
            .map(|j| {
                (0..=j).fold(BigFloat::from_word(0, prec), |acc, i| {
                    acc.add(&self.coeffs[i].mul(&o.coeffs[j - i], prec, RM), prec, RM)
                })
            })
            .collect();
        Self {
            order: self.order + o.order,
            coeffs,
        }
    }

    fn inverse(&self, prec: usize) -> Self {
        let b = &self.coeffs;
        let mut inv: Vec<BigFloat> = vec![BigFloat::from_word(1, prec).div(&b[0], prec, RM)];
        for j in 1..b.len() {
            let s = (1..=j).fold(BigFloat::from_word(0, prec), |acc, i| {
                acc.add(&b[i].mul(&inv[j - i], prec, RM), prec, RM)
            });
            inv.push(s.neg().div(&b[0], prec, RM));
        }
        Self {
            order: -self.order,
            coeffs: inv,
        }
    }

    fn div(&self, o: &Self, prec: usize) -> Self {
        self.mul(&o.inverse(prec), prec)
    }

    fn neg(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(BigFloat::neg).collect(),
        }
    }
}

/// Quantum integers and factorials at one root, at one working precision.
pub struct RootTable {
    n: usize,
    digits: usize,
    prec: usize,
    qint: Vec<Expansion>,
    fact: Vec<Expansion>,
}

/// Taylor coefficients of `sin(x + 2kε)` in `ε` from `sin x` and `cos x`.
fn sine_series(s: &BigFloat, c: &BigFloat, k: usize, prec: usize) -> Vec<BigFloat> {
    let mut out = Vec::with_capacity(SERIES_LEN + 1);
    let mut scale = BigFloat::from_word(1, prec);
    for j in 0..=SERIES_LEN {
        if j > 0 {
            scale = scale
                .mul(&BigFloat::from_word(2 * k as u64, prec), prec, RM)
                .div(&BigFloat::from_word(j as u64, prec), prec, RM);
        }
        let d = match j % 4 {
            0 => s.clone(),
            1 => c.clone(),
            2 => s.neg(),
            _ => c.neg(),
        };
        out.push(d.mul(&scale, prec, RM));
    }
    out
}

impl RootTable {
    /// Tables for `[k]` and `[k]!` with `k <= kmax` at `exp(iπ/2n)`, `n >= 2`.
    pub fn new(n: usize, kmax: usize, digits: usize) -> Result<Self, AsymError> {
        if n < 2 {
            return Err(AsymError::Invalid("the regularized evaluator needs n >= 2".into()));
        }
        let prec = bits_for_digits(digits) + GUARD_BITS;
        let qint = with_consts(|cc| {
            let wp = prec + 32;
            let pi = cc.pi(wp, RM);
            let angle = |k: usize| {
                pi.mul(&BigFloat::from_word((k % (2 * n)) as u64, wp), wp, RM)
                    .div(&BigFloat::from_word(n as u64, wp), wp, RM)
            };
            let sin_cos = |k: usize, cc: &mut astro_float::Consts| {
                if k % n == 0 {
                    let sign = if (k / n) % 2 == 1 { -1 } else { 1 };
                    (BigFloat::from_word(0, prec), BigFloat::from_i64(sign, prec))
                } else {
                    let x = angle(k);
                    (x.sin(wp, RM, cc), x.cos(wp, RM, cc))
                }
            };
            let (s1, c1) = sin_cos(1, cc);
            let base = Expansion {
                order: 0,
                coeffs: sine_series(&s1, &c1, 1, prec)[..SERIES_LEN].to_vec(),
            };
            let mut out = vec![Expansion::constant(BigFloat::from_word(0, prec))];
            for k in 1..=kmax {
                let (s, c) = sin_cos(k, cc);
                let mut series = sine_series(&s, &c, k, prec);
                let order = if k % n == 0 {
                    series.remove(0);
                    1
                } else {
                    series.pop();
                    0
                };
                out.push(Expansion { order, coeffs: series }.div(&base, prec));
            }
            out
        });
        let mut fact = vec![Expansion {
            order: 0,
            coeffs: (0..SERIES_LEN)
                .map(|j| BigFloat::from_word(u64::from(j == 0), prec))
                .collect(),
        }];
        for k in 1..=kmax {
            let next = fact[k - 1].mul(&qint[k], prec);
            fact.push(next);
        }
        Ok(Self { n, digits, prec, qint, fact })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn fact(&self, k: usize) -> Result<&Expansion, AsymError> {
        self.fact
            .get(k)
            .ok_or_else(|| AsymError::Invalid(format!("factorial [{k}]! beyond the table")))
    }

    fn signed(r: Expansion, odd: bool) -> Expansion {
        if odd {
            r.neg()
        } else {
            r
        }
    }

    /// `[k]`.
    pub fn qint(&self, k: usize) -> Result<Expansion, AsymError> {
        self.qint
            .get(k)
            .cloned()
            .ok_or_else(|| AsymError::Invalid(format!("quantum integer [{k}] beyond the table")))
    }

    /// `O(k) = (-1)^k [k+1]`.
    pub fn unknot(&self, k: usize) -> Result<Expansion, AsymError> {
        Ok(Self::signed(self.qint(k + 1)?, k % 2 == 1))
    }

    /// The closed form of `theta(a, b, c)`.
    pub fn theta(&self, a: usize, b: usize, c: usize) -> Result<Expansion, AsymError> {
        if !admissible(a, b, c) {
            return Err(SpinError::Inadmissible(vec![a, b, c]).into());
        }
        let (m, n, p) = ((a + b - c) / 2, (b + c - a) / 2, (a + c - b) / 2);
        let prec = self.prec;
        let num = self
            .fact(m + n + p + 1)?
            .mul(self.fact(m)?, prec)
            .mul(self.fact(n)?, prec)
            .mul(self.fact(p)?, prec);
        let den = self
            .fact(m + n)?
            .mul(self.fact(n + p)?, prec)
            .mul(self.fact(m + p)?, prec);
        Ok(Self::signed(num.div(&den, prec), (m + n + p) % 2 == 1))
    }

    /// The closed form of the tetrahedral network with vertex triples
    /// `(a,b,c)`, `(c,e,f)`, `(a,e,d)`, `(b,d,f)`.
    pub fn tet(&self, colors: [usize; 6]) -> Result<Expansion, AsymError> {
        let [a, b, c, d, e, f] = colors;
        let triples = [[a, b, c], [c, e, f], [a, e, d], [b, d, f]];
        if triples.iter().any(|t| !admissible(t[0], t[1], t[2])) {
            return Err(SpinError::Inadmissible(colors.to_vec()).into());
        }
        let prec = self.prec;
        let total: usize = colors.iter().sum();
        let vertex: Vec<usize> = triples.iter().map(|t| t.iter().sum::<usize>() / 2).collect();
        let square: Vec<usize> = [a + f, b + e, c + d].iter().map(|x| (total - x) / 2).collect();
        let lo = *vertex.iter().max().unwrap();
        let hi = *square.iter().min().unwrap();
        let mut terms = Vec::with_capacity(hi - lo + 1);
        for s in lo..=hi {
            let mut t = self.fact(s + 1)?.clone();
            for &v in &vertex {
                t = t.div(self.fact(s - v)?, prec);
            }
            for &q in &square {
                t = t.div(self.fact(q - s)?, prec);
            }
            terms.push(Self::signed(t, s % 2 == 1));
        }
        let mut out = self.sum(&terms)?;
        for &v in &vertex {
            for &q in &square {
                out = out.mul(self.fact(q - v)?, prec);
            }
        }
        for &x in &colors {
            out = out.div(self.fact(x)?, prec);
        }
        Ok(out)
    }

    /// Sum of expansions. Leading coefficients that cancel to working
    /// precision are dropped, which raises the order and shortens the
    /// known part; a sum with no known coefficient left is an error.
    pub fn sum(&self, terms: &[Expansion]) -> Result<Expansion, AsymError> {
        let order = terms
            .iter()
            .map(|t| t.order)
            .min()
            .ok_or_else(|| AsymError::Invalid("empty sum".into()))?;
        // Coefficient of ε^(order + j) is known while every term knows it.
        let len = terms
            .iter()
            .map(|t| (t.order - order) as usize + t.coeffs.len())
            .min()
            .unwrap();
        let mut coeffs = Vec::with_capacity(len);
        let mut largest = Vec::with_capacity(len);
        for j in 0..len {
            let mut acc = BigFloat::from_word(0, self.prec);
            let mut big = f64::NEG_INFINITY;
            for t in terms {
                let shift = (t.order - order) as usize;
                if j >= shift {
                    big = big.max(ln_abs_f64(&t.coeffs[j - shift]));
                    acc = acc.add(&t.coeffs[j - shift], self.prec, RM);
                }
            }
            coeffs.push(acc);
            largest.push(big);
        }
        let allowed = (GUARD_BITS - 32) as f64 * std::f64::consts::LN_2;
        let lead = (0..len).find(|&j| !coeffs[j].is_zero() && largest[j] - ln_abs_f64(&coeffs[j]) <= allowed);
        match lead {
            Some(j) => Ok(Expansion {
                order: order + j as i64,
                coeffs: coeffs.split_off(j),
            }),
            None => Err(AsymError::Cancellation(format!(
                "{} terms cancel through order {} at n = {}",
                terms.len(),
                order + len as i64 - 1,
                self.n
            ))),
        }
    }

    pub fn div(&self, x: &Expansion, y: &Expansion) -> Expansion {
        x.div(y, self.prec)
    }

    pub fn mul(&self, x: &Expansion, y: &Expansion) -> Expansion {
        x.mul(y, self.prec)
    }

    /// The value at the root: zero for positive order, an error for
    /// negative order.
    pub fn value(&self, x: &Expansion) -> Result<MpComplex, AsymError> {
        let out = bits_for_digits(self.digits);
        match x.order {
            0 => {
                let mut v = x.coeffs[0].clone();
                let _ = v.set_precision(out, RM);
                Ok(MpComplex::from_real(v, out))
            }
            o if o > 0 => Ok(MpComplex::zero(out)),
            o => Err(AsymError::SingularEvaluation {
                den: 2 * self.n as u64,
                detail: format!("pole of order {} in the closed form", -o),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers_vanish_at_multiples_of_n() {
        let t = RootTable::new(5, 20, 30).unwrap();
        for k in 1..=20 {
            assert_eq!(t.qint(k).unwrap().order, i64::from(k % 5 == 0), "k = {k}");
        }
    }

    #[test]
    fn ratio_of_vanishing_integers() {
        // [2n] / [n] = A^{2n} + A^{-2n} = -2 at the root.
        let t = RootTable::new(7, 14, 30).unwrap();
        let r = t.div(&t.qint(14).unwrap(), &t.qint(7).unwrap());
        let v = t.value(&r).unwrap();
        assert!((v.re_f64() + 2.0).abs() < 1e-25);
    }
}
