//! Dense univariate polynomial arithmetic over the integers, used to reduce
//! rational functions.
//!
//! A Laurent gcd is the gcd of the monomial-shifted polynomial
//! representatives. The heuristic evaluation gcd is tried first and every
//! candidate it produces is verified by exact division; the primitive
//! pseudo-remainder sequence is the fallback.

use crate::poly::LaurentPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial, index `i` holds the coefficient of `x^i`, trimmed so the
/// last entry is nonzero (the zero polynomial is the empty vector).
pub(crate) type Dense = Vec<BigInt>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Splits a nonzero Laurent polynomial into `A^shift * dense(A)` with a
/// nonzero constant term.
pub(crate) fn to_dense(p: &LaurentPoly) -> (i64, Dense) {
    let Some(low) = p.min_exp() else {
        return (0, Vec::new());
    };
    let high = p.max_exp().unwrap();
    let mut d = vec![BigInt::zero(); (high - low + 1) as usize];
    for (e, c) in p.terms() {
        d[(e - low) as usize] = c.clone();
    }
    (low, d)
}

pub(crate) fn from_dense(shift: i64, d: Dense) -> LaurentPoly {
    LaurentPoly::from_dense(shift, d)
}

fn degree(p: &Dense) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn content(p: &Dense) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
fn primitive(p: &Dense) -> Dense {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = content(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// Exact division `a / b` over the integers, `None` when `b` does not divide
/// `a` in `Z[x]`.
pub(crate) fn divide_exact(a: &Dense, b: &Dense) -> Option<Dense> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lead = b.last().unwrap();
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                rem[k + i] -= &q * bc;
            }
        }
        quot[k] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

fn eval_at(p: &Dense, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn max_norm(p: &Dense) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

/// Recovers a polynomial from its value at `xi` using symmetric residues.
fn interpolate(mut h: BigInt, xi: &BigInt) -> Dense {
    let half = xi >> 1;
    let mut out = Vec::new();
    while !h.is_zero() {
        let mut r = h.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        h = (h - &r) / xi;
        out.push(r);
    }
    trim(&mut out);
    out
}

/// Heuristic gcd of two primitive polynomials with positive leading
/// coefficients; `None` if no verified candidate was found.
fn heuristic_gcd(a: &Dense, b: &Dense) -> Option<Dense> {
    let bound = std::cmp::min(max_norm(a), max_norm(b));
    let mut xi: BigInt = bound * 2 + 29;
    for _ in 0..6 {
        let ha = eval_at(a, &xi);
        let hb = eval_at(b, &xi);
        if !ha.is_zero() && !hb.is_zero() {
            let h = ha.gcd(&hb);
            let g = primitive(&interpolate(h, &xi));
            if !g.is_empty() && divide_exact(a, &g).is_some() && divide_exact(b, &g).is_some() {
                return Some(g);
            }
        }
        let root = xi.sqrt().sqrt();
        xi = &xi * BigInt::from(73794) * root / BigInt::from(27011);
    }
    None
}

/// Pseudo-remainder of `a` by `b`.
fn pseudo_remainder(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let lead = b.last().unwrap().clone();
    let db = degree(b);
    while !r.is_empty() && degree(&r) >= db {
        let shift = degree(&r) - db;
        let top = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lead;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &top * bc;
        }
        trim(&mut r);
    }
    r
}

fn prs_gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut x, mut y) = if degree(a) >= degree(b) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    while !y.is_empty() {
        let r = pseudo_remainder(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x)
}

/// Greatest common divisor in `Z[x]`, normalized to a positive leading
/// coefficient. `gcd(0, 0)` is `0`.
pub(crate) fn gcd(a: &Dense, b: &Dense) -> Dense {
    if a.is_empty() {
        return primitive_with_content(b);
    }
    if b.is_empty() {
        return primitive_with_content(a);
    }
    let c = content(a).gcd(&content(b));
    let pa = primitive(a);
    let pb = primitive(b);
    let g = if degree(&pa) == 0 || degree(&pb) == 0 {
        vec![BigInt::one()]
    } else if pa == pb {
        pa.clone()
    } else if degree(&pa) <= degree(&pb) && divide_exact(&pb, &pa).is_some() {
        pa.clone()
    } else if degree(&pb) < degree(&pa) && divide_exact(&pa, &pb).is_some() {
        pb.clone()
    } else {
        heuristic_gcd(&pa, &pb).unwrap_or_else(|| prs_gcd(&pa, &pb))
    };
    g.into_iter().map(|x| x * &c).collect()
}

fn primitive_with_content(p: &Dense) -> Dense {
    if p.is_empty() {
        return Vec::new();
    }
    if p.last().unwrap().is_negative() {
        p.iter().map(|c| -c).collect()
    } else {
        p.clone()
    }
}

/// Laurent gcd: a generator of the ideal, defined up to a signed monomial.
/// Returned with zero lowest exponent and positive leading coefficient.
pub fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (_, da) = to_dense(a);
    let (_, db) = to_dense(b);
    from_dense(0, gcd(&da, &db))
}

/// Exact Laurent division, `None` if `b` does not divide `a`.
pub fn laurent_divide(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let (sa, da) = to_dense(a);
    let (sb, db) = to_dense(b);
    divide_exact(&da, &db).map(|q| from_dense(sa - sb, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(c: &[i64]) -> Dense {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        // (x+1)(x-2) and (x+1)(x^2+3)
        let a = d(&[-2, -1, 1]);
        let b = d(&[3, 3, 1, 1]);
        assert_eq!(gcd(&a, &b), d(&[1, 1]));
    }

    #[test]
    fn gcd_includes_integer_content() {
        let a = d(&[6, 6]);
        let b = d(&[4, 4]);
        assert_eq!(gcd(&a, &b), d(&[2, 2]));
    }

    #[test]
    fn prs_agrees_with_heuristic() {
        let f = d(&[1, 0, 1]);
        let g = d(&[-1, 1]);
        let a = {
            let l = LaurentPoly::from_dense(0, f.clone()) * LaurentPoly::from_dense(0, g.clone());
            to_dense(&l).1
        };
        let b = {
            let l = LaurentPoly::from_dense(0, f.clone()) * LaurentPoly::from_dense(0, d(&[5, 0, 0, 1]));
            to_dense(&l).1
        };
        assert_eq!(prs_gcd(&primitive(&a), &primitive(&b)), f);
        assert_eq!(heuristic_gcd(&primitive(&a), &primitive(&b)), Some(f));
    }

    #[test]
    fn exact_division_detects_remainders() {
        assert_eq!(divide_exact(&d(&[-1, 0, 1]), &d(&[1, 1])), Some(d(&[-1, 1])));
        assert_eq!(divide_exact(&d(&[1, 0, 1]), &d(&[1, 1])), None);
        assert_eq!(divide_exact(&d(&[1, 2]), &d(&[2])), None);
    }
}
