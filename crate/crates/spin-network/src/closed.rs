//! Quantum-factorial formulas for theta and tetrahedral networks.
//!
//! These are the recoupling-theory closed forms in terms of `[k]!`. They are
//! an outside oracle and a fast path; the skein evaluations are the
//! definition, and tests compare the two for small colors.

use crate::ktg::admissible;
use laurent_core::{qfactorial, qint, LaurentPoly, RationalFunc};

fn fact(k: usize) -> LaurentPoly {
    qfactorial(k as u32)
}

/// `[lo+1][lo+2]...[hi]`, the ratio `[hi]! / [lo]!`.
fn rising(lo: usize, hi: usize) -> LaurentPoly {
    (lo + 1..=hi).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k as u32))
}

fn signed(p: LaurentPoly, odd: bool) -> LaurentPoly {
    if odd {
        -p
    } else {
        p
    }
}

/// `theta(a, b, c)` for an admissible triple.
pub fn theta_closed(a: usize, b: usize, c: usize) -> RationalFunc {
    assert!(admissible(a, b, c), "inadmissible theta");
    let (m, n, p) = ((a + b - c) / 2, (b + c - a) / 2, (a + c - b) / 2);
    let num = &(&(&fact(m + n + p + 1) * &fact(m)) * &fact(n)) * &fact(p);
    let den = &(&fact(m + n) * &fact(n + p)) * &fact(m + p);
    let num = signed(num, (m + n + p) % 2 == 1);
    RationalFunc::new(num, den).expect("nonzero factorials")
}

/// The tetrahedral network with vertex triples `(a,b,c)`, `(c,e,f)`,
/// `(a,e,d)`, `(b,d,f)`; opposite edges are `a-f`, `b-e` and `c-d`.
pub fn tet_closed(colors: [usize; 6]) -> RationalFunc {
    let [a, b, c, d, e, f] = colors;
    let triples = [[a, b, c], [c, e, f], [a, e, d], [b, d, f]];
    for t in &triples {
        assert!(admissible(t[0], t[1], t[2]), "inadmissible tetrahedron");
    }
    let total = a + b + c + d + e + f;
    let vertex: Vec<usize> = triples.iter().map(|t| t.iter().sum::<usize>() / 2).collect();
    let square: Vec<usize> = [a + f, b + e, c + d]
        .iter()
        .map(|pair| (total - pair) / 2)
        .collect();
    let lo = *vertex.iter().max().unwrap();
    let hi = *square.iter().min().unwrap();
    // Every term over the common denominator prod [hi - v]! prod [s - lo]!.
    let mut sum = LaurentPoly::zero();
    for s in lo..=hi {
        let mut term = fact(s + 1);
        for &v in &vertex {
            term = &term * &rising(s - v, hi - v);
        }
        for &q in &square {
            term = &term * &rising(q - s, q - lo);
        }
        sum = &sum + &signed(term, s % 2 == 1);
    }
    let mut num = sum;
    for &v in &vertex {
        for &q in &square {
            num = &num * &fact(q - v);
        }
    }
    let mut den = LaurentPoly::one();
    for &x in &colors {
        den = &den * &fact(x);
    }
    for &v in &vertex {
        den = &den * &fact(hi - v);
    }
    for &q in &square {
        den = &den * &fact(q - lo);
    }
    RationalFunc::new(num, den).expect("nonzero factorials")
}
