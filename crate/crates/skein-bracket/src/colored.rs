//! Colored Jones polynomials, limiting skein elements and their limits.

use crate::build::{skein_of_diagram, CabledSkein};
use crate::error::SkeinError;
use crate::sweep::bracket;
use diagram_io::{Cabled, Diagram, Twist, TwistTemplate};
use laurent_core::{unknot_colored, LaurentPoly, RationalFunc};
use temperley_lieb::{jones_wenzl, SkeinElement};

/// The framing correction `((-1)^n A^-(n^2+2n))^w`.
pub fn framing_factor(n: usize, w: i64) -> LaurentPoly {
    let n = n as i64;
    let sign = if (n * w).rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, -(n * n + 2 * n) * w)
}

/// The n-cable of `d` with one `p_n` on every component. The box of a
/// component with crossings sits on the edge given in `labels`, one label
/// per component in the order of [`Diagram::components`].
pub fn colored_skein_on_edges(d: &Diagram, n: usize, labels: &[u32]) -> SkeinElement {
    assert_eq!(labels.len(), d.components().len(), "one edge per component");
    let cabled = Cabled::from_diagram(d, n);
    let loop_bundles = cabled.base_strands()[labels.len()..].to_vec();
    let mut cs = CabledSkein::new(cabled);
    let p = jones_wenzl(n);
    for &l in labels {
        let ids = cs.cabled.edge_strands()[&l].clone();
        cs.box_on_strands(&ids, p.clone());
    }
    for ids in loop_bundles {
        cs.box_on_strands(&ids, p.clone());
    }
    cs.into_skein()
}

/// The n-cable of `d` with `p_n` on the lowest-labelled edge of every
/// component.
pub fn colored_skein(d: &Diagram, n: usize) -> SkeinElement {
    if n == 1 {
        return skein_of_diagram(d);
    }
    let labels: Vec<u32> = d
        .components()
        .iter()
        .map(|c| *c.iter().min().expect("components are nonempty"))
        .collect();
    colored_skein_on_edges(d, n, &labels)
}

/// `<D^n>`, the bracket of the colored cable.
pub fn colored_bracket(d: &Diagram, n: usize) -> Result<RationalFunc, SkeinError> {
    bracket(&colored_skein(d, n))
}

/// The colored Jones polynomial `J_n`. The reduced version divides the
/// framed bracket by `O(n)` and must be Laurent; the unreduced one does not.
pub fn colored_jones(d: &Diagram, n: usize, reduced: bool) -> Result<RationalFunc, SkeinError> {
    assert!(n >= 1, "color must be positive");
    let framed = colored_bracket(d, n)?.mul_poly(&framing_factor(n, d.writhe()));
    if !reduced {
        return Ok(framed);
    }
    let r = framed.div_poly(&unknot_colored(n as u32))?;
    if !r.is_laurent() {
        return Err(SkeinError::NotLaurent(r.to_string()));
    }
    Ok(r)
}

/// The n-cable of a template with every slot replaced by a `p_{2n}` box
/// and `p_n` on every component that avoids the slots.
pub fn limiting_skein(t: &TwistTemplate, n: usize) -> SkeinElement {
    assert!(n >= 1, "color must be positive");
    let cabled = Cabled::from_template(t, n);
    let free = cabled.base_strands().to_vec();
    let mut cs = CabledSkein::new(cabled);
    let wide = jones_wenzl(2 * n);
    for i in 0..t.slot_count() {
        let [a, b, c, d] = cs.cabled.take_slot(i);
        let v = cs.add_box(wide.clone());
        // Bottom left to right: a then b. Top left to right: d reversed,
        // then c reversed.
        let ends = (0..n).flat_map(|j| {
            [
                (a[j], 2 * n + j),
                (b[j], 3 * n + j),
                (d[n - 1 - j], j),
                (c[n - 1 - j], n + j),
            ]
        });
        cs.attach(v, ends.collect::<Vec<_>>());
    }
    let p = jones_wenzl(n);
    for ids in free {
        cs.box_on_strands(&ids, p.clone());
    }
    cs.into_skein()
}

/// `<L^n_J> / O(n)`.
pub fn jones_infinity(t: &TwistTemplate, n: usize) -> Result<RationalFunc, SkeinError> {
    Ok(bracket(&limiting_skein(t, n))?.div_poly(&unknot_colored(n as u32))?)
}

/// The eigenvalue of one n-cabled half-twist on the top fusion channel
/// `2n`: `A^(n^2)` for positive slots and `A^-(n^2)` for negative ones.
pub fn top_channel_eigenvalue(twist: Twist, n: usize) -> LaurentPoly {
    let e = (n * n) as i64;
    match twist {
        Twist::Positive => LaurentPoly::monomial(1, e),
        Twist::Negative => LaurentPoly::monomial(1, -e),
    }
}

/// `<D^n(L_k)> / O(n)` divided by the top-channel eigenvalue once per
/// half-twist. For negative slots this converges to [`jones_infinity`] in
/// the `A`-adic sense as every `k_i` grows.
pub fn twist_normalized(
    t: &TwistTemplate,
    n: usize,
    k: &[usize],
) -> Result<RationalFunc, SkeinError> {
    let d = t.twist_fill(k)?;
    let mut f = colored_bracket(&d, n)?.div_poly(&unknot_colored(n as u32))?;
    for (slot, &ki) in t.slots().iter().zip(k) {
        let e = top_channel_eigenvalue(slot.twist, n);
        let (exp, _) = e.as_monomial().expect("monomial");
        f = f.mul_monomial(&1.into(), -exp * ki as i64);
    }
    Ok(f)
}

/// The lowest exponent with a nonzero coefficient in the expansion of `f`
/// around `A = 0`; `None` for zero.
pub fn valuation(f: &RationalFunc) -> Option<i64> {
    // Canonical denominators have lowest exponent 0.
    f.num().min_exp()
}

/// How many consecutive coefficients, counted from the lowest exponent of
/// `limit`, agree between the expansions of `f` and `limit` around `A = 0`.
/// `None` when the two are equal.
pub fn agreeing_coefficients(f: &RationalFunc, limit: &RationalFunc) -> Option<i64> {
    let diff = f - limit;
    let first_difference = valuation(&diff)?;
    let start = valuation(limit).unwrap_or(first_difference);
    Some((first_difference - start).max(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn framing_factor_values() {
        assert_eq!(framing_factor(1, 1), LaurentPoly::monomial(-1, -3));
        assert_eq!(framing_factor(2, -1), LaurentPoly::monomial(1, 8));
        assert!(framing_factor(3, 0).is_one());
    }

    #[test]
    fn agreement_counts_from_the_limit_valuation() {
        let limit = RationalFunc::from_poly(LaurentPoly::from_terms([(-2, 1), (0, 1)]));
        let f = RationalFunc::from_poly(LaurentPoly::from_terms([(-2, 1), (0, 1), (4, 3)]));
        assert_eq!(agreeing_coefficients(&f, &limit), Some(6));
        assert_eq!(agreeing_coefficients(&limit, &limit), None);
        let far = RationalFunc::from_poly(LaurentPoly::monomial(1, -5));
        assert_eq!(agreeing_coefficients(&far, &limit), Some(0));
    }
}
