//! Fusion of cabled twist regions and the trivalent graph of a template.
//!
//! Two parallel bundles of `n` strands, each carrying `p_n`, expand as a sum
//! over channels `j` in `{0, 2, ..., 2n}`: `x = n - j/2` strands turn back
//! on each side and the remaining `j` pass through `p_j`. A cabled
//! half-twist acts on channel `j` by a signed monomial, so a slot holding
//! `k` half-twists contributes that monomial to the power `k`.

use crate::error::SpinError;
use crate::ktg::{EdgeEnd, Ktg, KtgEdge};
use crate::reduce::{reduce_to_theta, Move, ReductionTrace};
use crate::values::theta;
use diagram_io::{Cabled, Twist, TwistTemplate};
use laurent_core::{unknot_colored, LaurentPoly, RationalFunc};
use skein_bracket::{bracket, colored_bracket, CabledSkein};
use std::collections::BTreeMap;
use temperley_lieb::{jones_wenzl, SkeinElement};

/// Eigenvalue of one cabled half-twist of the given sign on channel `j`.
pub fn twist_eigenvalue(twist: Twist, n: usize, j: usize) -> LaurentPoly {
    assert!(j % 2 == 0 && j <= 2 * n, "channel must be even and at most 2n");
    let (n, h) = (n as i64, (j / 2) as i64);
    let sign = if (n - h) % 2 == 0 { 1 } else { -1 };
    let e = 2 * h * h + 2 * h - n * n - 2 * n;
    match twist {
        Twist::Positive => LaurentPoly::monomial(sign, e),
        Twist::Negative => LaurentPoly::monomial(sign, -e),
    }
}

/// `O(j) / theta(n, n, j)` times the eigenvalue to the power `k`.
pub fn fusion_coefficient(twist: Twist, n: usize, j: usize, k: usize) -> Result<RationalFunc, SpinError> {
    let base = RationalFunc::from_poly(unknot_colored(j as u32)).checked_div(&theta(n, n, j)?)?;
    Ok(base.mul_poly(&twist_eigenvalue(twist, n, j).pow(k as u32)))
}

/// One term of the fusion expansion.
#[derive(Clone, Debug)]
pub struct FusionTerm {
    /// Channel of every slot.
    pub channels: Vec<usize>,
    pub coefficient: RationalFunc,
    /// The fused network: every slot replaced by its channel.
    pub skein: SkeinElement,
}

/// The n-cable of a template with slot `i` fused into channel `channels[i]`
/// and `p_n` on every cabled edge and loop.
pub fn fused_skein(t: &TwistTemplate, n: usize, channels: &[usize]) -> SkeinElement {
    assert_eq!(channels.len(), t.slot_count(), "one channel per slot");
    let cabled = Cabled::from_template(t, n);
    let free_with_crossings = t.free_component_labels().len();
    let loop_bundles = cabled.base_strands()[free_with_crossings..].to_vec();
    let edge_bundles: Vec<Vec<usize>> = cabled.edge_strands().values().cloned().collect();
    let mut cs = CabledSkein::new(cabled);
    for (i, &j) in channels.iter().enumerate() {
        let [a, b, c, d] = cs.cabled.take_slot(i);
        let (x, h) = (n - j / 2, j / 2);
        for s in 0..x {
            cs.cabled.wiring.identify(a[n - 1 - s], b[s]);
            cs.cabled.wiring.identify(c[n - 1 - s], d[s]);
        }
        if j > 0 {
            let v = cs.add_box(jones_wenzl(j));
            let ends: Vec<_> = (0..h)
                .flat_map(|s| {
                    [
                        (a[s], j + s),
                        (b[x + s], j + h + s),
                        (d[n - 1 - s], s),
                        (c[h - 1 - s], h + s),
                    ]
                })
                .collect();
            cs.attach(v, ends);
        }
    }
    let p = jones_wenzl(n);
    for ids in edge_bundles.iter().chain(&loop_bundles) {
        cs.box_on_strands(ids, p.clone());
    }
    cs.into_skein()
}

/// All terms of the fusion expansion of the template filled with `k`.
pub fn fusion_expand(t: &TwistTemplate, n: usize, k: &[usize]) -> Result<Vec<FusionTerm>, SpinError> {
    assert!(n >= 1, "color must be positive");
    assert_eq!(k.len(), t.slot_count(), "one twist count per slot");
    let per_slot: Vec<Vec<(usize, RationalFunc)>> = t
        .slots()
        .iter()
        .zip(k)
        .map(|(slot, &ki)| {
            (0..=n)
                .map(|h| Ok((2 * h, fusion_coefficient(slot.twist, n, 2 * h, ki)?)))
                .collect::<Result<Vec<_>, SpinError>>()
        })
        .collect::<Result<_, _>>()?;
    let mut combos: Vec<(Vec<usize>, RationalFunc)> = vec![(Vec::new(), RationalFunc::one())];
    for options in &per_slot {
        combos = combos
            .iter()
            .flat_map(|(chs, c)| {
                options.iter().map(move |(j, cj)| {
                    let mut chs = chs.clone();
                    chs.push(*j);
                    (chs, c * cj)
                })
            })
            .collect();
    }
    Ok(combos
        .into_iter()
        .map(|(channels, coefficient)| {
            let skein = fused_skein(t, n, &channels);
            FusionTerm {
                channels,
                coefficient,
                skein,
            }
        })
        .collect())
}

/// `sum coefficient * <fused network>` over the fusion expansion.
pub fn fusion_sum(t: &TwistTemplate, n: usize, k: &[usize]) -> Result<RationalFunc, SpinError> {
    let mut total = RationalFunc::zero();
    for term in fusion_expand(t, n, k)? {
        total = &total + &(&term.coefficient * &bracket(&term.skein)?);
    }
    Ok(total)
}

/// Whether the fusion sum equals the bracket of the filled, cabled diagram.
pub fn fusion_check(t: &TwistTemplate, n: usize, k: &[usize]) -> Result<bool, SpinError> {
    let direct = colored_bracket(&t.twist_fill(k)?, n)?;
    Ok(fusion_sum(t, n, k)? == direct)
}

/// The trivalent graph of a crossingless template at color `n`: each slot
/// becomes an edge of color `2n` between a bottom and a top vertex, every
/// template edge an edge of color `n`, every loop a free loop of color `n`.
pub fn template_ktg(t: &TwistTemplate, n: usize) -> Result<Ktg, SpinError> {
    if !t.crossings().is_empty() {
        return Err(SpinError::HypothesisViolated(
            "template has crossings outside its slots".into(),
        ));
    }
    let slots = t.slot_count();
    let mut edges: Vec<KtgEdge> = (0..slots)
        .map(|i| KtgEdge {
            ends: [2 * i, 2 * i + 1],
            color: 2 * n,
            framing: 0,
        })
        .collect();
    // Corner p of slot i: bottom-left, bottom-right, top-right, top-left.
    let mut corners: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, slot) in t.slots().iter().enumerate() {
        for (p, &label) in slot.ends.iter().enumerate() {
            corners.entry(label).or_default().push((i, p));
        }
    }
    let vertex_of = |(i, p): (usize, usize)| if p < 2 { 2 * i } else { 2 * i + 1 };
    let mut end_at: BTreeMap<(usize, usize), EdgeEnd> = BTreeMap::new();
    for occ in corners.values() {
        let e = edges.len();
        edges.push(KtgEdge {
            ends: [vertex_of(occ[0]), vertex_of(occ[1])],
            color: n,
            framing: 0,
        });
        end_at.insert(occ[0], (e, 0));
        end_at.insert(occ[1], (e, 1));
    }
    let rotation = (0..slots)
        .flat_map(|i| {
            [
                [(i, 0), end_at[&(i, 0)], end_at[&(i, 1)]],
                [(i, 1), end_at[&(i, 2)], end_at[&(i, 3)]],
            ]
        })
        .collect();
    Ktg::new(rotation, edges, vec![n; t.loops()])
}

/// The trace of [`template_ktg`] reduced to theta graphs.
pub fn template_trace(t: &TwistTemplate, n: usize) -> Result<ReductionTrace, SpinError> {
    reduce_to_theta(&template_ktg(t, n)?)
}

/// `<L^n_J> / O(n)` from the reduction trace: the product of the triangle
/// factors times the final theta values over `O(n)`. Requires a trace made
/// of triangle moves only.
pub fn jones_infinity_closed_form(t: &TwistTemplate, n: usize) -> Result<RationalFunc, SpinError> {
    let trace = template_trace(t, n)?;
    if let Some(m) = trace.moves.iter().find(|m| !matches!(m, Move::Triangle { .. })) {
        return Err(SpinError::HypothesisViolated(format!(
            "reduction used a {} move",
            m.name()
        )));
    }
    Ok(trace.value()?.div_poly(&unknot_colored(n as u32))?)
}
