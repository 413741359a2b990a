//! Fusion expansion and template graphs against direct bracket evaluation.

use diagram_io::library::{one_slot, pretzel, two_slot, unknot};
use diagram_io::{Twist, TwistTemplate};
use laurent_core::{unknot_colored, RationalFunc};
use skein_bracket::{bracket, colored_bracket, jones_infinity, limiting_skein};
use spin_network::{
    fusion_expand, fusion_sum, jones_infinity_closed_form, template_ktg, template_trace, theta,
    twist_eigenvalue,
};

fn templates() -> Vec<(&'static str, TwistTemplate)> {
    let mut out = Vec::new();
    for twist in [Twist::Positive, Twist::Negative] {
        out.push(("one-slot", one_slot(twist)));
        out.push(("two-slot", two_slot(twist)));
    }
    out.push(("pretzel", pretzel(Twist::Negative)));
    out
}

#[test]
fn eigenvalues_at_color_one() {
    use laurent_core::LaurentPoly;
    assert_eq!(twist_eigenvalue(Twist::Positive, 1, 2), LaurentPoly::monomial(1, 1));
    assert_eq!(twist_eigenvalue(Twist::Positive, 1, 0), LaurentPoly::monomial(-1, -3));
    assert_eq!(twist_eigenvalue(Twist::Negative, 1, 2), LaurentPoly::monomial(1, -1));
    assert_eq!(twist_eigenvalue(Twist::Negative, 1, 0), LaurentPoly::monomial(-1, 3));
}

#[test]
fn untwisted_fusion_is_the_parallel_identity() {
    // Two unlinked colored loops fused across one slot.
    for n in 1..=3 {
        let t = one_slot(Twist::Positive);
        let terms = fusion_expand(&t, n, &[0]).unwrap();
        assert_eq!(terms.len(), n + 1);
        let expected = RationalFunc::from_poly(unknot_colored(n as u32).pow(2));
        assert_eq!(fusion_sum(&t, n, &[0]).unwrap(), expected, "n = {n}");
    }
}

#[test]
fn fusion_sum_matches_the_cabled_bracket() {
    for (name, t) in templates() {
        let slots = t.slot_count();
        for n in 1..=2 {
            for k in 0..=3usize {
                let ks = vec![k; slots];
                let direct = colored_bracket(&t.twist_fill(&ks).unwrap(), n).unwrap();
                assert_eq!(fusion_sum(&t, n, &ks).unwrap(), direct, "{name} n={n} k={k}");
            }
        }
    }
}

#[test]
fn mixed_twist_counts() {
    let t = two_slot(Twist::Negative);
    for ks in [[1, 2], [3, 0], [2, 3]] {
        let direct = colored_bracket(&t.twist_fill(&ks).unwrap(), 2).unwrap();
        assert_eq!(fusion_sum(&t, 2, &ks).unwrap(), direct, "{ks:?}");
    }
}

#[test]
fn template_graph_evaluates_like_the_limiting_skein() {
    for (name, t) in templates() {
        for n in 1..=2 {
            let g = template_ktg(&t, n).unwrap();
            assert_eq!(g.vertex_count(), 2 * t.slot_count());
            let direct = bracket(&limiting_skein(&t, n)).unwrap();
            assert_eq!(g.evaluate().unwrap(), direct, "{name} n={n}");
        }
    }
}

#[test]
fn closed_form_equals_jones_infinity() {
    for (name, t) in templates() {
        for n in 1..=3 {
            let closed = jones_infinity_closed_form(&t, n).unwrap();
            assert_eq!(closed, jones_infinity(&t, n).unwrap(), "{name} n={n}");
        }
    }
}

#[test]
fn triangle_counts() {
    let n = 2;
    assert_eq!(template_trace(&one_slot(Twist::Negative), n).unwrap().triangles, 0);
    assert_eq!(template_trace(&two_slot(Twist::Negative), n).unwrap().triangles, 1);
    assert_eq!(template_trace(&pretzel(Twist::Negative), n).unwrap().triangles, 2);
    let t = template_trace(&pretzel(Twist::Negative), n).unwrap();
    assert!(t.triangles_only());
}

#[test]
fn one_slot_closed_form_is_a_theta() {
    for n in 1..=4 {
        let v = jones_infinity_closed_form(&one_slot(Twist::Negative), n).unwrap();
        let expected = theta(n, n, 2 * n).unwrap().div_poly(&unknot_colored(n as u32)).unwrap();
        assert_eq!(v, expected);
    }
}

#[test]
fn unknot_template_has_no_vertices() {
    let g = template_ktg(&unknot(), 3).unwrap();
    assert_eq!(g.vertex_count(), 0);
    assert!(jones_infinity_closed_form(&unknot(), 3).unwrap().is_one());
}
