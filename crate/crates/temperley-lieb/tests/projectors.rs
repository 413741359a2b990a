use laurent_core::{unknot_colored, RationalFunc};
use proptest::prelude::*;
use temperley_lieb::{
    absorb_check, check_projector, join, jones_wenzl, jones_wenzl_two_sided, Matching, TLElement,
};

#[test]
fn projectors_satisfy_all_four_properties() {
    for n in 1..=5 {
        let c = check_projector(&jones_wenzl(n));
        assert!(c.all(), "n = {n}: {c:?}");
    }
}

#[test]
fn recursions_agree() {
    for n in 1..=5 {
        assert_eq!(*jones_wenzl(n), jones_wenzl_two_sided(n), "n = {n}");
    }
}

#[test]
fn absorption_holds() {
    for n in 1..=5 {
        for m in 1..=n {
            assert!(absorb_check(m, n), "m = {m}, n = {n}");
        }
    }
}

#[test]
fn projector_joins_equal_colored_unknot() {
    for n in 1..=4 {
        let p = jones_wenzl(n);
        let expected = RationalFunc::from_poly(unknot_colored(n as u32));
        assert_eq!(join(&p, &p).unwrap(), expected);
        assert_eq!(join(&p, &TLElement::identity(n)).unwrap(), expected);
    }
}

#[test]
fn projector_term_count_is_catalan() {
    let catalan = [1, 1, 2, 5, 14, 42];
    for n in 1..=5 {
        assert_eq!(jones_wenzl(n).len(), catalan[n]);
    }
}

#[test]
fn basis_size_is_catalan_up_to_eight() {
    let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
    for n in 0..=8 {
        let all = Matching::enumerate(n);
        assert_eq!(all.len(), catalan[n]);
        for m in &all {
            assert_eq!(Matching::from_partners(&m.partners()), Some(*m));
        }
    }
}

#[test]
fn generator_relations_in_tl3() {
    let e1 = TLElement::generator(3, 1);
    let e2 = TLElement::generator(3, 2);
    let e121 = e1.multiply(&e2).unwrap().multiply(&e1).unwrap();
    assert_eq!(e121, e1);
}

fn arb_element(n: usize) -> impl Strategy<Value = TLElement> {
    let basis = Matching::enumerate(n);
    prop::collection::vec((0..basis.len(), -3i64..=3, -2i64..=2), 1..4).prop_map(move |t| {
        let mut x = TLElement::zero(n);
        for (i, c, e) in t {
            let coeff = RationalFunc::from_poly(laurent_core::LaurentPoly::monomial(c, e));
            x.add_term(basis[i], coeff);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn multiplication_is_associative(x in arb_element(4), y in arb_element(4), z in arb_element(4)) {
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn products_stay_planar(x in arb_element(4), y in arb_element(4)) {
        let p = x.multiply(&y).unwrap();
        for m in p.terms().keys() {
            prop_assert_eq!(Matching::from_partners(&m.partners()), Some(*m));
        }
    }
}
