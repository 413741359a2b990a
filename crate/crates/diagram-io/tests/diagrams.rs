use diagram_io::library::{self, corpus};
use diagram_io::{
    braid_closure, cable, parse_pd, resolve, Diagram, KauffmanState, Twist, TwistTemplate,
};
use proptest::prelude::*;

fn arb_braid() -> impl Strategy<Value = (usize, Vec<(usize, Twist)>)> {
    (2usize..5).prop_flat_map(|strands| {
        let letter = (1..strands, any::<bool>()).prop_map(|(g, pos)| {
            (g, if pos { Twist::Positive } else { Twist::Negative })
        });
        (Just(strands), prop::collection::vec(letter, 0..9))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reserializing_gives_an_identical_diagram((s, w) in arb_braid()) {
        let d = braid_closure(s, &w);
        prop_assert_eq!(parse_pd(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn every_state_has_a_circle((s, w) in arb_braid()) {
        let d = braid_closure(s, &w);
        let c = d.crossing_count();
        for i in 0..(1u64 << c) {
            let r = resolve(&d, &KauffmanState::from_index(i, c)).unwrap();
            prop_assert!(r.loop_count >= 1);
        }
    }

    #[test]
    fn cable_multiplies_crossings_and_components((s, w) in arb_braid(), n in 1usize..4) {
        let d = braid_closure(s, &w);
        let c = cable(&d, n);
        prop_assert_eq!(c.crossing_count(), n * n * d.crossing_count());
        prop_assert_eq!(c.component_count(), n * d.component_count());
        prop_assert_eq!(c.writhe(), (n * n) as i64 * d.writhe());
    }
}

#[test]
fn braid_closure_writhe_is_the_exponent_sum() {
    use Twist::*;
    let d = braid_closure(3, &[(1, Positive), (2, Negative), (1, Positive), (2, Negative)]);
    assert_eq!(d.writhe(), 0);
    assert_eq!(d.component_count(), 1);
}

#[test]
fn connected_sum_of_trefoil_and_mirror_has_writhe_zero() {
    use Twist::*;
    let w = [
        (1, Positive),
        (1, Positive),
        (1, Positive),
        (2, Negative),
        (2, Negative),
        (2, Negative),
    ];
    let d = braid_closure(3, &w);
    assert_eq!(d.component_count(), 1);
    assert_eq!(d.writhe(), 0);
}

#[test]
fn corpus_components_and_writhes() {
    let expected = [
        ("unknot", 1, 0),
        ("trefoil", 1, 3),
        ("figure-eight", 1, 0),
        ("cinquefoil", 1, 5),
        ("three-twist", 1, 5),
        ("stevedore", 1, 2),
        ("hopf", 2, 2),
    ];
    for ((name, d), (ename, comps, w)) in corpus().into_iter().zip(expected) {
        assert_eq!(name, ename);
        assert_eq!(d.component_count(), comps, "{name}");
        assert_eq!(d.writhe().abs(), w, "{name}");
    }
}

#[test]
fn one_crossing_cable_is_a_relabeling() {
    for (name, d) in corpus() {
        let c = cable(&d, 1);
        assert_eq!(c.crossing_count(), d.crossing_count(), "{name}");
        assert_eq!(c.signs(), d.signs(), "{name}");
        assert_eq!(c.component_count(), d.component_count(), "{name}");
    }
}

#[test]
fn library_templates_fill_to_valid_diagrams() {
    for twist in [Twist::Negative, Twist::Positive] {
        let templates: Vec<TwistTemplate> = vec![
            library::one_slot(twist),
            library::two_slot(twist),
            library::pretzel(twist),
        ];
        for t in templates {
            let s = t.slot_count();
            for k in 0..4 {
                let d: Diagram = t.twist_fill(&vec![k; s]).unwrap();
                assert_eq!(d.crossing_count(), k * s);
            }
        }
    }
    let u = library::unknot().twist_fill(&[]).unwrap();
    assert_eq!(u.component_count(), 1);
}

#[test]
fn twist_fill_numbers_template_crossings_first() {
    let t = TwistTemplate::parse("T[1,2,2,1] X[3,5,4,6] X[5,3,6,4]\ntwist 1: (1,2) 1").unwrap();
    let hopf = parse_pd("X[3,5,4,6] X[5,3,6,4]").unwrap();
    let d = t.twist_fill(&[2]).unwrap();
    assert_eq!(d.crossing_count(), 4);
    assert_eq!(&d.signs()[..2], hopf.signs());
    assert_eq!(&d.signs()[2..], &[1, 1]);
}

#[test]
fn json_echo_contains_the_crossings() {
    let d = parse_pd(library::TREFOIL).unwrap();
    let j = d.to_json();
    assert_eq!(j["crossings"].as_array().unwrap().len(), 3);
    assert_eq!(j["writhe"], -3);
}
