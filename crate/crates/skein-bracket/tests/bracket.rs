use diagram_io::library::{corpus, one_slot, pretzel, two_slot, unknot, HOPF, TREFOIL};
use diagram_io::{braid_closure, parse_pd, Diagram, Twist};
use laurent_core::{loop_value, unknot_colored, LaurentPoly, RationalFunc};
use proptest::prelude::*;
use skein_bracket::*;

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, c)))
}

fn rf(p: LaurentPoly) -> RationalFunc {
    RationalFunc::from_poly(p)
}

fn letters(word: &[i64]) -> Vec<(usize, Twist)> {
    word.iter()
        .map(|&g| {
            let t = if g > 0 { Twist::Positive } else { Twist::Negative };
            (g.unsigned_abs() as usize, t)
        })
        .collect()
}

#[test]
fn single_loop_is_delta() {
    assert_eq!(bracket_diagram(&parse_pd("U").unwrap()).unwrap(), loop_value());
}

#[test]
fn kinks_multiply_by_minus_a_cubed() {
    for g in [1i64, -1] {
        let d = braid_closure(2, &letters(&[g]));
        let b = bracket_diagram(&d).unwrap();
        let kink = LaurentPoly::monomial(-1, 3 * d.writhe());
        assert_eq!(b, &kink * &loop_value(), "letter {g}");
    }
}

#[test]
fn trefoil_bracket_has_four_terms_and_matches_state_sum() {
    let d = parse_pd(TREFOIL).unwrap();
    let b = bracket_diagram(&d).unwrap();
    assert_eq!(b.len(), 4);
    assert_eq!(b, bracket_state_sum(&d).unwrap());
}

#[test]
fn corpus_matches_both_oracles() {
    for (name, d) in corpus() {
        let b = rf(bracket_diagram(&d).unwrap());
        assert_eq!(b, rf(bracket_state_sum(&d).unwrap()), "{name}");
        assert_eq!(b, bracket_naive(&skein_of_diagram(&d)).unwrap(), "{name}");
    }
}

#[test]
fn trefoil_jones_polynomial() {
    // The left-handed trefoil has V(t) = -t^-4 + t^-3 + t^-1, and J_1 in
    // this normalization is V at t = A^-4.
    let d = parse_pd(TREFOIL).unwrap();
    assert_eq!(d.writhe(), -3);
    let j = colored_jones(&d, 1, true).unwrap();
    assert_eq!(j, rf(poly(&[(16, -1), (12, 1), (4, 1)])));
    assert_eq!(j.to_laurent().unwrap().eval_at_one(), 1.into());
}

#[test]
fn unknot_normalization() {
    let u = parse_pd("U").unwrap();
    for n in 1..=4 {
        assert!(colored_jones(&u, n, true).unwrap().is_one(), "n = {n}");
        assert_eq!(
            colored_jones(&u, n, false).unwrap(),
            rf(unknot_colored(n as u32))
        );
    }
    // Framing is corrected for kinked unknots too.
    for word in [[1i64], [-1]] {
        let d = braid_closure(2, &letters(&word));
        for n in 1..=3 {
            assert!(colored_jones(&d, n, true).unwrap().is_one());
        }
    }
}

#[test]
fn two_trefoil_presentations_agree() {
    let pd = parse_pd(TREFOIL).unwrap();
    let braid = braid_closure(2, &letters(&[-1, -1, -1]));
    let filled = one_slot(Twist::Negative).twist_fill(&[3]).unwrap();
    for n in 1..=2 {
        let j = colored_jones(&pd, n, true).unwrap();
        assert_eq!(j, colored_jones(&braid, n, true).unwrap(), "n = {n}");
        assert_eq!(j, colored_jones(&filled, n, true).unwrap(), "n = {n}");
    }
}

#[test]
fn colored_bracket_matches_naive_expansion() {
    let cases = [
        ("trefoil", parse_pd(TREFOIL).unwrap()),
        ("hopf", parse_pd(HOPF).unwrap()),
        ("unknot", parse_pd("U").unwrap()),
    ];
    for (name, d) in cases {
        let s = colored_skein(&d, 2);
        assert_eq!(bracket(&s).unwrap(), bracket_naive(&s).unwrap(), "{name}");
    }
}

#[test]
fn colored_jones_does_not_depend_on_the_cut_edge() {
    let d = parse_pd(TREFOIL).unwrap();
    let reference = colored_bracket(&d, 2).unwrap();
    for &l in &d.components()[0] {
        let s = colored_skein_on_edges(&d, 2, &[l]);
        assert_eq!(bracket(&s).unwrap(), reference, "edge {l}");
    }
    let hopf = parse_pd(HOPF).unwrap();
    let reference = colored_bracket(&hopf, 2).unwrap();
    let (c0, c1) = (&hopf.components()[0], &hopf.components()[1]);
    for &a in c0 {
        for &b in c1 {
            let s = colored_skein_on_edges(&hopf, 2, &[a, b]);
            assert_eq!(bracket(&s).unwrap(), reference);
        }
    }
}

#[test]
fn reduced_colored_jones_is_laurent_on_the_corpus() {
    for (name, d) in corpus() {
        if d.crossing_count() > 6 {
            continue;
        }
        let j = colored_jones(&d, 2, true).unwrap();
        assert!(j.is_laurent(), "{name}");
        // Mirroring sends A to A^-1.
        let m = colored_jones(&d.mirror(), 2, true).unwrap();
        assert_eq!(m, j.invert_variable(), "{name}");
    }
}

#[test]
fn one_slot_limit_is_a_projector_closure() {
    for twist in [Twist::Negative, Twist::Positive] {
        for n in 1..=2u32 {
            let j = jones_infinity(&one_slot(twist), n as usize).unwrap();
            let expected = RationalFunc::new(unknot_colored(2 * n), unknot_colored(n)).unwrap();
            assert_eq!(j, expected);
        }
    }
}

#[test]
fn zero_slot_limit_is_the_colored_unknot() {
    for n in 1..=3 {
        assert!(jones_infinity(&unknot(), n).unwrap().is_one());
        let s = limiting_skein(&unknot(), n);
        assert_eq!(s.box_count(), 1);
    }
}

#[test]
fn limiting_skeins_have_the_expected_boxes() {
    let s = limiting_skein(&pretzel(Twist::Negative), 2);
    assert_eq!((s.box_count(), s.crossing_count()), (3, 0));
    assert!(s.is_closed());
    let s = limiting_skein(&two_slot(Twist::Negative), 1);
    assert_eq!(bracket(&s).unwrap(), bracket_naive(&s).unwrap());
}

#[test]
fn one_slot_twists_stabilize() {
    let t = one_slot(Twist::Negative);
    for n in 1..=2 {
        let limit = jones_infinity(&t, n).unwrap();
        let mut last = -1;
        for k in [2usize, 4, 6] {
            let a = agreeing_coefficients(&twist_normalized(&t, n, &[k]).unwrap(), &limit)
                .expect("finite twisting differs from the limit");
            assert!(a > last, "n = {n}, k = {k}: {a} after {last}");
            last = a;
        }
    }
}

#[test]
fn open_skein_is_an_error() {
    let s = SkeinElement::new(vec![SkeinNode::Crossing], vec![((0, 0), (0, 1))], 0);
    assert_eq!(bracket_naive(&s), Err(SkeinError::OpenSkein));
}

#[test]
fn naive_cap_is_enforced() {
    let word = vec![1i64; NAIVE_CAP + 1];
    let d: Diagram = braid_closure(2, &letters(&word));
    assert!(matches!(
        bracket_state_sum(&d),
        Err(SkeinError::TooLarge { .. })
    ));
}

fn braid_word(strands: usize, len: usize) -> impl Strategy<Value = Vec<i64>> {
    let g = strands as i64 - 1;
    prop::collection::vec(
        prop_oneof![(1..=g), (-g..=-1)],
        0..=len,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sweep_matches_state_sum(strands in 2usize..=4, word in braid_word(4, 10)) {
        let word: Vec<i64> = word.into_iter().filter(|g| g.unsigned_abs() < strands as u64).collect();
        let d = braid_closure(strands, &letters(&word));
        prop_assert_eq!(bracket_diagram(&d).unwrap(), bracket_state_sum(&d).unwrap());
    }

    #[test]
    fn reidemeister_two(word in braid_word(3, 8), at in 0usize..9, g in 1i64..=2) {
        let at = at.min(word.len());
        let mut longer = word.clone();
        longer.splice(at..at, [g, -g]);
        let a = bracket_diagram(&braid_closure(3, &letters(&word))).unwrap();
        let b = bracket_diagram(&braid_closure(3, &letters(&longer))).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reidemeister_three(pre in braid_word(3, 4), post in braid_word(3, 4), s in prop::bool::ANY) {
        let e = if s { 1 } else { -1 };
        let mut left = pre.clone();
        left.extend([e, 2 * e, e]);
        left.extend(post.iter().copied());
        let mut right = pre.clone();
        right.extend([2 * e, e, 2 * e]);
        right.extend(post.iter().copied());
        let a = bracket_diagram(&braid_closure(3, &letters(&left))).unwrap();
        let b = bracket_diagram(&braid_closure(3, &letters(&right))).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reidemeister_one(word in braid_word(3, 6), s in prop::bool::ANY) {
        let g = if s { 3 } else { -3 };
        let mut stabilized = word.clone();
        stabilized.push(g);
        let a = bracket_diagram(&braid_closure(3, &letters(&word))).unwrap();
        let b = bracket_diagram(&braid_closure(4, &letters(&stabilized))).unwrap();
        let kink = LaurentPoly::monomial(-1, if s { 3 } else { -3 });
        prop_assert_eq!(b, &a * &kink);
    }
}
