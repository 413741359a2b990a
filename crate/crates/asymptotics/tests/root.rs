use asymptotics::{
    eval_at_root, jones_infinity_at_root, unit_trace, AsymError, RootTable,
};
use diagram_io::library::{one_slot, pretzel, two_slot};
use diagram_io::Twist;
use laurent_core::{qint, unknot_colored, LaurentPoly, MpComplex, RationalFunc};
use proptest::prelude::*;
use spin_network::{admissible, sixj, template_trace, theta, Move};

fn close(a: &MpComplex, b: &MpComplex, tol: f64) -> bool {
    a.relative_distance(b) < tol
}

#[test]
fn constants_and_unknots() {
    let one = eval_at_root(&RationalFunc::one(), 3, 30).unwrap();
    assert!(close(&one, &MpComplex::one(256), 1e-28));
    // At n = 1 the root is i and O(1) = -[2] = 2.
    let v = eval_at_root(&RationalFunc::from_poly(unknot_colored(1)), 1, 30).unwrap();
    assert!((v.re_f64() - 2.0).abs() < 1e-25);
    for n in 2..=8usize {
        let v = eval_at_root(&RationalFunc::from_poly(unknot_colored(n as u32)), n, 30).unwrap();
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        assert!((v.re_f64() - sign).abs() < 1e-25 && v.im_f64().abs() < 1e-25, "n = {n}");
    }
}

#[test]
fn singular_values_name_the_cyclotomic_factor() {
    let f = RationalFunc::new(LaurentPoly::one(), qint(4)).unwrap();
    match eval_at_root(&f, 4, 30) {
        Err(AsymError::SingularEvaluation { den, detail }) => {
            assert_eq!(den, 8);
            assert!(detail.contains("Phi_16"), "{detail}");
        }
        other => panic!("expected a singular evaluation, got {other:?}"),
    }
}

#[test]
fn regularized_theta_matches_exact_reduction() {
    for n in 3..=6usize {
        let t = RootTable::new(n, 4 * n, 30).unwrap();
        for a in 0..=2 * n {
            for b in 0..=2 * n {
                for c in 0..=2 * n {
                    if !admissible(a, b, c) || a.max(b).max(c) > 6 {
                        continue;
                    }
                    let f = theta(a, b, c).unwrap().div_poly(&unknot_colored(n as u32)).unwrap();
                    let exact = eval_at_root(&f, n, 30);
                    let r = t.div(&t.theta(a, b, c).unwrap(), &t.unknot(n).unwrap());
                    match (exact, t.value(&r)) {
                        (Ok(x), Ok(y)) => assert!(close(&x, &y, 1e-25), "theta({a},{b},{c}) n={n}"),
                        (Err(_), Err(_)) => {}
                        (x, y) => panic!("theta({a},{b},{c}) n={n}: {x:?} vs {y:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn regularized_tetrahedra_match_exact_reduction() {
    let colorings: &[[usize; 6]] = &[
        [2, 2, 2, 2, 2, 2],
        [4, 4, 4, 4, 4, 4],
        [6, 6, 6, 6, 6, 6],
        [4, 4, 4, 2, 2, 2],
        [6, 6, 6, 3, 3, 3],
        [8, 8, 8, 4, 4, 4],
        [5, 5, 4, 4, 3, 3],
        [3, 3, 2, 2, 3, 3],
        [7, 7, 6, 4, 5, 3],
    ];
    for n in 3..=8usize {
        let t = RootTable::new(n, 40, 30).unwrap();
        for &c in colorings {
            let [a, b, cc, ..] = c;
            let f = sixj(c[0], c[1], c[2], c[3], c[4], c[5])
                .unwrap()
                .checked_div(&theta(a, b, cc).unwrap())
                .unwrap();
            let exact = eval_at_root(&f, n, 30);
            let r = t.div(&t.tet(c).unwrap(), &t.theta(a, b, cc).unwrap());
            match (exact, t.value(&r)) {
                (Ok(x), Ok(y)) => assert!(close(&x, &y, 1e-25), "{c:?} n={n}: {x} vs {y}"),
                (Err(_), Err(_)) => {}
                (x, y) => panic!("{c:?} n={n}: {x:?} vs {y:?}"),
            }
        }
    }
}

#[test]
fn scaled_unit_trace_is_the_trace_at_every_color() {
    for t in [two_slot(Twist::Negative), pretzel(Twist::Negative)] {
        let unit = unit_trace(&t).unwrap();
        for n in 2..=3 {
            let full = template_trace(&t, n).unwrap();
            assert_eq!(full.moves.len(), unit.moves.len());
            for (m, u) in full.moves.iter().zip(&unit.moves) {
                match (m, u) {
                    (
                        Move::Triangle { legs, sides, .. },
                        Move::Triangle { legs: l1, sides: s1, .. },
                    ) => {
                        assert_eq!(*legs, l1.map(|x| x * n));
                        assert_eq!(*sides, s1.map(|x| x * n));
                    }
                    _ => panic!("unexpected move"),
                }
            }
            let scaled: Vec<[usize; 3]> = unit.finals.iter().map(|f| f.map(|x| x * n)).collect();
            assert_eq!(full.finals, scaled);
        }
    }
}

#[test]
fn regularized_jones_infinity_matches_exact_path() {
    for t in [one_slot(Twist::Negative), two_slot(Twist::Negative), pretzel(Twist::Negative)] {
        let unit = unit_trace(&t).unwrap();
        for n in 2..=5 {
            let exact = eval_at_root(&spin_network::jones_infinity_closed_form(&t, n).unwrap(), n, 30).unwrap();
            let fast = jones_infinity_at_root(&unit, n, 30).unwrap();
            assert!(close(&exact, &fast, 1e-25), "n = {n}: {exact} vs {fast}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_multiplicative(
        n in 2usize..7,
        f in proptest::collection::vec((-3i64..4, -6i64..7), 1..5),
        g in proptest::collection::vec((-3i64..4, -6i64..7), 1..5),
    ) {
        let f = LaurentPoly::from_terms(f);
        let g = LaurentPoly::from_terms(g);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fr = RationalFunc::new(f.clone(), qint(n as u32 + 1)).unwrap();
        let gr = RationalFunc::from_poly(g);
        let prod = eval_at_root(&(&fr * &gr), n, 30).unwrap();
        let split = eval_at_root(&fr, n, 30).unwrap().mul(&eval_at_root(&gr, n, 30).unwrap());
        prop_assert!(prod.sub(&split).abs_f64() <= 1e-25 * (1.0 + split.abs_f64()));
    }
}
