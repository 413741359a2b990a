//! Theta and 6j values: skein evaluation against the quantum-factorial
//! closed forms, symmetry, and small known values.

use laurent_core::{loop_value, qint, RationalFunc};
use spin_network::{
    admissible, sixj, sixj_skein, tet_closed, theta, theta_closed, theta_skein, SpinError,
};

fn admissible_triples(max: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                if admissible(a, b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn tet_admissible(c: [usize; 6]) -> bool {
    let [a, b, cc, d, e, f] = c;
    [[a, b, cc], [cc, e, f], [a, e, d], [b, d, f]]
        .iter()
        .all(|t| admissible(t[0], t[1], t[2]))
}

#[test]
fn admissibility_boundaries() {
    for n in 0..8 {
        assert!(admissible(n, n, 2 * n));
        assert!(!admissible(n, n, 2 * n + 2));
    }
    assert!(!admissible(1, 1, 1));
}

#[test]
fn theta_known_values() {
    let delta = RationalFunc::from_poly(loop_value());
    assert_eq!(theta(1, 1, 0).unwrap(), delta);
    assert_eq!(theta(1, 1, 2).unwrap(), RationalFunc::from_poly(qint(3)));
    assert!(matches!(theta(1, 1, 1), Err(SpinError::Inadmissible(_))));
    assert!(matches!(theta(1, 1, 4), Err(SpinError::Inadmissible(_))));
}

#[test]
fn theta_skein_matches_closed_form() {
    for [a, b, c] in admissible_triples(5) {
        assert_eq!(
            theta_skein(a, b, c).unwrap(),
            theta_closed(a, b, c),
            "theta({a},{b},{c})"
        );
    }
}

#[test]
fn theta_is_symmetric() {
    for [a, b, c] in admissible_triples(6) {
        let v = theta(a, b, c).unwrap();
        for p in [[b, a, c], [c, b, a], [a, c, b], [b, c, a]] {
            assert_eq!(theta(p[0], p[1], p[2]).unwrap(), v);
        }
    }
}

#[test]
fn sixj_skein_matches_closed_form() {
    let mut checked = 0;
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                for d in 0..=3 {
                    for e in 0..=3 {
                        for f in 0..=3 {
                            let colors = [a, b, c, d, e, f];
                            if !tet_admissible(colors) || colors.iter().sum::<usize>() > 14 {
                                continue;
                            }
                            assert_eq!(
                                sixj_skein(colors).unwrap(),
                                tet_closed(colors),
                                "tet {colors:?}"
                            );
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 50, "only {checked} admissible colorings");
    for colors in [[2; 6], [4; 6], [2, 2, 4, 2, 2, 4], [5, 5, 4, 4, 3, 3], [3, 3, 2, 2, 3, 3]] {
        assert!(tet_admissible(colors), "{colors:?}");
        assert_eq!(sixj_skein(colors).unwrap(), tet_closed(colors), "tet {colors:?}");
    }
}

/// Tetrahedral symmetries on `(a,b,c,d,e,f)` with vertex triples
/// `(a,b,c) (c,e,f) (a,e,d) (b,d,f)`.
fn symmetries(x: [usize; 6]) -> Vec<[usize; 6]> {
    let [a, b, c, d, e, f] = x;
    vec![
        // Swap the two triples through edge c: fixes c and d.
        [b, a, c, d, f, e],
        // Rotate the three vertices other than the one carrying (a,b,c).
        [c, a, b, e, f, d],
        // Swap edge pairs: exchange a with f and e with b.
        [f, e, c, d, b, a],
    ]
}

#[test]
fn sixj_has_tetrahedral_symmetry() {
    let mut seen = 0;
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                for d in 0..=4 {
                    for e in 0..=4 {
                        for f in 0..=4 {
                            let x = [a, b, c, d, e, f];
                            if !tet_admissible(x) || (a + b + c + d + e + f) % 3 != 0 {
                                continue;
                            }
                            let v = sixj(a, b, c, d, e, f).unwrap();
                            for y in symmetries(x) {
                                assert!(tet_admissible(y));
                                assert_eq!(
                                    sixj(y[0], y[1], y[2], y[3], y[4], y[5]).unwrap(),
                                    v,
                                    "{x:?} -> {y:?}"
                                );
                            }
                            seen += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(seen > 20);
}

#[test]
fn large_colors_use_the_closed_form() {
    assert_eq!(theta(10, 10, 10).unwrap(), theta_closed(10, 10, 10));
    assert_eq!(sixj(8, 8, 8, 8, 8, 8).unwrap(), tet_closed([8; 6]));
}
