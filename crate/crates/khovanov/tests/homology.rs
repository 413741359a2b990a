//! Khovanov homology: decategorification, invariance and small examples.

use diagram_io::library::{corpus, one_slot, pretzel, two_slot, unknot, FIGURE_EIGHT, TREFOIL};
use diagram_io::{braid_closure, parse_pd, Diagram, Twist};
use khovanov::*;
use laurent_core::unknot_colored;
use num_bigint::BigInt;
use skein_bracket::colored_jones;

fn torus(k: usize) -> Diagram {
    one_slot(Twist::Negative).twist_fill(&[k]).unwrap()
}

fn euler_corpus() -> Vec<(String, Diagram)> {
    let mut out: Vec<(String, Diagram)> = corpus().into_iter().map(|(n, d)| (n.to_string(), d)).collect();
    for k in 2..=6 {
        out.push((format!("T(2,{k})"), torus(k)));
    }
    out.push(("T(2,10)".into(), torus(10)));
    out.push(("two-slot (2,3)".into(), two_slot(Twist::Positive).twist_fill(&[2, 3]).unwrap()));
    out.push(("pretzel (1,1,1)".into(), pretzel(Twist::Negative).twist_fill(&[1, 1, 1]).unwrap()));
    out
}

#[test]
fn unknot_is_two_generators_in_degree_zero() {
    let c = ckh(&parse_pd("U").unwrap()).unwrap();
    assert_eq!(c.generator_count(), 2);
    let h = homology(&c);
    assert_eq!(h.entries.len(), 2);
    assert_eq!(h.get(0, 1).rank, 1);
    assert_eq!(h.get(0, -1).rank, 1);
    assert_eq!(euler_characteristic(&h), unknot_colored(1));
}

#[test]
fn euler_characteristic_is_the_jones_polynomial() {
    let corpus = euler_corpus();
    assert!(corpus.len() >= 8);
    for (name, d) in corpus {
        assert!(d.crossing_count() <= 10, "{name}");
        let c = ckh(&d).unwrap();
        let h = homology(&c);
        let jones = colored_jones(&d, 1, false).unwrap().to_laurent().unwrap();
        assert_eq!(euler_characteristic(&h), jones, "{name}");
        assert_eq!(c.chain_euler(), jones, "{name} chain level");
    }
}

#[test]
fn differentials_square_to_zero() {
    for (name, d) in euler_corpus() {
        assert!(ckh(&d).unwrap().d_squared_is_zero(), "{name}");
    }
}

#[test]
fn trefoil_groups() {
    let h = homology(&ckh(&parse_pd(TREFOIL).unwrap()).unwrap());
    assert_eq!(h.total_rank(), 4);
    let torsion = h.torsion_entries();
    assert_eq!(torsion.len(), 1);
    assert_eq!(torsion[0].2, BigInt::from(2));
}

#[test]
fn hopf_groups() {
    let d = parse_pd(diagram_io::library::HOPF).unwrap();
    let c = ckh(&d).unwrap();
    assert_eq!(c.generators.iter().map(|g| g.len()).sum::<usize>(), 12);
    let h = homology(&c);
    assert_eq!(h.entries.len(), 4);
    assert!(h.entries.values().all(|g| g.rank == 1 && g.torsion.is_empty()));
}

#[test]
fn presentations_agree() {
    let neg = |w: &[i64]| -> Vec<(usize, Twist)> {
        w.iter()
            .map(|&g| (g.unsigned_abs() as usize, if g > 0 { Twist::Positive } else { Twist::Negative }))
            .collect()
    };
    let trefoil = homology(&ckh(&parse_pd(TREFOIL).unwrap()).unwrap());
    let braid = homology(&ckh(&braid_closure(2, &neg(&[-1, -1, -1]))).unwrap());
    let slot = homology(&ckh(&torus(3)).unwrap());
    assert_eq!(trefoil, braid);
    assert_eq!(trefoil, slot);
    let fig8 = homology(&ckh(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap());
    let fig8_braid = homology(&ckh(&braid_closure(3, &neg(&[1, -2, 1, -2]))).unwrap());
    assert_eq!(fig8, fig8_braid);
}

#[test]
fn crossing_cap() {
    assert_eq!(
        ckh_capped(&torus(5), 4).unwrap_err(),
        KhError::TooLarge { cap: 4, got: 5 }
    );
}

#[test]
fn hand_built_complexes() {
    let g = |j| Generator { state: 0, plus: 0, circles: 0, i: 0, j };
    // Zero differential: ranks are generator counts.
    let c = CubeComplex {
        generators: vec![vec![g(0), g(0)], vec![g(0)]],
        differentials: vec![Vec::new()],
        lowest: 0,
    };
    let h = homology(&c);
    assert_eq!((h.get(0, 0).rank, h.get(1, 0).rank), (2, 1));
    // A single multiplication by two.
    let c = CubeComplex {
        generators: vec![vec![g(0)], vec![g(0)]],
        differentials: vec![vec![(0, 0, 2)]],
        lowest: 0,
    };
    let h = homology(&c);
    assert_eq!(h.entries.len(), 1);
    assert_eq!(h.get(1, 0), KhGroup { rank: 0, torsion: vec![BigInt::from(2)] });
    assert!(euler_characteristic(&BigradedGroups::default()).is_zero());
}

#[test]
fn torus_braids() {
    let d = torus_braid_approximant(3, 3);
    assert_eq!(d.crossing_count(), 6);
    let word = torus_braid_word(4, 5);
    for g in 1..4 {
        assert_eq!(word.iter().filter(|(x, _)| *x == g).count(), 5);
    }
    for k in 1..=5 {
        let a = skein_bracket::bracket_diagram(&torus_braid_approximant(2, k)).unwrap();
        let b = skein_bracket::bracket_diagram(&torus(k)).unwrap();
        assert_eq!(a, b, "k = {k}");
    }
}

#[test]
fn twist_family_stabilizes() {
    let seq: Vec<BigradedGroups> = (2..=8).map(|k| homology(&ckh(&torus(k)).unwrap())).collect();
    let m: Vec<i64> = stable_range(&seq).unwrap().into_iter().map(|x| x.unwrap()).collect();
    assert!(m.windows(2).all(|w| w[0] <= w[1]), "{m:?}");
    assert!(m.windows(2).filter(|w| w[1] > w[0]).count() >= 3, "{m:?}");
}

#[test]
fn stable_range_edge_cases() {
    let h = homology(&ckh(&torus(4)).unwrap());
    assert_eq!(stable_range(&[h.clone(), h.clone(), h.clone()]).unwrap(), vec![None, None]);
    let other = homology(&ckh(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap());
    assert_eq!(stable_range(&[h, other]).unwrap(), vec![Some(0)]);
    assert!(matches!(
        stable_range(&[BigradedGroups::default()]),
        Err(KhError::AlignmentFailed(_))
    ));
}

#[test]
fn colored_approximation_of_the_unknot() {
    // The Euler characteristic of the braided 2-cable approaches the colored
    // unknot coefficient by coefficient from the lowest degree.
    let target = unknot_colored(2);
    let mut agree = Vec::new();
    for length in [1, 3, 5] {
        let h = colored_kh_approx(&unknot(), 2, &[], length, CROSSING_CAP).unwrap();
        let e = euler_characteristic(&h);
        // Align lowest terms and count agreeing coefficients.
        let (le, lt) = (e.min_exp().unwrap(), target.min_exp().unwrap());
        let shifted = e.shift(lt - le);
        let sign = if shifted.coeff(lt) == target.coeff(lt) { 1 } else { -1 };
        let diff = &shifted.scale(&BigInt::from(sign)) - &target;
        agree.push(diff.min_exp().map_or(i64::MAX, |m| m - lt));
    }
    assert!(agree.windows(2).all(|w| w[1] > w[0]), "{agree:?}");
}

#[test]
fn colored_approximation_small_cases() {
    let h = colored_kh_approx(&one_slot(Twist::Negative), 2, &[1], 1, CROSSING_CAP).unwrap();
    assert!(h.total_rank() > 0);
    let d = colored_cable(&one_slot(Twist::Negative), 2, &[1], 1).unwrap();
    // One crossing cabled into four, plus one braid letter on the single
    // component.
    assert_eq!(d.crossing_count(), 4 + 1);
}
