use asymptotics::{
    octahedron_color, octahedron_rate, octahedron_value, root_identity, root_identity_uniform,
    v8_f64, volume_experiment, AsymError,
};
use diagram_io::library::{one_slot, pretzel, two_slot};
use diagram_io::Twist;
use spin_network::SpinError;

#[test]
fn octahedral_colors() {
    let got: Vec<usize> = (1..=9).map(octahedron_color).collect();
    assert_eq!(got, vec![0, 0, 2, 2, 4, 4, 6, 6, 8]);
}

#[test]
fn small_octahedral_values() {
    assert!(octahedron_rate(&[], 30).unwrap().rows.is_empty());
    // a = 0 at n = 2: the empty network.
    let v = octahedron_value(2, 30).unwrap();
    assert!((v.re_f64() - 1.0).abs() < 1e-25);
    let s = octahedron_rate(&[2, 3], 30).unwrap();
    assert!(s.rows.iter().all(|r| r.rate.is_finite()));
}

#[test]
fn octahedral_rates_increase_below_v8() {
    let s = octahedron_rate(&[10, 20, 40], 30).unwrap();
    assert!(s.is_strictly_increasing(), "{:?}", s.rates());
    assert!(s.rates().iter().all(|&r| r < v8_f64()));
}

#[test]
fn grids_must_increase() {
    assert!(matches!(octahedron_rate(&[4, 3], 30), Err(AsymError::Invalid(_))));
    assert!(matches!(octahedron_rate(&[0, 3], 30), Err(AsymError::Invalid(_))));
}

#[test]
fn zero_triangle_template_has_zero_rate() {
    let e = volume_experiment(&one_slot(Twist::Negative), &[2, 3, 5, 8, 12, 20], 30).unwrap();
    assert_eq!(e.triangles, 0);
    assert_eq!(e.target, 0.0);
    for r in &e.series.rows {
        assert!((r.abs() - 1.0).abs() < 1e-20, "n = {}", r.n);
        assert!(r.rate.abs() < 1e-20);
    }
}

#[test]
fn triangle_templates_report_their_move_count() {
    let two = volume_experiment(&two_slot(Twist::Negative), &[3, 12], 30).unwrap();
    assert_eq!(two.triangles, 1);
    assert!((two.target - 2.0 * v8_f64()).abs() < 1e-12);
    let pz = volume_experiment(&pretzel(Twist::Negative), &[3, 12], 30).unwrap();
    assert_eq!(pz.triangles, 2);
    assert_eq!(pz.formula_rates.len(), 2);
    // Both triangle factors are identically one, so J_infinity is
    // theta(2n,2n,2n)/O(n), whose modulus at the root is 3/4.
    for r in &pz.series.rows {
        assert!((r.abs() - 0.75).abs() < 1e-20, "n = {}: {}", r.n, r.abs());
    }
}

#[test]
fn root_identity_values() {
    for n in 2..=8 {
        let v = root_identity(n, 40).unwrap();
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        assert!((v.re_f64() - sign).abs() < 1e-35 && v.im_f64().abs() < 1e-35, "n = {n}");
        let literal = root_identity_uniform(n, 40);
        if n % 2 == 1 {
            assert!(matches!(literal, Err(AsymError::Spin(SpinError::Inadmissible(_)))));
        } else {
            assert!(matches!(literal, Err(AsymError::SingularEvaluation { .. })));
        }
    }
}
