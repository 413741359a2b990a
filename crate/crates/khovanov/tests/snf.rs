//! The sparse elimination path against a purely dense Smith normal form.

use khovanov::{dense_invariants, smith_summary};
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn matrices() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        (Just(r), Just(c), proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -2i64..=2, 1 => -9i64..=9], r * c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sparse_and_dense_agree((r, c, v) in matrices()) {
        let entries: Vec<(usize, usize, i64)> = (0..r)
            .flat_map(|i| (0..c).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, v[i * c + j]))
            .collect();
        let dense: Vec<Vec<BigInt>> = (0..r)
            .map(|i| (0..c).map(|j| BigInt::from(v[i * c + j])).collect())
            .collect();
        let diag = dense_invariants(dense);
        let s = smith_summary(r, c, &entries);
        prop_assert_eq!(s.rank, diag.len());
        let torsion: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_one()).collect();
        prop_assert_eq!(s.torsion, torsion);
    }
}

#[test]
fn large_entries_switch_to_big_integers() {
    let big = i64::MAX / 2;
    // Eliminating the unit at (0,0) doubles an entry near the i64 limit.
    let s = smith_summary(2, 2, &[(0, 0, 1), (0, 1, big), (1, 0, -2), (1, 1, big)]);
    // det = big + 2 big = 3 big, so the only invariant factors are 1 and 3 big.
    assert_eq!(s.rank, 2);
    assert_eq!(s.torsion, vec![BigInt::from(big) * 3]);
}
