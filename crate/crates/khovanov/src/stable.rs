//! Where consecutive members of a twist family stop agreeing.

use crate::error::KhError;
use crate::homology::BigradedGroups;

/// Shifts `g` so that its lowest homological degree with nonzero homology
/// is 0 and the lowest quantum degree there is 0. Returns the shift.
pub fn align(g: &BigradedGroups) -> Result<(BigradedGroups, (i64, i64)), KhError> {
    let i0 = g
        .min_degree()
        .ok_or_else(|| KhError::AlignmentFailed("homology is zero".into()))?;
    let j0 = *g.column(i0).keys().next().expect("nonempty column");
    Ok((g.shifted(-i0, -j0), (-i0, -j0)))
}

/// For aligned groups, the smallest homological degree where ranks or
/// torsion differ; `None` when they agree everywhere.
pub fn first_difference(a: &BigradedGroups, b: &BigradedGroups) -> Option<i64> {
    let keys = a.entries.keys().chain(b.entries.keys());
    keys.filter(|&&(i, j)| a.get(i, j) != b.get(i, j))
        .map(|&(i, _)| i)
        .min()
}

/// `m(k)` for every consecutive pair of the sequence after alignment;
/// `None` stands for agreement in every degree.
pub fn stable_range(seq: &[BigradedGroups]) -> Result<Vec<Option<i64>>, KhError> {
    let aligned = seq
        .iter()
        .map(|g| align(g).map(|(a, _)| a))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(aligned
        .windows(2)
        .map(|w| first_difference(&w[0], &w[1]))
        .collect())
}
