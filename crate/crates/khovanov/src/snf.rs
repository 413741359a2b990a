//! Rank and invariant factors of sparse integer matrices.
//!
//! Unit entries are eliminated first on a sparse representation, choosing
//! at each step the unit whose column is shortest. Whatever is left has no
//! unit entry and goes through a dense Smith normal form over big integers.
//! The sparse stage runs on `i64` and switches to big integers if an entry
//! would overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Rank and the invariant factors greater than one.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SmithSummary {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Entry arithmetic for the sparse stage; `None` reports overflow.
trait Entry: Clone + std::fmt::Debug {
    fn is_nil(&self) -> bool;
    fn unit(&self) -> bool;
    fn times(&self, o: &Self) -> Option<Self>;
    fn minus(&self, o: &Self) -> Option<Self>;
    fn big(&self) -> BigInt;
}

impl Entry for i64 {
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn times(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn minus(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn is_nil(&self) -> bool {
        self.is_zero()
    }
    fn unit(&self) -> bool {
        self.abs().is_one()
    }
    fn times(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn minus(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn big(&self) -> BigInt {
        self.clone()
    }
}

struct Sparse<T> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: Vec<BTreeSet<usize>>,
    live: BTreeSet<usize>,
    rank: usize,
}

enum Outcome<T> {
    Done(Sparse<T>),
    Overflow(Sparse<T>),
}

impl<T: Entry> Sparse<T> {
    fn map<U: Entry>(self, f: impl Fn(&T) -> U) -> Sparse<U> {
        Sparse {
            rows: self
                .rows
                .into_iter()
                .map(|r| r.iter().map(|(&c, v)| (c, f(v))).collect())
                .collect(),
            cols: self.cols,
            live: self.live,
            rank: self.rank,
        }
    }

    /// The unit entry with the shortest column, then the shortest row.
    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), (usize, usize))> = None;
        for &r in &self.live {
            for (&c, v) in &self.rows[r] {
                if !v.unit() {
                    continue;
                }
                let key = (self.cols[c].len(), self.rows[r].len());
                if best.is_none_or(|(k, _)| key < k) {
                    best = Some((key, (r, c)));
                    if key == (1, 1) {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(_, rc)| rc)
    }

    /// Clears column `c` with the unit at `(r, c)` and drops row `r` and
    /// column `c`. Returns `false`, leaving the matrix untouched, on overflow.
    fn eliminate(&mut self, r: usize, c: usize) -> bool {
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let p = pivot_row[&c].clone();
        let mut updates = Vec::new();
        for &other in &self.cols[c] {
            if other == r {
                continue;
            }
            // p is a unit, so subtracting (f * p) times the pivot row clears c.
            let Some(fp) = self.rows[other][&c].times(&p) else {
                self.rows[r] = pivot_row;
                return false;
            };
            let mut row = self.rows[other].clone();
            for (&k, v) in &pivot_row {
                let cur = row.get(&k).cloned();
                let step = fp.times(v);
                let next = match (cur, step) {
                    (_, None) => None,
                    (Some(x), Some(s)) => x.minus(&s),
                    (None, Some(s)) => v.minus(v).and_then(|z| z.minus(&s)),
                };
                let Some(next) = next else {
                    self.rows[r] = pivot_row;
                    return false;
                };
                if next.is_nil() {
                    row.remove(&k);
                } else {
                    row.insert(k, next);
                }
            }
            updates.push((other, row));
        }
        for (other, row) in updates {
            for &k in pivot_row.keys() {
                if row.contains_key(&k) {
                    self.cols[k].insert(other);
                } else {
                    self.cols[k].remove(&other);
                }
            }
            self.rows[other] = row;
        }
        for &k in pivot_row.keys() {
            self.cols[k].remove(&r);
        }
        self.live.remove(&r);
        self.rank += 1;
        true
    }

    fn run(mut self) -> Outcome<T> {
        while let Some((r, c)) = self.pivot() {
            if !self.eliminate(r, c) {
                return Outcome::Overflow(self);
            }
        }
        Outcome::Done(self)
    }

    /// The nonzero rows left after unit elimination, as a dense matrix.
    fn rest(&self) -> Vec<Vec<BigInt>> {
        let rows: Vec<usize> = self
            .live
            .iter()
            .copied()
            .filter(|&r| !self.rows[r].is_empty())
            .collect();
        let cols: Vec<usize> = (0..self.cols.len())
            .filter(|&c| !self.cols[c].is_empty())
            .collect();
        let index: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        rows.iter()
            .map(|&r| {
                let mut dense = vec![BigInt::zero(); cols.len()];
                for (c, v) in &self.rows[r] {
                    dense[index[c]] = v.big();
                }
                dense
            })
            .collect()
    }
}

/// Diagonal of a Smith normal form of a dense matrix, nonzero entries only,
/// each dividing the next.
pub fn dense_invariants(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry of the remaining block.
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| !m[r][c].is_zero())
            .min_by(|&a, &b| m[a.0][a.1].abs().cmp(&m[b.0][b.1].abs()))
        else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        let p = m[t][t].clone();
        let mut clean = true;
        for r in t + 1..rows {
            let q = m[r][t].div_floor(&p);
            if !q.is_zero() {
                for c in t..cols {
                    let x = &m[t][c] * &q;
                    m[r][c] -= x;
                }
            }
            clean &= m[r][t].is_zero();
        }
        for c in t + 1..cols {
            let q = m[t][c].div_floor(&p);
            if !q.is_zero() {
                for r in t..rows {
                    let x = &m[r][t] * &q;
                    m[r][c] -= x;
                }
            }
            clean &= m[t][c].is_zero();
        }
        if !clean {
            continue;
        }
        // The pivot must divide the rest of the block.
        if let Some(r) = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !(&m[r][c] % &p).is_zero())) {
            for c in t..cols {
                let x = m[r][c].clone();
                m[t][c] += x;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    // Normalize to a divisibility chain.
    for i in 0..diag.len() {
        for k in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[k]);
            let l = diag[i].lcm(&diag[k]);
            diag[i] = g;
            diag[k] = l;
        }
    }
    diag
}

/// Rank and nonunit invariant factors of a `rows x cols` matrix given by
/// `(row, col, value)` triples.
pub fn smith_summary(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SmithSummary {
    let mut m = Sparse {
        rows: vec![BTreeMap::new(); rows],
        cols: vec![BTreeSet::new(); cols],
        live: (0..rows).collect(),
        rank: 0,
    };
    for &(r, c, v) in entries {
        if v == 0 {
            continue;
        }
        let e = m.rows[r].entry(c).or_insert(0);
        *e += v;
        if *e == 0 {
            m.rows[r].remove(&c);
            m.cols[c].remove(&r);
        } else {
            m.cols[c].insert(r);
        }
    }
    let (rank, rest) = match m.run() {
        Outcome::Done(m) => (m.rank, m.rest()),
        Outcome::Overflow(m) => match m.map(|v| BigInt::from(*v)).run() {
            Outcome::Done(m) => (m.rank, m.rest()),
            Outcome::Overflow(_) => unreachable!("big integers do not overflow"),
        },
    };
    let diag = dense_invariants(rest);
    SmithSummary {
        rank: rank + diag.len(),
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn single_two() {
        let s = smith_summary(1, 1, &[(0, 0, 2)]);
        assert_eq!(s, SmithSummary { rank: 1, torsion: big(&[2]) });
    }

    #[test]
    fn dense_chain() {
        let m = vec![big(&[2, 0]), big(&[0, 3])];
        assert_eq!(dense_invariants(m), big(&[1, 6]));
        let m = vec![big(&[2, 4, 4]), big(&[-6, 6, 12]), big(&[10, -4, -16])];
        assert_eq!(dense_invariants(m), big(&[2, 6, 12]));
    }

    #[test]
    fn unit_elimination_with_fill_in() {
        // Rows (1 1), (1 -1): determinant -2.
        let s = smith_summary(2, 2, &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)]);
        assert_eq!(s, SmithSummary { rank: 2, torsion: big(&[2]) });
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(smith_summary(3, 2, &[]), SmithSummary::default());
    }
}
