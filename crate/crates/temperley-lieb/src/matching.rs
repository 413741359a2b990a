//! Planar matchings of the `2n` boundary points of an `(n, n)` tangle.
//!
//! Points are indexed locally: top points `0..n` left to right, then bottom
//! points `n..2n` left to right. The canonical encoding is a balanced
//! parenthesis word over the boundary circle read as top `1..n` followed by
//! bottom `n'..1'`; bit `c` is set when circle position `c` opens a pair.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    n: u8,
    word: u64,
}

impl Matching {
    pub const MAX_STRANDS: usize = 32;

    fn circle_pos(n: usize, local: usize) -> usize {
        if local < n {
            local
        } else {
            3 * n - 1 - local
        }
    }

    fn local_of(n: usize, pos: usize) -> usize {
        if pos < n {
            pos
        } else {
            3 * n - 1 - pos
        }
    }

    /// Builds a matching from a partner array over local indices. Returns
    /// `None` if the array is not an involution without fixed points or the
    /// pairing is not planar.
    pub fn from_partners(partners: &[usize]) -> Option<Self> {
        let len = partners.len();
        if len % 2 != 0 || len / 2 > Self::MAX_STRANDS {
            return None;
        }
        let n = len / 2;
        let mut word = 0u64;
        for (i, &p) in partners.iter().enumerate() {
            if p >= len || p == i || partners[p] != i {
                return None;
            }
            if Self::circle_pos(n, p) > Self::circle_pos(n, i) {
                word |= 1 << Self::circle_pos(n, i);
            }
        }
        let m = Self { n: n as u8, word };
        (m.partners() == partners).then_some(m)
    }

    /// The matching of a balanced word; `None` if the word is not balanced.
    pub fn from_word(n: usize, word: u64) -> Option<Self> {
        let mut depth = 0i32;
        for c in 0..2 * n {
            depth += if word >> c & 1 == 1 { 1 } else { -1 };
            if depth < 0 {
                return None;
            }
        }
        (depth == 0 && (2 * n == 64 || word >> (2 * n) == 0)).then_some(Self { n: n as u8, word })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_partners(&(0..2 * n).map(|i| (i + n) % (2 * n)).collect::<Vec<_>>())
            .expect("identity is planar")
    }

    /// The cup-cap generator `e_i`, `1 <= i < n`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "generator index out of range");
        let mut p: Vec<usize> = (0..2 * n).map(|j| (j + n) % (2 * n)).collect();
        p[i - 1] = i;
        p[i] = i - 1;
        p[n + i - 1] = n + i;
        p[n + i] = n + i - 1;
        Self::from_partners(&p).expect("generator is planar")
    }

    pub fn strands(&self) -> usize {
        self.n as usize
    }

    pub fn word(&self) -> u64 {
        self.word
    }

    pub fn partners(&self) -> Vec<usize> {
        let n = self.n as usize;
        let mut out = vec![0; 2 * n];
        let mut stack = Vec::with_capacity(n);
        for c in 0..2 * n {
            if self.word >> c & 1 == 1 {
                stack.push(c);
            } else {
                let o = stack.pop().expect("balanced word");
                let (a, b) = (Self::local_of(n, o), Self::local_of(n, c));
                out[a] = b;
                out[b] = a;
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n as usize)
    }

    /// Number of strands joining top to bottom.
    pub fn through_strands(&self) -> usize {
        let n = self.n as usize;
        self.partners()[..n].iter().filter(|&&p| p >= n).count()
    }

    /// Vertical reflection: top and bottom exchange.
    pub fn flip(&self) -> Self {
        let n = self.n as usize;
        let p = self.partners();
        let swap = |i: usize| if i < n { i + n } else { i - n };
        let q: Vec<usize> = (0..2 * n).map(|i| swap(p[swap(i)])).collect();
        Self::from_partners(&q).expect("reflection preserves planarity")
    }

    /// All planar matchings on `n` strands (the Catalan number `C_n`).
    pub fn enumerate(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        fn rec(n: usize, pos: usize, open: usize, depth: usize, word: u64, out: &mut Vec<Matching>) {
            if pos == 2 * n {
                out.push(Matching { n: n as u8, word });
                return;
            }
            if open < n {
                rec(n, pos + 1, open + 1, depth + 1, word | 1 << pos, out);
            }
            if depth > 0 {
                rec(n, pos + 1, open, depth - 1, word, out);
            }
        }
        rec(n, 0, 0, 0, 0, &mut out);
        out
    }

    /// Stacks `self` on top of `other`; returns the product and the number
    /// of closed loops formed in the middle.
    pub fn compose(&self, other: &Self) -> (Self, usize) {
        assert_eq!(self.n, other.n, "strand mismatch");
        let n = self.n as usize;
        let x = self.partners();
        let y = other.partners();
        let mut out = vec![usize::MAX; 2 * n];
        let mut mid_seen = vec![false; n];
        // Walks from an outer point; `in_x` says which diagram we are in.
        let walk = |start: usize, mut in_x: bool, mid_seen: &mut Vec<bool>| -> usize {
            let mut p = start;
            loop {
                if in_x {
                    let q = x[p];
                    if q < n {
                        return q;
                    }
                    mid_seen[q - n] = true;
                    p = q - n;
                    in_x = false;
                } else {
                    let q = y[p];
                    if q >= n {
                        return q;
                    }
                    mid_seen[q] = true;
                    p = q + n;
                    in_x = true;
                }
            }
        };
        for i in 0..n {
            if out[i] == usize::MAX {
                let e = walk(i, true, &mut mid_seen);
                out[i] = e;
                out[e] = i;
            }
        }
        for j in n..2 * n {
            if out[j] == usize::MAX {
                let e = walk(j, false, &mut mid_seen);
                out[j] = e;
                out[e] = j;
            }
        }
        let mut loops = 0;
        for m in 0..n {
            if mid_seen[m] {
                continue;
            }
            loops += 1;
            let mut p = m;
            loop {
                mid_seen[p] = true;
                let q = x[n + p];
                debug_assert!(q >= n);
                mid_seen[q - n] = true;
                let r = y[q - n];
                debug_assert!(r < n);
                if r == m {
                    break;
                }
                p = r;
            }
        }
        (Self::from_partners(&out).expect("composition is planar"), loops)
    }

    /// Side-by-side placement of `self` (left) and `other` (right).
    pub fn tensor(&self, other: &Self) -> Self {
        let (a, b) = (self.n as usize, other.n as usize);
        let n = a + b;
        let map_a = |i: usize| if i < a { i } else { i - a + n };
        let map_b = |i: usize| if i < b { i + a } else { i - b + n + a };
        let mut p = vec![0; 2 * n];
        for (i, &q) in self.partners().iter().enumerate() {
            p[map_a(i)] = map_a(q);
        }
        for (i, &q) in other.partners().iter().enumerate() {
            p[map_b(i)] = map_b(q);
        }
        Self::from_partners(&p).expect("tensor of planar matchings is planar")
    }

    /// Loops formed by gluing `self` and `other` top-to-top and
    /// bottom-to-bottom.
    pub fn join_loops(&self, other: &Self) -> usize {
        assert_eq!(self.n, other.n, "strand mismatch");
        cycles_of_union(&self.partners(), &other.partners())
    }

    /// Loops formed by closing each top point `i` to bottom point `i`.
    pub fn closure_loops(&self) -> usize {
        let n = self.n as usize;
        let straight: Vec<usize> = (0..2 * n).map(|i| (i + n) % (2 * n)).collect();
        cycles_of_union(&self.partners(), &straight)
    }
}

/// Number of cycles in the union of two perfect matchings of one point set.
pub fn cycles_of_union(a: &[usize], b: &[usize]) -> usize {
    let mut seen = vec![false; a.len()];
    let mut cycles = 0;
    for s in 0..a.len() {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut p = s;
        loop {
            seen[p] = true;
            let q = a[p];
            seen[q] = true;
            p = b[q];
            if p == s {
                break;
            }
        }
    }
    cycles
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in 0..2 * self.n as usize {
            f.write_str(if self.word >> c & 1 == 1 { "(" } else { ")" })?;
        }
        Ok(())
    }
}
