//! Monotone triangles and the lattice completion of the Bruhat order:
//! entrywise meet/join, rank generating functions, the Ehresmann
//! comparison and the rank-based length formula.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::ForgeError;
use crate::perm::Permutation;

/// A monotone triangle for size n: rows `1..n-1`, row i holds `n - i`
/// strictly increasing entries from `1..=n`, and anti-diagonals decrease
/// weakly downward: `T[i][j] >= T[i+1][j-1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonotoneTriangle {
    pub n: usize,
    pub rows: Vec<Vec<u8>>,
}

impl MonotoneTriangle {
    pub fn is_valid(&self) -> bool {
        if self.rows.len() + 1 != self.n {
            return false;
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.n - 1 - i {
                return false;
            }
            if row.iter().any(|&e| e == 0 || e as usize > self.n) {
                return false;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        for i in 0..self.rows.len().saturating_sub(1) {
            for j in 1..self.rows[i].len() {
                if self.rows[i][j] < self.rows[i + 1][j - 1] {
                    return false;
                }
            }
        }
        true
    }

    /// Triangle of a permutation: row i sorts the prefix `w_1..w_{n-i}`.
    pub fn of_permutation(w: &Permutation) -> MonotoneTriangle {
        let n = w.n();
        let mut rows = Vec::with_capacity(n - 1);
        for i in 1..n {
            let mut prefix: Vec<u8> = (1..=n - i).map(|p| w.apply(p) as u8).collect();
            prefix.sort_unstable();
            rows.push(prefix);
        }
        MonotoneTriangle { n, rows }
    }

    /// Entrywise minimum.
    pub fn meet(&self, other: &MonotoneTriangle) -> MonotoneTriangle {
        self.zip_with(other, |a, b| a.min(b))
    }

    /// Entrywise maximum.
    pub fn join(&self, other: &MonotoneTriangle) -> MonotoneTriangle {
        self.zip_with(other, |a, b| a.max(b))
    }

    fn zip_with(&self, other: &MonotoneTriangle, f: impl Fn(u8, u8) -> u8) -> MonotoneTriangle {
        assert_eq!(self.n, other.n);
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(&a, &b)| f(a, b)).collect())
            .collect();
        let out = MonotoneTriangle { n: self.n, rows };
        debug_assert!(out.is_valid(), "meet/join left the monotone family");
        out
    }

    /// Entrywise comparison.
    pub fn leq(&self, other: &MonotoneTriangle) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(ra, rb)| ra.iter().zip(rb).all(|(a, b)| a <= b))
    }

    pub fn entry_sum(&self) -> u64 {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|&e| e as u64)
            .sum()
    }

    /// Rank: entryts sum minus the sum of the minimal triangle, which is
    /// `C(n+1, 3)`.
    pub fn rank(&self) -> u64 {
        let n = self.n as u64;
        self.entry_sum() - n * (n * n - 1) / 6
    }
}

/// All monotone triangles of size n, by backtracking row by row.
pub fn all_monotone_triangles(n: usize) -> Vec<MonotoneTriangle> {
    if n > 6 {
        // ASM(7) = 218348 triangles; the suites stay below that
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = Vec::new();
    fn strictly_increasing_rows(len: usize, n: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = Vec::new();
        fn go(len: usize, n: usize, lo: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            for v in lo..=(n as u8) {
                cur.push(v);
                go(len, n, v + 1, cur, out);
                cur.pop();
            }
        }
        go(len, n, 1, &mut cur, &mut out);
        out
    }
    fn compatible(prev: &[u8], next: &[u8]) -> bool {
        // anti-diagonal condition: prev[j] >= next[j-1]
        (1..prev.len()).all(|j| prev[j] >= next[j - 1])
    }
    fn go(n: usize, rows: &mut Vec<Vec<u8>>, out: &mut Vec<MonotoneTriangle>) {
        if rows.len() == n - 1 {
            out.push(MonotoneTriangle {
                n,
                rows: rows.clone(),
            });
            return;
        }
        let len = n - 1 - rows.len();
        for cand in strictly_increasing_rows(len, n) {
            if rows
                .last()
                .map_or(true, |prev| compatible(prev, &cand))
            {
                rows.push(cand);
                go(n, rows, out);
                rows.pop();
            }
        }
    }
    go(n, &mut rows, &mut out);
    out
}

/// Closure of the permutation triangles under join; the completion equals
/// the full monotone family.
pub fn join_closure(n: usize) -> BTreeSet<MonotoneTriangle> {
    let mut set: BTreeSet<MonotoneTriangle> = Permutation::all(n)
        .iter()
        .map(MonotoneTriangle::of_permutation)
        .collect();
    loop {
        let items: Vec<MonotoneTriangle> = set.iter().cloned().collect();
        let before = set.len();
        for i in 0..items.len() {
            for j in i + 1..items.len() {
                set.insert(items[i].join(&items[j]));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// The lattice completion: vertex list plus the covering relation
/// (rank-difference-one comparable pairs — the lattice is graded).
pub struct Lattice {
    pub vertices: Vec<MonotoneTriangle>,
    pub covers: Vec<(usize, usize)>,
}

pub fn macneille(n: usize) -> Result<Lattice, ForgeError> {
    if n > 6 {
        return Err(ForgeError::Bound("lattice bounded to n <= 6".into()));
    }
    let mut vertices = all_monotone_triangles(n);
    vertices.sort_by_key(|t| (t.rank(), t.rows.clone()));
    let mut covers = Vec::new();
    for (i, a) in vertices.iter().enumerate() {
        for (j, b) in vertices.iter().enumerate() {
            if a.rank() + 1 == b.rank() && a.leq(b) {
                covers.push((i, j));
            }
        }
    }
    Ok(Lattice { vertices, covers })
}

/// Rank generating function over all triangles and over the permutation
/// image, as coefficient vectors.
pub fn rank_polynomials(n: usize) -> (Vec<u64>, Vec<u64>) {
    let all = all_monotone_triangles(n);
    let top = all.iter().map(|t| t.rank()).max().unwrap_or(0) as usize;
    let mut full = vec![0u64; top + 1];
    for t in &all {
        full[t.rank() as usize] += 1;
    }
    let mut perms = vec![0u64; top + 1];
    for w in Permutation::all(n) {
        perms[MonotoneTriangle::of_permutation(&w).rank() as usize] += 1;
    }
    (full, perms)
}

/// Ehresmann comparison: `v <= w` in Bruhat order iff the triangles
/// compare entrywise.
pub fn ehresmann_leq(v: &Permutation, w: &Permutation) -> bool {
    MonotoneTriangle::of_permutation(v).leq(&MonotoneTriangle::of_permutation(w))
}

/// Length from the triangle rank:
/// `l(w) = r(T(w)) - sum_{(i,j) inversion} (j - i - 1)`.
pub fn length_via_rank(w: &Permutation) -> i64 {
    let rank = MonotoneTriangle::of_permutation(w).rank() as i64;
    let correction: i64 = w
        .inversions()
        .iter()
        .map(|&(i, j)| (j as i64 - i as i64 - 1))
        .sum();
    rank - correction
}

/// DOT rendering of the Hasse diagram.
pub fn to_dot(lattice: &Lattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for (i, t) in lattice.vertices.iter().enumerate() {
        let label: Vec<String> = t
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        out.push_str(&format!("  v{} [label=\"{}\"];\n", i, label.join("|")));
    }
    for (a, b) in &lattice.covers {
        out.push_str(&format!("  v{} -> v{};\n", a, b));
    }
    out.push_str("}\n");
    out
}

/// Middle coefficient of the rank row (for the divisibility probe).
pub fn middle_rank_coefficient(n: usize) -> BigInt {
    let (full, _) = rank_polynomials(n);
    BigInt::from(full[(full.len() - 1) / 2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_of_worked_example() {
        let w = Permutation::new(vec![4, 6, 2, 7, 5, 1, 3]).unwrap();
        let t = MonotoneTriangle::of_permutation(&w);
        assert!(t.is_valid());
        assert_eq!(t.rows[0], vec![1, 2, 4, 5, 6, 7]);
        assert_eq!(t.rows[2], vec![2, 4, 6, 7]);
        assert_eq!(t.rows[5], vec![4]);
        assert_eq!(t.entry_sum(), 94);
        assert_eq!(t.rank(), 38);
        assert_eq!(length_via_rank(&w), 13);
        assert_eq!(w.length(), 13);
    }

    #[test]
    fn monotone_counts_match_asm() {
        assert_eq!(all_monotone_triangles(1).len(), 1);
        assert_eq!(all_monotone_triangles(3).len(), 7);
        assert_eq!(all_monotone_triangles(4).len(), 42);
        assert_eq!(all_monotone_triangles(5).len(), 429);
    }

    #[test]
    fn closure_generates_everything() {
        for n in 2..=4 {
            let closure = join_closure(n);
            assert_eq!(closure.len(), all_monotone_triangles(n).len());
        }
    }

    #[test]
    fn rank_rows_n4() {
        let (full, perms) = rank_polynomials(4);
        assert_eq!(full, vec![1, 3, 3, 5, 6, 6, 6, 5, 3, 3, 1]);
        assert_eq!(perms, vec![1, 3, 1, 4, 2, 2, 2, 4, 1, 3, 1]);
    }

    #[test]
    fn meet_join_properties() {
        let all = all_monotone_triangles(3);
        for a in &all {
            assert_eq!(a.meet(a), *a);
            assert_eq!(a.join(a), *a);
        }
        // distributivity on a full sweep at n = 3
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(
                        a.join(&b.meet(c)),
                        a.join(b).meet(&a.join(c))
                    );
                }
            }
        }
    }

    #[test]
    fn ehresmann_matches_subword() {
        for v in Permutation::all(4) {
            for w in Permutation::all(4) {
                assert_eq!(
                    ehresmann_leq(&v, &w),
                    Permutation::bruhat_leq(&v, &w),
                    "v = {:?}, w = {:?}",
                    v.oneline(),
                    w.oneline()
                );
            }
        }
    }
}
