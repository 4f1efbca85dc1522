//! Permutations in one-line notation, Lehmer codes, reduced words,
//! compositions and the Bruhat order subword oracle.

use crate::error::ForgeError;
use std::collections::HashSet;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    oneline: Vec<u8>,
}

impl Permutation {
    pub fn new(oneline: Vec<u8>) -> Result<Permutation, ForgeError> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(ForgeError::Domain(format!(
                    "not a permutation: {:?}",
                    oneline
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { oneline })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            oneline: (1..=n as u8).collect(),
        }
    }

    pub fn longest(n: usize) -> Permutation {
        Permutation {
            oneline: (1..=n as u8).rev().collect(),
        }
    }

    pub fn transposition(n: usize, i: usize) -> Permutation {
        let mut v: Vec<u8> = (1..=n as u8).collect();
        v.swap(i - 1, i);
        Permutation { oneline: v }
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.oneline[i - 1] as usize
    }

    pub fn oneline(&self) -> &[u8] {
        &self.oneline
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            oneline: (1..=self.n()).map(|i| self.apply(other.apply(i)) as u8).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0u8; self.n()];
        for i in 1..=self.n() {
            v[self.apply(i) - 1] = i as u8;
        }
        Permutation { oneline: v }
    }

    /// Right multiplication by `s_i`: swaps positions i, i+1.
    pub fn mul_s_right(&self, i: usize) -> Permutation {
        let mut v = self.oneline.clone();
        v.swap(i - 1, i);
        Permutation { oneline: v }
    }

    /// Number of inversions = Coxeter length.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.oneline[i] > self.oneline[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.oneline[i] > self.oneline[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.oneline[i - 1] > self.oneline[i])
            .collect()
    }

    /// Letters `i` with a left descent: `w^{-1}(i) > w^{-1}(i+1)`.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    /// Lehmer code: `c_i = #{j > i : w(j) < w(i)}`.
    pub fn lehmer_code(&self) -> Composition {
        let n = self.n();
        let mut parts = vec![0u32; n];
        for i in 0..n {
            for j in i + 1..n {
                if self.oneline[j] < self.oneline[i] {
                    parts[i] += 1;
                }
            }
        }
        Composition::new(parts)
    }

    /// Lexicographically smallest reduced word (letters are indices of
    /// simple transpositions, leftmost factor first).
    pub fn canonical_reduced_word(&self) -> Vec<u8> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while !w.is_identity() {
            let i = *w.left_descents().first().expect("non-identity has a descent");
            word.push(i as u8);
            // w = s_i * w'  =>  w' = s_i * w (left multiplication)
            w = Permutation::transposition(w.n(), i).compose(&w);
        }
        word
    }

    /// All reduced words. Guarded by the stated length bound.
    pub fn all_reduced_words(&self) -> Result<Vec<Vec<u8>>, ForgeError> {
        if self.length() > 12 {
            return Err(ForgeError::Bound(format!(
                "all-reduced-words restricted to length <= 12, got {}",
                self.length()
            )));
        }
        fn go(w: &Permutation, acc: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if w.is_identity() {
                out.push(acc.clone());
                return;
            }
            for i in w.left_descents() {
                acc.push(i as u8);
                let next = Permutation::transposition(w.n(), i).compose(w);
                go(&next, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out.sort();
        Ok(out)
    }

    /// Bruhat order via the subword criterion: `v <= w` iff some reduced
    /// word of `v` appears as a subword of a fixed reduced word of `w`.
    pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> bool {
        assert_eq!(v.n(), w.n());
        if v.length() > w.length() {
            return false;
        }
        let word = w.canonical_reduced_word();
        // DP over prefixes: the set of permutations obtainable as products of
        // reduced subwords seen so far.
        let n = v.n();
        let mut reach: HashSet<Permutation> = HashSet::new();
        reach.insert(Permutation::identity(n));
        for &a in &word {
            let mut next = reach.clone();
            for u in &reach {
                let extended = u.compose(&Permutation::transposition(n, a as usize));
                if extended.length() == u.length() + 1 {
                    next.insert(extended);
                }
            }
            reach = next;
        }
        reach.contains(v)
    }

    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut items: Vec<u8> = (1..=n as u8).collect();
        permute_rec(&mut items, 0, &mut out);
        out.sort();
        out
    }
}

fn permute_rec(items: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
    if k == items.len() {
        out.push(Permutation {
            oneline: items.clone(),
        });
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_rec(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Product of simple transpositions `s_{i1} ... s_{il}` read left to right.
pub fn word_to_perm(word: &[u8], n: usize) -> Permutation {
    let mut p = Permutation::identity(n);
    for &i in word {
        p = p.compose(&Permutation::transposition(n, i as usize));
    }
    p
}

/// True when the word is a reduced expression for its product.
pub fn word_is_reduced(word: &[u8], n: usize) -> bool {
    word_to_perm(word, n).length() == word.len()
}

/// A composition: finitely many nonnegative parts, trailing zeros allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Composition {
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Drop trailing zeros (canonical display form).
    pub fn trimmed(&self) -> Composition {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    /// Pad with zeros to length n.
    pub fn padded(&self, n: usize) -> Composition {
        let mut parts = self.parts.clone();
        while parts.len() < n {
            parts.push(0);
        }
        Composition { parts }
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// `alpha_i <= n - i` for all i (fits under the staircase of S_n).
    pub fn fits_staircase(&self, n: usize) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &a)| (a as usize) + i + 1 <= n || a == 0)
    }

    /// Sorted-descending partition together with the minimal-length
    /// permutation `w` such that `w(alpha) = alpha^+`, where
    /// `w(alpha)_i = alpha_{w^{-1}(i)}`.
    pub fn sort(&self) -> (Composition, Permutation) {
        let n = self.parts.len();
        let mut idx: Vec<usize> = (0..n).collect();
        // stable sort by value descending
        idx.sort_by(|&a, &b| self.parts[b].cmp(&self.parts[a]).then(a.cmp(&b)));
        let sorted: Vec<u32> = idx.iter().map(|&i| self.parts[i]).collect();
        let mut oneline = vec![0u8; n];
        for (rank, &pos) in idx.iter().enumerate() {
            oneline[pos] = (rank + 1) as u8;
        }
        (
            Composition::new(sorted),
            Permutation::new(oneline).expect("valid permutation"),
        )
    }

    /// Inverse of the Lehmer code map; errors when `c_i > n - i`.
    pub fn code_to_perm(&self, n: usize) -> Result<Permutation, ForgeError> {
        let code = self.padded(n);
        let mut available: Vec<u8> = (1..=n as u8).collect();
        let mut oneline = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.parts[i] as usize;
            if c >= available.len() {
                return Err(ForgeError::Domain(format!(
                    "invalid Lehmer code {:?} for n = {}",
                    self.parts, n
                )));
            }
            oneline.push(available.remove(c));
        }
        Permutation::new(oneline)
    }
}

/// All compositions contained in the staircase `delta_n` (so `alpha_i <= n-i`),
/// padded to n parts; these biject with S_n via the Lehmer code.
pub fn staircase_compositions(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn go(cur: &mut Vec<u32>, i: usize, n: usize, out: &mut Vec<Composition>) {
        if i == n {
            out.push(Composition::new(cur.clone()));
            return;
        }
        for v in 0..=(n - 1 - i) as u32 {
            cur[i] = v;
            go(cur, i + 1, n, out);
        }
        cur[i] = 0;
    }
    go(&mut cur, 0, n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lehmer_round_trip() {
        let w = Permutation::new(vec![4, 6, 2, 7, 5, 1, 3]).unwrap();
        assert_eq!(w.lehmer_code().trimmed().parts(), &[3, 4, 1, 3, 2]);
        let back = w.lehmer_code().code_to_perm(7).unwrap();
        assert_eq!(back, w);
        assert_eq!(
            Permutation::identity(5).lehmer_code().parts(),
            &[0, 0, 0, 0, 0]
        );
        assert_eq!(
            Permutation::longest(4).lehmer_code().parts(),
            &[3, 2, 1, 0]
        );
    }

    #[test]
    fn reduced_words() {
        let w0 = Permutation::longest(3);
        let words = w0.all_reduced_words().unwrap();
        assert_eq!(words, vec![vec![1, 2, 1], vec![2, 1, 2]]);
        assert_eq!(w0.canonical_reduced_word(), vec![1, 2, 1]);
        assert!(Permutation::identity(4).canonical_reduced_word().is_empty());
        assert_eq!(Permutation::longest(4).all_reduced_words().unwrap().len(), 16);
        // every reduced word multiplies back to w with the right length
        for word in Permutation::longest(4).all_reduced_words().unwrap() {
            assert_eq!(word_to_perm(&word, 4), Permutation::longest(4));
            assert_eq!(word.len(), 6);
        }
    }

    #[test]
    fn length_is_inversion_count() {
        for w in Permutation::all(5) {
            assert_eq!(w.canonical_reduced_word().len(), w.length());
        }
    }

    #[test]
    fn bruhat_basics() {
        let id = Permutation::identity(4);
        for w in Permutation::all(4) {
            assert!(Permutation::bruhat_leq(&id, &w));
        }
        let s1 = Permutation::transposition(3, 1);
        let s2 = Permutation::transposition(3, 2);
        assert!(!Permutation::bruhat_leq(&s1, &s2));
        assert!(!Permutation::bruhat_leq(&s2, &s1));
    }

    #[test]
    fn bruhat_partial_order_s4() {
        let all = Permutation::all(4);
        // reflexive + antisymmetric + transitive
        for v in &all {
            assert!(Permutation::bruhat_leq(v, v));
        }
        for v in &all {
            for w in &all {
                if v != w
                    && Permutation::bruhat_leq(v, w)
                    && Permutation::bruhat_leq(w, v)
                {
                    panic!("antisymmetry violated");
                }
            }
        }
        for u in &all {
            for v in &all {
                if !Permutation::bruhat_leq(u, v) {
                    continue;
                }
                for w in &all {
                    if Permutation::bruhat_leq(v, w) {
                        assert!(Permutation::bruhat_leq(u, w));
                    }
                }
            }
        }
    }

    #[test]
    fn sort_composition() {
        let a = Composition::new(vec![0, 2, 0, 3, 1, 0]);
        let (plus, w) = a.sort();
        assert_eq!(plus.parts(), &[3, 2, 1, 0, 0, 0]);
        // w(alpha) = alpha^+ under w(alpha)_i = alpha_{w^{-1}(i)}
        let winv = w.inverse();
        let applied: Vec<u32> = (1..=6).map(|i| a.parts()[winv.apply(i) - 1]).collect();
        assert_eq!(applied, plus.parts());

        let p = Composition::new(vec![3, 1, 0]);
        let (_, wp) = p.sort();
        assert!(wp.is_identity());

        let (plus01, w01) = Composition::new(vec![0, 1]).sort();
        assert_eq!(plus01.parts(), &[1, 0]);
        assert_eq!(w01, Permutation::transposition(2, 1));
    }

    #[test]
    fn minimal_sorting_length() {
        // w_alpha is the minimal-length sorter: check against brute force on S4
        for alpha in staircase_compositions(4) {
            let (plus, w) = alpha.sort();
            let mut best: Option<usize> = None;
            for u in Permutation::all(4) {
                let uinv = u.inverse();
                let applied: Vec<u32> =
                    (1..=4).map(|i| alpha.parts()[uinv.apply(i) - 1]).collect();
                if applied == plus.parts() {
                    best = Some(best.map_or(u.length(), |b: usize| b.min(u.length())));
                }
            }
            assert_eq!(w.length(), best.unwrap());
        }
    }
}
