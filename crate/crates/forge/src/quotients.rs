//! Finite-dimensional quotients of the plactic and free algebras: basis
//! enumeration, Hilbert series and multiplication.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::ForgeError;
use crate::perm::Permutation;
use crate::plactic::{
    a_family, box_shapes, eg_normal_form, idplactic_rl, reduce, rewrite_closure, rsk_normal_form,
    staircase_shapes, enumerate_tableaux, Presentation, QWeights, Tableau, Word,
};
use crate::poly::Polynomial;

/// A handle on one of the algebras the kernels are expanded in.
#[derive(Clone, Debug)]
pub enum Handle {
    /// Free associative algebra on `u_1..u_{n-1}`.
    Free { n: usize },
    /// Plactic algebra `P_n`.
    Plactic { n: usize },
    /// q-deformed plactic algebra.
    QPlactic { n: usize, q: QWeights },
    /// Reduced plactic algebra `PC_n` (basis: the A_n tableau family).
    PC { n: usize },
    /// q-deformed reduced plactic algebra.
    QPC { n: usize, q: QWeights },
    /// `PC_n` with far commutations added.
    PCSharp { n: usize },
    /// Rectangular reduced plactic algebra: basis SSYT of shape inside
    /// `cols^rows` with entries `<= rows` (letters `1..=rows`).
    PF { cols: usize, rows: usize },
    /// NilCoxeter algebra (basis: permutations).
    NC { n: usize },
    /// IdCoxeter algebra with `u^2 = beta u`.
    IC { n: usize, beta: Polynomial },
    /// Nilplactic algebra.
    NP { n: usize },
    /// Idplactic algebra with `u^2 = beta u`.
    IP { n: usize, beta: Polynomial },
    /// Nil Temperley-Lieb.
    TL0 { n: usize },
    /// Temperley-Lieb-Hecke quotient of the local plactic algebra.
    TH { n: usize, beta: Polynomial },
    /// Idplactic Temperley-Lieb.
    PTL { n: usize, beta: Polynomial },
    /// Local plactic algebra.
    LP { n: usize },
}

impl Handle {
    /// Number of generators + 1: letters run over `1..=alphabet()-1`.
    pub fn alphabet(&self) -> usize {
        match self {
            Handle::Free { n }
            | Handle::Plactic { n }
            | Handle::QPlactic { n, .. }
            | Handle::PC { n }
            | Handle::QPC { n, .. }
            | Handle::PCSharp { n }
            | Handle::NC { n }
            | Handle::IC { n, .. }
            | Handle::NP { n }
            | Handle::IP { n, .. }
            | Handle::TL0 { n }
            | Handle::TH { n, .. }
            | Handle::PTL { n, .. }
            | Handle::LP { n } => *n,
            Handle::PF { rows, .. } => rows + 1,
        }
    }

    pub fn id(&self) -> String {
        match self {
            Handle::Free { .. } => "free".into(),
            Handle::Plactic { .. } => "P".into(),
            Handle::QPlactic { .. } => "QP".into(),
            Handle::PC { .. } => "PC".into(),
            Handle::QPC { .. } => "QPC".into(),
            Handle::PCSharp { .. } => "PCsharp".into(),
            Handle::PF { .. } => "PF".into(),
            Handle::NC { .. } => "NC".into(),
            Handle::IC { .. } => "IC".into(),
            Handle::NP { .. } => "NP".into(),
            Handle::IP { .. } => "IP".into(),
            Handle::TL0 { .. } => "TL0".into(),
            Handle::TH { .. } => "TH".into(),
            Handle::PTL { .. } => "PTL".into(),
            Handle::LP { .. } => "LP".into(),
        }
    }

    fn rewrite_preset(&self) -> Option<Presentation> {
        Some(match self {
            Handle::QPlactic { q, .. } | Handle::QPC { q, .. } => {
                Presentation::QPlactic(q.clone())
            }
            Handle::PCSharp { .. } => Presentation::PlacticPlusCommutations,
            Handle::IP { beta, .. } => Presentation::IdPlactic(beta.clone()),
            Handle::TL0 { .. } => Presentation::NilTemperleyLieb,
            Handle::TH { beta, .. } => Presentation::HeckeTemperleyLieb(beta.clone()),
            Handle::PTL { beta, .. } => Presentation::PlacticTemperleyLieb(beta.clone()),
            Handle::LP { .. } => Presentation::LocalPlactic,
            _ => return None,
        })
    }

    /// Ideal generators of the reduced plactic algebra: weakly increasing
    /// words of length n over the alphabet with letter `j` used at most `j`
    /// times.
    pub fn pc_ideal_generators(n: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut cur: Word = Vec::new();
        fn go(n: usize, min: u8, cur: &mut Word, out: &mut Vec<Word>) {
            if cur.len() == n {
                // multiplicity condition: letter j appears at most j times
                for j in 1..n as u8 {
                    if cur.iter().filter(|&&c| c == j).count() > j as usize {
                        return;
                    }
                }
                out.push(cur.clone());
                return;
            }
            for c in min..=(n - 1) as u8 {
                cur.push(c);
                go(n, c, cur, out);
                cur.pop();
            }
        }
        go(n, 1, &mut cur, &mut out);
        out
    }

    /// Normalize a word: canonical basis word and scalar, or `None` if it
    /// maps to zero in the algebra.
    pub fn normalize(&self, word: &[u8]) -> Option<(Word, Polynomial)> {
        let n = self.alphabet();
        match self {
            Handle::Free { .. } => Some((word.to_vec(), Polynomial::one())),
            Handle::Plactic { .. } => Some((rsk_normal_form(word), Polynomial::one())),
            Handle::PC { n } => {
                let t = Tableau::from_word_rsk(word);
                if tableau_in_a_family(&t, *n) {
                    Some((t.reading_word(), Polynomial::one()))
                } else {
                    None
                }
            }
            Handle::PF { cols, .. } => {
                let t = Tableau::from_word_rsk(word);
                if t.shape().first().map_or(0, |&l| l) as usize <= *cols {
                    Some((t.reading_word(), Polynomial::one()))
                } else {
                    None
                }
            }
            Handle::QPlactic { q, .. } | Handle::QPC { q, .. } => {
                let rules = Presentation::QPlactic(q.clone()).rules(n);
                let closure =
                    rewrite_closure(word, &rules, false, word.len(), 1_000_000).ok()?;
                // the unique tableau word in the class is the representative
                let mut found: Option<(Word, Polynomial)> = None;
                for (w, c) in &closure.class {
                    if rsk_normal_form(w) == *w {
                        assert!(found.is_none(), "two tableau words in one class");
                        found = Some((w.clone(), c.clone()));
                    }
                }
                let (rep, scalar) = found.expect("plactic-type class contains a tableau word");
                if let Handle::QPC { n, .. } = self {
                    if !tableau_in_a_family(&Tableau::from_word_rsk(&rep), *n) {
                        return None;
                    }
                }
                Some((rep, scalar))
            }
            Handle::PCSharp { n } => {
                let pres = pcsharp_presentation();
                let rules = pres.rules(*n);
                let closure =
                    rewrite_closure(word, &rules, false, word.len(), 1_000_000).ok()?;
                if closure.is_zero {
                    return None;
                }
                let gens = Handle::pc_ideal_generators(*n);
                for w in closure.class.keys() {
                    for g in &gens {
                        if contains_factor(w, g) {
                            return None;
                        }
                    }
                }
                closure.canonical
            }
            Handle::NC { n } => {
                let mut p = Permutation::identity(*n);
                for &i in word {
                    let next = p.mul_s_right(i as usize);
                    if next.length() != p.length() + 1 {
                        return None;
                    }
                    p = next;
                }
                Some((p.canonical_reduced_word(), Polynomial::one()))
            }
            Handle::IC { n, beta } => {
                let mut p = Permutation::identity(*n);
                let mut scalar = Polynomial::one();
                for &i in word {
                    let next = p.mul_s_right(i as usize);
                    if next.length() == p.length() + 1 {
                        p = next;
                    } else {
                        scalar = scalar.mul(beta);
                        if scalar.is_zero() {
                            return None;
                        }
                    }
                }
                Some((p.canonical_reduced_word(), scalar))
            }
            Handle::NP { .. } => eg_normal_form(word, n).map(|w| (w, Polynomial::one())),
            Handle::IP { .. } | Handle::TL0 { .. } | Handle::TH { .. } | Handle::PTL { .. }
            | Handle::LP { .. } => {
                let rules = self.rewrite_preset().unwrap().rules(n);
                reduce(word, &rules, word.len())
            }
        }
    }

    /// Graded basis: canonical words with their degrees.
    pub fn basis(&self) -> Result<Vec<(Word, usize)>, ForgeError> {
        match self {
            Handle::Free { .. } | Handle::Plactic { .. } | Handle::QPlactic { .. }
            | Handle::LP { .. } => Err(ForgeError::Domain(format!(
                "{} is infinite-dimensional; use a bounded enumeration",
                self.id()
            ))),
            Handle::PC { n } | Handle::QPC { n, .. } => {
                if *n > 7 {
                    return Err(ForgeError::Bound("PC bounded to n <= 7".into()));
                }
                Ok(a_family(*n)
                    .into_iter()
                    .map(|t| {
                        let w = t.reading_word();
                        let d = w.len();
                        (w, d)
                    })
                    .collect())
            }
            Handle::PF { cols, rows } => {
                if cols * rows > 36 {
                    return Err(ForgeError::Bound("PF bounded to cols*rows <= 36".into()));
                }
                let mut out = Vec::new();
                for shape in box_shapes(*cols as u32, *rows) {
                    for t in enumerate_tableaux(&shape, *rows as u8, &|_, _, _| true) {
                        let w = t.reading_word();
                        let d = w.len();
                        out.push((w, d));
                    }
                }
                Ok(out)
            }
            Handle::NC { n } | Handle::IC { n, .. } => {
                if *n > 7 {
                    return Err(ForgeError::Bound("NC/IC bounded to n <= 7".into()));
                }
                Ok(Permutation::all(*n)
                    .into_iter()
                    .map(|w| (w.canonical_reduced_word(), w.length()))
                    .collect())
            }
            Handle::NP { n } => Ok(nilplactic_family(*n)
                .into_iter()
                .map(|t| {
                    let w = t.reading_word();
                    let d = w.len();
                    (w, d)
                })
                .collect()),
            Handle::IP { n, .. } => Ok(idplactic_family(*n)
                .into_iter()
                .map(|t| {
                    // key by the canonical rewriting representative
                    let w = t.reading_word();
                    let d = w.len();
                    let (rep, _) = self.normalize(&w).expect("basis word is nonzero");
                    debug_assert_eq!(rep.len(), d);
                    (rep, d)
                })
                .collect()),
            Handle::PCSharp { .. } | Handle::TL0 { .. } | Handle::PTL { .. } => {
                let top = self.alphabet();
                self.enumerate_by_extension(top * top) // degree cap [n^2/4] < n^2
            }
            Handle::TH { .. } => Err(ForgeError::Domain(
                "TH(beta) is not graded; enumerate at beta = 0 instead".into(),
            )),
        }
    }

    /// Degree-by-degree enumeration of canonical words (graded handles with
    /// length-preserving or killing rules only).
    fn enumerate_by_extension(&self, max_deg: usize) -> Result<Vec<(Word, usize)>, ForgeError> {
        let top = (self.alphabet() - 1) as u8;
        let mut out: Vec<(Word, usize)> = vec![(Vec::new(), 0)];
        let mut level: BTreeSet<Word> = BTreeSet::from([Vec::new()]);
        for d in 0..max_deg {
            let mut next: BTreeSet<Word> = BTreeSet::new();
            for w in &level {
                for c in 1..=top {
                    let mut ext = w.clone();
                    ext.push(c);
                    if let Some((rep, _)) = self.normalize(&ext) {
                        if rep.len() == d + 1 {
                            next.insert(rep);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            for w in &next {
                out.push((w.clone(), d + 1));
            }
            level = next;
        }
        Ok(out)
    }

    pub fn dimension(&self) -> Result<usize, ForgeError> {
        Ok(self.basis()?.len())
    }

    /// Graded dimension vector.
    pub fn hilbert(&self) -> Result<Vec<usize>, ForgeError> {
        let basis = self.basis()?;
        let top = basis.iter().map(|(_, d)| *d).max().unwrap_or(0);
        let mut out = vec![0usize; top + 1];
        for (_, d) in basis {
            out[d] += 1;
        }
        Ok(out)
    }
}

/// PC-sharp presentation: Knuth relations plus far commutations.
fn pcsharp_presentation() -> Presentation {
    Presentation::PlacticPlusCommutations
}

fn contains_factor(w: &[u8], g: &[u8]) -> bool {
    if g.len() > w.len() {
        return false;
    }
    (0..=w.len() - g.len()).any(|s| &w[s..s + g.len()] == g)
}

/// Membership in the `A_n` family.
pub fn tableau_in_a_family(t: &Tableau, n: usize) -> bool {
    if t.max_entry() as usize >= n {
        return false;
    }
    let shape = t.shape();
    for (i, &l) in shape.iter().enumerate() {
        if l as usize > n - 1 - i {
            return false;
        }
    }
    for (r, row) in t.rows.iter().enumerate() {
        let _ = r;
        for (c, &e) in row.iter().enumerate() {
            if (e as usize) < c + 1 {
                return false;
            }
        }
    }
    true
}

/// Row-and-column-strict staircase tableaux whose reading word is reduced
/// (the nilplactic basis family).
pub fn nilplactic_family(n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for shape in staircase_shapes(n) {
        for t in enumerate_tableaux(&shape, (n - 1) as u8, &|_, _, _| true) {
            if t.is_row_strict() && crate::perm::word_is_reduced(&t.reading_word(), n) {
                out.push(t);
            }
        }
    }
    out
}

/// Row-and-column-strict staircase tableaux whose reading word has full
/// idplactic reduced length (the idplactic basis family).
pub fn idplactic_family(n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for shape in staircase_shapes(n) {
        for t in enumerate_tableaux(&shape, (n - 1) as u8, &|_, _, _| true) {
            if !t.is_row_strict() {
                continue;
            }
            let w = t.reading_word();
            if idplactic_rl(&w, n) == w.len() {
                out.push(t);
            }
        }
    }
    out
}

/// A finitely supported element of a quotient algebra.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    pub terms: BTreeMap<Word, Polynomial>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn unit() -> Element {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), Polynomial::one());
        Element { terms }
    }

    pub fn from_word(handle: &Handle, word: &[u8]) -> Element {
        let mut out = Element::zero();
        if let Some((rep, scalar)) = handle.normalize(word) {
            out.add_term(rep, scalar);
        }
        out
    }

    pub fn add_term(&mut self, word: Word, coeff: Polynomial) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word.clone()).or_insert_with(Polynomial::zero);
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, f: &Polynomial) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(f));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Element, handle: &Handle) -> Element {
        let mut out = Element::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut cat = wa.clone();
                cat.extend_from_slice(wb);
                if let Some((rep, scalar)) = handle.normalize(&cat) {
                    out.add_term(rep, ca.mul(cb).mul(&scalar));
                }
            }
        }
        out
    }

    /// Multiply on the right by `(1 + p * u_j)`.
    pub fn mul_binomial(&self, p: &Polynomial, j: u8, handle: &Handle) -> Element {
        let mut out = self.clone();
        for (w, c) in &self.terms {
            let mut ext = w.clone();
            ext.push(j);
            if let Some((rep, scalar)) = handle.normalize(&ext) {
                out.add_term(rep, c.mul(p).mul(&scalar));
            }
        }
        out
    }

    pub fn coefficient(&self, word: &[u8]) -> Polynomial {
        self.terms.get(word).cloned().unwrap_or_else(Polynomial::zero)
    }
}

/// Noncommutative elementary polynomial `e_k` on letters `1..=n-1`
/// (strictly decreasing products), as an element of the handle.
pub fn elementary(handle: &Handle, k: usize) -> Element {
    let top = (handle.alphabet() - 1) as u8;
    let mut out = Element::zero();
    let mut letters: Vec<u8> = Vec::new();
    fn go(top: u8, k: usize, start: u8, letters: &mut Vec<u8>, handle: &Handle, out: &mut Element) {
        if letters.len() == k {
            if let Some((rep, scalar)) = handle.normalize(letters) {
                out.add_term(rep, scalar);
            }
            return;
        }
        let mut c = start;
        while c >= 1 {
            letters.push(c);
            go(top, k, c - 1, letters, handle, out);
            letters.pop();
            if c == 1 {
                break;
            }
            c -= 1;
        }
    }
    go(top, k, top, &mut letters, handle, &mut out);
    out
}

/// Report on `[e_i, e_j]` (or the anticommutator) in a handle.
pub fn elementary_commutators(
    handle: &Handle,
    anticommutator: bool,
) -> Vec<((usize, usize), bool)> {
    let top = handle.alphabet() - 1;
    let es: Vec<Element> = (1..=top).map(|k| elementary(handle, k)).collect();
    let mut out = Vec::new();
    for i in 0..top {
        for j in i + 1..top {
            let ab = es[i].mul(&es[j], handle);
            let ba = es[j].mul(&es[i], handle);
            let res = if anticommutator { ab.add(&ba) } else { ab.sub(&ba) };
            out.push(((i + 1, j + 1), res.is_zero()));
        }
    }
    out
}

/// Count the QPC basis under a q-assignment; returns the graded counts and
/// whether any rewriting inconsistency (non-flatness) was observed.
pub fn flatness_probe(n: usize, q: QWeights) -> Result<(Vec<usize>, bool), ForgeError> {
    if n > 5 {
        return Err(ForgeError::Bound("flatness probe bounded to n <= 5".into()));
    }
    let handle = Handle::QPC { n, q: q.clone() };
    let rules = Presentation::QPlactic(q).rules(n);
    let mut counts = vec![1usize];
    let mut level: BTreeSet<Word> = BTreeSet::from([Vec::new()]);
    let mut inconsistent = false;
    for d in 0..(n * (n - 1)) / 2 {
        let mut next: BTreeSet<Word> = BTreeSet::new();
        for w in &level {
            for c in 1..n as u8 {
                let mut ext = w.clone();
                ext.push(c);
                let closure = rewrite_closure(&ext, &rules, false, ext.len(), 1_000_000)?;
                if closure.inconsistent.is_some() {
                    inconsistent = true;
                }
                if let Some((rep, _)) = handle.normalize(&ext) {
                    debug_assert_eq!(rep.len(), d + 1);
                    next.insert(rep);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        counts.push(next.len());
        level = next;
    }
    Ok((counts, inconsistent))
}

/// Hilbert series of the free plactic algebra `P_n` up to `max_deg`,
/// counted by tableau enumeration.
pub fn plactic_hilbert(n: usize, max_deg: usize) -> Vec<u64> {
    let mut out = vec![0u64; max_deg + 1];
    out[0] = 1;
    // iterate over partitions of each size with at most n-1 rows
    fn partitions(d: usize, max_part: usize, rows: usize) -> Vec<Vec<u32>> {
        if d == 0 {
            return vec![vec![]];
        }
        if rows == 0 {
            return vec![];
        }
        let mut res = Vec::new();
        for first in (1..=d.min(max_part)).rev() {
            for mut rest in partitions(d - first, first, rows - 1) {
                let mut shape = vec![first as u32];
                shape.append(&mut rest);
                res.push(shape);
            }
        }
        res
    }
    for d in 1..=max_deg {
        let mut count = 0u64;
        for shape in partitions(d, d, n - 1) {
            count += enumerate_tableaux(&shape, (n - 1) as u8, &|_, _, _| true).len() as u64;
        }
        out[d] = count;
    }
    out
}

/// Map each basis tableau of the `A_n` family to its kernel word, verifying
/// that ideal generators normalize out of the family (cross-check of the
/// direct basis against the ideal-theoretic description).
pub fn pc_ideal_cross_check(n: usize) -> bool {
    let gens = Handle::pc_ideal_generators(n);
    gens.iter().all(|g| {
        let t = Tableau::from_word_rsk(g);
        !tableau_in_a_family(&t, n)
    })
}

/// Bounded enumeration of canonical words of an infinite-dimensional handle.
pub fn bounded_canonical_words(
    handle: &Handle,
    max_deg: usize,
) -> Result<Vec<(Word, usize)>, ForgeError> {
    let top = (handle.alphabet() - 1) as u8;
    let mut out: Vec<(Word, usize)> = vec![(Vec::new(), 0)];
    let mut level: BTreeSet<Word> = BTreeSet::from([Vec::new()]);
    for d in 0..max_deg {
        let mut next: BTreeSet<Word> = BTreeSet::new();
        for w in &level {
            for c in 1..=top {
                let mut ext = w.clone();
                ext.push(c);
                if let Some((rep, _)) = handle.normalize(&ext) {
                    if rep.len() == d + 1 {
                        next.insert(rep);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        for w in &next {
            out.push((w.clone(), d + 1));
        }
        level = next;
    }
    Ok(out)
}

/// Graded counts from a word list.
pub fn grade_counts(words: &[(Word, usize)]) -> Vec<usize> {
    let top = words.iter().map(|(_, d)| *d).max().unwrap_or(0);
    let mut out = vec![0usize; top + 1];
    for (_, d) in words {
        out[*d] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nc_ic_dimensions() {
        assert_eq!(Handle::NC { n: 4 }.dimension().unwrap(), 24);
        let ic = Handle::IC {
            n: 4,
            beta: Polynomial::param("beta"),
        };
        assert_eq!(ic.dimension().unwrap(), 24);
    }

    #[test]
    fn ic_square_rule() {
        let beta = Polynomial::param("beta");
        let ic = Handle::IC { n: 3, beta: beta.clone() };
        let u1 = Element::from_word(&ic, &[1]);
        let sq = u1.mul(&u1, &ic);
        assert_eq!(sq.coefficient(&[1]), beta);
        let nc = Handle::NC { n: 3 };
        let v1 = Element::from_word(&nc, &[1]);
        assert!(v1.mul(&v1, &nc).is_zero());
    }

    #[test]
    fn pc_dimensions_and_hilbert() {
        assert_eq!(Handle::PC { n: 4 }.dimension().unwrap(), 42);
        assert_eq!(
            Handle::PC { n: 4 }.hilbert().unwrap(),
            vec![1, 3, 8, 12, 11, 6, 1]
        );
        assert_eq!(Handle::PC { n: 3 }.hilbert().unwrap(), vec![1, 2, 3, 1]);
        assert!(pc_ideal_cross_check(3));
        assert!(pc_ideal_cross_check(4));
    }

    #[test]
    fn pf_hilbert_2_3() {
        let pf = Handle::PF { cols: 2, rows: 3 };
        assert_eq!(pf.hilbert().unwrap(), vec![1, 3, 9, 9, 9, 3, 1]);
        assert_eq!(pf.dimension().unwrap(), 35);
    }

    #[test]
    fn np_and_ip_data() {
        assert_eq!(Handle::NP { n: 3 }.hilbert().unwrap(), vec![1, 2, 2, 1]);
        assert_eq!(
            Handle::NP { n: 4 }.hilbert().unwrap(),
            vec![1, 3, 6, 6, 5, 3, 1]
        );
        let beta = Polynomial::param("beta");
        assert_eq!(
            Handle::IP { n: 4, beta }.hilbert().unwrap(),
            vec![1, 3, 6, 7, 5, 3, 1]
        );
    }

    #[test]
    fn tl0_hilbert() {
        assert_eq!(Handle::TL0 { n: 4 }.hilbert().unwrap(), vec![1, 3, 5, 4, 1]);
    }

    #[test]
    fn elementary_commute_in_plactic() {
        let p = Handle::Plactic { n: 4 };
        for ((_, _), ok) in elementary_commutators(&p, false) {
            assert!(ok);
        }
        // and anticommute in the odd preset OPL_3 (two letters)
        let opl = Handle::QPlactic {
            n: 3,
            q: QWeights::Constant(-1),
        };
        let e1 = elementary(&opl, 1);
        let e2 = elementary(&opl, 2);
        let anti = e1.mul(&e2, &opl).add(&e2.mul(&e1, &opl));
        assert!(anti.is_zero());
        // free algebra: e1 and e2 do not commute
        let free = Handle::Free { n: 4 };
        let f1 = elementary(&free, 1);
        let f2 = elementary(&free, 2);
        assert!(!f1.mul(&f2, &free).sub(&f2.mul(&f1, &free)).is_zero());
    }
}
