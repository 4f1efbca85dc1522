//! Word combinatorics: Knuth (RSK) and Edelman-Greene insertion, tableaux,
//! a weighted rewriting engine over algebra presentations, compatible
//! sequences and bottom codes.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::ForgeError;
use crate::perm::{word_is_reduced, Composition};
use crate::poly::Polynomial;

pub type Word = Vec<u8>;

/// Render a word as a digit string (letters must stay below 10).
pub fn word_string(w: &[u8]) -> String {
    w.iter().map(|c| char::from(b'0' + c)).collect()
}

pub fn parse_word(s: &str) -> Result<Word, ForgeError> {
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        return s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|_| ForgeError::Parse(format!("bad word `{}`", s)))
            })
            .collect();
    }
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .filter(|&d| d >= 1)
                .map(|d| d as u8)
                .ok_or_else(|| ForgeError::Parse(format!("bad word `{}`", s)))
        })
        .collect()
}

/// A semistandard Young tableau stored by rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Tableau {
    pub rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn empty() -> Tableau {
        Tableau { rows: Vec::new() }
    }

    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn max_entry(&self) -> u8 {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Multiplicity vector of entries `1..=bound`.
    pub fn content(&self, bound: usize) -> Vec<u32> {
        let mut out = vec![0u32; bound];
        for r in &self.rows {
            for &e in r {
                out[e as usize - 1] += 1;
            }
        }
        out
    }

    /// Rows weakly increasing, columns strictly increasing, shape a partition.
    pub fn is_ssyt(&self) -> bool {
        for i in 0..self.rows.len() {
            if self.rows[i].windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i + 1 < self.rows.len() {
                if self.rows[i + 1].len() > self.rows[i].len() {
                    return false;
                }
                for j in 0..self.rows[i + 1].len() {
                    if self.rows[i + 1][j] <= self.rows[i][j] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Rows and columns both strictly increasing.
    pub fn is_row_strict(&self) -> bool {
        self.is_ssyt() && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// Column reading word: columns bottom to top, left to right.
    pub fn reading_word(&self) -> Word {
        let mut out = Vec::with_capacity(self.size());
        let ncols = self.rows.first().map_or(0, |r| r.len());
        for c in 0..ncols {
            for r in (0..self.rows.len()).rev() {
                if c < self.rows[r].len() {
                    out.push(self.rows[r][c]);
                }
            }
        }
        out
    }

    /// RSK row insertion of a single letter.
    pub fn rsk_insert(&mut self, letter: u8) {
        let mut x = letter;
        let mut row = 0;
        loop {
            if row == self.rows.len() {
                self.rows.push(vec![x]);
                return;
            }
            match self.rows[row].iter().position(|&e| e > x) {
                None => {
                    self.rows[row].push(x);
                    return;
                }
                Some(pos) => {
                    let bumped = self.rows[row][pos];
                    self.rows[row][pos] = x;
                    x = bumped;
                    row += 1;
                }
            }
        }
    }

    pub fn from_word_rsk(word: &[u8]) -> Tableau {
        let mut t = Tableau::empty();
        for &c in word {
            t.rsk_insert(c);
        }
        t
    }

    /// Edelman-Greene insertion of a single letter.
    pub fn eg_insert(&mut self, letter: u8) {
        let mut x = letter;
        let mut row = 0;
        loop {
            if row == self.rows.len() {
                self.rows.push(vec![x]);
                return;
            }
            match self.rows[row].iter().position(|&e| e > x) {
                None => {
                    self.rows[row].push(x);
                    return;
                }
                Some(pos) => {
                    let bumped = self.rows[row][pos];
                    if bumped == x + 1 && pos > 0 && self.rows[row][pos - 1] == x {
                        // special EG case: leave the row untouched, carry x+1
                        x = bumped;
                    } else {
                        self.rows[row][pos] = x;
                        x = bumped;
                    }
                    row += 1;
                }
            }
        }
    }

    pub fn from_word_eg(word: &[u8]) -> Tableau {
        let mut t = Tableau::empty();
        for &c in word {
            t.eg_insert(c);
        }
        t
    }
}

/// Knuth normal form: the column reading word of the RSK insertion tableau.
pub fn rsk_normal_form(word: &[u8]) -> Word {
    Tableau::from_word_rsk(word).reading_word()
}

/// Edelman-Greene normal form; `None` when the word is not reduced (the
/// nilCoxeter/nilplactic product vanishes).
pub fn eg_normal_form(word: &[u8], n: usize) -> Option<Word> {
    if !word_is_reduced(word, n) {
        return None;
    }
    Some(Tableau::from_word_eg(word).reading_word())
}

/// Rewriting presets mirroring the paper's algebra presentations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Presentation {
    /// Plactic (Knuth) relations.
    Plactic,
    /// q-deformed Knuth relations with weights `q_{ik}`.
    QPlactic(QWeights),
    /// Odd plactic: q-deformed with all weights -1.
    OddPlactic,
    /// Local plactic.
    LocalPlactic,
    /// Nil Temperley-Lieb: local plactic with squares killed.
    NilTemperleyLieb,
    /// Hecke Temperley-Lieb: local plactic with `u^2 = beta u`.
    HeckeTemperleyLieb(Polynomial),
    /// Modified plactic.
    ModifiedPlactic,
    /// Nilplactic.
    NilPlactic,
    /// Idplactic with `u^2 = beta u`.
    IdPlactic(Polynomial),
    /// NilCoxeter.
    NilCoxeter,
    /// IdCoxeter with `u^2 = beta u`.
    IdCoxeter(Polynomial),
    /// Idplactic Temperley-Lieb quotient.
    PlacticTemperleyLieb(Polynomial),
    /// Knuth relations plus far commutations (used by the PC-sharp quotient).
    PlacticPlusCommutations,
    /// Free algebra: no relations.
    Free,
}

/// Assignment of the deformation parameters `q_{ik}`, `i < k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QWeights {
    /// Keep `q_{ik}` formal.
    Formal,
    /// `q_{ik} = q_k` numeric values, indexed by `k`.
    ByUpper(Vec<i64>),
    /// All equal to the given integer.
    Constant(i64),
}

impl QWeights {
    fn weight(&self, i: u8, k: u8) -> Polynomial {
        match self {
            QWeights::Formal => Polynomial::var(crate::poly::Var::q(i as usize, k as usize)),
            QWeights::ByUpper(vals) => {
                Polynomial::constant(vals.get(k as usize - 2).copied().unwrap_or(1))
            }
            QWeights::Constant(c) => Polynomial::constant(*c),
        }
    }
}

/// One directed rewriting rule: `u_{lhs} = factor * u_{rhs}`
/// (or `u_{lhs} = 0` when factor is `None`).
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
    pub factor: Option<Polynomial>,
}

impl Presentation {
    /// Name used by the CLI.
    pub fn id(&self) -> &'static str {
        match self {
            Presentation::Plactic => "P",
            Presentation::QPlactic(_) => "QP",
            Presentation::OddPlactic => "OPL",
            Presentation::LocalPlactic => "LP",
            Presentation::NilTemperleyLieb => "TL0",
            Presentation::HeckeTemperleyLieb(_) => "TH",
            Presentation::ModifiedPlactic => "MP",
            Presentation::NilPlactic => "NP",
            Presentation::IdPlactic(_) => "IP",
            Presentation::NilCoxeter => "NC",
            Presentation::IdCoxeter(_) => "IC",
            Presentation::PlacticTemperleyLieb(_) => "PTL",
            Presentation::PlacticPlusCommutations => "Psharp",
            Presentation::Free => "free",
        }
    }

    /// Expand the preset into directed rules over the alphabet `1..n-1`.
    /// Each invertible relation is emitted in both directions.
    pub fn rules(&self, n: usize) -> Vec<Rule> {
        let top = (n - 1) as u8;
        let mut out: Vec<Rule> = Vec::new();
        match self {
            Presentation::Free => {}
            Presentation::Plactic => {
                push_pl1(&mut out, top);
                for i in 1..=top {
                    for j in i + 1..=top {
                        push_eq(&mut out, vec![i, j, i], vec![j, i, i]);
                        push_eq(&mut out, vec![j, i, j], vec![j, j, i]);
                    }
                }
            }
            Presentation::PlacticPlusCommutations => {
                out = Presentation::Plactic.rules(n);
                push_far_commutations(&mut out, top);
            }
            Presentation::QPlactic(_) | Presentation::OddPlactic => {
                let q = match self {
                    Presentation::OddPlactic => QWeights::Constant(-1),
                    Presentation::QPlactic(q) => q.clone(),
                    _ => unreachable!(),
                };
                // q_{ik} u_j u_i u_k = u_j u_k u_i  (i < j <= k)
                // q_{ik} u_i u_k u_j = u_k u_i u_j  (i <= j < k)
                for i in 1..=top {
                    for k in i + 1..=top {
                        let w = q.weight(i, k);
                        let winv = w
                            .term_inverse()
                            .expect("q weights are invertible terms");
                        for j in (i + 1)..=k {
                            push_weighted(&mut out, vec![j, i, k], vec![j, k, i], &winv, &w);
                        }
                        for j in i..k {
                            push_weighted(&mut out, vec![i, k, j], vec![k, i, j], &winv, &w);
                        }
                    }
                }
            }
            Presentation::LocalPlactic => {
                push_far_commutations(&mut out, top);
                for a in 1..top {
                    let b = a + 1;
                    push_eq(&mut out, vec![a, b, a], vec![b, a, a]);
                    push_eq(&mut out, vec![b, a, b], vec![b, b, a]);
                }
            }
            Presentation::NilTemperleyLieb => {
                out = Presentation::LocalPlactic.rules(n);
                push_square_zero(&mut out, top);
            }
            Presentation::HeckeTemperleyLieb(beta) => {
                out = Presentation::LocalPlactic.rules(n);
                push_square_beta(&mut out, top, beta);
            }
            Presentation::ModifiedPlactic => {
                push_pl1(&mut out, top);
                for i in 1..=top {
                    for j in i + 1..=top {
                        push_eq(&mut out, vec![j, j, i], vec![j, i, i]);
                        push_eq(&mut out, vec![i, j, i], vec![j, i, j]);
                    }
                }
            }
            Presentation::NilPlactic => {
                push_pl1(&mut out, top);
                for i in 1..top {
                    push_eq(&mut out, vec![i, i + 1, i], vec![i + 1, i, i + 1]);
                }
                for i in 1..=top {
                    for j in i + 2..=top {
                        push_eq(&mut out, vec![i, j, i], vec![j, i, j]);
                    }
                }
                push_square_zero(&mut out, top);
            }
            Presentation::IdPlactic(beta) => {
                push_pl1(&mut out, top);
                for i in 1..=top {
                    for j in i + 1..=top {
                        push_eq(&mut out, vec![i, j, i], vec![j, i, j]);
                    }
                }
                push_square_beta(&mut out, top, beta);
            }
            Presentation::PlacticTemperleyLieb(beta) => {
                out = Presentation::IdPlactic(beta.clone()).rules(n);
                for i in 1..=top {
                    for j in 1..=top {
                        if i != j {
                            out.push(Rule {
                                lhs: vec![i, j, i],
                                rhs: vec![i],
                                factor: None,
                            });
                        }
                    }
                }
            }
            Presentation::NilCoxeter => {
                for i in 1..top {
                    push_eq(&mut out, vec![i, i + 1, i], vec![i + 1, i, i + 1]);
                }
                push_far_commutations(&mut out, top);
                push_square_zero(&mut out, top);
            }
            Presentation::IdCoxeter(beta) => {
                for i in 1..=top {
                    for j in i + 1..=top {
                        if j - i >= 2 {
                            push_eq(&mut out, vec![i, j], vec![j, i]);
                        }
                        push_eq(&mut out, vec![i, j, i], vec![j, i, j]);
                    }
                }
                push_square_beta(&mut out, top, beta);
            }
        }
        out
    }
}

fn push_eq(out: &mut Vec<Rule>, lhs: Word, rhs: Word) {
    out.push(Rule {
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        factor: Some(Polynomial::one()),
    });
    out.push(Rule {
        lhs: rhs,
        rhs: lhs,
        factor: Some(Polynomial::one()),
    });
}

fn push_weighted(out: &mut Vec<Rule>, lhs: Word, rhs: Word, fwd: &Polynomial, back: &Polynomial) {
    out.push(Rule {
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        factor: Some(fwd.clone()),
    });
    out.push(Rule {
        lhs: rhs,
        rhs: lhs,
        factor: Some(back.clone()),
    });
}

fn push_pl1(out: &mut Vec<Rule>, top: u8) {
    for i in 1..=top {
        for j in i + 1..=top {
            for k in j + 1..=top {
                push_eq(out, vec![j, i, k], vec![j, k, i]);
                push_eq(out, vec![i, k, j], vec![k, i, j]);
            }
        }
    }
}

fn push_far_commutations(out: &mut Vec<Rule>, top: u8) {
    for i in 1..=top {
        for j in i + 2..=top {
            push_eq(out, vec![i, j], vec![j, i]);
        }
    }
}

fn push_square_zero(out: &mut Vec<Rule>, top: u8) {
    for i in 1..=top {
        out.push(Rule {
            lhs: vec![i, i],
            rhs: vec![i],
            factor: None,
        });
    }
}

fn push_square_beta(out: &mut Vec<Rule>, top: u8, beta: &Polynomial) {
    for i in 1..=top {
        out.push(Rule {
            lhs: vec![i, i],
            rhs: vec![i],
            factor: Some(beta.clone()),
        });
        // growth direction, used when enumerating idplactic classes
        if let Some(inv) = beta.term_inverse() {
            out.push(Rule {
                lhs: vec![i],
                rhs: vec![i, i],
                factor: Some(inv),
            });
        }
    }
}

/// Result of rewriting: a normal form with its scalar, or zero, plus the
/// visited class and any weight inconsistency.
#[derive(Clone, Debug)]
pub struct RewriteOutcome {
    /// `u_w = scalar * u_canonical` (None when the element is zero).
    pub canonical: Option<(Word, Polynomial)>,
    /// All non-zero words reached, with their scalars relative to the input.
    pub class: BTreeMap<Word, Polynomial>,
    /// Set when a word was reached along two paths with different weights.
    pub inconsistent: Option<(Word, Polynomial, Polynomial)>,
    pub is_zero: bool,
}

const DEFAULT_CLASS_BOUND: usize = 1_000_000;

/// Breadth-first closure of a word under a rule set.
///
/// `grow` controls whether length-increasing moves are followed (needed for
/// idplactic classes); `max_len` bounds the explored words either way.
pub fn rewrite_closure(
    word: &[u8],
    rules: &[Rule],
    grow: bool,
    max_len: usize,
    max_class: usize,
) -> Result<RewriteOutcome, ForgeError> {
    let mut class: BTreeMap<Word, Polynomial> = BTreeMap::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    let mut inconsistent = None;
    let mut is_zero = false;
    class.insert(word.to_vec(), Polynomial::one());
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        let weight = class.get(&w).cloned().unwrap();
        for rule in rules {
            if rule.lhs.len() > w.len() {
                continue;
            }
            if !grow && rule.rhs.len() > rule.lhs.len() {
                continue;
            }
            for start in 0..=(w.len() - rule.lhs.len()) {
                if w[start..start + rule.lhs.len()] != rule.lhs[..] {
                    continue;
                }
                match &rule.factor {
                    None => {
                        is_zero = true;
                    }
                    Some(f) => {
                        let mut nw = Vec::with_capacity(w.len() - rule.lhs.len() + rule.rhs.len());
                        nw.extend_from_slice(&w[..start]);
                        nw.extend_from_slice(&rule.rhs);
                        nw.extend_from_slice(&w[start + rule.lhs.len()..]);
                        if nw.len() > max_len {
                            continue;
                        }
                        let nweight = weight.mul(f);
                        match class.get(&nw) {
                            Some(existing) => {
                                if *existing != nweight && inconsistent.is_none() {
                                    inconsistent =
                                        Some((nw.clone(), existing.clone(), nweight.clone()));
                                }
                            }
                            None => {
                                if class.len() >= max_class {
                                    return Err(ForgeError::Bound(format!(
                                        "rewriting class of {} exceeds {} words",
                                        word_string(word),
                                        max_class
                                    )));
                                }
                                class.insert(nw.clone(), nweight);
                                queue.push_back(nw);
                            }
                        }
                    }
                }
            }
        }
    }
    // invariant maintained by the search: u_input = class[v] * u_v
    let canonical = if is_zero {
        None
    } else {
        class
            .iter()
            .min_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then(a.cmp(b)))
            .map(|(w, c)| (w.clone(), c.clone()))
    };
    Ok(RewriteOutcome {
        canonical,
        class,
        inconsistent,
        is_zero,
    })
}

/// Canonical representative (shortest, then lex-smallest) with its scalar:
/// `u_word = scalar * u_rep`, or `None` when the word is zero in the algebra.
pub fn reduce(word: &[u8], rules: &[Rule], max_len: usize) -> Option<(Word, Polynomial)> {
    let out = rewrite_closure(word, rules, false, max_len.max(word.len()), DEFAULT_CLASS_BOUND)
        .expect("class bound");
    if out.is_zero {
        None
    } else {
        out.canonical
    }
}

/// The full same-length Knuth class of a word (plactic preset shortcut).
pub fn knuth_class(word: &[u8], n: usize) -> BTreeSet<Word> {
    let rules = Presentation::Plactic.rules(n);
    rewrite_closure(word, &rules, false, word.len(), DEFAULT_CLASS_BOUND)
        .expect("bounded")
        .class
        .into_keys()
        .collect()
}

/// Compatible sequences for a fixed word `a`: weakly increasing `b` with
/// `b_i <= a_i`, strictly increasing across weak ascents of `a`.
pub fn compatible_for_word(a: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = Vec::with_capacity(a.len());
    fn go(a: &[u8], i: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i == a.len() {
            out.push(cur.clone());
            return;
        }
        let lo = if i == 0 {
            1
        } else if a[i - 1] <= a[i] {
            cur[i - 1] + 1
        } else {
            cur[i - 1]
        };
        for b in lo..=a[i] {
            cur.push(b);
            go(a, i + 1, cur, out);
            cur.pop();
        }
    }
    if a.is_empty() {
        return vec![Vec::new()];
    }
    go(a, 0, &mut cur, &mut out);
    out
}

/// The compatible-pair set `C(T)` of a tableau: all `(a, b)` with `a` in the
/// plactic class of the reading word.
pub fn compatible_set(t: &Tableau, n: usize) -> Vec<(Word, Vec<u8>)> {
    let mut out = Vec::new();
    for a in knuth_class(&t.reading_word(), n) {
        for b in compatible_for_word(&a) {
            out.push((a.clone(), b));
        }
    }
    out
}

/// The idplactic compatible-pair set `IC(T)` bounded by word length `max_len`.
pub fn idcompatible_set(t: &Tableau, n: usize, max_len: usize) -> Vec<(Word, Vec<u8>)> {
    let rules = Presentation::IdPlactic(Polynomial::one()).rules(n);
    let closure = rewrite_closure(
        &t.reading_word(),
        &rules,
        true,
        max_len,
        DEFAULT_CLASS_BOUND,
    )
    .expect("bounded idplactic closure");
    let mut out = Vec::new();
    for a in closure.class.keys() {
        for b in compatible_for_word(a) {
            out.push((a.clone(), b));
        }
    }
    out
}

/// Bottom code: the lexicographically smallest content vector among the
/// monomials `x_{b_1} ... x_{b_m}`, `b` compatible for the class of `T`.
pub fn bottom_code(t: &Tableau, n: usize) -> Composition {
    let mut best: Option<Vec<u32>> = None;
    for (_, b) in compatible_set(t, n) {
        let mut content = vec![0u32; n.saturating_sub(1).max(1)];
        for &v in &b {
            content[v as usize - 1] += 1;
        }
        if best.as_ref().map_or(true, |cur| content < *cur) {
            best = Some(content);
        }
    }
    Composition::new(best.unwrap_or_default())
}

/// Idplactic reduced length `rl(w)`: length of the canonical representative.
pub fn idplactic_rl(word: &[u8], n: usize) -> usize {
    let rules = Presentation::IdPlactic(Polynomial::one()).rules(n);
    reduce(word, &rules, word.len())
        .map(|(w, _)| w.len())
        .expect("idplactic elements are nonzero")
}

/// Enumerate all SSYT of the given shape with entries in `1..=bound`
/// satisfying an extra per-cell predicate `ok(row, col, entry)`.
pub fn enumerate_tableaux(
    shape: &[u32],
    bound: u8,
    ok: &dyn Fn(usize, usize, u8) -> bool,
) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    fn go(
        shape: &[u32],
        bound: u8,
        ok: &dyn Fn(usize, usize, u8) -> bool,
        rows: &mut Vec<Vec<u8>>,
        r: usize,
        c: usize,
        out: &mut Vec<Tableau>,
    ) {
        if r == shape.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] as usize {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let mut lo = 1u8;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]); // weakly increasing along rows
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1); // strictly increasing down columns
        }
        for e in lo..=bound {
            if !ok(r, c, e) {
                continue;
            }
            rows[r][c] = e;
            go(shape, bound, ok, rows, nr, nc, out);
        }
        rows[r][c] = 0;
    }
    if shape.is_empty() || shape[0] == 0 {
        out.push(Tableau::empty());
        return out;
    }
    go(shape, bound, ok, &mut rows, 0, 0, &mut out);
    out
}

/// All partitions fitting in the staircase `delta_n` (lambda_i <= n - i).
pub fn staircase_shapes(n: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    fn go(n: usize, row: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let cap = ((n - 1).saturating_sub(row)) as u32;
        let hi = max.min(cap);
        for v in 1..=hi {
            cur.push(v);
            out.push(cur.clone());
            go(n, row + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut cur = Vec::new();
    go(n, 0, u32::MAX, &mut cur, &mut out);
    out
}

/// Partitions fitting in a `cols x rows` box.
pub fn box_shapes(cols: u32, rows: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    fn go(cols: u32, rows: usize, row: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if row == rows {
            return;
        }
        for v in 1..=max {
            cur.push(v);
            out.push(cur.clone());
            go(cols, rows, row + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut cur = Vec::new();
    go(cols, rows, 0, cols, &mut cur, &mut out);
    out
}

/// The `A_n` tableau family: shapes inside `delta_n`, entries `<= n-1`,
/// every entry `k` within the first `k` columns (`T(i,j) >= j`).
pub fn a_family(n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for shape in staircase_shapes(n) {
        out.extend(enumerate_tableaux(&shape, (n - 1) as u8, &|_, c, e| {
            e as usize >= c + 1
        }));
    }
    out
}

/// Hash-keyed lookup of the `A_n` family by reading word.
pub fn a_family_words(n: usize) -> HashMap<Word, Tableau> {
    a_family(n)
        .into_iter()
        .map(|t| (t.reading_word(), t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reading_word_example() {
        let t = Tableau {
            rows: vec![vec![1, 2, 3, 3], vec![2, 3, 4], vec![3, 4], vec![5]],
        };
        assert!(t.is_ssyt());
        assert_eq!(word_string(&t.reading_word()), "5321432433");
        // tableau words are RSK-stable
        assert_eq!(rsk_normal_form(&t.reading_word()), t.reading_word());
    }

    #[test]
    fn rsk_small() {
        assert_eq!(rsk_normal_form(&[2, 3, 1]), vec![2, 1, 3]);
        assert_eq!(rsk_normal_form(&[5]), vec![5]);
        // Knuth class of 231 is {231, 213}
        let class = knuth_class(&[2, 3, 1], 4);
        assert_eq!(
            class,
            BTreeSet::from([vec![2, 3, 1], vec![2, 1, 3]])
        );
    }

    #[test]
    fn rsk_matches_bfs_closure_small() {
        // exhaustive over 3 letters up to length 5 here (length 8 in the
        // acceptance battery)
        for len in 1..=5usize {
            for code in 0..3usize.pow(len as u32) {
                let mut c = code;
                let word: Word = (0..len)
                    .map(|_| {
                        let letter = (c % 3) as u8 + 1;
                        c /= 3;
                        letter
                    })
                    .collect();
                let nf = rsk_normal_form(&word);
                let class = knuth_class(&word, 4);
                assert!(class.contains(&nf));
                for w in &class {
                    assert_eq!(rsk_normal_form(w), nf);
                }
            }
        }
    }

    #[test]
    fn eg_basics() {
        assert_eq!(eg_normal_form(&[1, 1], 3), None);
        let a = eg_normal_form(&[1, 2, 1], 3).unwrap();
        let b = eg_normal_form(&[2, 1, 2], 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn idplactic_example_2_16() {
        // alphabet {a<b<c<d} -> letters 1..4, words in the n=5 idplactic algebra
        let dbadc = vec![4, 2, 1, 4, 3];
        let cadbd = vec![3, 1, 4, 2, 4];
        assert_eq!(idplactic_rl(&dbadc, 5), 4);
        assert_eq!(idplactic_rl(&cadbd, 5), 4);
        let dbadbc = vec![4, 2, 1, 4, 2, 3];
        let cbadbd = vec![3, 2, 1, 4, 2, 4];
        assert_eq!(idplactic_rl(&dbadbc, 5), 5);
        assert_eq!(idplactic_rl(&cbadbd, 5), 5);
    }

    #[test]
    fn compatible_example_2_28() {
        let t = Tableau {
            rows: vec![vec![2, 3], vec![3]],
        };
        assert_eq!(word_string(&t.reading_word()), "323");
        let pairs = compatible_set(&t, 4);
        assert_eq!(pairs.len(), 5);
        let bs: BTreeSet<String> = pairs.iter().map(|(_, b)| word_string(b)).collect();
        assert_eq!(
            bs,
            BTreeSet::from([
                "122".to_string(),
                "112".to_string(),
                "113".to_string(),
                "123".to_string(),
                "223".to_string()
            ])
        );
        // idplactic pairs up to length 5 add the six listed longer ones
        let ic = idcompatible_set(&t, 4, 5);
        assert_eq!(ic.len(), 5 + 6);
        assert!(ic
            .iter()
            .any(|(a, b)| word_string(a) == "32323" && word_string(b) == "11223"));
        // empty word
        let empty = Tableau::empty();
        assert_eq!(compatible_set(&empty, 4), vec![(vec![], vec![])]);
    }

    #[test]
    fn bottom_code_examples() {
        let t = Tableau {
            rows: vec![vec![2, 3], vec![3]],
        };
        // smallest content vector is (0,2,1), matching K[021]
        assert_eq!(bottom_code(&t, 4).parts(), &[0, 2, 1]);
        let single = Tableau { rows: vec![vec![1]] };
        assert_eq!(bottom_code(&single, 4).trimmed().parts(), &[1]);
    }

    #[test]
    fn a_family_counts() {
        assert_eq!(a_family(3).len(), 7);
        assert_eq!(a_family(4).len(), 42);
    }

    #[test]
    fn qplactic_weights_match_table_entries() {
        // normalization targets the tableau word of the class:
        // u_{132} = q13^{-1} u_{312}
        let h = crate::quotients::Handle::QPlactic {
            n: 4,
            q: QWeights::Formal,
        };
        let (rep, scalar) = h.normalize(&[1, 3, 2]).unwrap();
        assert_eq!(rep, vec![3, 1, 2]);
        assert_eq!(scalar, Polynomial::parse("q13^-1").unwrap());
        // u_{332} = q23 u_{323}
        let (rep2, scalar2) = h.normalize(&[3, 3, 2]).unwrap();
        assert_eq!(rep2, vec![3, 2, 3]);
        assert_eq!(scalar2, Polynomial::parse("q23").unwrap());
    }
}
