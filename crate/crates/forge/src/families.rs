//! Generators for the Schubert, Grothendieck, key, Di Francesco-Zinn-Justin
//! and Hecke-Grothendieck polynomial families, the generalized operator
//! family they embed into, and basis expansion.

use std::collections::{BTreeMap, HashMap};

use crate::divdiff::OperatorSpec;
use crate::divided::partial;
use crate::error::ForgeError;
use crate::perm::{Composition, Permutation};
use crate::plactic::enumerate_tableaux;
use crate::poly::{r_staircase, staircase_monomial, x_monomial, Monomial, Polynomial, Var};

/// Which descent/ascent to pick when a recursion has a choice; used to
/// property-test path independence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Path {
    First,
    Last,
}

/// Single-variable step operators used by the descending recursions.
#[derive(Clone, Debug)]
enum Step {
    /// `d_i`
    Newton,
    /// `f -> d_i((1 + beta x_{i+1}) f)`
    Grothendieck(Polynomial),
    /// `f -> (1 + beta x_i) d_i(f)`
    DualGrothendieck(Polynomial),
    /// `f -> (1+x_i) d_i(f) + d_i((x_{i+1} + x_i x_{i+1}) f)`
    DiFrancescoZinnJustin,
    /// generalized `T_i` for an operator spec
    Spec(OperatorSpec),
}

impl Step {
    fn apply(&self, i: usize, f: &Polynomial) -> Polynomial {
        match self {
            Step::Newton => partial(f, i),
            Step::Grothendieck(beta) => {
                let factor = Polynomial::one().add(&beta.mul(&Polynomial::x(i + 1)));
                partial(&factor.mul(f), i)
            }
            Step::DualGrothendieck(beta) => {
                let factor = Polynomial::one().add(&beta.mul(&Polynomial::x(i)));
                factor.mul(&partial(f, i))
            }
            Step::DiFrancescoZinnJustin => {
                let xi = Polynomial::x(i);
                let xi1 = Polynomial::x(i + 1);
                let left = Polynomial::one().add(&xi).mul(&partial(f, i));
                let right = partial(&xi1.add(&xi.mul(&xi1)).mul(f), i);
                left.add(&right)
            }
            Step::Spec(spec) => spec.apply(i, f),
        }
    }
}

/// Descending recursion from the longest element: value at `w0` is `seed`,
/// and `F(w) = step_i(F(w s_i))` whenever `w(i) < w(i+1)`.
fn descend(step: &Step, w: &Permutation, seed: &Polynomial, path: Path) -> Polynomial {
    let mut memo: HashMap<Permutation, Polynomial> = HashMap::new();
    descend_memo(step, w, seed, path, &mut memo)
}

fn descend_memo(
    step: &Step,
    w: &Permutation,
    seed: &Polynomial,
    path: Path,
    memo: &mut HashMap<Permutation, Polynomial>,
) -> Polynomial {
    if let Some(p) = memo.get(w) {
        return p.clone();
    }
    let n = w.n();
    let ascents: Vec<usize> = (1..n).filter(|&i| w.apply(i) < w.apply(i + 1)).collect();
    let value = if ascents.is_empty() {
        seed.clone()
    } else {
        let i = match path {
            Path::First => ascents[0],
            Path::Last => *ascents.last().unwrap(),
        };
        let longer = w.mul_s_right(i);
        let prev = descend_memo(step, &longer, seed, path, memo);
        step.apply(i, &prev)
    };
    memo.insert(w.clone(), value.clone());
    value
}

/// Schubert polynomial; `double` keeps the y alphabet.
pub fn schubert(w: &Permutation, double: bool) -> Polynomial {
    schubert_path(w, double, Path::First)
}

pub fn schubert_path(w: &Permutation, double: bool, path: Path) -> Polynomial {
    let n = w.n();
    let seed = if double {
        r_staircase(n)
    } else {
        staircase_monomial(n)
    };
    descend(&Step::Newton, w, &seed, path)
}

/// beta-Grothendieck polynomial (dual variant via `dual`).
pub fn grothendieck(w: &Permutation, beta: &Polynomial, dual: bool, double: bool) -> Polynomial {
    grothendieck_path(w, beta, dual, double, Path::First)
}

pub fn grothendieck_path(
    w: &Permutation,
    beta: &Polynomial,
    dual: bool,
    double: bool,
    path: Path,
) -> Polynomial {
    let n = w.n();
    let seed = if double {
        r_staircase(n)
    } else {
        staircase_monomial(n)
    };
    let step = if dual {
        Step::DualGrothendieck(beta.clone())
    } else {
        Step::Grothendieck(beta.clone())
    };
    descend(&step, w, &seed, path)
}

/// Di Francesco-Zinn-Justin polynomial.
pub fn dz(w: &Permutation) -> Polynomial {
    dz_path(w, Path::First)
}

pub fn dz_path(w: &Permutation, path: Path) -> Polynomial {
    descend(
        &Step::DiFrancescoZinnJustin,
        w,
        &staircase_monomial(w.n()),
        path,
    )
}

/// Key polynomial variants.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KeyKind {
    Key,
    ReducedKey,
    KeyGrothendieck,
    ReducedKeyGrothendieck,
}

/// Key-family polynomial for a composition. The recursion sorts `alpha`
/// toward its partition rearrangement.
pub fn key(alpha: &Composition, kind: KeyKind, beta: &Polynomial) -> Polynomial {
    key_path(alpha, kind, beta, Path::First)
}

pub fn key_path(alpha: &Composition, kind: KeyKind, beta: &Polynomial, path: Path) -> Polynomial {
    let mut memo: HashMap<Vec<u32>, Polynomial> = HashMap::new();
    key_rec(alpha.parts(), kind, beta, path, &mut memo)
}

fn key_rec(
    alpha: &[u32],
    kind: KeyKind,
    beta: &Polynomial,
    path: Path,
    memo: &mut HashMap<Vec<u32>, Polynomial>,
) -> Polynomial {
    if let Some(p) = memo.get(alpha) {
        return p.clone();
    }
    let ascents: Vec<usize> = (0..alpha.len().saturating_sub(1))
        .filter(|&i| alpha[i] < alpha[i + 1])
        .collect();
    let value = if ascents.is_empty() {
        x_monomial(alpha)
    } else {
        let i0 = match path {
            Path::First => ascents[0],
            Path::Last => *ascents.last().unwrap(),
        };
        let mut swapped = alpha.to_vec();
        swapped.swap(i0, i0 + 1);
        let prev = key_rec(&swapped, kind, beta, path, memo);
        let i = i0 + 1; // 1-based variable index
        let xi = Polynomial::x(i);
        let xi1 = Polynomial::x(i + 1);
        match kind {
            // K[alpha] = d_i(x_i K[s_i alpha])
            KeyKind::Key => partial(&xi.mul(&prev), i),
            // Khat[alpha] = x_{i+1} d_i(Khat[s_i alpha])
            KeyKind::ReducedKey => xi1.mul(&partial(&prev, i)),
            // KG[alpha] = d_i((x_i + beta x_i x_{i+1}) KG[s_i alpha])
            KeyKind::KeyGrothendieck => {
                let factor = xi.add(&beta.mul(&xi).mul(&xi1));
                partial(&factor.mul(&prev), i)
            }
            // KGhat[alpha] = (x_{i+1} + beta x_i x_{i+1}) d_i(KGhat[s_i alpha])
            KeyKind::ReducedKeyGrothendieck => {
                let factor = xi1.add(&beta.mul(&xi).mul(&xi1));
                factor.mul(&partial(&prev, i))
            }
        }
    };
    memo.insert(alpha.to_vec(), value.clone());
    value
}

/// The two parameter orders for the Hecke-Grothendieck operators: the
/// literal definition carries `-beta` as the constant term, the
/// introduction's version carries `-alpha`. Exactly one reproduces the
/// appendix table; the calibrated default is `Sec1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KnConvention {
    Def46,
    Sec1,
}

/// Operator spec of the Hecke-Grothendieck family.
pub fn kn_spec(
    beta: &Polynomial,
    alpha: &Polynomial,
    gamma: &Polynomial,
    h: &Polynomial,
    convention: KnConvention,
) -> Result<OperatorSpec, ForgeError> {
    if h.is_zero() {
        return Err(ForgeError::Domain("h must be invertible, got 0".into()));
    }
    let h_inv = h
        .term_inverse()
        .ok_or_else(|| ForgeError::Domain(format!("h = {} is not an invertible term", h)))?;
    let b = alpha.add(beta).add(gamma);
    let e = h_inv
        .mul(&alpha.add(gamma))
        .mul(&beta.add(gamma));
    let a = match convention {
        KnConvention::Def46 => beta.neg(),
        KnConvention::Sec1 => alpha.neg(),
    };
    Ok(OperatorSpec {
        a,
        b,
        c: gamma.clone(),
        h: h.clone(),
        e,
    })
}

/// Hecke-Grothendieck polynomial `KN_w = T_{i_1} ... T_{i_l}(x^{delta_n})`
/// over any reduced word of `w` (leftmost factor applied last).
pub fn kn(
    w: &Permutation,
    beta: &Polynomial,
    alpha: &Polynomial,
    gamma: &Polynomial,
    h: &Polynomial,
    convention: KnConvention,
) -> Result<Polynomial, ForgeError> {
    let spec = kn_spec(beta, alpha, gamma, h, convention)?;
    Ok(spec.apply_along_word(&w.canonical_reduced_word(), &staircase_monomial(w.n())))
}

/// `KN_w` restricted to the two-parameter family at `gamma = 0, h = 1`.
pub fn kn_two_param(
    w: &Permutation,
    beta: &Polynomial,
    alpha: &Polynomial,
    convention: KnConvention,
) -> Polynomial {
    kn(
        w,
        beta,
        alpha,
        &Polynomial::zero(),
        &Polynomial::one(),
        convention,
    )
    .expect("h = 1")
}

/// Generalized Schubert polynomial `S^A_w = T^A_{w^{-1} w_0}(x^{delta_n})`.
pub fn generalized_schubert(
    spec: &OperatorSpec,
    w: &Permutation,
    double: bool,
) -> Result<Polynomial, ForgeError> {
    if !spec.coxeter_valid()? {
        return Err(ForgeError::Domain(
            "operator spec does not satisfy (a+b)(a-c)+he = 0".into(),
        ));
    }
    let n = w.n();
    let seed = if double {
        r_staircase(n)
    } else {
        staircase_monomial(n)
    };
    Ok(descend(&Step::Spec(spec.clone()), w, &seed, Path::First))
}

/// Generalized key polynomial `K^A_alpha = T^A_{w_alpha}(x^{alpha^+})`,
/// with the leftmost letter of the sorting word applied first.
pub fn generalized_key(spec: &OperatorSpec, alpha: &Composition) -> Result<Polynomial, ForgeError> {
    if !spec.coxeter_valid()? {
        return Err(ForgeError::Domain(
            "operator spec does not satisfy (a+b)(a-c)+he = 0".into(),
        ));
    }
    let (plus, w_alpha) = alpha.sort();
    let mut acc = x_monomial(plus.parts());
    for &i in &w_alpha.canonical_reduced_word() {
        acc = spec.apply(i as usize, &acc);
    }
    Ok(acc)
}

/// Bott-Samelson polynomial: `Z = (1 + T_{i_1}) ... (1 + T_{i_l}) x^lambda`
/// for the operator `T_i = v + (x_{i+1} - v x_i) d_i`.
pub fn bott_samelson(word: &[u8], lambda: &Composition) -> Polynomial {
    let v = Polynomial::param("v");
    let spec = OperatorSpec {
        a: v.clone(),
        b: v.neg(),
        c: Polynomial::one(),
        h: Polynomial::zero(),
        e: Polynomial::zero(),
    };
    let mut acc = x_monomial(lambda.parts());
    for &i in word.iter().rev() {
        acc = acc.add(&spec.apply(i as usize, &acc));
    }
    acc
}

/// Swap alpha<->beta and invert both (the duality substitution).
pub fn kn_dual_substitution(p: &Polynomial) -> Polynomial {
    let mut assign = BTreeMap::new();
    assign.insert(
        Var::param("beta"),
        Polynomial::parse("alpha^-1").unwrap(),
    );
    assign.insert(
        Var::param("alpha"),
        Polynomial::parse("beta^-1").unwrap(),
    );
    p.specialize(&assign).expect("invertible substitution")
}

/// Duality and stability report for the two-parameter family.
pub struct KnDualityReport {
    pub duality_ok: bool,
    pub stability_ok: bool,
    pub failures: Vec<String>,
}

/// Check `KN_w(1) = (alpha beta)^l KN_{w^{-1}}^{(alpha^{-1}, beta^{-1})}(1)`
/// over all of S_n, plus the index-shift stability for words in the
/// stable range.
pub fn kn_duality_stability_check(n: usize) -> Result<KnDualityReport, ForgeError> {
    if n > 4 {
        return Err(ForgeError::Bound("duality check bounded to n <= 4".into()));
    }
    let beta = Polynomial::param("beta");
    let alpha = Polynomial::param("alpha");
    let mut failures = Vec::new();
    let mut duality_ok = true;
    for w in Permutation::all(n) {
        let lhs = kn_two_param(&w, &beta, &alpha, KnConvention::Sec1).eval_x_one();
        let rhs_raw = kn_two_param(&w.inverse(), &beta, &alpha, KnConvention::Sec1).eval_x_one();
        let mut factor = Monomial::one();
        factor.set(Var::param("alpha"), w.length() as i32);
        factor.set(Var::param("beta"), w.length() as i32);
        let rhs = kn_dual_substitution(&rhs_raw)
            .mul(&Polynomial::from_monomial(factor, num_bigint::BigInt::from(1)));
        if lhs != rhs {
            duality_ok = false;
            failures.push(format!("duality fails for w = {:?}", w.oneline()));
        }
    }
    // stability: words with letters <= n-3 shift by one
    let mut stability_ok = true;
    for w in Permutation::all(n) {
        let word = w.canonical_reduced_word();
        if word.is_empty() || word.iter().any(|&a| a as usize > n - 3) {
            continue;
        }
        let shifted: Vec<u8> = word.iter().map(|&a| a + 1).collect();
        let wshift = crate::perm::word_to_perm(&shifted, n);
        let lhs = kn_two_param(&w, &beta, &alpha, KnConvention::Sec1).eval_x_one();
        let rhs = kn_two_param(&wshift, &beta, &alpha, KnConvention::Sec1).eval_x_one();
        if lhs != rhs {
            stability_ok = false;
            failures.push(format!("stability fails for word {:?}", word));
        }
    }
    Ok(KnDualityReport {
        duality_ok,
        stability_ok,
        failures,
    })
}

/// Basis families supported by the expansion routine; all are indexed by
/// compositions inside the staircase (via the Lehmer code for the
/// permutation-indexed ones).
#[derive(Clone, Debug)]
pub enum BasisFamily {
    Schubert,
    Key,
    /// beta-Grothendieck with the given parameter value (pass `-beta` for
    /// the negated family).
    Grothendieck(Polynomial),
    KeyGrothendieck(Polynomial),
}

impl BasisFamily {
    pub fn element(&self, alpha: &Composition, n: usize) -> Polynomial {
        match self {
            BasisFamily::Schubert => {
                let w = alpha.code_to_perm(n).expect("index inside staircase");
                schubert(&w, false)
            }
            BasisFamily::Grothendieck(beta) => {
                let w = alpha.code_to_perm(n).expect("index inside staircase");
                grothendieck(&w, beta, false, false)
            }
            BasisFamily::Key => key(&alpha.padded(n), KeyKind::Key, &Polynomial::zero()),
            BasisFamily::KeyGrothendieck(beta) => {
                key(&alpha.padded(n), KeyKind::KeyGrothendieck, beta)
            }
        }
    }
}

/// Expansion result: coefficients (polynomials in the parameters) per index,
/// plus a flag reporting whether all of them lie in `N[params]`.
pub struct Expansion {
    pub coefficients: BTreeMap<Composition, Polynomial>,
    pub all_nonnegative: bool,
}

/// Expand `p` in a graded, lower-triangular basis family at fixed `n`.
/// The algorithm peels the graded-lex smallest x-monomial, which for all
/// supported families equals `x^alpha` for the basis index `alpha`.
pub fn expand_in_family(
    p: &Polynomial,
    family: &BasisFamily,
    n: usize,
) -> Result<Expansion, ForgeError> {
    let mut residual = p.clone();
    let mut coefficients: BTreeMap<Composition, Polynomial> = BTreeMap::new();
    let mut guard = 0usize;
    while !residual.is_zero() {
        guard += 1;
        if guard > 20_000 {
            return Err(ForgeError::Internal("expansion does not terminate".into()));
        }
        // graded-lex smallest x-exponent vector present in the residual
        let mut best: Option<(i64, Vec<u32>)> = None;
        for (m, _) in residual.terms() {
            let key = (m.xy_degree(), m.x_exponents(n));
            if best.as_ref().map_or(true, |b| (key.0, &key.1) < (b.0, &b.1)) {
                best = Some(key);
            }
        }
        let (_, alpha_vec) = best.unwrap();
        let alpha = Composition::new(alpha_vec.clone());
        if !alpha.fits_staircase(n) {
            return Err(ForgeError::Residual(format!(
                "leading index {:?} is outside the staircase; residual = {}",
                alpha.trimmed().parts(),
                residual
            )));
        }
        // full parameter coefficient of x^alpha
        let mut coeff = Polynomial::zero();
        for (m, c) in residual.terms() {
            if m.x_exponents(n) == alpha_vec && m.xy_degree() == alpha.size() as i64 {
                let mut params_only = m.clone();
                for i in 1..=n {
                    params_only.set(Var::x(i), 0);
                }
                coeff.add_term(params_only, c.clone());
            }
        }
        let basis_el = family.element(&alpha, n);
        residual = residual.sub(&coeff.mul(&basis_el));
        let entry = coefficients
            .entry(alpha.trimmed())
            .or_insert_with(Polynomial::zero);
        *entry = entry.add(&coeff);
    }
    coefficients.retain(|_, c| !c.is_zero());
    let all_nonnegative = coefficients
        .values()
        .all(|c| c.has_nonnegative_coefficients());
    Ok(Expansion {
        coefficients,
        all_nonnegative,
    })
}

/// Schur polynomial oracle via semistandard tableau enumeration.
pub fn schur(lambda: &[u32], r: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    if lambda.is_empty() || lambda[0] == 0 {
        return Polynomial::one();
    }
    for t in enumerate_tableaux(lambda, r as u8, &|_, _, _| true) {
        let mut m = Monomial::one();
        for (i, mult) in t.content(r).iter().enumerate() {
            m.set(Var::x(i + 1), *mult as i32);
        }
        out.add_term(m, num_bigint::BigInt::from(1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    fn perm(s: &[u8]) -> Permutation {
        Permutation::new(s.to_vec()).unwrap()
    }

    #[test]
    fn schubert_table_entries() {
        assert_eq!(schubert(&perm(&[1, 2, 3, 4]), false), p("1"));
        assert_eq!(schubert(&perm(&[2, 1, 4, 3]), false), p("x1^2 + x1*x2 + x1*x3"));
        assert_eq!(schubert(&perm(&[4, 3, 2, 1]), false), p("x1^3*x2^2*x3"));
        assert_eq!(schubert(&perm(&[1, 4, 3, 2]), false),
            p("x1^2*x2 + x1^2*x3 + x1*x2^2 + x2^2*x3 + x1*x2*x3"));
    }

    #[test]
    fn key_table_entries() {
        let z = Polynomial::zero();
        let k = |a: &[u32]| key(&Composition::new(a.to_vec()).padded(4), KeyKind::Key, &z);
        assert_eq!(k(&[0, 2]), p("x1^2 + x1*x2 + x2^2"));
        assert_eq!(k(&[0, 1, 1]), p("x1*x2 + x1*x3 + x2*x3"));
        let kh = |a: &[u32]| {
            key(
                &Composition::new(a.to_vec()).padded(4),
                KeyKind::ReducedKey,
                &z,
            )
        };
        assert_eq!(kh(&[0, 2, 1]), p("x1*x2*x3 + x2^2*x3"));
        assert_eq!(kh(&[0, 1]), p("x2"));
    }

    #[test]
    fn grothendieck_entries() {
        let one = Polynomial::one();
        // G_{1324} at beta = 1
        assert_eq!(
            grothendieck(&perm(&[1, 3, 2, 4]), &one, false, false),
            p("x1 + x2 + x1*x2")
        );
        assert_eq!(
            grothendieck(&perm(&[1, 3, 4, 2]), &one, false, false),
            p("x1*x2 + x1*x3 + x2*x3 + 2*x1*x2*x3")
        );
        // dual: H[0] = (1+x1)^3 (1+x2)^2 (1+x3) at beta = 1
        assert_eq!(
            grothendieck(&perm(&[1, 2, 3, 4]), &one, true, false),
            p("(1+x1)^3*(1+x2)^2*(1+x3)")
        );
    }

    #[test]
    fn key_grothendieck_entries() {
        let one = Polynomial::one();
        let kg = |a: &[u32]| {
            key(
                &Composition::new(a.to_vec()).padded(4),
                KeyKind::KeyGrothendieck,
                &one,
            )
        };
        assert_eq!(kg(&[0, 1, 1]), p("x1*x2 + x1*x3 + x2*x3 + 2*x1*x2*x3"));
        let kgh = |a: &[u32]| {
            key(
                &Composition::new(a.to_vec()).padded(4),
                KeyKind::ReducedKeyGrothendieck,
                &one,
            )
        };
        assert_eq!(kgh(&[0, 1, 1]), p("x2*x3 + x1*x2*x3"));
    }

    #[test]
    fn path_independence_spot() {
        for w in Permutation::all(4) {
            assert_eq!(
                schubert_path(&w, false, Path::First),
                schubert_path(&w, false, Path::Last)
            );
        }
        let beta = Polynomial::param("beta");
        for a in [[0u32, 2, 1], [1, 0, 2], [0, 0, 3]] {
            let alpha = Composition::new(a.to_vec()).padded(4);
            assert_eq!(
                key_path(&alpha, KeyKind::KeyGrothendieck, &beta, Path::First),
                key_path(&alpha, KeyKind::KeyGrothendieck, &beta, Path::Last)
            );
        }
    }

    #[test]
    fn kn_calibration() {
        let beta = Polynomial::param("beta");
        let alpha = Polynomial::param("alpha");
        // KN_id(x=1) = 1
        let id = perm(&[1, 2, 3, 4]);
        assert!(kn_two_param(&id, &beta, &alpha, KnConvention::Sec1)
            .eval_x_one()
            .is_one());
        // KN_{s1}(1) = beta + 1 + alpha beta under the Sec1 convention
        let s1 = perm(&[2, 1, 3, 4]);
        assert_eq!(
            kn_two_param(&s1, &beta, &alpha, KnConvention::Sec1).eval_x_one(),
            p("1 + beta + alpha*beta")
        );
        // the literal definition-order puts alpha there instead
        assert_eq!(
            kn_two_param(&s1, &beta, &alpha, KnConvention::Def46).eval_x_one(),
            p("1 + alpha + alpha*beta")
        );
    }

    #[test]
    fn dz_equals_kn_at_one_one() {
        // DZ_w = KN_{w^{-1} w_0} at beta = alpha = 1, gamma = 0 (the two
        // conventions agree there)
        let one = Polynomial::one();
        for w in Permutation::all(3) {
            let lhs = dz(&w);
            let idx = w.inverse().compose(&Permutation::longest(3));
            let rhs = kn_two_param(&idx, &one, &one, KnConvention::Sec1);
            assert_eq!(lhs, rhs, "w = {:?}", w.oneline());
        }
    }

    #[test]
    fn generalized_matches_named() {
        let beta = Polynomial::param("beta");
        for w in Permutation::all(3) {
            let newt = generalized_schubert(&OperatorSpec::newton(), &w, false).unwrap();
            assert_eq!(newt, schubert(&w, false));
            let g = generalized_schubert(&OperatorSpec::grothendieck(&beta), &w, false).unwrap();
            assert_eq!(g, grothendieck(&w, &beta, false, false));
            let h = generalized_schubert(&OperatorSpec::dual_grothendieck(&beta), &w, false)
                .unwrap();
            assert_eq!(h, grothendieck(&w, &beta, true, false));
        }
        for alpha in crate::perm::staircase_compositions(3) {
            let k = generalized_key(&OperatorSpec::key(), &alpha).unwrap();
            assert_eq!(k, key(&alpha, KeyKind::Key, &Polynomial::zero()));
            let kg = generalized_key(&OperatorSpec::key_grothendieck(&beta), &alpha).unwrap();
            assert_eq!(kg, key(&alpha, KeyKind::KeyGrothendieck, &beta));
            let rk = generalized_key(&OperatorSpec::reduced_key(), &alpha).unwrap();
            assert_eq!(rk, key(&alpha, KeyKind::ReducedKey, &Polynomial::zero()));
            let rkg =
                generalized_key(&OperatorSpec::reduced_key_grothendieck(&beta), &alpha).unwrap();
            assert_eq!(rkg, key(&alpha, KeyKind::ReducedKeyGrothendieck, &beta));
        }
    }

    #[test]
    fn bott_samelson_basics() {
        let lam = Composition::new(vec![1, 0]);
        assert_eq!(bott_samelson(&[], &lam), p("x1"));
        assert_eq!(bott_samelson(&[1], &lam), p("x1 + x2"));
        // (1 + T_i)^2 = (1 + v)(1 + T_i)
        let f = p("x1^2*x2 + x2*x3");
        let v = Polynomial::param("v");
        let spec = OperatorSpec {
            a: v.clone(),
            b: v.neg(),
            c: Polynomial::one(),
            h: Polynomial::zero(),
            e: Polynomial::zero(),
        };
        let once = f.add(&spec.apply(1, &f));
        let twice = once.add(&spec.apply(1, &once));
        assert_eq!(twice, Polynomial::one().add(&v).mul(&once));
    }

    #[test]
    fn expansion_examples() {
        // S[01] = x1 + x2 in the (-beta)-Grothendieck basis: {[01]: 1, [11]: beta}
        let s = p("x1 + x2");
        let fam = BasisFamily::Grothendieck(p("-beta"));
        let exp = expand_in_family(&s, &fam, 4).unwrap();
        let get = |a: &[u32]| {
            exp.coefficients
                .get(&Composition::new(a.to_vec()))
                .cloned()
                .unwrap_or_else(Polynomial::zero)
        };
        assert_eq!(get(&[0, 1]), p("1"));
        assert_eq!(get(&[1, 1]), p("beta"));
        assert_eq!(exp.coefficients.len(), 2);
        assert!(exp.all_nonnegative);

        // G^beta[101] in the Schubert basis
        let beta = Polynomial::param("beta");
        let g = grothendieck(&perm(&[2, 1, 4, 3]), &beta, false, false);
        let exp2 = expand_in_family(&g, &BasisFamily::Schubert, 4).unwrap();
        let get2 = |a: &[u32]| {
            exp2.coefficients
                .get(&Composition::new(a.to_vec()))
                .cloned()
                .unwrap_or_else(Polynomial::zero)
        };
        assert_eq!(get2(&[1, 0, 1]), p("1"));
        assert_eq!(get2(&[2, 0, 1]), p("beta"));
        assert_eq!(get2(&[1, 1, 1]), p("beta"));
        assert_eq!(get2(&[2, 1, 1]), p("beta^2"));

        // a basis element expands to itself
        let k = key(
            &Composition::new(vec![0, 2, 1]).padded(4),
            KeyKind::Key,
            &Polynomial::zero(),
        );
        let exp3 = expand_in_family(&k, &BasisFamily::Key, 4).unwrap();
        assert_eq!(exp3.coefficients.len(), 1);
        assert!(exp3.coefficients[&Composition::new(vec![0, 2, 1])].is_one());
    }

    #[test]
    fn key_is_schur_for_increasing_alpha() {
        // alpha weakly increasing with r parts: K[alpha] = s_{alpha^+}(x_1..x_r)
        let z = Polynomial::zero();
        let cases: Vec<(&[u32], usize)> = vec![(&[1, 2], 2), (&[0, 1, 2], 3), (&[2, 2], 2), (&[1, 1, 2], 3)];
        for (alpha, r) in cases {
            let k = key(&Composition::new(alpha.to_vec()).padded(4), KeyKind::Key, &z);
            let mut plus: Vec<u32> = alpha.to_vec();
            plus.sort_unstable_by(|a, b| b.cmp(a));
            while plus.last() == Some(&0) {
                plus.pop();
            }
            assert_eq!(k, schur(&plus, r), "alpha = {:?}", alpha);
        }
    }

    #[test]
    fn kn_duality_s3() {
        let rep = kn_duality_stability_check(3).unwrap();
        assert!(rep.duality_ok, "{:?}", rep.failures);
    }
}
