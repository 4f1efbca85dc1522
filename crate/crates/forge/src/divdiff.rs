//! The five-parameter operator family `T_i = a + (b x_i + c x_{i+1} + h +
//! e x_i x_{i+1}) d_i`, its relation checks, word-indexed composition, and
//! the affine operators built on top of it.

use std::collections::BTreeMap;

use crate::divided::partial_pair;
use crate::error::ForgeError;
use crate::perm::{word_is_reduced, Permutation};
use crate::poly::{Polynomial, Var};

/// Parameters `(a, b, c, h, e)`, each a polynomial in the scalar parameters.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct OperatorSpec {
    pub a: Polynomial,
    pub b: Polynomial,
    pub c: Polynomial,
    pub h: Polynomial,
    pub e: Polynomial,
}

impl OperatorSpec {
    pub fn new(a: Polynomial, b: Polynomial, c: Polynomial, h: Polynomial, e: Polynomial) -> Self {
        OperatorSpec { a, b, c, h, e }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, h: i64, e: i64) -> Self {
        OperatorSpec {
            a: Polynomial::constant(a),
            b: Polynomial::constant(b),
            c: Polynomial::constant(c),
            h: Polynomial::constant(h),
            e: Polynomial::constant(e),
        }
    }

    /// Newton divided difference: `(0,0,0,1,0)`.
    pub fn newton() -> Self {
        Self::from_i64(0, 0, 0, 1, 0)
    }

    /// Isobaric (key/Demazure) operator: `(1,0,1,0,0)`.
    pub fn key() -> Self {
        Self::from_i64(1, 0, 1, 0, 0)
    }

    /// Reduced key operator: `(0,0,1,0,0)`.
    pub fn reduced_key() -> Self {
        Self::from_i64(0, 0, 1, 0, 0)
    }

    /// beta-Grothendieck step: `(-beta, beta, 0, 1, 0)`.
    pub fn grothendieck(beta: &Polynomial) -> Self {
        OperatorSpec {
            a: beta.neg(),
            b: beta.clone(),
            c: Polynomial::zero(),
            h: Polynomial::one(),
            e: Polynomial::zero(),
        }
    }

    /// Dual beta-Grothendieck step: `(0, beta, 0, 1, 0)`.
    pub fn dual_grothendieck(beta: &Polynomial) -> Self {
        OperatorSpec {
            a: Polynomial::zero(),
            b: beta.clone(),
            c: Polynomial::zero(),
            h: Polynomial::one(),
            e: Polynomial::zero(),
        }
    }

    /// Key Grothendieck step: `(1, 0, 1, 0, beta)`.
    pub fn key_grothendieck(beta: &Polynomial) -> Self {
        OperatorSpec {
            a: Polynomial::one(),
            b: Polynomial::zero(),
            c: Polynomial::one(),
            h: Polynomial::zero(),
            e: beta.clone(),
        }
    }

    /// Reduced key Grothendieck step: `(0, 0, 1, 0, beta)`.
    pub fn reduced_key_grothendieck(beta: &Polynomial) -> Self {
        OperatorSpec {
            a: Polynomial::zero(),
            b: Polynomial::zero(),
            c: Polynomial::one(),
            h: Polynomial::zero(),
            e: beta.clone(),
        }
    }

    /// Parse a CLI spec literal: `a=-beta,b=beta,c=0,h=1,e=0`.
    pub fn parse(spec: &str) -> Result<OperatorSpec, ForgeError> {
        let mut map: BTreeMap<&str, Polynomial> = BTreeMap::new();
        for item in spec.split(',') {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| ForgeError::Parse(format!("bad spec item `{}`", item)))?;
            map.insert(key.trim(), Polynomial::parse(value.trim())?);
        }
        let get = |k: &str| -> Result<Polynomial, ForgeError> {
            map.get(k)
                .cloned()
                .ok_or_else(|| ForgeError::Parse(format!("spec is missing `{}`", k)))
        };
        Ok(OperatorSpec {
            a: get("a")?,
            b: get("b")?,
            c: get("c")?,
            h: get("h")?,
            e: get("e")?,
        })
    }

    /// The Coxeter-validity criterion `(a+b)(a-c) + h e = 0`.
    pub fn coxeter_criterion(&self) -> Polynomial {
        self.a
            .add(&self.b)
            .mul(&self.a.sub(&self.c))
            .add(&self.h.mul(&self.e))
    }

    /// Check the algebraic criterion and confirm it against the symbolic
    /// braid residual on `x^{delta_3}` and a panel of cubics.
    pub fn coxeter_valid(&self) -> Result<bool, ForgeError> {
        let algebraic = self.coxeter_criterion().is_zero();
        let symbolic = self.braid_residuals_vanish();
        if algebraic != symbolic {
            return Err(ForgeError::Internal(format!(
                "braid residual test contradicts the (a+b)(a-c)+he criterion for spec {:?}",
                self
            )));
        }
        Ok(algebraic)
    }

    fn braid_residuals_vanish(&self) -> bool {
        for f in test_polynomials() {
            let lhs = self.apply(1, &self.apply(2, &self.apply(1, &f)));
            let rhs = self.apply(2, &self.apply(1, &self.apply(2, &f)));
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// `T_i(f) = a f + (b x_i + c x_{i+1} + h + e x_i x_{i+1}) d_i(f)`.
    pub fn apply(&self, i: usize, f: &Polynomial) -> Polynomial {
        self.apply_pair(i, i + 1, f)
    }

    /// `T_{ij}` on an arbitrary pair of x-variables (i < j).
    pub fn apply_pair(&self, i: usize, j: usize, f: &Polynomial) -> Polynomial {
        let xi = Polynomial::x(i);
        let xj = Polynomial::x(j);
        let coeff = self
            .b
            .mul(&xi)
            .add(&self.c.mul(&xj))
            .add(&self.h)
            .add(&self.e.mul(&xi).mul(&xj));
        self.a.mul(f).add(&coeff.mul(&partial_pair(f, Var::x(i), Var::x(j))))
    }

    /// Inverse operator, defined when `a(a+b-c)` is an invertible term:
    /// from the quadratic relation, `T^{-1} = (T - (2a+b-c)) / (-a(a+b-c))`.
    pub fn apply_inverse(&self, i: usize, f: &Polynomial) -> Result<Polynomial, ForgeError> {
        let lin = self
            .a
            .mul_scalar(2)
            .add(&self.b)
            .sub(&self.c);
        let det = self.a.mul(&self.a.add(&self.b).sub(&self.c)).neg();
        let det_inv = det.term_inverse().ok_or_else(|| {
            ForgeError::Domain(format!(
                "operator is not invertible: a(a+b-c) = {} is not a unit",
                det.neg()
            ))
        })?;
        Ok(self.apply(i, f).sub(&lin.mul(f)).mul(&det_inv))
    }

    /// Residual of the quadratic (Hecke) relation
    /// `T^2 - (2a+b-c) T + a(a+b-c)` over a panel of polynomials;
    /// zero polynomial when the relation holds on all of them.
    pub fn hecke_square_residual(&self) -> Polynomial {
        let lin = self.a.mul_scalar(2).add(&self.b).sub(&self.c);
        let cst = self.a.mul(&self.a.add(&self.b).sub(&self.c));
        for f in test_polynomials() {
            let tf = self.apply(1, &f);
            let res = self
                .apply(1, &tf)
                .sub(&lin.mul(&tf))
                .add(&cst.mul(&f));
            if !res.is_zero() {
                return res;
            }
        }
        Polynomial::zero()
    }

    /// Compose along a word, the leftmost factor applied last:
    /// `T_{i_1}(T_{i_2}(...(f)))`.
    pub fn apply_along_word(&self, word: &[u8], f: &Polynomial) -> Polynomial {
        let mut acc = f.clone();
        for &i in word.iter().rev() {
            acc = self.apply(i as usize, &acc);
        }
        acc
    }

    /// Apply `T_w` for a permutation (any reduced word; requires a
    /// Coxeter-valid spec to be well-defined).
    pub fn apply_along_perm(&self, w: &Permutation, f: &Polynomial) -> Polynomial {
        self.apply_along_word(&w.canonical_reduced_word(), f)
    }

    /// Guarded word application per the operation contract: a spec that is
    /// not Coxeter-valid refuses non-reduced-unique words.
    pub fn apply_word_checked(
        &self,
        word: &[u8],
        n: usize,
        f: &Polynomial,
    ) -> Result<Polynomial, ForgeError> {
        if !self.coxeter_valid()? && !word_is_reduced(word, n.max(2)) {
            return Err(ForgeError::Domain(
                "spec is not Coxeter-valid and the word is not reduced".into(),
            ));
        }
        Ok(self.apply_along_word(word, f))
    }
}

/// Fixed panel of polynomials used by the relation checks: monomial basis
/// up to degree 4 in x1..x3 plus a few mixed cubics.
fn test_polynomials() -> Vec<Polynomial> {
    let mut out = Vec::new();
    for d1 in 0..=4i32 {
        for d2 in 0..=(4 - d1) {
            for d3 in 0..=(4 - d1 - d2) {
                let mut m = crate::poly::Monomial::one();
                m.set(Var::x(1), d1);
                m.set(Var::x(2), d2);
                m.set(Var::x(3), d3);
                out.push(Polynomial::from_monomial(m, num_bigint::BigInt::from(1)));
            }
        }
    }
    out.push(Polynomial::parse("x1^2*x2 + 3*x1*x3 + x2*x3^2").unwrap());
    out.push(Polynomial::parse("x1*x2*x3 + x1 + x2 + 1").unwrap());
    out
}

/// Report from the Yang-Baxter checks.
#[derive(Debug, Clone)]
pub struct YangBaxterReport {
    /// Plain YB residual vanishes on the panel.
    pub plain_vanishes: bool,
    /// The `b = c = e = 0` criterion for the plain relation.
    pub plain_criterion: bool,
    /// Twisted quantum YB residual vanishes (cleared of denominators).
    pub twisted_vanishes: Option<bool>,
}

/// Check the plain Yang-Baxter relation `T12 T13 T23 = T23 T13 T12` and the
/// twisted quantum Yang-Baxter relation for `R_{ij}(l, m) = 1 + (l-m)/(beta m) T_{ij}`
/// with `beta = 2a + b - c`, denominators cleared.
pub fn yang_baxter_checks(spec: &OperatorSpec) -> Result<YangBaxterReport, ForgeError> {
    let plain = {
        let mut ok = true;
        for f in test_polynomials() {
            let lhs = spec.apply_pair(
                1,
                2,
                &spec.apply_pair(1, 3, &spec.apply_pair(2, 3, &f)),
            );
            let rhs = spec.apply_pair(
                2,
                3,
                &spec.apply_pair(1, 3, &spec.apply_pair(1, 2, &f)),
            );
            if lhs != rhs {
                ok = false;
                break;
            }
        }
        ok
    };
    let plain_criterion = spec.b.is_zero() && spec.c.is_zero() && spec.e.is_zero();

    let beta = spec.a.mul_scalar(2).add(&spec.b).sub(&spec.c);
    let twisted = if beta.is_zero() {
        None
    } else {
        // R~_{ij}(l, m) = beta m + (l - m) T_{ij}; both sides of the twisted
        // relation carry the common denominator beta^3 mu nu^2.
        let lam = Polynomial::param("lam1");
        let mu = Polynomial::param("mu2");
        let nu = Polynomial::param("nu3");
        let r = |i: usize, j: usize, l: &Polynomial, m: &Polynomial, f: &Polynomial| {
            beta.mul(m)
                .mul(f)
                .add(&l.sub(m).mul(&spec.apply_pair(i, j, f)))
        };
        let mut ok = true;
        for f in test_polynomials().into_iter().take(20) {
            let lhs = r(1, 2, &lam, &mu, &r(2, 3, &lam, &nu, &r(1, 2, &mu, &nu, &f)));
            let rhs = r(2, 3, &mu, &nu, &r(1, 2, &lam, &nu, &r(2, 3, &lam, &mu, &f)));
            if lhs != rhs {
                ok = false;
                break;
            }
        }
        Some(ok)
    };
    Ok(YangBaxterReport {
        plain_vanishes: plain,
        plain_criterion,
        twisted_vanishes: twisted,
    })
}

/// The affine shift `pi`: `x_i -> x_{i+1}` for `i < n`, `x_n -> x_1 / q`.
pub fn pi_shift(f: &Polynomial, n: usize) -> Polynomial {
    let q_inv = Polynomial::parse("q^-1").unwrap();
    let mut assign = BTreeMap::new();
    for i in 1..n {
        assign.insert(Var::x(i), Polynomial::x(i + 1));
    }
    assign.insert(Var::x(n), Polynomial::x(1).mul(&q_inv));
    f.specialize(&assign).expect("shift substitution")
}

/// Inverse shift: `x_i -> x_{i-1}` for `i > 1`, `x_1 -> q x_n`.
pub fn pi_shift_inverse(f: &Polynomial, n: usize) -> Polynomial {
    let q = Polynomial::param("q");
    let mut assign = BTreeMap::new();
    for i in 2..=n {
        assign.insert(Var::x(i), Polynomial::x(i - 1));
    }
    assign.insert(Var::x(1), Polynomial::x(n).mul(&q));
    f.specialize(&assign).expect("shift substitution")
}

/// The affine operator `T_0 = pi T_{n-1} pi^{-1}`.
pub fn apply_t0(spec: &OperatorSpec, n: usize, f: &Polynomial) -> Polynomial {
    pi_shift(&spec.apply(n - 1, &pi_shift_inverse(f, n)), n)
}

/// Dunkl-type element `Y_i = (T_{i-1}^{-1} ... T_1^{-1}) pi (T_{n-1} ... T_i)`
/// for the spec `(t, -t, 1, 0, 0)`, applied to a polynomial. The right-hand
/// product must include `T_i` for the family to commute (checked
/// exhaustively over the order conventions).
pub fn dunkl_apply(i: usize, n: usize, f: &Polynomial) -> Result<Polynomial, ForgeError> {
    let t = Polynomial::param("t");
    let spec = OperatorSpec {
        a: t.clone(),
        b: t.neg(),
        c: Polynomial::one(),
        h: Polynomial::zero(),
        e: Polynomial::zero(),
    };
    // The rightmost factor T_i acts first, so walk the indices upward on
    // both sides.
    let mut acc = f.clone();
    for a in i..=n - 1 {
        acc = spec.apply(a, &acc);
    }
    acc = pi_shift(&acc, n);
    for a in 1..=i.saturating_sub(1) {
        acc = spec.apply_inverse(a, &acc)?;
    }
    Ok(acc)
}

/// Residual report for the commutativity `[Y_i, Y_j] = 0` on monomials of
/// bounded degree.
pub fn dunkl_commutativity(n: usize, max_deg: u32) -> Result<bool, ForgeError> {
    if n > 4 {
        return Err(ForgeError::Bound("commutativity probe bounded to n <= 4".into()));
    }
    let mut monos = Vec::new();
    fn gen(n: usize, i: usize, left: u32, cur: &mut crate::poly::Monomial, out: &mut Vec<Polynomial>) {
        if i > n {
            out.push(Polynomial::from_monomial(cur.clone(), num_bigint::BigInt::from(1)));
            return;
        }
        for d in 0..=left {
            let mut next = cur.clone();
            next.set(Var::x(i), d as i32);
            gen(n, i + 1, left - d, &mut next, out);
        }
    }
    gen(n, 1, max_deg, &mut crate::poly::Monomial::one(), &mut monos);
    for f in &monos {
        for i in 1..=n {
            for j in i + 1..=n {
                let lhs = dunkl_apply(i, n, &dunkl_apply(j, n, f)?)?;
                let rhs = dunkl_apply(j, n, &dunkl_apply(i, n, f)?)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn newton_spec_is_partial() {
        let spec = OperatorSpec::newton();
        assert_eq!(spec.apply(1, &p("x1^2*x2")), p("x1*x2"));
        assert!(spec.coxeter_valid().unwrap());
        assert!(spec.hecke_square_residual().is_zero());
    }

    #[test]
    fn key_spec_is_isobaric() {
        let spec = OperatorSpec::key();
        assert_eq!(spec.apply(1, &p("x1")), p("x1 + x2"));
        assert!(spec.coxeter_valid().unwrap());
    }

    #[test]
    fn grothendieck_step_example() {
        // (-beta, beta, 0, 1, 0) applied to x1 at i=1 gives 1:
        // -beta x1 + (beta x1 + 1) * 1
        let beta = Polynomial::param("beta");
        let spec = OperatorSpec::grothendieck(&beta);
        assert_eq!(spec.apply(1, &p("x1")), p("1"));
        assert!(spec.coxeter_valid().unwrap());
    }

    #[test]
    fn coxeter_criterion_cases() {
        // (-beta, beta+alpha, 0, 1, beta*alpha) is valid
        let valid = OperatorSpec {
            a: p("-beta"),
            b: p("beta+alpha"),
            c: p("0"),
            h: p("1"),
            e: p("beta*alpha"),
        };
        assert!(valid.coxeter_valid().unwrap());
        // (1,1,0,1,1): (a+b)(a-c)+he = 2+1 = 3 != 0
        let invalid = OperatorSpec::from_i64(1, 1, 0, 1, 1);
        assert!(!invalid.coxeter_valid().unwrap());
    }

    #[test]
    fn hecke_square_cases() {
        // KN gamma-family spec: (-beta, beta+alpha+gamma, gamma, 1, (beta+gamma)(alpha+gamma))
        let spec = OperatorSpec {
            a: p("-beta"),
            b: p("beta+alpha+gamma"),
            c: p("gamma"),
            h: p("1"),
            e: p("(beta+gamma)*(alpha+gamma)"),
        };
        assert!(spec.hecke_square_residual().is_zero());
        // a=0 case: T^2 = (b-c) T
        let spec0 = OperatorSpec {
            a: p("0"),
            b: p("b"),
            c: p("c"),
            h: p("h"),
            e: p("e"),
        };
        assert!(spec0.hecke_square_residual().is_zero());
    }

    #[test]
    fn word_application() {
        let spec = OperatorSpec::newton();
        let f = p("x1^3*x2^2*x3 + x1*x2");
        assert_eq!(spec.apply_along_word(&[], &f), f);
        // braid independence for a valid spec
        let g = p("x1^2*x2 + x2^2*x3");
        assert_eq!(
            spec.apply_along_word(&[1, 2, 1], &g),
            spec.apply_along_word(&[2, 1, 2], &g)
        );
    }

    #[test]
    fn yang_baxter() {
        // (a, 0, 0, h, 0): plain YB holds
        let diag = OperatorSpec::from_i64(2, 0, 0, 3, 0);
        let rep = yang_baxter_checks(&diag).unwrap();
        assert!(rep.plain_vanishes);
        assert!(rep.plain_criterion);
        // a generic spec with b, e nonzero breaks the plain relation
        let bad = OperatorSpec::from_i64(1, 1, 0, 1, 1);
        let rep1 = yang_baxter_checks(&bad).unwrap();
        assert!(!rep1.plain_vanishes);
        assert!(!rep1.plain_criterion);
        // twisted QYBE holds for the Coxeter-valid Grothendieck spec
        let beta = Polynomial::param("beta");
        let g = OperatorSpec::grothendieck(&beta);
        let rep2 = yang_baxter_checks(&g).unwrap();
        assert_eq!(rep2.twisted_vanishes, Some(true));
    }

    #[test]
    fn affine_shift() {
        assert_eq!(pi_shift(&p("x1"), 3), p("x2"));
        assert_eq!(pi_shift(&p("x3"), 3), p("x1*q^-1"));
        let f = p("x1^2*x3 + x2");
        assert_eq!(pi_shift_inverse(&pi_shift(&f, 3), 3), f);
    }

    #[test]
    fn dunkl_commute_small() {
        assert!(dunkl_commutativity(3, 2).unwrap());
    }
}
