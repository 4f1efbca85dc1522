//! Exact sparse multivariate polynomials over the integers.
//!
//! Variables come in three kinds: `x1, x2, ...`, `y1, y2, ...` and named
//! parameters drawn from a registered table (`beta`, `alpha`, `p13`, `q23`,
//! ...). Coefficients are arbitrary-precision integers. Exponents of x/y
//! variables must stay nonnegative; parameters may carry negative (Laurent)
//! exponents.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::ForgeError;

/// Scalar parameter names the engine knows about, in alphabetical order.
/// `p{i}{j}` and `q{i}{j}` families are handled separately.
pub const NAMED_PARAMS: &[&str] = &[
    "a", "alpha", "b", "beta", "c", "e", "eta", "gamma", "h", "lam1", "lam2", "lam3", "mu1",
    "mu2", "mu3", "nu1", "nu2", "nu3",
];
/// Named params that sort after the `q{i}{j}` family.
pub const NAMED_PARAMS_LATE: &[&str] = &["t", "v", "xi"];

/// A registered scalar parameter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Param {
    /// One of the fixed scalar names (including bare `q`).
    Named(&'static str),
    /// Matrix entry `p{i}{j}`.
    P(u8, u8),
    /// Deformation entry `q{i}{j}`.
    Q(u8, u8),
}

impl Param {
    pub fn name(&self) -> String {
        match self {
            Param::Named(s) => (*s).to_string(),
            Param::P(i, j) => format!("p{}{}", i, j),
            Param::Q(i, j) => format!("q{}{}", i, j),
        }
    }

    /// Total order consistent with alphabetical order of canonical names.
    fn rank(&self) -> u32 {
        match self {
            Param::Named(s) => {
                if let Some(pos) = NAMED_PARAMS.iter().position(|t| t == s) {
                    pos as u32
                } else if *s == "q" {
                    2000
                } else if let Some(pos) = NAMED_PARAMS_LATE.iter().position(|t| t == s) {
                    3000 + pos as u32
                } else {
                    unreachable!("unregistered param {}", s)
                }
            }
            // p-family sits between the early names and bare `q`.
            Param::P(i, j) => 1000 + (*i as u32) * 16 + (*j as u32),
            // q-family sits between bare `q` and `t`.
            Param::Q(i, j) => 2001 + (*i as u32) * 16 + (*j as u32),
        }
    }

    /// Look a parameter up by its text name.
    pub fn parse(name: &str) -> Result<Param, ForgeError> {
        for s in NAMED_PARAMS.iter().chain(NAMED_PARAMS_LATE.iter()) {
            if *s == name {
                return Ok(Param::Named(s));
            }
        }
        if name == "q" {
            return Ok(Param::Named("q"));
        }
        let bytes = name.as_bytes();
        if bytes.len() == 3 && (bytes[0] == b'p' || bytes[0] == b'q') {
            let i = (bytes[1] as char).to_digit(10);
            let j = (bytes[2] as char).to_digit(10);
            if let (Some(i), Some(j)) = (i, j) {
                if i >= 1 && j >= 1 {
                    return Ok(if bytes[0] == b'p' {
                        Param::P(i as u8, j as u8)
                    } else {
                        Param::Q(i as u8, j as u8)
                    });
                }
            }
        }
        Err(ForgeError::Parse(format!("unknown parameter `{}`", name)))
    }
}

impl PartialOrd for Param {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Param {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

/// A variable of the ambient polynomial ring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X(u16),
    Y(u16),
    Param(Param),
}

impl Var {
    pub fn x(i: usize) -> Var {
        assert!(i >= 1);
        Var::X(i as u16)
    }
    pub fn y(i: usize) -> Var {
        assert!(i >= 1);
        Var::Y(i as u16)
    }
    pub fn param(name: &str) -> Var {
        Var::Param(Param::parse(name).expect("registered parameter"))
    }
    pub fn p(i: usize, j: usize) -> Var {
        Var::Param(Param::P(i as u8, j as u8))
    }
    pub fn q(i: usize, j: usize) -> Var {
        Var::Param(Param::Q(i as u8, j as u8))
    }
    pub fn is_param(&self) -> bool {
        matches!(self, Var::Param(_))
    }
    pub fn name(&self) -> String {
        match self {
            Var::X(i) => format!("x{}", i),
            Var::Y(i) => format!("y{}", i),
            Var::Param(p) => p.name(),
        }
    }

    pub fn parse(name: &str) -> Result<Var, ForgeError> {
        let bytes = name.as_bytes();
        if bytes.len() >= 2 && (bytes[0] == b'x' || bytes[0] == b'y') {
            if let Ok(i) = name[1..].parse::<u16>() {
                if i >= 1 {
                    return Ok(if bytes[0] == b'x' { Var::X(i) } else { Var::Y(i) });
                }
            }
        }
        Param::parse(name).map(Var::Param)
    }
}

/// Exponent vector, finitely supported. Zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<Var, i32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var, e: i32) -> Monomial {
        let mut m = Monomial::one();
        m.set(v, e);
        m
    }

    pub fn set(&mut self, v: Var, e: i32) {
        if e != 0 {
            debug_assert!(e > 0 || v.is_param(), "negative exponent on {:?}", v);
            self.exps.insert(v, e);
        } else {
            self.exps.remove(&v);
        }
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &i32)> {
        self.exps.iter()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.exps.values().map(|e| *e as i64).sum()
    }

    /// Total degree in the x/y variables only.
    pub fn xy_degree(&self) -> i64 {
        self.exps
            .iter()
            .filter(|(v, _)| !v.is_param())
            .map(|(_, e)| *e as i64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (v, e) in &other.exps {
            let ne = out.exp(*v) + e;
            out.set(*v, ne);
        }
        out
    }

    pub fn inverse(&self) -> Option<Monomial> {
        if self.exps.keys().any(|v| !v.is_param()) {
            return None;
        }
        let mut out = Monomial::one();
        for (v, e) in &self.exps {
            out.set(*v, -e);
        }
        Some(out)
    }

    /// Exponents of x1..xn as a vector (for code/composition extraction).
    pub fn x_exponents(&self, n: usize) -> Vec<u32> {
        let mut out = vec![0u32; n];
        for (v, e) in &self.exps {
            if let Var::X(i) = v {
                if (*i as usize) <= n {
                    out[*i as usize - 1] = *e as u32;
                }
            }
        }
        out
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded-lexicographic order: total degree first, then the earliest
/// variable with differing exponent decides (a larger exponent there wins).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => {
                    // `self` has support further out; compare on the extra var.
                    return Ordering::Less;
                }
                (None, Some(_)) => return Ordering::Greater,
                (Some((va, ea)), Some((vb, eb))) => {
                    if va != vb {
                        // The one supported on the earlier variable is lex-bigger
                        // iff its exponent there is positive.
                        return if va < vb {
                            if *ea > 0 {
                                Ordering::Greater
                            } else {
                                Ordering::Less
                            }
                        } else if *eb > 0 {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        };
                    }
                    match ea.cmp(eb) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
            }
        }
    }
}

/// Exact sparse polynomial with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(1)
    }

    pub fn constant(c: i64) -> Polynomial {
        let mut p = Polynomial::zero();
        if c != 0 {
            p.terms.insert(Monomial::one(), BigInt::from(c));
        }
        p
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial::from_monomial(Monomial::var(v, 1), BigInt::one())
    }

    pub fn x(i: usize) -> Polynomial {
        Polynomial::var(Var::x(i))
    }

    pub fn y(i: usize) -> Polynomial {
        Polynomial::var(Var::y(i))
    }

    pub fn param(name: &str) -> Polynomial {
        Polynomial::var(Var::param(name))
    }

    pub fn from_monomial(m: Monomial, c: BigInt) -> Polynomial {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// The single (monomial, coefficient) pair if the polynomial is a term.
    pub fn as_single_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Inverse of an invertible term (coefficient ±1, parameter support only).
    pub fn term_inverse(&self) -> Option<Polynomial> {
        let (m, c) = self.as_single_term()?;
        if !(c.is_one() || (-c).is_one()) {
            return None;
        }
        let inv = m.inverse()?;
        Some(Polynomial::from_monomial(inv, c.clone()))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let zeroed = {
            let entry = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            entry.is_zero()
        };
        if zeroed {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: i64) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        let big = BigInt::from(c);
        let mut out = Polynomial::zero();
        for (m, co) in &self.terms {
            out.terms.insert(m.clone(), co * &big);
        }
        out
    }

    pub fn mul_var(&self, v: Var) -> Polynomial {
        self.mul(&Polynomial::var(v))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn xy_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.xy_degree()).max().unwrap_or(0)
    }

    /// Minimal total xy-degree among terms (0 for the zero polynomial).
    pub fn min_xy_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.xy_degree()).min().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.iter() {
                if !vs.contains(v) {
                    vs.push(*v);
                }
            }
        }
        vs.sort();
        vs
    }

    /// Simultaneous substitution of variables by polynomials.
    ///
    /// A variable with a negative exponent may only receive an invertible
    /// term (single monomial with coefficient ±1).
    pub fn specialize(&self, assign: &BTreeMap<Var, Polynomial>) -> Result<Polynomial, ForgeError> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::from_monomial(Monomial::one(), c.clone());
            let mut residual = Monomial::one();
            for (v, e) in m.iter() {
                if let Some(val) = assign.get(v) {
                    if *e >= 0 {
                        term = term.mul(&val.pow(*e as u32));
                    } else {
                        let inv = val.term_inverse().ok_or_else(|| {
                            ForgeError::Domain(format!(
                                "cannot substitute non-invertible value into {}^{}",
                                v.name(),
                                e
                            ))
                        })?;
                        term = term.mul(&inv.pow((-e) as u32));
                    }
                } else {
                    residual.set(*v, *e);
                }
            }
            out = out.add(&term.mul(&Polynomial::from_monomial(residual, BigInt::one())));
        }
        Ok(out)
    }

    /// Substitute a single variable.
    pub fn subst(&self, v: Var, value: &Polynomial) -> Polynomial {
        let mut assign = BTreeMap::new();
        assign.insert(v, value.clone());
        self.specialize(&assign).expect("nonnegative exponents")
    }

    /// Set every x-variable to 1.
    pub fn eval_x_one(&self) -> Polynomial {
        let mut assign = BTreeMap::new();
        for v in self.vars() {
            if let Var::X(_) = v {
                assign.insert(v, Polynomial::one());
            }
        }
        self.specialize(&assign).expect("x substitution")
    }

    /// Set every y-variable to 0.
    pub fn eval_y_zero(&self) -> Polynomial {
        let mut assign = BTreeMap::new();
        for v in self.vars() {
            if let Var::Y(_) = v {
                assign.insert(v, Polynomial::zero());
            }
        }
        self.specialize(&assign).expect("y substitution")
    }

    /// Swap two variables everywhere.
    pub fn swap_vars(&self, a: Var, b: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            let ea = nm.exp(a);
            let eb = nm.exp(b);
            nm.set(a, eb);
            nm.set(b, ea);
            out.add_term(nm, c.clone());
        }
        out
    }

    /// True when every coefficient is positive.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    /// Coefficients as a dense vector in a single variable (which must be the
    /// only variable present). Index = exponent.
    pub fn dense_coeffs_in(&self, v: Var) -> Result<Vec<BigInt>, ForgeError> {
        let mut out: Vec<BigInt> = Vec::new();
        for (m, c) in &self.terms {
            for (mv, _) in m.iter() {
                if *mv != v {
                    return Err(ForgeError::Domain(format!(
                        "unexpected variable {} in univariate extraction",
                        mv.name()
                    )));
                }
            }
            let e = m.exp(v);
            if e < 0 {
                return Err(ForgeError::Domain("negative exponent".into()));
            }
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, BigInt::zero());
            }
            out[e] = c.clone();
        }
        Ok(out)
    }

    /// Collect terms by the exponent of `v`: returns exponent -> polynomial
    /// not involving `v`.
    pub fn coeffs_by_var(&self, v: Var) -> BTreeMap<i32, Polynomial> {
        let mut out: BTreeMap<i32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut rest = m.clone();
            rest.set(v, 0);
            out.entry(e)
                .or_insert_with(Polynomial::zero)
                .add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Display-ordered terms: total degree ascending, then lex descending.
    fn display_order(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut ts: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        ts.sort_by(|(ma, _), (mb, _)| {
            ma.degree()
                .cmp(&mb.degree())
                .then_with(|| mb.cmp(ma))
        });
        ts
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (v, e) in m.iter() {
                if *e == 1 {
                    factors.push(v.name());
                } else {
                    factors.push(format!("{}^{}", v.name(), e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut arr = Vec::new();
        for (m, c) in self.display_order() {
            let mut exps = serde_json::Map::new();
            for (v, e) in m.iter() {
                exps.insert(v.name(), serde_json::json!(e));
            }
            arr.push(serde_json::json!({
                "coef": c.to_string(),
                "exps": serde_json::Value::Object(exps),
            }));
        }
        serde_json::Value::Array(arr)
    }

    /// Parse an ASCII polynomial expression: integers, variables, `+ - * ^`
    /// and parentheses.
    pub fn parse(input: &str) -> Result<Polynomial, ForgeError> {
        Parser::new(input).parse_full()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Parser<'a> {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn err(&self, msg: &str) -> ForgeError {
        ForgeError::Parse(format!("{} at position {} in `{}`", msg, self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse_full(&mut self) -> Result<Polynomial, ForgeError> {
        let p = self.parse_sum()?;
        self.skip_ws();
        if self.pos != self.chars.len() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn parse_sum(&mut self) -> Result<Polynomial, ForgeError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.parse_product()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.parse_product()?
            }
            _ => self.parse_product()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_product()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.parse_product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_product(&mut self) -> Result<Polynomial, ForgeError> {
        let mut acc = self.parse_power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.parse_power()?);
                }
                // implicit multiplication: `3x1` or `x1x2` or `2(x1+1)`
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => {
                    acc = acc.mul(&self.parse_power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_power(&mut self) -> Result<Polynomial, ForgeError> {
        let base = self.parse_atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let mut neg = false;
            if self.peek() == Some('-') {
                neg = true;
                self.pos += 1;
            }
            let e = self.parse_integer()? as i32;
            if neg {
                let inv = base.term_inverse().ok_or_else(|| {
                    self.err("negative power of a non-invertible expression")
                })?;
                return Ok(inv.pow(e as u32));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn parse_integer(&mut self) -> Result<u32, ForgeError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<u32>()
            .map_err(|_| self.err("integer out of range"))
    }

    fn parse_atom(&mut self) -> Result<Polynomial, ForgeError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.parse_sum()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.parse_integer()?;
                Ok(Polynomial::constant(n as i64))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric())
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Var::parse(&name).map(Polynomial::var)
            }
            _ => Err(self.err("expected atom")),
        }
    }
}

/// `x^alpha` as a polynomial: `x1^a1 * x2^a2 * ...`.
pub fn x_monomial(alpha: &[u32]) -> Polynomial {
    let mut m = Monomial::one();
    for (i, a) in alpha.iter().enumerate() {
        m.set(Var::x(i + 1), *a as i32);
    }
    Polynomial::from_monomial(m, BigInt::one())
}

/// The staircase monomial `x^{delta_n} = x1^{n-1} x2^{n-2} ... x_{n-1}`.
pub fn staircase_monomial(n: usize) -> Polynomial {
    let alpha: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    x_monomial(&alpha)
}

/// `R_lambda(X, Y) = prod_{(i,j) in lambda} (x_i + y_j)`.
pub fn r_lambda(lambda: &[u32]) -> Polynomial {
    let mut out = Polynomial::one();
    for (i, len) in lambda.iter().enumerate() {
        for j in 1..=(*len as usize) {
            out = out.mul(&Polynomial::x(i + 1).add(&Polynomial::y(j)));
        }
    }
    out
}

/// `R_{delta_n}(X, Y)`, the double Schubert seed.
pub fn r_staircase(n: usize) -> Polynomial {
    let lambda: Vec<u32> = (1..n).rev().map(|k| k as u32).collect();
    r_lambda(&lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arith_basics() {
        let x1 = Polynomial::x(1);
        let y1 = Polynomial::y(1);
        let y2 = Polynomial::y(2);
        // (x1+y1)(x1+y2) = x1^2 + x1 y1 + x1 y2 + y1 y2
        let p = x1.add(&y1).mul(&x1.add(&y2));
        assert_eq!(p.num_terms(), 4);
        let expect = Polynomial::parse("x1^2 + x1*y1 + x1*y2 + y1*y2").unwrap();
        assert_eq!(p, expect);
        // p + 0 = p
        assert_eq!(p.add(&Polynomial::zero()), p);
    }

    #[test]
    fn staircase_expansion_term_count() {
        // R_{delta_3} = (x1+y1)(x1+y2)(x2+y1): 8 monomials, all distinct.
        let r = r_staircase(3);
        assert_eq!(r.num_terms(), 8);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = Polynomial::parse("3*x1^2*x2*beta - y1").unwrap();
        // canonical order: degree ascending
        assert_eq!(p.to_text(), "-y1 + 3*x1^2*x2*beta");
        let q = Polynomial::parse(&p.to_text()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn specialization_at_one() {
        let p = Polynomial::parse("x1 + x2 + x1*x2").unwrap();
        assert_eq!(p.eval_x_one(), Polynomial::constant(3));
    }

    #[test]
    fn laurent_params() {
        let q13 = Polynomial::parse("q13^-1").unwrap();
        let prod = q13.mul(&Polynomial::param("q13"));
        assert!(prod.is_one());
    }

    #[test]
    fn monomial_order_graded_lex() {
        let m = |s: &str| {
            let p = Polynomial::parse(s).unwrap();
            p.terms.keys().next().unwrap().clone()
        };
        assert!(m("x1^2") > m("x1*x2"));
        assert!(m("x1*x2") > m("x1*x3"));
        assert!(m("x2^2") < m("x1*x3")); // degree ties, x1 exponent decides
        assert!(m("x1^3") > m("x1*x2"));
        assert!(m("x1") < m("x1*x2"));
    }
}
