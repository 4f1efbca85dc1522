//! Divided difference operators.
//!
//! The Newton operator on adjacent variables, its isobaric variants, the
//! multiplicative one-parameter deformation `d_{xy}(eta)` and the additive
//! deformation `d_{xy}[k]`. All operators divide exactly; division is done
//! by synthetic division against a linear binomial, with a zero-remainder
//! check.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::ForgeError;
use crate::poly::{Monomial, Polynomial, Var};

/// Exact division of `g` by `(x - t)` where `t` does not involve `x`.
/// Returns the quotient; errors when the remainder is nonzero.
pub fn divide_by_linear(g: &Polynomial, x: Var, t: &Polynomial) -> Result<Polynomial, ForgeError> {
    debug_assert!(t.vars().iter().all(|v| *v != x));
    if g.is_zero() {
        return Ok(Polynomial::zero());
    }
    let layers = g.coeffs_by_var(x);
    let top = *layers.keys().max().unwrap();
    if top == 0 {
        if layers.values().all(|p| p.is_zero()) {
            return Ok(Polynomial::zero());
        }
        return Err(ForgeError::Domain(format!(
            "division by {} - t leaves remainder {}",
            x.name(),
            g
        )));
    }
    let coeff = |a: i32| -> Polynomial { layers.get(&a).cloned().unwrap_or_else(Polynomial::zero) };
    // Synthetic division from the top degree down.
    let mut quot_layers: Vec<Polynomial> = vec![Polynomial::zero(); top as usize];
    let mut carry = coeff(top);
    for a in (1..=top).rev() {
        quot_layers[(a - 1) as usize] = carry.clone();
        carry = coeff(a - 1).add(&t.mul(&carry));
    }
    if !carry.is_zero() {
        return Err(ForgeError::Domain(format!(
            "division by {} - ({}) leaves remainder {}",
            x.name(),
            t,
            carry
        )));
    }
    let mut out = Polynomial::zero();
    for (a, layer) in quot_layers.into_iter().enumerate() {
        let xa = Polynomial::from_monomial(Monomial::var(x, a as i32), BigInt::one());
        out = out.add(&layer.mul(&xa));
    }
    Ok(out)
}

/// Newton divided difference on an arbitrary pair: `(f - f^{x<->y}) / (x - y)`.
pub fn partial_pair(f: &Polynomial, x: Var, y: Var) -> Polynomial {
    let swapped = f.swap_vars(x, y);
    let num = f.sub(&swapped);
    let t = Polynomial::var(y);
    divide_by_linear(&num, x, &t).expect("antisymmetric numerator divides exactly")
}

/// `d_i = d_{x_i, x_{i+1}}` acting on the x alphabet only.
pub fn partial(f: &Polynomial, i: usize) -> Polynomial {
    partial_pair(f, Var::x(i), Var::x(i + 1))
}

/// `d_{ij}` on x-variables (i < j or i > j; `d_{ji} = -d_{ij}`).
pub fn partial_ij(f: &Polynomial, i: usize, j: usize) -> Polynomial {
    if i < j {
        partial_pair(f, Var::x(i), Var::x(j))
    } else {
        partial_pair(f, Var::x(j), Var::x(i)).neg()
    }
}

/// Simple transposition of `x_i` and `x_{i+1}`.
pub fn swap_adjacent(f: &Polynomial, i: usize) -> Polynomial {
    f.swap_vars(Var::x(i), Var::x(i + 1))
}

/// Isobaric (Demazure) operator: `pi_i(f) = d_i(x_i f)`.
pub fn pi(f: &Polynomial, i: usize) -> Polynomial {
    partial(&f.mul_var(Var::x(i)), i)
}

/// Reduced isobaric operator `pibar_i = pi_i - 1`.
pub fn pi_bar(f: &Polynomial, i: usize) -> Polynomial {
    pi(f, i).sub(f)
}

/// The twisted transposition `s^{eta}_{xy}`: sends `x -> eta^{-1} y`,
/// `y -> eta x`. `eta` must be an invertible term in the parameters.
pub fn twisted_swap(
    f: &Polynomial,
    x: Var,
    y: Var,
    eta: &Polynomial,
) -> Result<Polynomial, ForgeError> {
    let eta_inv = eta.term_inverse().ok_or_else(|| {
        ForgeError::Domain(format!("eta = {} is not an invertible term", eta))
    })?;
    let mut assign = std::collections::BTreeMap::new();
    assign.insert(x, eta_inv.mul(&Polynomial::var(y)));
    assign.insert(y, eta.mul(&Polynomial::var(x)));
    f.specialize(&assign)
}

/// Multiplicative generalized divided difference:
/// `d_{xy}(eta) f = (f - s^{eta}_{xy} f) / (x - eta^{-1} y)`.
pub fn partial_eta(
    f: &Polynomial,
    x: Var,
    y: Var,
    eta: &Polynomial,
) -> Result<Polynomial, ForgeError> {
    let eta_inv = eta.term_inverse().ok_or_else(|| {
        ForgeError::Domain(format!("eta = {} is not an invertible term", eta))
    })?;
    let swapped = twisted_swap(f, x, y, eta)?;
    let num = f.sub(&swapped);
    let t = eta_inv.mul(&Polynomial::var(y));
    divide_by_linear(&num, x, &t)
}

/// Additive (affine) generalized divided difference:
/// `d_{xy}[k] f = (f - f(y-k, x+k)) / (x - y + k)`.
pub fn partial_additive(f: &Polynomial, x: Var, y: Var, k: i64) -> Result<Polynomial, ForgeError> {
    let mut assign = std::collections::BTreeMap::new();
    assign.insert(x, Polynomial::var(y).sub(&Polynomial::constant(k)));
    assign.insert(y, Polynomial::var(x).add(&Polynomial::constant(k)));
    let moved = f.specialize(&assign)?;
    let num = f.sub(&moved);
    let t = Polynomial::var(y).sub(&Polynomial::constant(k));
    divide_by_linear(&num, x, &t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn newton_basics() {
        assert_eq!(partial(&p("x1"), 1), p("1"));
        assert_eq!(partial(&p("x1^2*x2"), 1), p("x1*x2"));
        assert_eq!(partial(&p("x1+x2"), 1), Polynomial::zero());
        // d_i^2 = 0
        let f = p("x1^3*x2 + 2*x1*x3^2 + x2^2");
        assert_eq!(partial(&partial(&f, 1), 1), Polynomial::zero());
    }

    #[test]
    fn isobaric_basics() {
        assert_eq!(pi(&p("x1"), 1), p("x1+x2"));
        assert_eq!(pi(&p("1"), 1), p("1"));
        assert_eq!(pi_bar(&p("x1"), 1), p("x2"));
        // pi^2 = pi, pibar^2 = -pibar
        let f = p("x1^2*x2 + x1*x3");
        assert_eq!(pi(&pi(&f, 1), 1), pi(&f, 1));
        assert_eq!(pi_bar(&pi_bar(&f, 1), 1), pi_bar(&f, 1).neg());
    }

    #[test]
    fn braid_relation() {
        let f = p("x1^3*x2^2*x3 + x1*x2*x3 + x2^4");
        let lhs = partial(&partial(&partial(&f, 1), 2), 1);
        let rhs = partial(&partial(&partial(&f, 2), 1), 2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eta_deformation() {
        let eta = Polynomial::param("eta");
        let x = Var::x(1);
        let y = Var::x(2);
        // d(1) with eta = 1 is the Newton operator.
        let d1 = partial_eta(&p("x1"), x, y, &Polynomial::one()).unwrap();
        assert_eq!(d1, p("1"));
        // d_{xy}(eta)^2 = 0.
        let f = p("x1^2*x2 + 3*x1*x2^2 + x1");
        let once = partial_eta(&f, x, y, &eta).unwrap();
        let twice = partial_eta(&once, x, y, &eta).unwrap();
        assert!(twice.is_zero());
        // crossing relation: x d(eta) = eta^{-1} d(eta) y + 1.
        let g = p("x1^2*x2 + x2^3 + 5");
        let lhs = partial_eta(&g, x, y, &eta).unwrap().mul(&p("x1"));
        let rhs = partial_eta(&g.mul(&p("x2")), x, y, &eta)
            .unwrap()
            .mul(&p("eta^-1"))
            .add(&g);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_deformation() {
        let x = Var::x(1);
        let y = Var::x(2);
        let f = p("x1^2*x2 + x2^2");
        let once = partial_additive(&f, x, y, 3).unwrap();
        let twice = partial_additive(&once, x, y, 3).unwrap();
        assert!(twice.is_zero());
    }

    #[test]
    fn three_term_relation_multiplicative() {
        // d_xy(eta) d_yz(xi) = eta^{-1} d_xz(eta xi) d_xy(eta) + d_yz(xi) d_xz(eta xi)
        let (x, y, z) = (Var::x(1), Var::x(2), Var::x(3));
        let eta = Polynomial::param("eta");
        let xi = Polynomial::param("xi");
        let etaxi = eta.mul(&xi);
        let f = p("x1^2*x2*x3 + x1*x3^2 + x2^2 + x1*x2");
        let lhs = partial_eta(&partial_eta(&f, y, z, &xi).unwrap(), x, y, &eta).unwrap();
        let t1 = partial_eta(&partial_eta(&f, x, y, &eta).unwrap(), x, z, &etaxi)
            .unwrap()
            .mul(&p("eta^-1"));
        let t2 = partial_eta(&partial_eta(&f, x, z, &etaxi).unwrap(), y, z, &xi).unwrap();
        assert_eq!(lhs, t1.add(&t2));
    }
}
