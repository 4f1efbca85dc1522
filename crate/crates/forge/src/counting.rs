//! Closed-form and determinant counting: alternating sign matrices, plane
//! partition families, refined staircase-tableau polynomials, column
//! multi-Schur determinants, Genocchi specializations and Kostka numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ForgeError;
use crate::plactic::enumerate_tableaux;
use crate::poly::{Monomial, Polynomial, Var};

/// Binomial coefficient with the convention that any negative argument
/// (or k > n) gives zero.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    exact_div(num, den)
}

pub fn factorial(n: u64) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=n {
        out *= i;
    }
    out
}

fn exact_div(num: BigInt, den: BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "non-exact division in a product formula");
    q
}

/// Number of n x n alternating sign matrices.
pub fn asm(n: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= factorial(3 * i + 1);
        den *= factorial(n + i);
    }
    exact_div(num, den)
}

/// Refined count `A_{n,j}`: ASMs with the top-row 1 in column j.
pub fn asm_refined(n: u64, j: u64) -> BigInt {
    assert!((1..=n).contains(&j));
    let mut num = binomial((n + j - 2) as i64, (j - 1) as i64);
    num *= factorial(2 * n - j - 1);
    let mut den = factorial(n - j);
    for i in 0..n.saturating_sub(1) {
        num *= factorial(3 * i + 1);
        den *= factorial(n + i);
    }
    exact_div(num, den)
}

/// Totally symmetric plane partitions in an n-cube.
pub fn tspp(n: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=n {
        for j in i..=n {
            for k in j..=n {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
        }
    }
    exact_div(num, den)
}

/// Plane partitions in an n-cube.
pub fn pp(n: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=n {
        num *= binomial((2 * n + i) as i64, n as i64);
        den *= binomial((n + i) as i64, n as i64);
    }
    exact_div(num, den)
}

/// `#B_{n,k}`: semistandard tableaux of shape inside the `n^k` box with
/// entries at most k; equals the number of symmetric plane partitions in an
/// `n x k x k` box.
pub fn b_nk(n: u64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=k {
        for j in i..=k {
            num *= i + j + n - 1;
            den *= i + j - 1;
        }
    }
    exact_div(num, den)
}

/// Symmetric plane partitions in an n-cube, via `B_{n-1,n-1}`.
pub fn spp(n: u64) -> BigInt {
    assert!(n >= 1);
    b_nk(n - 1, n - 1)
}

pub fn catalan(n: u64) -> BigInt {
    exact_div(binomial(2 * n as i64, n as i64), BigInt::from(n + 1))
}

/// Large Schroeder numbers: 1, 2, 6, 22, 90, ...
pub fn schroeder(n: u64) -> BigInt {
    // S(0) = 1; (n+1) S(n) = 3(2n-1) S(n-1) - (n-2) S(n-2)
    let mut prev = BigInt::one();
    if n == 0 {
        return prev;
    }
    let mut cur = BigInt::from(2);
    for m in 2..=n {
        let next = exact_div(
            BigInt::from(3 * (2 * m as i64 - 1)) * &cur - BigInt::from(m as i64 - 2) * &prev,
            BigInt::from(m as i64 + 1),
        );
        prev = cur;
        cur = next;
    }
    cur
}

/// Unsigned Genocchi numbers of the first kind, indexed so that
/// `genocchi1(n) = |G_{2n}|`: 1, 1, 3, 17, 155, 2073, 38227, ...
/// Computed through the Gandhi polynomial recurrence
/// `F_{m+1}(x) = x^2 F_m(x+1) - (x-1)^2 F_m(x)`, `F_1 = 1`, value at x = 1.
pub fn genocchi1(n: u64) -> BigInt {
    assert!(n >= 1);
    let x = Polynomial::x(1);
    let xp1 = x.add(&Polynomial::one());
    let mut f = Polynomial::one();
    for _ in 1..n {
        let shifted = f.subst(Var::x(1), &xp1);
        let xm1sq = x.sub(&Polynomial::one()).pow(2);
        f = x.pow(2).mul(&shifted).sub(&xm1sq.mul(&f));
    }
    f.subst(Var::x(1), &Polynomial::one()).constant_term()
}

/// Genocchi numbers of the second kind (A005439): 1, 2, 8, 56, 608, 9440, ...
pub fn genocchi2(n: u64) -> BigInt {
    const SEED: [i64; 8] = [1, 2, 8, 56, 608, 9440, 198272, 5410688];
    assert!((1..=SEED.len() as u64).contains(&n));
    BigInt::from(SEED[(n - 1) as usize])
}

/// Number of forests on n labeled vertices (A001858).
pub fn forests(n: u64) -> BigInt {
    const SEED: [i64; 8] = [1, 1, 2, 7, 38, 291, 2932, 36961];
    assert!((n as usize) < SEED.len());
    BigInt::from(SEED[n as usize])
}

/// Kostka number: semistandard tableaux of the given shape and content.
pub fn kostka(shape: &[u32], content: &[u32]) -> BigInt {
    let bound = content.len() as u8;
    let mut count = 0u64;
    for t in enumerate_tableaux(shape, bound, &|_, _, _| true) {
        if t.content(content.len()) == content {
            count += 1;
        }
    }
    BigInt::from(count)
}

/// Conjugate partition.
pub fn conjugate(lambda: &[u32]) -> Vec<u32> {
    if lambda.is_empty() {
        return Vec::new();
    }
    let cols = lambda[0] as usize;
    (1..=cols)
        .map(|c| lambda.iter().filter(|&&l| l as usize >= c).count() as u32)
        .collect()
}

/// Determinant of an integer matrix (Laplace expansion; the matrices here
/// stay small).
pub fn det_bigint(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut out = BigInt::zero();
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = top * det_bigint(&minor);
        if j % 2 == 0 {
            out += term;
        } else {
            out -= term;
        }
    }
    out
}

/// Determinant of a polynomial matrix.
pub fn det_poly(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut out = Polynomial::zero();
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = top.mul(&det_poly(&minor));
        out = if j % 2 == 0 { out.add(&term) } else { out.sub(&term) };
    }
    out
}

/// `|A(lambda; N)| = det | C(N-i, lambda'_j - j + i) |`, indices over
/// `1..=lambda_1`: staircase-constrained tableaux with entries below N.
pub fn a_lambda_count(lambda: &[u32], n_cap: u64) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    let size = lambda[0] as usize;
    let conj = conjugate(lambda);
    let entry = |i: usize, j: usize| -> BigInt {
        let lj = conj.get(j - 1).copied().unwrap_or(0) as i64;
        binomial(n_cap as i64 - i as i64, lj - j as i64 + i as i64)
    };
    let m: Vec<Vec<BigInt>> = (1..=size)
        .map(|i| (1..=size).map(|j| entry(i, j)).collect())
        .collect();
    det_bigint(&m)
}

/// The t-refined determinant
/// `A_lambda(N; t) = det | C(N-i-1, lambda'_j - j + i - 1) + t C(N-i-1, lambda'_j - j + i) |`.
pub fn a_lambda_tpoly(lambda: &[u32], n_cap: u64) -> Polynomial {
    if lambda.is_empty() {
        return Polynomial::one();
    }
    let size = lambda[0] as usize;
    let conj = conjugate(lambda);
    let t = Polynomial::param("t");
    let entry = |i: usize, j: usize| -> Polynomial {
        let lj = conj.get(j - 1).copied().unwrap_or(0) as i64;
        let base = binomial(n_cap as i64 - i as i64 - 1, lj - j as i64 + i as i64 - 1);
        let tc = binomial(n_cap as i64 - i as i64 - 1, lj - j as i64 + i as i64);
        Polynomial::from_monomial(Monomial::one(), base)
            .add(&t.mul(&Polynomial::from_monomial(Monomial::one(), tc)))
    };
    let m: Vec<Vec<Polynomial>> = (1..=size)
        .map(|i| (1..=size).map(|j| entry(i, j)).collect())
        .collect();
    det_poly(&m)
}

/// Direct enumeration of `A(lambda; N)`: SSYT of the given shape, entries
/// `<= N-1`, every entry k within the first k columns. Returns the tableau
/// count and the t-polynomial with statistic `lambda_1 - #(entries = N-1)`.
pub fn a_lambda_enumerate(lambda: &[u32], n_cap: u64) -> (BigInt, Polynomial) {
    let tableaux = enumerate_tableaux(lambda, (n_cap - 1) as u8, &|_, c, e| e as usize >= c + 1);
    let t = Polynomial::param("t");
    let lam1 = lambda.first().copied().unwrap_or(0);
    let mut poly = Polynomial::zero();
    for tab in &tableaux {
        let maxcount = tab
            .rows
            .iter()
            .flat_map(|r| r.iter())
            .filter(|&&e| e as u64 == n_cap - 1)
            .count() as u32;
        poly = poly.add(&t.pow(lam1 - maxcount));
    }
    (BigInt::from(tableaux.len()), poly)
}

/// Elementary symmetric polynomial `e_k(x_1..x_m)`.
pub fn elementary_symmetric(k: i64, m: usize) -> Polynomial {
    if k < 0 || k as usize > m {
        return Polynomial::zero();
    }
    let mut out = vec![Polynomial::zero(); k as usize + 1];
    out[0] = Polynomial::one();
    for i in 1..=m {
        for d in (1..=k as usize).rev() {
            let bump = out[d - 1].mul(&Polynomial::x(i));
            out[d] = out[d].add(&bump);
        }
    }
    out[k as usize].clone()
}

/// Column multi-Schur polynomial `s*_lambda(X_N) = det | e_{lambda'_j - j + i}(X_{N-i}) |`.
pub fn column_multischur(lambda: &[u32], n_vars: usize) -> Polynomial {
    if lambda.is_empty() {
        return Polynomial::one();
    }
    let size = lambda[0] as usize;
    let conj = conjugate(lambda);
    let m: Vec<Vec<Polynomial>> = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| {
                    let lj = conj.get(j - 1).copied().unwrap_or(0) as i64;
                    elementary_symmetric(lj - j as i64 + i as i64, n_vars - i)
                })
                .collect()
        })
        .collect();
    det_poly(&m)
}

/// The t-deformation
/// `s*_lambda(X_N; t) = det | x_{N-i} e_{lambda'_j-j+i-1}(X_{N-i-1}) + t e_{lambda'_j-j+i}(X_{N-i-1}) |`.
pub fn column_multischur_t(lambda: &[u32], n_vars: usize) -> Polynomial {
    if lambda.is_empty() {
        return Polynomial::one();
    }
    let size = lambda[0] as usize;
    let conj = conjugate(lambda);
    let t = Polynomial::param("t");
    let m: Vec<Vec<Polynomial>> = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| {
                    let lj = conj.get(j - 1).copied().unwrap_or(0) as i64;
                    let head = Polynomial::x(n_vars - i).mul(&elementary_symmetric(
                        lj - j as i64 + i as i64 - 1,
                        n_vars - i - 1,
                    ));
                    let tail =
                        t.mul(&elementary_symmetric(lj - j as i64 + i as i64, n_vars - i - 1));
                    head.add(&tail)
                })
                .collect()
        })
        .collect();
    det_poly(&m)
}

/// Principal specialization `x_i := q^{i-1}` of a polynomial in x-variables
/// and `t`.
pub fn principal_specialization(p: &Polynomial, n_vars: usize) -> Polynomial {
    let q = Polynomial::param("q");
    let mut assign = std::collections::BTreeMap::new();
    for i in 1..=n_vars {
        assign.insert(Var::x(i), q.pow((i - 1) as u32));
    }
    p.specialize(&assign).expect("principal specialization")
}

/// Staircase partition `delta_n = (n-1, ..., 1)`.
pub fn staircase(n: usize) -> Vec<u32> {
    (1..n).rev().map(|k| k as u32).collect()
}

/// Dense t-coefficients of a polynomial in the parameter `t` alone.
pub fn t_coefficients(p: &Polynomial) -> Result<Vec<BigInt>, ForgeError> {
    p.dense_coeffs_in(Var::param("t"))
}

/// Substitute an integer for `t`.
pub fn eval_at_t(p: &Polynomial, value: i64) -> BigInt {
    p.subst(Var::param("t"), &Polynomial::constant(value))
        .constant_term()
}

/// Split a polynomial as `A + x_m B` (it must be linear in `x_m`).
pub fn split_linear(p: &Polynomial, m: usize) -> (Polynomial, Polynomial) {
    let layers = p.coeffs_by_var(Var::x(m));
    let a = layers.get(&0).cloned().unwrap_or_else(Polynomial::zero);
    let b = layers.get(&1).cloned().unwrap_or_else(Polynomial::zero);
    assert!(
        layers.keys().all(|&e| e == 0 || e == 1),
        "polynomial is not linear in x{}",
        m
    );
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn asm_values() {
        let values: Vec<BigInt> = (1..=6).map(asm).collect();
        let expect: Vec<BigInt> = [1i64, 2, 7, 42, 429, 7436]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(values, expect);
        assert_eq!(asm_refined(4, 1), BigInt::from(7));
        assert_eq!(asm_refined(4, 2), BigInt::from(14));
        let total: BigInt = (1..=5).map(|j| asm_refined(5, j)).sum();
        assert_eq!(total, asm(5));
    }

    #[test]
    fn counting_basics() {
        assert_eq!(b_nk(3, 3), BigInt::from(112));
        assert_eq!(tspp(4) * asm(3), b_nk(3, 3));
        assert_eq!(catalan(5), BigInt::from(42));
        assert_eq!(genocchi1(6), BigInt::from(2073));
        assert_eq!(genocchi1(7), BigInt::from(38227));
        assert_eq!(forests(3), BigInt::from(7));
    }

    #[test]
    fn refined_vector_a4() {
        // the 14 shapes inside delta_4 in the displayed order
        let shapes: Vec<Vec<u32>> = vec![
            vec![],
            vec![1],
            vec![2],
            vec![1, 1],
            vec![3],
            vec![2, 1],
            vec![1, 1, 1],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![3, 2],
            vec![3, 1, 1],
            vec![2, 2, 1],
            vec![3, 2, 1],
        ];
        let counts: Vec<BigInt> = shapes.iter().map(|l| a_lambda_count(l, 4)).collect();
        let expect: Vec<BigInt> = [1i64, 3, 5, 3, 5, 6, 1, 6, 3, 2, 3, 2, 1, 1]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(counts, expect);
        // determinant count matches enumeration, t-statistics agree
        for shape in &shapes {
            let (count, tpoly) = a_lambda_enumerate(shape, 4);
            assert_eq!(count, a_lambda_count(shape, 4), "shape {:?}", shape);
            assert_eq!(tpoly, a_lambda_tpoly(shape, 4), "shape {:?}", shape);
        }
    }

    #[test]
    fn refined_sum_is_refined_asm() {
        // sum over shapes of the max-letter statistic gives the refined ASM
        // distribution (7, 14, 14, 7) at n = 4
        let n = 4u64;
        let mut dist = vec![BigInt::zero(); n as usize];
        for shape in crate::plactic::staircase_shapes(n as usize) {
            let tableaux =
                enumerate_tableaux(&shape, (n - 1) as u8, &|_, c, e| e as usize >= c + 1);
            for t in tableaux {
                let stat = t
                    .rows
                    .iter()
                    .flat_map(|r| r.iter())
                    .filter(|&&e| e as u64 == n - 1)
                    .count();
                dist[stat] += 1;
            }
        }
        let expect: Vec<BigInt> = (1..=n).map(|j| asm_refined(n, j)).collect();
        assert_eq!(dist, expect);
    }

    #[test]
    fn genocchi_product_form() {
        // A_{delta_4}(5; t) = (1+2t)(1+3t)(1+4t)
        let tpoly = a_lambda_tpoly(&staircase(4), 5);
        let expect = Polynomial::parse("(1+2*t)*(1+3*t)*(1+4*t)").unwrap();
        assert_eq!(tpoly, expect);
    }

    #[test]
    fn multischur_matches_binomial_det() {
        // specialization x = 1 of s* equals the binomial determinant count
        for shape in [vec![2u32, 1], vec![3, 1], vec![2, 2, 1]] {
            let s = column_multischur(&shape, 6);
            assert_eq!(s.eval_x_one().constant_term(), a_lambda_count(&shape, 6));
        }
    }

    #[test]
    fn kostka_identity_n3() {
        assert_eq!(kostka(&[2, 1], &[2, 1, 0]), BigInt::from(1));
        assert_eq!(kostka(&[2, 1], &[1, 1, 1]), BigInt::from(2));
    }
}
