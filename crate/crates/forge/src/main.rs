use plactic_forge::divdiff::{pi_shift, pi_shift_inverse, OperatorSpec};
use plactic_forge::poly::{Monomial, Polynomial, Var};

fn monomials(n: usize, max_deg: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    fn gen(n: usize, i: usize, left: u32, cur: &Monomial, out: &mut Vec<Polynomial>) {
        if i > n {
            out.push(Polynomial::from_monomial(cur.clone(), 1.into()));
            return;
        }
        for d in 0..=left {
            let mut next = cur.clone();
            next.set(Var::x(i), d as i32);
            gen(n, i + 1, left - d, &next, out);
        }
    }
    gen(n, 1, max_deg, &Monomial::one(), &mut out);
    out
}

#[derive(Clone, Copy, Debug)]
struct Variant {
    left_inv: bool,  // product over 1..=i-1 uses inverses
    left_asc: bool,  // applied ascending
    right_from_i: bool, // right range starts at i (else i+1)
    right_inv: bool,
    right_asc: bool,
    shift_fwd: bool, // pi_shift vs pi_shift_inverse
}

fn apply_variant(v: Variant, spec: &OperatorSpec, i: usize, n: usize, f: &Polynomial) -> Polynomial {
    let mut acc = f.clone();
    let rlo = if v.right_from_i { i } else { i + 1 };
    let right: Vec<usize> = if v.right_asc {
        (rlo..=n - 1).collect()
    } else {
        (rlo..=n - 1).rev().collect()
    };
    let left: Vec<usize> = if v.left_asc {
        (1..=i.saturating_sub(1)).collect()
    } else {
        (1..=i.saturating_sub(1)).rev().collect()
    };
    for &a in &right {
        acc = if v.right_inv {
            spec.apply_inverse(a, &acc).unwrap()
        } else {
            spec.apply(a, &acc)
        };
    }
    acc = if v.shift_fwd {
        pi_shift(&acc, n)
    } else {
        pi_shift_inverse(&acc, n)
    };
    for &a in &left {
        acc = if v.left_inv {
            spec.apply_inverse(a, &acc).unwrap()
        } else {
            spec.apply(a, &acc)
        };
    }
    acc
}

fn main() {
    let n = 3usize;
    let t = Polynomial::param("t");
    let spec = OperatorSpec {
        a: t.clone(),
        b: t.neg(),
        c: Polynomial::one(),
        h: Polynomial::zero(),
        e: Polynomial::zero(),
    };
    let mono = monomials(n, 2);
    for li in [false, true] {
        for la in [false, true] {
            for rfi in [false, true] {
                for ri in [false, true] {
                    for ra in [false, true] {
                        for sf in [false, true] {
                            let v = Variant {
                                left_inv: li,
                                left_asc: la,
                                right_from_i: rfi,
                                right_inv: ri,
                                right_asc: ra,
                                shift_fwd: sf,
                            };
                            let mut ok = true;
                            'outer: for f in &mono {
                                for i in 1..=n {
                                    for j in i + 1..=n {
                                        let lhs = apply_variant(
                                            v, &spec, i, n,
                                            &apply_variant(v, &spec, j, n, f),
                                        );
                                        let rhs = apply_variant(
                                            v, &spec, j, n,
                                            &apply_variant(v, &spec, i, n, f),
                                        );
                                        if lhs != rhs {
                                            ok = false;
                                            break 'outer;
                                        }
                                    }
                                }
                            }
                            if ok {
                                println!("COMMUTES: {:?}", v);
                            }
                        }
                    }
                }
            }
        }
    }
    println!("probe done");
}
