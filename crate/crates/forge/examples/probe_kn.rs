use plactic_forge::families::{kn_two_param, KnConvention};
use plactic_forge::perm::word_to_perm;
use plactic_forge::poly::{Polynomial, Var};

fn swap_ab(p: &Polynomial) -> Polynomial {
    let mut assign = std::collections::BTreeMap::new();
    assign.insert(Var::param("alpha"), Polynomial::param("beta"));
    assign.insert(Var::param("beta"), Polynomial::param("alpha"));
    p.specialize(&assign).unwrap()
}

fn main() {
    let beta = Polynomial::param("beta");
    let alpha = Polynomial::param("alpha");
    let printed: Vec<(&str, &str)> = vec![
        ("1", "beta + 1 + alpha*beta"),
        ("12", "1 + 2*alpha + alpha^2 + 3*alpha*beta + 3*alpha^2*beta + alpha*beta^2 + 2*alpha^2*beta^2"),
        ("21", "2 + 3*alpha + alpha^2 + beta + 3*alpha*beta + 2*alpha^2*beta + alpha^2*beta^2"),
        ("13", "(1 + alpha + alpha*beta)^2"),
        ("132", "2 + 5*alpha + 4*alpha^2 + alpha^3 + beta + 7*alpha*beta + 10*alpha^2*beta + 4*alpha^3*beta + 2*alpha*beta^2 + 7*alpha^2*beta^2 + 5*alpha^3*beta^2 + alpha^2*beta^3 + 2*alpha^3*beta^3"),
        ("121", "1 + 3*alpha + 3*alpha^2 + alpha^3 + 4*alpha*beta + 7*alpha^2*beta + 3*alpha^3*beta + alpha*beta^2 + 4*alpha^2*beta^2 + 3*alpha^3*beta^2 + alpha^3*beta^3"),
        ("321", "5 + 10*alpha + 6*alpha^2 + alpha^3 + 5*beta + 14*alpha*beta + 12*alpha^2*beta + 3*alpha^3*beta + beta^2 + 4*alpha*beta^2 + 6*alpha^2*beta^2 + 3*alpha^3*beta^2 + alpha^3*beta^3"),
        ("123", "1 + 3*alpha + 3*alpha^2 + alpha^3 + 6*alpha*beta + 12*alpha^2*beta + 6*alpha^3*beta + 4*alpha*beta^2 + 14*alpha^2*beta^2 + 10*alpha^3*beta^2 + alpha*beta^3 + 5*alpha^2*beta^3 + 5*alpha^3*beta^3"),
        ("3121", "3 + 10*alpha + 12*alpha^2 + 6*alpha^3 + alpha^4 + 2*beta + 16*alpha*beta + 29*alpha^2*beta + 19*alpha^3*beta + 4*alpha^4*beta + 7*alpha*beta^2 + 21*alpha^2*beta^2 + 20*alpha^3*beta^2 + 6*alpha^4*beta^2 + alpha*beta^3 + 4*alpha^2*beta^3 + 7*alpha^3*beta^3 + 4*alpha^4*beta^3 + alpha^4*beta^4"),
        ("1213", "1 + 4*alpha + 6*alpha^2 + 4*alpha^3 + alpha^4 + 7*alpha*beta + 20*alpha^2*beta + 19*alpha^3*beta + 6*alpha^4*beta + 4*alpha*beta^2 + 21*alpha^2*beta^2 + 29*alpha^3*beta^2 + 12*alpha^4*beta^2 + alpha*beta^3 + 7*alpha^2*beta^3 + 16*alpha^3*beta^3 + 10*alpha^4*beta^3 + 2*alpha^3*beta^4 + 3*alpha^4*beta^4"),
        ("2132", "3 + 9*alpha + 10*alpha^2 + 5*alpha^3 + alpha^4 + 3*beta + 16*alpha*beta + 28*alpha^2*beta + 20*alpha^3*beta + 5*alpha^4*beta + beta^2 + 7*alpha*beta^2 + 24*alpha^2*beta^2 + 28*alpha^3*beta^2 + 10*alpha^4*beta^2 + 7*alpha^2*beta^3 + 16*alpha^3*beta^3 + 9*alpha^4*beta^3 + alpha^2*beta^4 + 3*alpha^3*beta^4 + 3*alpha^4*beta^4"),
        ("21321", "3 + 12*alpha + 19*alpha^2 + 15*alpha^3 + 6*alpha^4 + alpha^5 + 3*beta + 21*alpha*beta + 49*alpha^2*beta + 52*alpha^3*beta + 26*alpha^4*beta + 5*alpha^5*beta + beta^2 + 9*alpha*beta^2 + 39*alpha^2*beta^2 + 64*alpha^3*beta^2 + 43*alpha^4*beta^2 + 10*alpha^5*beta^2 + 10*alpha^2*beta^3 + 32*alpha^3*beta^3 + 32*alpha^4*beta^3 + 10*alpha^5*beta^3 + alpha^2*beta^4 + 5*alpha^3*beta^4 + 9*alpha^4*beta^4 + 5*alpha^5*beta^4 + alpha^5*beta^5"),
        ("12321", "2 + 9*alpha + 16*alpha^2 + 14*alpha^3 + 6*alpha^4 + alpha^5 + beta + 18*alpha*beta + 54*alpha^2*beta + 64*alpha^3*beta + 33*alpha^4*beta + 6*alpha^5*beta + 14*alpha*beta^2 + 65*alpha^2*beta^2 + 101*alpha^3*beta^2 + 64*alpha^4*beta^2 + 14*alpha^5*beta^2 + 6*alpha*beta^3 + 33*alpha^2*beta^3 + 65*alpha^3*beta^3 + 54*alpha^4*beta^3 + 16*alpha^5*beta^3 + alpha*beta^4 + 6*alpha^2*beta^4 + 14*alpha^3*beta^4 + 18*alpha^4*beta^4 + 9*alpha^5*beta^4 + alpha^4*beta^5 + 2*alpha^5*beta^5"),
        ("121321", "1 + 6*alpha + 15*alpha^2 + 20*alpha^3 + 15*alpha^4 + 6*alpha^5 + alpha^6 + 10*alpha*beta + 45*alpha^2*beta + 81*alpha^3*beta + 73*alpha^4*beta + 33*alpha^5*beta + 6*alpha^6*beta + 5*alpha*beta^2 + 44*alpha^2*beta^2 + 116*alpha^3*beta^2 + 135*alpha^4*beta^2 + 73*alpha^5*beta^2 + 15*alpha^6*beta^2 + alpha*beta^3 + 15*alpha^2*beta^3 + 69*alpha^3*beta^3 + 116*alpha^4*beta^3 + 81*alpha^5*beta^3 + 20*alpha^6*beta^3 + alpha^2*beta^4 + 15*alpha^3*beta^4 + 44*alpha^4*beta^4 + 45*alpha^5*beta^4 + 15*alpha^6*beta^4 + alpha^3*beta^5 + 5*alpha^4*beta^5 + 10*alpha^5*beta^5 + 6*alpha^6*beta^5 + alpha^6*beta^6"),
    ];
    for (ws, ps) in printed {
        let word: Vec<u8> = ws.bytes().map(|b| b - b'0').collect();
        let rev: Vec<u8> = word.iter().rev().copied().collect();
        let target = Polynomial::parse(ps).unwrap();
        let w = word_to_perm(&word, 4);
        let wr = word_to_perm(&rev, 4);
        let a = kn_two_param(&w, &beta, &alpha, KnConvention::Sec1).eval_x_one();
        let b2 = kn_two_param(&wr, &beta, &alpha, KnConvention::Sec1).eval_x_one();
        let mut tags = Vec::new();
        if a == target { tags.push("fwd"); }
        if swap_ab(&a) == target { tags.push("fwd-swap"); }
        if b2 == target { tags.push("rev"); }
        if swap_ab(&b2) == target { tags.push("rev-swap"); }
        println!("{}: {:?}", ws, tags);
    }
}
