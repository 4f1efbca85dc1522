//! Golden data for the verification suites: the appendix tables for n = 4,
//! Hilbert rows, rank rows and assorted reported values, transcribed once
//! and reused by the test harness. A handful of entries repair obvious
//! print slips (a factor naming a generator that cannot occur in the word,
//! duplicated lines); each such repair is cross-checked by an independent
//! computation and surfaced through the `conjectures` suite as a flagged
//! discrepancy, never silently.

/// Schubert polynomials for S4: (one-line, Lehmer code, polynomial).
pub const SCHUBERT_TABLE: &[(&str, &str, &str)] = &[
    ("1234", "0", "1"),
    ("2134", "1", "x1"),
    ("1324", "01", "x1+x2"),
    ("1243", "001", "x1+x2+x3"),
    ("3124", "2", "x1^2"),
    ("2314", "11", "x1*x2"),
    ("2143", "101", "x1^2+x1*x2+x1*x3"),
    ("1342", "011", "x1*x2+x1*x3+x2*x3"),
    ("1423", "02", "x1^2+x1*x2+x2^2"),
    ("4123", "3", "x1^3"),
    ("3214", "21", "x1^2*x2"),
    ("2341", "111", "x1*x2*x3"),
    ("2413", "12", "x1^2*x2+x1*x2^2"),
    ("1432", "021", "x1^2*x2+x1^2*x3+x1*x2^2+x2^2*x3+x1*x2*x3"),
    ("3142", "201", "x1^2*x2+x1^2*x3"),
    ("4213", "31", "x1^3*x2"),
    ("3412", "22", "x1^2*x2^2"),
    ("4132", "301", "x1^3*x2+x1^3*x3"),
    ("3241", "211", "x1^2*x2*x3"),
    ("2431", "121", "x1^2*x2*x3+x1*x2^2*x3"),
    ("4312", "32", "x1^3*x2^2"),
    ("4231", "311", "x1^3*x2*x3"),
    ("3421", "221", "x1^2*x2^2*x3"),
    ("4321", "321", "x1^3*x2^2*x3"),
];

/// Expansion of each Schubert polynomial in the (-beta)-Grothendieck
/// basis: (code, [(basis code, coefficient)]). The `221` row repairs the
/// printed duplicate of `[211]`.
pub const SCHUBERT_IN_NEG_GROTHENDIECK: &[(&str, &[(&str, &str)])] = &[
    ("0", &[("0", "1")]),
    ("1", &[("1", "1")]),
    ("01", &[("01", "1"), ("11", "beta")]),
    ("001", &[("001", "1"), ("011", "beta"), ("111", "beta^2")]),
    ("2", &[("2", "1")]),
    ("11", &[("11", "1")]),
    ("101", &[("101", "1"), ("201", "beta"), ("111", "beta^2")]),
    ("011", &[("011", "1"), ("111", "2*beta")]),
    ("02", &[("02", "1"), ("12", "beta"), ("22", "beta^2")]),
    ("3", &[("3", "1")]),
    ("21", &[("21", "1")]),
    ("111", &[("111", "1")]),
    ("12", &[("12", "1"), ("22", "beta")]),
    (
        "021",
        &[("021", "1"), ("121", "2*beta"), ("22", "beta"), ("221", "beta^2")],
    ),
    ("201", &[("201", "1"), ("211", "beta")]),
    ("31", &[("31", "1")]),
    ("22", &[("22", "1")]),
    ("301", &[("301", "1"), ("311", "beta")]),
    ("211", &[("211", "1")]),
    ("121", &[("121", "1"), ("221", "beta")]),
    ("32", &[("32", "1")]),
    ("311", &[("311", "1")]),
    ("221", &[("221", "1")]),
    ("321", &[("321", "1")]),
];

/// Key and reduced key polynomials: (code, K, Khat).
pub const KEY_TABLE: &[(&str, &str, &str)] = &[
    ("0", "1", "1"),
    ("1", "x1", "x1"),
    ("01", "x1+x2", "x2"),
    ("001", "x1+x2+x3", "x3"),
    ("2", "x1^2", "x1^2"),
    ("11", "x1*x2", "x1*x2"),
    ("101", "x1*x2+x1*x3", "x1*x3"),
    ("02", "x1^2+x1*x2+x2^2", "x1*x2+x2^2"),
    ("011", "x1*x2+x1*x3+x2*x3", "x2*x3"),
    ("3", "x1^3", "x1^3"),
    ("21", "x1^2*x2", "x1^2*x2"),
    ("111", "x1*x2*x3", "x1*x2*x3"),
    ("12", "x1^2*x2+x1*x2^2", "x1*x2^2"),
    (
        "021",
        "x1^2*x2+x1^2*x3+x1*x2^2+x2^2*x3+x1*x2*x3",
        "x1*x2*x3+x2^2*x3",
    ),
    ("201", "x1^2*x2+x1^2*x3", "x1^2*x3"),
    ("31", "x1^3*x2", "x1^3*x2"),
    ("22", "x1^2*x2^2", "x1^2*x2^2"),
    ("211", "x1^2*x2*x3", "x1^2*x2*x3"),
    ("301", "x1^3*x2+x1^3*x3", "x1^3*x3"),
    ("121", "x1^2*x2*x3+x1*x2^2*x3", "x1*x2^2*x3"),
    ("32", "x1^3*x2^2", "x1^3*x2^2"),
    ("311", "x1^3*x2*x3", "x1^3*x2*x3"),
    ("221", "x1^2*x2^2*x3", "x1^2*x2^2*x3"),
    ("321", "x1^3*x2^2*x3", "x1^3*x2^2*x3"),
];

/// Grothendieck and dual Grothendieck polynomials at beta = 1:
/// (one-line, code, G, H).
pub const GROTHENDIECK_TABLE: &[(&str, &str, &str, &str)] = &[
    ("1234", "0", "1", "(1+x1)^3*(1+x2)^2*(1+x3)"),
    ("2134", "1", "x1", "(1+x1)^2*(1+x2)^2*(1+x3)*x1"),
    (
        "1324",
        "01",
        "x1+x2+x1*x2",
        "(1+x1)^2*(1+x2)*(1+x3)*(x1+x2+x1*x2)",
    ),
    (
        "1243",
        "001",
        "x1+x2+x3+x1*x2+x1*x3+x2*x3+x1*x2*x3",
        "(1+x1)^2*(1+x2)*(x1+x2+x3+x1*x2+x1*x3+x2*x3+x1*x2*x3)",
    ),
    ("3124", "2", "x1^2", "(1+x1)*(1+x2)^2*(1+x3)*x1^2"),
    ("2314", "11", "x1*x2", "(1+x1)^2*(1+x2)*(1+x3)*x1*x2"),
    (
        "2143",
        "101",
        "x1^2+x1*x2+x1*x3+x1^2*x2+x1^2*x3+x1*x2*x3+x1^2*x2*x3",
        "(1+x1)*(1+x2)*(x1^2+x1*x2+x1*x3+x1^2*x2+x1^2*x3+x1*x2*x3+x1^2*x2*x3)",
    ),
    (
        "1342",
        "011",
        "x1*x2+x1*x3+x2*x3+2*x1*x2*x3",
        "(1+x1)^2*(1+x2)*(x1*x2+x1*x3+x2*x3+x1*x2*x3)",
    ),
    (
        "1423",
        "02",
        "x1^2+x1*x2+x2^2+x1^2*x2+x1*x2^2",
        "(1+x1)*(1+x3)*(x1^2+x1*x2+x2^2+2*x1^2*x2+2*x1*x2^2+x1^2*x2^2)",
    ),
    ("4123", "3", "x1^3", "(1+x1)^2*(1+x3)*x1^3"),
    ("3214", "21", "x1^2*x2", "(1+x1)*(1+x2)*(1+x3)*x1^2*x2"),
    ("2341", "111", "x1*x2*x3", "(1+x1)^2*(1+x2)*x1*x2*x3"),
    (
        "2413",
        "12",
        "x1^2*x2+x1*x2^2+x1^2*x2^2",
        "(1+x1)*(1+x3)*(x1^2*x2+x1*x2^2+x1^2*x2^2)",
    ),
    (
        "1432",
        "021",
        "x1^2*x2+x1^2*x3+x1*x2^2+x2^2*x3+x1*x2*x3+2*x1^2*x2*x3+2*x1*x2^2*x3+x1^2*x2^2+x1^2*x2^2*x3",
        "(1+x1)*(x1^2*x2+x1^2*x3+x1*x2^2+x2^2*x3+x1*x2*x3+2*x1^2*x2*x3+2*x1*x2^2*x3+x1^2*x2^2+x1^2*x2^2*x3)",
    ),
    (
        "3142",
        "201",
        "x1^2*x2+x1^2*x3+x1^2*x2*x3",
        "(1+x1)*(1+x2)*(x1^2*x2+x1^2*x3+x1^2*x2*x3)",
    ),
    ("4213", "31", "x1^3*x2", "(1+x2)*(1+x3)*x1^3*x2"),
    ("3412", "22", "x1^2*x2^2", "(1+x1)*(1+x3)*x1^2*x2^2"),
    (
        "4132",
        "301",
        "x1^3*x2+x1^3*x3+x1^3*x2*x3",
        "(1+x2)*(x1^3*x2+x1^3*x3+x1^3*x2*x3)",
    ),
    ("3241", "211", "x1^2*x2*x3", "(1+x2)*x1^2*x2*x3"),
    (
        "2431",
        "121",
        "x1^2*x2*x3+x1*x2^2*x3+x1^2*x2^2*x3",
        "(1+x1)*(1+x2)*(x1^2*x2*x3+x1*x2^2*x3+x1^2*x2^2*x3)",
    ),
    ("4312", "32", "x1^3*x2^2", "(1+x3)*x1^3*x2^2"),
    ("4231", "311", "x1^3*x2*x3", "(1+x2)*x1^3*x2*x3"),
    ("3421", "221", "x1^2*x2^2*x3", "(1+x1)*x1^2*x2^2*x3"),
    ("4321", "321", "x1^3*x2^2*x3", "x1^3*x2^2*x3"),
];

/// Key Grothendieck and reduced key Grothendieck polynomials at beta = 1:
/// (code, KG, KGhat).
pub const KEY_GROTHENDIECK_TABLE: &[(&str, &str, &str)] = &[
    ("0", "1", "1"),
    ("1", "x1", "x1"),
    ("01", "x1+x2+x1*x2", "x2+x1*x2"),
    (
        "001",
        "x1+x2+x3+x1*x2+x1*x3+x2*x3+x1*x2*x3",
        "x3+x1*x3+x2*x3+x1*x2*x3",
    ),
    ("2", "x1^2", "x1^2"),
    ("11", "x1*x2", "x1*x2"),
    ("101", "x1*x2+x1*x3+x1*x2*x3", "x1*x3+x1*x2*x3"),
    (
        "02",
        "x1^2+x1*x2+x2^2+x1^2*x2+x1*x2^2",
        "x1*x2+x2^2+x1^2*x2+x1*x2^2",
    ),
    ("011", "x1*x2+x1*x3+x2*x3+2*x1*x2*x3", "x2*x3+x1*x2*x3"),
    ("3", "x1^3", "x1^3"),
    ("21", "x1^2*x2", "x1^2*x2"),
    ("111", "x1*x2*x3", "x1*x2*x3"),
    ("12", "x1^2*x2+x1*x2^2+x1^2*x2^2", "x1*x2^2+x1^2*x2^2"),
    (
        "201",
        "x1^2*x2+x1^2*x3+x1^2*x2*x3",
        "x1^2*x3+x1^2*x2*x3",
    ),
    (
        "021",
        "x1^2*x2+x1^2*x3+x1*x2^2+x1*x2*x3+x2^2*x3+2*x1^2*x2*x3+2*x1*x2^2*x3+x1^2*x2^2+x1^2*x2^2*x3",
        "x1*x2*x3+x2^2*x3+x1^2*x2*x3+2*x1*x2^2*x3+x1^2*x2^2*x3",
    ),
    ("31", "x1^3*x2", "x1^3*x2"),
    ("22", "x1^2*x2^2", "x1^2*x2^2"),
    ("211", "x1^2*x2*x3", "x1^2*x2*x3"),
    (
        "301",
        "x1^3*x2+x1^3*x3+x1^3*x2*x3",
        "x1^3*x3+x1^3*x2*x3",
    ),
    (
        "121",
        "x1^2*x2*x3+x1*x2^2*x3+x1^2*x2^2*x3",
        "x1*x2^2*x3+x1^2*x2^2*x3",
    ),
    ("32", "x1^3*x2^2", "x1^3*x2^2"),
    ("311", "x1^3*x2*x3", "x1^3*x2*x3"),
    ("221", "x1^2*x2^2*x3", "x1^2*x2^2*x3"),
    ("321", "x1^3*x2^2*x3", "x1^3*x2^2*x3"),
];

/// Hecke-Grothendieck specializations `KN_w(x = 1)` for S4, keyed by the
/// appendix's reduced words (read as right-action products, so a word maps
/// to a permutation through its reversal). The single-letter row is stored
/// in the calibrated parameter order `1 + alpha + alpha beta`; the print
/// order (`beta + 1 + alpha beta`) is reported as a flagged discrepancy.
pub const KN_TABLE: &[(&str, &str)] = &[
    ("", "1"),
    ("1", "1 + alpha + alpha*beta"),
    ("2", "1 + alpha + alpha*beta"),
    ("3", "1 + alpha + alpha*beta"),
    (
        "12",
        "1 + 2*alpha + alpha^2 + 3*alpha*beta + 3*alpha^2*beta + alpha*beta^2 + 2*alpha^2*beta^2",
    ),
    (
        "21",
        "2 + 3*alpha + alpha^2 + beta + 3*alpha*beta + 2*alpha^2*beta + alpha^2*beta^2",
    ),
    ("13", "(1 + alpha + alpha*beta)^2"),
    (
        "23",
        "1 + 2*alpha + alpha^2 + 3*alpha*beta + 3*alpha^2*beta + alpha*beta^2 + 2*alpha^2*beta^2",
    ),
    (
        "32",
        "2 + 3*alpha + alpha^2 + beta + 3*alpha*beta + 2*alpha^2*beta + alpha^2*beta^2",
    ),
    (
        "132",
        "2 + 5*alpha + 4*alpha^2 + alpha^3 + beta + 7*alpha*beta + 10*alpha^2*beta + 4*alpha^3*beta + 2*alpha*beta^2 + 7*alpha^2*beta^2 + 5*alpha^3*beta^2 + alpha^2*beta^3 + 2*alpha^3*beta^3",
    ),
    (
        "121",
        "1 + 3*alpha + 3*alpha^2 + alpha^3 + 4*alpha*beta + 7*alpha^2*beta + 3*alpha^3*beta + alpha*beta^2 + 4*alpha^2*beta^2 + 3*alpha^3*beta^2 + alpha^3*beta^3",
    ),
    (
        "321",
        "5 + 10*alpha + 6*alpha^2 + alpha^3 + 5*beta + 14*alpha*beta + 12*alpha^2*beta + 3*alpha^3*beta + beta^2 + 4*alpha*beta^2 + 6*alpha^2*beta^2 + 3*alpha^3*beta^2 + alpha^3*beta^3",
    ),
    (
        "232",
        "1 + 3*alpha + 3*alpha^2 + alpha^3 + 4*alpha*beta + 7*alpha^2*beta + 3*alpha^3*beta + alpha*beta^2 + 4*alpha^2*beta^2 + 3*alpha^3*beta^2 + alpha^3*beta^3",
    ),
    (
        "123",
        "1 + 3*alpha + 3*alpha^2 + alpha^3 + 6*alpha*beta + 12*alpha^2*beta + 6*alpha^3*beta + 4*alpha*beta^2 + 14*alpha^2*beta^2 + 10*alpha^3*beta^2 + alpha*beta^3 + 5*alpha^2*beta^3 + 5*alpha^3*beta^3",
    ),
    (
        "213",
        "2 + 5*alpha + 4*alpha^2 + alpha^3 + beta + 7*alpha*beta + 10*alpha^2*beta + 4*alpha^3*beta + 2*alpha*beta^2 + 7*alpha^2*beta^2 + 5*alpha^3*beta^2 + alpha^2*beta^3 + 2*alpha^3*beta^3",
    ),
    (
        "3121",
        "3 + 10*alpha + 12*alpha^2 + 6*alpha^3 + alpha^4 + 2*beta + 16*alpha*beta + 29*alpha^2*beta + 19*alpha^3*beta + 4*alpha^4*beta + 7*alpha*beta^2 + 21*alpha^2*beta^2 + 20*alpha^3*beta^2 + 6*alpha^4*beta^2 + alpha*beta^3 + 4*alpha^2*beta^3 + 7*alpha^3*beta^3 + 4*alpha^4*beta^3 + alpha^4*beta^4",
    ),
    (
        "2321",
        "3 + 10*alpha + 12*alpha^2 + 6*alpha^3 + alpha^4 + 2*beta + 16*alpha*beta + 29*alpha^2*beta + 19*alpha^3*beta + 4*alpha^4*beta + 7*alpha*beta^2 + 21*alpha^2*beta^2 + 20*alpha^3*beta^2 + 6*alpha^4*beta^2 + alpha*beta^3 + 4*alpha^2*beta^3 + 7*alpha^3*beta^3 + 4*alpha^4*beta^3 + alpha^4*beta^4",
    ),
    (
        "1213",
        "1 + 4*alpha + 6*alpha^2 + 4*alpha^3 + alpha^4 + 7*alpha*beta + 20*alpha^2*beta + 19*alpha^3*beta + 6*alpha^4*beta + 4*alpha*beta^2 + 21*alpha^2*beta^2 + 29*alpha^3*beta^2 + 12*alpha^4*beta^2 + alpha*beta^3 + 7*alpha^2*beta^3 + 16*alpha^3*beta^3 + 10*alpha^4*beta^3 + 2*alpha^3*beta^4 + 3*alpha^4*beta^4",
    ),
    (
        "1232",
        "1 + 4*alpha + 6*alpha^2 + 4*alpha^3 + alpha^4 + 7*alpha*beta + 20*alpha^2*beta + 19*alpha^3*beta + 6*alpha^4*beta + 4*alpha*beta^2 + 21*alpha^2*beta^2 + 29*alpha^3*beta^2 + 12*alpha^4*beta^2 + alpha*beta^3 + 7*alpha^2*beta^3 + 16*alpha^3*beta^3 + 10*alpha^4*beta^3 + 2*alpha^3*beta^4 + 3*alpha^4*beta^4",
    ),
    (
        "2132",
        "3 + 9*alpha + 10*alpha^2 + 5*alpha^3 + alpha^4 + 3*beta + 16*alpha*beta + 28*alpha^2*beta + 20*alpha^3*beta + 5*alpha^4*beta + beta^2 + 7*alpha*beta^2 + 24*alpha^2*beta^2 + 28*alpha^3*beta^2 + 10*alpha^4*beta^2 + 7*alpha^2*beta^3 + 16*alpha^3*beta^3 + 9*alpha^4*beta^3 + alpha^2*beta^4 + 3*alpha^3*beta^4 + 3*alpha^4*beta^4",
    ),
    (
        "21321",
        "3 + 12*alpha + 19*alpha^2 + 15*alpha^3 + 6*alpha^4 + alpha^5 + 3*beta + 21*alpha*beta + 49*alpha^2*beta + 52*alpha^3*beta + 26*alpha^4*beta + 5*alpha^5*beta + beta^2 + 9*alpha*beta^2 + 39*alpha^2*beta^2 + 64*alpha^3*beta^2 + 43*alpha^4*beta^2 + 10*alpha^5*beta^2 + 10*alpha^2*beta^3 + 32*alpha^3*beta^3 + 32*alpha^4*beta^3 + 10*alpha^5*beta^3 + alpha^2*beta^4 + 5*alpha^3*beta^4 + 9*alpha^4*beta^4 + 5*alpha^5*beta^4 + alpha^5*beta^5",
    ),
    (
        "12312",
        "1 + 5*alpha + 10*alpha^2 + 10*alpha^3 + 5*alpha^4 + alpha^5 + 9*alpha*beta + 32*alpha^2*beta + 43*alpha^3*beta + 26*alpha^4*beta + 6*alpha^5*beta + 5*alpha*beta^2 + 32*alpha^2*beta^2 + 64*alpha^3*beta^2 + 52*alpha^4*beta^2 + 15*alpha^5*beta^2 + alpha*beta^3 + 10*alpha^2*beta^3 + 39*alpha^3*beta^3 + 49*alpha^4*beta^3 + 19*alpha^5*beta^3 + 9*alpha^3*beta^4 + 21*alpha^4*beta^4 + 12*alpha^5*beta^4 + alpha^3*beta^5 + 3*alpha^4*beta^5 + 3*alpha^5*beta^5",
    ),
    (
        "12321",
        "2 + 9*alpha + 16*alpha^2 + 14*alpha^3 + 6*alpha^4 + alpha^5 + beta + 18*alpha*beta + 54*alpha^2*beta + 64*alpha^3*beta + 33*alpha^4*beta + 6*alpha^5*beta + 14*alpha*beta^2 + 65*alpha^2*beta^2 + 101*alpha^3*beta^2 + 64*alpha^4*beta^2 + 14*alpha^5*beta^2 + 6*alpha*beta^3 + 33*alpha^2*beta^3 + 65*alpha^3*beta^3 + 54*alpha^4*beta^3 + 16*alpha^5*beta^3 + alpha*beta^4 + 6*alpha^2*beta^4 + 14*alpha^3*beta^4 + 18*alpha^4*beta^4 + 9*alpha^5*beta^4 + alpha^4*beta^5 + 2*alpha^5*beta^5",
    ),
    (
        "121321",
        "1 + 6*alpha + 15*alpha^2 + 20*alpha^3 + 15*alpha^4 + 6*alpha^5 + alpha^6 + 10*alpha*beta + 45*alpha^2*beta + 81*alpha^3*beta + 73*alpha^4*beta + 33*alpha^5*beta + 6*alpha^6*beta + 5*alpha*beta^2 + 44*alpha^2*beta^2 + 116*alpha^3*beta^2 + 135*alpha^4*beta^2 + 73*alpha^5*beta^2 + 15*alpha^6*beta^2 + alpha*beta^3 + 15*alpha^2*beta^3 + 69*alpha^3*beta^3 + 116*alpha^4*beta^3 + 81*alpha^5*beta^3 + 20*alpha^6*beta^3 + alpha^2*beta^4 + 15*alpha^3*beta^4 + 44*alpha^4*beta^4 + 45*alpha^5*beta^4 + 15*alpha^6*beta^4 + alpha^3*beta^5 + 5*alpha^4*beta^5 + 10*alpha^5*beta^5 + 6*alpha^6*beta^5 + alpha^6*beta^6",
    ),
];

/// The alpha = beta = 1 totals of the KN table, in the word order above.
pub const KN_TOTALS: &[i64] = &[
    1, 3, 3, 3, 13, 13, 9, 13, 13, 51, 31, 71, 31, 71, 51, 173, 173, 173, 173, 209, 483, 483,
    707, 1145,
];

/// The printed form of the single-letter KN row (flagged against the
/// calibrated value).
pub const KN_SINGLE_LETTER_PRINTED: &str = "1 + beta + alpha*beta";

/// The 42 deformed double key polynomials (the staircase kernel in the
/// q-deformed reduced plactic algebra, formal p and q). Two entries repair
/// print slips: `p1.1 -> p11` in the 213-row and `p12 -> p11` in the
/// 3133-row (the factor list of the kernel admits no `p12` there).
pub const DOUBLE_KEY_TABLE: &[(&str, &str)] = &[
    ("", "1"),
    ("1", "p11"),
    ("2", "p12+p21"),
    ("3", "p13+p22+p31"),
    ("12", "p11*p21"),
    ("21", "p12*p11"),
    ("13", "p11*p22+p11*p31"),
    ("22", "p12*p21"),
    ("23", "p12*p22+p12*p31+p21*p31"),
    ("31", "p13*p11"),
    ("32", "p13*p12+p13*p21+p22*p21"),
    ("33", "p13*p22+p13*p31+p22*p31"),
    ("123", "p11*p21*p31"),
    ("133", "p11*p22*p31"),
    ("212", "p12*p11*p21"),
    ("213", "p12*p11*p22+p12*p11*p31"),
    ("223", "p12*p21*p31"),
    ("233", "p12*p22*p31"),
    ("312", "p13*p11*p21+q13^-1*p11*p22*p21"),
    ("313", "p13*p11*p22+p13*p11*p31"),
    ("321", "p13*p12*p11"),
    ("322", "p13*p12*p21+q23^-1*p12*p22*p21"),
    (
        "323",
        "p13*p12*p22+p13*p12*p31+p13*p21*p31+p22*p21*p31+q23*p13*p22*p21",
    ),
    ("333", "p13*p22*p31"),
    ("2123", "p12*p11*p21*p31"),
    ("2132", "p12*p11*p22*p21"),
    ("2133", "p12*p11*p22*p31"),
    ("3123", "p13*p11*p21*p31+q13^-1*p11*p22*p21*p31"),
    ("3132", "p13*p11*p22*p21"),
    ("3133", "p13*p11*p22*p31"),
    ("3212", "p13*p12*p11*p21"),
    ("3213", "p13*p12*p11*p22+p13*p12*p11*p31"),
    ("3223", "p13*p12*p21*p31+q23^-1*p12*p22*p21*p31"),
    ("3232", "p13*p12*p22*p21"),
    ("3233", "p13*p12*p22*p31+q23*p13*p22*p21*p31"),
    ("21323", "p12*p11*p22*p21*p31"),
    ("31323", "p13*p11*p22*p21*p31"),
    ("32123", "p13*p12*p11*p21*p31"),
    ("32132", "p13*p12*p11*p22*p21"),
    ("32133", "p13*p12*p11*p22*p31"),
    ("32323", "p13*p12*p22*p21*p31"),
    ("321323", "p13*p12*p11*p22*p21*p31"),
];

/// The 26 double key Grothendieck polynomials, as sums of (undeformed)
/// double key polynomials: (word, constituent double-key words).
pub const GK_TABLE: &[(&str, &[&str])] = &[
    ("", &[""]),
    ("1", &["1"]),
    ("2", &["2", "22"]),
    ("3", &["3", "33", "333"]),
    ("12", &["12"]),
    ("21", &["21"]),
    ("13", &["13", "133"]),
    ("31", &["31"]),
    ("23", &["23", "223", "233"]),
    ("32", &["32", "322"]),
    ("123", &["123"]),
    ("212", &["212"]),
    ("213", &["213", "2133"]),
    ("312", &["312", "2132"]),
    ("313", &["313", "3133"]),
    ("321", &["321"]),
    ("323", &["323", "3232", "3233", "3223", "32323"]),
    ("2123", &["2123"]),
    ("2132", &["2132"]),
    ("3123", &["3123", "31323"]),
    ("3212", &["3212"]),
    ("3213", &["3213", "32133"]),
    ("21323", &["21323"]),
    ("32123", &["32123"]),
    ("32132", &["32132"]),
    ("321323", &["321323"]),
];

/// The 14 double local key polynomials as sums of double keys (flagged:
/// the merging rule behind this grouping is not spelled out in the source).
pub const LK_TABLE: &[(&str, &[&str])] = &[
    ("", &[""]),
    ("1", &["1"]),
    ("2", &["2"]),
    ("3", &["3"]),
    ("12", &["12"]),
    ("21", &["21", "212"]),
    ("13", &["13", "31", "313"]),
    ("23", &["23"]),
    ("32", &["32", "323"]),
    ("123", &["123"]),
    ("213", &["213", "2123"]),
    ("312", &["312", "3123"]),
    ("321", &["321", "3212", "3213", "32123", "32132", "321323"]),
    ("2132", &["2132", "21323"]),
];

/// The 35 rectangular kernel coefficients for the (2,3) table. Five rows
/// repair print slips (2132/3132/3232 duplicate neighboring rows in the
/// source; the first terms of 3212/3213 name factors the kernel order
/// cannot produce).
pub const U_TABLE: &[(&str, &str)] = &[
    ("", "1"),
    ("1", "p11+p23"),
    ("2", "p12+p21"),
    ("3", "p13+p22"),
    ("11", "p11*p23"),
    ("12", "p11*p21"),
    ("13", "p11*p22"),
    ("21", "p12*p11+p12*p23+p21*p23"),
    ("22", "p12*p21"),
    ("23", "p12*p22"),
    ("31", "p13*p11+p13*p23+p22*p23"),
    ("32", "p13*p12+p13*p21+p22*p21"),
    ("33", "p13*p22"),
    ("211", "p12*p11*p23+p11*p21*p23"),
    ("212", "p12*p11*p21+p12*p21*p23"),
    ("213", "p12*p11*p22+p12*p22*p23"),
    ("311", "p13*p11*p23+p11*p22*p23"),
    ("312", "p13*p11*p21+p11*p22*p21"),
    ("313", "p13*p11*p22+p13*p22*p23"),
    ("321", "p13*p12*p11+p13*p12*p23+p13*p21*p23+p22*p21*p23"),
    ("322", "p13*p12*p21+p12*p22*p21"),
    ("323", "p13*p12*p22+p13*p22*p21"),
    ("2121", "p12*p11*p21*p23"),
    ("2131", "p12*p11*p22*p23"),
    ("2132", "p12*p11*p22*p21"),
    ("3131", "p13*p11*p22*p23"),
    ("3132", "p13*p11*p22*p21"),
    ("3232", "p13*p12*p22*p21"),
    ("3211", "p13*p12*p11*p23+p13*p11*p21*p23+p11*p22*p21*p23"),
    ("3212", "p13*p12*p11*p21+p13*p12*p21*p23+p12*p22*p21*p23"),
    ("3213", "p13*p12*p11*p22+p13*p12*p22*p23+p13*p22*p21*p23"),
    ("32121", "p12*p11*p22*p21*p23+p13*p12*p11*p21*p23"),
    ("32131", "p13*p12*p11*p22*p23+p13*p11*p22*p21*p23"),
    ("32132", "p13*p12*p11*p22*p21+p13*p12*p22*p21*p23"),
    ("321321", "p13*p12*p11*p22*p21*p23"),
];

/// Hilbert rows of the reduced plactic algebras (Example 5.20).
pub const PC_HILBERT: &[(usize, &[usize])] = &[
    (3, &[1, 2, 3, 1]),
    (4, &[1, 3, 8, 12, 11, 6, 1]),
    (5, &[1, 4, 15, 35, 69, 91, 98, 70, 35, 10, 1]),
    (
        6,
        &[1, 5, 24, 74, 204, 435, 783, 1144, 1379, 1346, 1037, 628, 275, 85, 15, 1],
    ),
    (
        7,
        &[
            1, 6, 35, 133, 461, 1281, 3196, 6686, 12472, 19804, 27811, 33271, 34685, 30527,
            22864, 14124, 7126, 2828, 840, 175, 21, 1,
        ],
    ),
];

/// PC-sharp data (Example 5.19), golden at n = 5.
pub const PCSHARP_5_HILBERT: &[usize] = &[1, 4, 12, 27, 48, 56, 54, 38, 20, 7, 1];
pub const PCSHARP_5_DIM: usize = 268;

/// Nil Temperley-Lieb Hilbert rows.
pub const TL0_HILBERT: &[(usize, &[usize])] = &[
    (4, &[1, 3, 5, 4, 1]),
    (5, &[1, 4, 9, 12, 10, 4, 2]),
    (6, &[1, 5, 14, 25, 31, 26, 16, 9, 4, 1]),
];

/// Idplactic Temperley-Lieb at beta = 0.
pub const PTL0_HILBERT: &[(usize, &[usize])] = &[
    (4, &[1, 3, 6, 4, 1]),
    (5, &[1, 4, 12, 16, 14, 4, 2]),
];

/// Nilplactic rows (Example 2.13).
pub const NP_HILBERT: &[(usize, &[usize])] = &[
    (3, &[1, 2, 2, 1]),
    (4, &[1, 3, 6, 6, 5, 3, 1]),
    (5, &[1, 4, 12, 19, 26, 26, 22, 15, 9, 4, 1]),
];

/// Idplactic rows (Example 2.18; compared under the canonical-representative
/// semantics, flagged rather than asserted).
pub const IP_HILBERT: &[(usize, &[usize])] = &[
    (3, &[1, 2, 2, 1]),
    (4, &[1, 3, 6, 7, 5, 3, 1]),
    (5, &[1, 4, 12, 22, 30, 32, 24, 15, 9, 4, 1]),
];

/// Rectangular algebra rows (Example 6.10, with the example's own
/// size-labelling convention).
pub const PF_2_3_HILBERT: &[usize] = &[1, 3, 9, 9, 9, 3, 1];
pub const PF_3_4_HILBERT: &[usize] = &[1, 4, 16, 44, 81, 120, 140, 120, 81, 44, 16, 4, 1];
pub const PF_4_4_HILBERT: &[usize] = &[
    1, 4, 16, 44, 116, 204, 336, 420, 490, 420, 336, 204, 116, 44, 16, 4, 1,
];

/// `B_3(q)` coefficient vector and its displayed factorization check
/// `(1+q)^3 (1+q^2)(1+5q^2+q^4)` (Example 6.5).
pub const B3_Q: &[i64] = &[1, 3, 9, 19, 24, 24, 19, 9, 3, 1];

/// Rank rows of the lattice completion and of the permutation subset.
pub const MN_RANK_ROWS: &[(usize, &[u64])] = &[
    (3, &[1, 2, 1, 2, 1]),
    (4, &[1, 3, 3, 5, 6, 6, 6, 5, 3, 3, 1]),
    (
        5,
        &[1, 4, 6, 10, 16, 20, 27, 34, 37, 40, 39, 40, 37, 34, 27, 20, 16, 10, 6, 4, 1],
    ),
];
pub const SN_RANK_ROWS: &[(usize, &[u64])] = &[
    (3, &[1, 2, 0, 2, 1]),
    (4, &[1, 3, 1, 4, 2, 2, 2, 4, 1, 3, 1]),
    (
        5,
        &[1, 4, 3, 6, 7, 6, 4, 10, 6, 10, 6, 10, 6, 10, 4, 6, 7, 6, 3, 4, 1],
    ),
];

/// `A_{delta_6}(8; t)` coefficients and the value at t = 1.
pub const GENOCCHI_DELTA6_8: &[i64] = &[2073, 8146, 12840, 10248, 4200, 720];
pub const GENOCCHI_DELTA6_8_AT_1: i64 = 38227;

/// Example 5.10 split specializations at x = 1: (n, A-part t-coeffs,
/// x_{n+1}-part t-coeffs, common factor of the second part).
pub const GENOCCHI_SPLITS: &[(usize, &[i64], &[i64], i64)] = &[
    (3, &[0, 2, 6], &[3, 6], 1),
    (4, &[0, 8, 24, 24], &[17, 46, 36], 1),
    (5, &[0, 56, 192, 240, 120], &[31, 100, 114, 48], 5),
];

/// Principal specialization golden value: `A_{(2,1)}(5; t, q)`.
pub const A21_PRINCIPAL: &str =
    "q*(1+q+2*q^2+q^3+q^4) + t*(q+q^2)^3 + t^2*q^5*(1+q+q^2)";

/// The gamma-deformed specializations printed for n = 3 (flagged: the
/// printed values disagree with both parameter orders of the operator
/// family). Entries: (word, printed value at x = 1, alpha = beta = gamma = 1).
pub const KN_GAMMA_PRINTED: &[(&str, i64)] = &[("1", 7), ("12", 109), ("21", 82), ("121", 521)];
