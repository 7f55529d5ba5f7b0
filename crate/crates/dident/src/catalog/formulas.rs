//! The formula catalog: every numbered disjunctive identity the verifier
//! knows about, keyed by id ("2.4", "3.12", "4.6a", "5.3"). Entries of the
//! 5.x family are parametric in the dihedral parameter m (and a prime p) and
//! are instantiated with `@m=..,p=..` suffixes. Typo-adjudication variants
//! carry `variant_of` and are resolved by search, not by fiat.

use crate::error::{Error, Result};
use crate::formula::{in_cyc, theta_clauses, theta_clauses_scaled, Clause, Equation, Ude};
use crate::word::{comm, conj, inv, pow, prod, var, Word};

fn w1(w: Word) -> Clause {
    Clause::single(w)
}

fn weq(a: Word, b: Word) -> Clause {
    Clause { equations: vec![Equation::between(a, b)] }
}

fn x(i: usize) -> Word {
    var(i)
}

fn ude(clauses: Vec<Clause>) -> Ude {
    Ude::new(clauses).expect("catalog formula is well-formed")
}

// --- fixed formulas --------------------------------------------------------

fn f2_2() -> Ude {
    ude(vec![w1(pow(x(1), 4))])
}

fn f2_3() -> Ude {
    ude(vec![
        w1(pow(x(1), 2)),
        w1(pow(x(2), 2)),
        w1(pow(x(3), 2)),
        weq(x(1), x(2)),
        weq(x(1), x(3)),
        weq(x(2), x(3)),
    ])
}

fn f2_4() -> Ude {
    ude(theta_clauses([x(1), x(2), x(3)]))
}

fn f2_5() -> Ude {
    ude(vec![
        in_cyc(x(1), x(2), 0, 3),
        in_cyc(x(2), x(1), 0, 3),
        w1(prod(vec![pow(x(1), 2), pow(x(2), 2)])),
    ])
}

fn f2_6() -> Ude {
    let mut clauses = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                clauses.push(in_cyc(x(i), x(j), 0, 3));
            }
        }
    }
    clauses.push(weq(prod(vec![x(1), x(2)]), x(3)));
    clauses.push(weq(prod(vec![x(1), x(2)]), inv(x(3))));
    ude(clauses)
}

fn f2_7() -> Ude {
    ude(vec![w1(pow(x(1), 2)), w1(pow(x(1), 3))])
}

fn f2_8() -> Ude {
    ude(vec![
        w1(pow(x(1), 3)),
        w1(pow(x(2), 3)),
        w1(pow(prod(vec![x(1), x(2)]), 2)),
    ])
}

/// Nonzero {0,1}-vectors (k1,k2,k3) in lexicographic order.
fn binary_vectors() -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for k1 in 0..=1i64 {
        for k2 in 0..=1i64 {
            for k3 in 0..=1i64 {
                if k1 + k2 + k3 > 0 {
                    out.push([k1, k2, k3]);
                }
            }
        }
    }
    out
}

fn f2_9() -> Ude {
    let mut clauses = Vec::new();
    for [k1, k2, k3] in binary_vectors() {
        let mut factors = Vec::new();
        for (i, k) in [(1, k1), (2, k2), (3, k3)] {
            if k == 1 {
                factors.push(pow(x(i), 3));
            }
        }
        clauses.push(w1(prod(factors)));
    }
    ude(clauses)
}

fn f2_10() -> Ude {
    ude(vec![
        w1(pow(x(1), 4)),
        w1(pow(x(2), 4)),
        w1(pow(prod(vec![x(1), x(2)]), 4)),
        w1(pow(prod(vec![x(1), pow(x(2), 2)]), 4)),
    ])
}

fn f2_11() -> Ude {
    ude(vec![w1(pow(x(1), 3)), w1(pow(x(1), 4))])
}

fn f2_12() -> Ude {
    ude(vec![
        w1(pow(x(1), 6)),
        w1(pow(x(2), 6)),
        weq(x(1), x(2)),
        w1(prod(vec![x(1), x(2)])),
        w1(pow(prod(vec![x(1), x(2)]), 3)),
    ])
}

fn f2_13() -> Ude {
    let mut clauses = vec![
        w1(pow(x(1), 3)),
        w1(pow(x(2), 3)),
        w1(pow(x(3), 3)),
        w1(pow(prod(vec![inv(x(1)), x(2)]), 3)),
        w1(pow(prod(vec![inv(x(1)), x(3)]), 3)),
        w1(pow(prod(vec![inv(x(2)), x(3)]), 3)),
    ];
    clauses.extend(theta_clauses([x(1), x(2), x(3)]));
    ude(clauses)
}

/// The nine-variable formula from the S4 discussion: ⋁ x_i^3 = 1 over
/// i ≤ 9, or ⋁ (x_i x_j^-1)^3 = 1 over i < j.
fn f_pk_s4() -> Ude {
    let mut clauses = Vec::new();
    for i in 1..=9 {
        clauses.push(w1(pow(x(i), 3)));
    }
    for i in 1..=9 {
        for j in (i + 1)..=9 {
            clauses.push(w1(pow(prod(vec![x(i), inv(x(j))]), 3)));
        }
    }
    ude(clauses)
}

fn f3_1() -> Ude {
    ude(vec![w1(pow(x(1), 2)), w1(pow(x(1), 3)), w1(pow(x(1), 5))])
}

fn f3_2() -> Ude {
    let mut clauses = Vec::new();
    for i in 1..=3 {
        clauses.push(w1(pow(x(i), 15)));
    }
    for i in 1..=3 {
        for j in (i + 1)..=3 {
            clauses.push(w1(pow(prod(vec![x(i), x(j)]), 15)));
        }
    }
    for [k1, k2, k3] in binary_vectors() {
        let mut factors = Vec::new();
        for (i, k) in [(1, k1), (2, k2), (3, k3)] {
            if k == 1 {
                factors.push(x(i));
            }
        }
        clauses.push(w1(prod(factors)));
    }
    ude(clauses)
}

fn f3_3() -> Ude {
    ude(vec![
        w1(pow(x(1), 10)),
        w1(pow(x(2), 10)),
        weq(x(1), x(2)),
        w1(pow(prod(vec![x(1), x(2)]), 10)),
        w1(pow(prod(vec![pow(x(1), 2), x(2)]), 2)),
    ])
}

fn f3_4() -> Ude {
    let mut clauses = vec![w1(pow(x(1), 6)), w1(pow(x(2), 6))];
    for d in 1..=4 {
        let second = if d == 1 { x(2) } else { pow(x(2), d) };
        clauses.push(w1(pow(prod(vec![x(1), second]), 6)));
    }
    ude(clauses)
}

fn f3_5() -> Ude {
    ude(vec![w1(pow(x(1), 4)), w1(pow(x(1), 5)), w1(pow(x(1), 6))])
}

fn f3_6() -> Ude {
    let mut clauses = vec![w1(pow(x(1), 30)), w1(pow(x(2), 30))];
    for d in 1..=3 {
        let second = if d == 1 { x(2) } else { pow(x(2), d) };
        clauses.push(w1(pow(prod(vec![x(1), second]), 15)));
    }
    ude(clauses)
}

fn f3_7() -> Ude {
    let y = |i: usize| pow(x(i), 15);
    let mut clauses = theta_clauses([y(1), y(2), y(3)]);
    for i in 1..=3 {
        clauses.push(w1(y(i)));
    }
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                clauses.push(w1(pow(prod(vec![y(i), y(j)]), 15)));
            }
        }
    }
    // j != i and i != k; j and k may coincide
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                if j != i && i != k {
                    clauses.push(w1(pow(prod(vec![y(i), y(j), y(k)]), 15)));
                }
            }
        }
    }
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                if j != i && i != k {
                    clauses.push(w1(pow(prod(vec![y(i), y(j), y(k), y(j)]), 15)));
                }
            }
        }
    }
    ude(clauses)
}

fn f3_8(square_exponent: i64) -> Ude {
    ude(vec![
        w1(pow(x(1), 20)),
        w1(pow(x(2), 20)),
        weq(pow(x(1), 2), pow(x(2), 2)),
        w1(pow(prod(vec![pow(x(1), 2), pow(x(2), 2)]), square_exponent)),
        w1(pow(prod(vec![pow(x(1), 4), pow(x(2), 2)]), 2)),
    ])
}

fn f3_9() -> Ude {
    ude(vec![
        w1(pow(x(1), 15)),
        w1(pow(x(2), 15)),
        w1(pow(x(1), 4)),
        w1(pow(x(2), 4)),
        w1(pow(prod(vec![x(1), x(2)]), 15)),
        w1(pow(prod(vec![x(1), x(2)]), 4)),
    ])
}

fn f3_10() -> Ude {
    let sq = prod(vec![pow(x(1), 2), pow(x(2), 2)]);
    ude(vec![
        w1(pow(x(1), 10)),
        w1(pow(x(2), 10)),
        weq(pow(x(1), 4), pow(x(2), 4)),
        weq(pow(x(1), 6), pow(x(2), 6)),
        w1(pow(sq.clone(), 3)),
        w1(pow(sq.clone(), 4)),
        w1(pow(sq, 5)),
    ])
}

fn f3_11() -> Ude {
    let mut clauses = vec![w1(pow(x(1), 12)), w1(pow(x(2), 12))];
    for d in 1..=4 {
        let second = if d == 1 { x(2) } else { pow(x(2), d) };
        clauses.push(w1(pow(prod(vec![x(1), second]), 12)));
    }
    ude(clauses)
}

fn f3_12() -> Ude {
    let xy = prod(vec![x(1), x(2)]);
    ude(vec![
        w1(pow(x(1), 3)),
        w1(pow(x(2), 3)),
        w1(pow(x(1), 5)),
        w1(pow(x(2), 5)),
        weq(pow(x(1), 4), pow(x(2), 4)),
        w1(pow(xy.clone(), 3)),
        w1(pow(xy.clone(), 4)),
        w1(pow(xy, 5)),
    ])
}

fn f4_2() -> Ude {
    ude(vec![w1(pow(x(1), 3)), w1(pow(x(1), 4)), w1(pow(x(1), 5))])
}

fn f4_3() -> Ude {
    let mut clauses = Vec::new();
    for i in 1..=9 {
        clauses.push(w1(pow(x(i), 20)));
    }
    for i in 1..=9 {
        for j in (i + 1)..=9 {
            clauses.push(weq(x(i), x(j)));
        }
    }
    for i in 1..=9 {
        for j in (i + 1)..=9 {
            clauses.push(w1(pow(prod(vec![x(i), x(j)]), 20)));
        }
    }
    for i in 1..=9 {
        for j in (i + 1)..=9 {
            clauses.push(w1(pow(prod(vec![x(i), pow(x(j), 2)]), 20)));
        }
    }
    ude(clauses)
}

fn f4_5() -> Ude {
    let mut clauses = theta_clauses([x(1), x(2), x(3)]);
    for i in 1..=3 {
        clauses.push(w1(pow(x(i), 15)));
    }
    for d in 1..=3i64 {
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    let second = if d == 1 { x(j) } else { pow(x(j), d) };
                    clauses.push(w1(pow(prod(vec![x(i), second]), 15)));
                }
            }
        }
    }
    ude(clauses)
}

/// (4.6) with the third-clause comma read as a commutator.
fn f4_6_comma() -> Ude {
    let b = conj(x(1), x(2));
    ude(vec![
        w1(pow(x(1), 12)),
        w1(pow(x(2), 30)),
        w1(pow(prod(vec![x(1), b.clone()]), 12)),
        w1(pow(prod(vec![x(1), conj(pow(x(1), 3), x(2))]), 12)),
        w1(pow(comm(pow(x(1), 2), b), 12)),
    ])
}

/// (4.6) with the comma read as juxtaposition (product).
fn f4_6_product() -> Ude {
    let b = conj(x(1), x(2));
    ude(vec![
        w1(pow(x(1), 12)),
        w1(pow(x(2), 30)),
        w1(pow(prod(vec![x(1), b.clone()]), 12)),
        w1(pow(prod(vec![x(1), conj(pow(x(1), 3), x(2))]), 12)),
        w1(pow(prod(vec![pow(x(1), 2), b]), 12)),
    ])
}

fn f5_1() -> Ude {
    ude(vec![
        w1(pow(x(1), 2)),
        w1(pow(x(2), 2)),
        w1(comm(x(1), x(2))),
    ])
}

// --- parametric dihedral formulas ------------------------------------------

/// Largest power p^k dividing m, returned as (p^k, m / p^k).
fn p_part(m: usize, p: usize) -> (usize, usize) {
    let mut pk = 1;
    let mut rest = m;
    while rest % p == 0 {
        pk *= p;
        rest /= p;
    }
    (pk, rest)
}

fn odd_part(m: usize) -> usize {
    p_part(m, 2).1
}

fn f5_2(m: usize) -> Result<Ude> {
    Ok(ude(vec![w1(pow(x(1), m as i64))]))
}

fn f5_2_odd(m: usize) -> Result<Ude> {
    Ok(ude(vec![w1(pow(x(1), 2)), w1(pow(x(1), m as i64))]))
}

fn pow_word(w: Word, k: usize) -> Word {
    if k == 1 {
        w
    } else {
        pow(w, k as i64)
    }
}

/// (5.3) for the prime p | m: with m = p^k * m_p, either x1^2 = 1 or
/// x2^2 = 1 or one of x1^{m_p}, x2^{m_p} lies in the cyclic subgroup
/// generated by the other. The membership ranges over exponents
/// 0..=p^k - 1; see `f5_3_printed` for the as-printed range.
fn f5_3(m: usize, p: usize) -> Result<Ude> {
    f5_3_range(m, p, 0)
}

/// (5.3) with the membership starting at exponent 1, exactly as printed.
fn f5_3_printed(m: usize, p: usize) -> Result<Ude> {
    f5_3_range(m, p, 1)
}

fn f5_3_range(m: usize, p: usize, lo: i64) -> Result<Ude> {
    if m % p != 0 || !crate::construct::is_prime(p) {
        return Err(Error::Invalid(format!("p = {} must be a prime divisor of m = {}", p, m)));
    }
    let (pk, mp) = p_part(m, p);
    let a = pow_word(x(1), mp);
    let b = pow_word(x(2), mp);
    Ok(ude(vec![
        w1(pow(x(1), 2)),
        w1(pow(x(2), 2)),
        in_cyc(a.clone(), b.clone(), lo, pk as i64 - 1),
        in_cyc(b, a, lo, pk as i64 - 1),
    ]))
}

/// (5.4): the theta formula with every membership word raised to the m_2-th
/// power and exponents ranging over the 2-part of m.
fn f5_4(m: usize) -> Result<Ude> {
    if m % 2 != 0 {
        return Err(Error::Invalid("5.4 needs even m".into()));
    }
    let (two_k, m2) = p_part(m, 2);
    Ok(ude(theta_clauses_scaled([x(1), x(2), x(3)], m2, two_k as i64 - 1)))
}

/// (5.5) for an odd prime p | m (m even).
fn f5_5(m: usize, p: usize) -> Result<Ude> {
    if m % 2 != 0 || p == 2 || m % p != 0 || !crate::construct::is_prime(p) {
        return Err(Error::Invalid(format!(
            "5.5 needs even m and an odd prime divisor, got m = {}, p = {}",
            m, p
        )));
    }
    let (_, mp) = p_part(m, p);
    let (two_k, m2) = p_part(m, 2);
    let xp = pow_word(x(1), mp);
    let c2 = pow_word(x(2), m2);
    let c3 = pow_word(x(3), m2);
    Ok(ude(vec![
        weq(conj(xp.clone(), x(2)), pow(x(1), -(mp as i64))),
        weq(conj(xp, x(3)), pow(x(1), -(mp as i64))),
        in_cyc(c2.clone(), c3.clone(), 0, two_k as i64 - 1),
        in_cyc(c3, c2, 0, two_k as i64 - 1),
    ]))
}

fn f5_6(m: usize) -> Result<Ude> {
    Ok(ude(vec![
        w1(pow(x(1), m as i64)),
        w1(pow(x(2), m as i64)),
        w1(pow(prod(vec![x(1), x(2)]), m as i64)),
    ]))
}

// --- the catalog -----------------------------------------------------------

enum Builder {
    Fixed(fn() -> Ude),
    Omega(usize),
    M(fn(usize) -> Result<Ude>),
    MP(fn(usize, usize) -> Result<Ude>),
}

pub struct FormulaEntry {
    pub id: &'static str,
    pub params: &'static [&'static str],
    pub claimed_valid_in: &'static [&'static str],
    /// Groups the formula is known to fail in, with a falsifying assignment
    /// given as element names.
    pub known_failures: &'static [(&'static str, &'static [&'static str])],
    pub variant_of: Option<&'static str>,
    pub note: &'static str,
    builder: Builder,
}

impl FormulaEntry {
    pub fn instantiate(&self, m: Option<usize>, p: Option<usize>) -> Result<Ude> {
        match &self.builder {
            Builder::Fixed(f) => Ok(f()),
            Builder::Omega(n) => Ok(Ude::omega(*n)),
            Builder::M(f) => {
                let m = m.ok_or_else(|| Error::MissingParams {
                    id: self.id.to_string(),
                    missing: "m".to_string(),
                })?;
                f(m)
            }
            Builder::MP(f) => {
                let (m, p) = match (m, p) {
                    (Some(m), Some(p)) => (m, p),
                    _ => {
                        return Err(Error::MissingParams {
                            id: self.id.to_string(),
                            missing: "m, p".to_string(),
                        })
                    }
                };
                f(m, p)
            }
        }
    }

    pub fn is_parametric(&self) -> bool {
        !self.params.is_empty()
    }
}

pub fn catalog() -> Vec<FormulaEntry> {
    use Builder::*;
    vec![
        FormulaEntry { id: "2.1", params: &[], claimed_valid_in: &["D8", "Q8"], known_failures: &[], variant_of: None, note: "the pigeonhole formula omega(8)", builder: Omega(8) },
        FormulaEntry { id: "2.2", params: &[], claimed_valid_in: &["D8", "Q8"], known_failures: &[("Z8", &["a"])], variant_of: None, note: "x^4 = 1", builder: Fixed(f2_2) },
        FormulaEntry { id: "2.3", params: &[], claimed_valid_in: &["D8"], known_failures: &[("Q8", &["i", "j", "k"]), ("Z4xZ2", &["g1", "g1*g2", "g1^3"])], variant_of: None, note: "at most two elements of order > 2", builder: Fixed(f2_3) },
        FormulaEntry { id: "2.4", params: &[], claimed_valid_in: &["D8"], known_failures: &[("Z2^3", &["e1", "e2", "e3"])], variant_of: None, note: "the three-variable cyclic-membership formula (theta)", builder: Fixed(f2_4) },
        FormulaEntry { id: "2.5", params: &[], claimed_valid_in: &["Q8"], known_failures: &[("Z4xZ2", &["g1", "g2"]), ("D8", &["a", "b"])], variant_of: None, note: "", builder: Fixed(f2_5) },
        FormulaEntry { id: "2.6", params: &[], claimed_valid_in: &["Q8"], known_failures: &[("Z2^3", &["e1", "e2", "e3"])], variant_of: None, note: "", builder: Fixed(f2_6) },
        FormulaEntry { id: "2.7", params: &[], claimed_valid_in: &["A4"], known_failures: &[("Z4", &["a"])], variant_of: None, note: "(x^2 = 1) | (x^3 = 1)", builder: Fixed(f2_7) },
        FormulaEntry { id: "2.8", params: &[], claimed_valid_in: &["A4"], known_failures: &[("S3", &["(12)", "(13)"])], variant_of: None, note: "", builder: Fixed(f2_8) },
        FormulaEntry { id: "2.9", params: &[], claimed_valid_in: &["A4"], known_failures: &[("Z2^3", &["e1", "e2", "e3"])], variant_of: None, note: "cubes lie in a 2-dimensional space over GF(2)", builder: Fixed(f2_9) },
        FormulaEntry { id: "2.10", params: &[], claimed_valid_in: &["S4", "A4"], known_failures: &[("Z3^2", &["e1", "e2"])], variant_of: None, note: "", builder: Fixed(f2_10) },
        FormulaEntry { id: "2.11", params: &[], claimed_valid_in: &["S4"], known_failures: &[("Z6", &["a"])], variant_of: None, note: "(x^3 = 1) | (x^4 = 1)", builder: Fixed(f2_11) },
        FormulaEntry { id: "2.12", params: &[], claimed_valid_in: &["S4"], known_failures: &[("Z4xZ2", &["g1", "g1*g2"]), ("Q8", &["i", "j"])], variant_of: None, note: "", builder: Fixed(f2_12) },
        FormulaEntry { id: "2.13", params: &[], claimed_valid_in: &["S4"], known_failures: &[("Z2^3", &["e1", "e2", "e3"])], variant_of: None, note: "", builder: Fixed(f2_13) },
        FormulaEntry { id: "pk-s4", params: &[], claimed_valid_in: &["S4", "Q8"], known_failures: &[("Z2^4", &[])], variant_of: None, note: "nine-variable formula from the earlier S4 weak-basis list; satisfied by Q8", builder: Fixed(f_pk_s4) },
        FormulaEntry { id: "3.1", params: &[], claimed_valid_in: &["A5"], known_failures: &[("Z4", &["a"])], variant_of: None, note: "", builder: Fixed(f3_1) },
        FormulaEntry { id: "3.2", params: &[], claimed_valid_in: &["A5"], known_failures: &[("Z2^3", &["e1", "e2", "e3"])], variant_of: None, note: "", builder: Fixed(f3_2) },
        FormulaEntry { id: "3.3", params: &[], claimed_valid_in: &["A5"], known_failures: &[("Z3^2", &["e1", "e2"])], variant_of: None, note: "", builder: Fixed(f3_3) },
        FormulaEntry { id: "3.4", params: &[], claimed_valid_in: &["A5"], known_failures: &[("Z5^2", &["e1", "e2"])], variant_of: None, note: "", builder: Fixed(f3_4) },
        FormulaEntry { id: "3.5", params: &[], claimed_valid_in: &["S5"], known_failures: &[("Z8", &["a"])], variant_of: None, note: "", builder: Fixed(f3_5) },
        FormulaEntry { id: "3.6", params: &[], claimed_valid_in: &["S5", "A6"], known_failures: &[("Z4xZ2", &["g1", "g1*g2"]), ("Q8", &["i", "j"])], variant_of: None, note: "also catalogued as 4.4", builder: Fixed(f3_6) },
        FormulaEntry { id: "3.7", params: &[], claimed_valid_in: &["S5"], known_failures: &[("Z2^3", &["e1", "e2", "e3"])], variant_of: None, note: "stored expanded: y_i stands for x_i^15", builder: Fixed(f3_7) },
        FormulaEntry { id: "3.8", params: &[], claimed_valid_in: &[], known_failures: &[], variant_of: None, note: "as printed, with ((x1^2 x2^2)^5 = 1); adjudicated against 3.8a by search", builder: Fixed(|| f3_8(5)) },
        FormulaEntry { id: "3.8a", params: &[], claimed_valid_in: &["S5"], known_failures: &[("Z3^2", &["e1", "e2"])], variant_of: Some("3.8"), note: "substituted form of 3.3 at squares: ((x1^2 x2^2)^10 = 1)", builder: Fixed(|| f3_8(10)) },
        FormulaEntry { id: "3.9", params: &[], claimed_valid_in: &["S5"], known_failures: &[("Z2xZ6", &["g2", "g1*g2"])], variant_of: None, note: "", builder: Fixed(f3_9) },
        FormulaEntry { id: "3.10", params: &[], claimed_valid_in: &["S5"], known_failures: &[("Z3:Z4", &["a", "b"])], variant_of: None, note: "", builder: Fixed(f3_10) },
        FormulaEntry { id: "3.11", params: &[], claimed_valid_in: &["S5", "S6", "A6"], known_failures: &[("Z5^2", &["e1", "e2"])], variant_of: None, note: "also catalogued as 4.7; valid even in S6", builder: Fixed(f3_11) },
        FormulaEntry { id: "3.12", params: &[], claimed_valid_in: &[], known_failures: &[("S5", &["(123)(45)", "(14)(25)"])], variant_of: None, note: "from the earlier S5 list; not valid in S5 at all", builder: Fixed(f3_12) },
        FormulaEntry { id: "4.1", params: &[], claimed_valid_in: &["A6"], known_failures: &[], variant_of: None, note: "omega(360)", builder: Omega(360) },
        FormulaEntry { id: "4.2", params: &[], claimed_valid_in: &["A6"], known_failures: &[("Z6", &["a"])], variant_of: None, note: "", builder: Fixed(f4_2) },
        FormulaEntry { id: "4.3", params: &[], claimed_valid_in: &["A6"], known_failures: &[("Z3^3", &[])], variant_of: None, note: "nine variables restricted to order-3 elements", builder: Fixed(f4_3) },
        FormulaEntry { id: "4.4", params: &[], claimed_valid_in: &["S5", "A6"], known_failures: &[], variant_of: None, note: "same formula as 3.6", builder: Fixed(f3_6) },
        FormulaEntry { id: "4.5", params: &[], claimed_valid_in: &["A6"], known_failures: &[("Z2^3", &["e1", "e2", "e3"])], variant_of: None, note: "", builder: Fixed(f4_5) },
        FormulaEntry { id: "4.6", params: &[], claimed_valid_in: &[], known_failures: &[], variant_of: None, note: "third clause comma read as a commutator; adjudicated against 4.6a by search", builder: Fixed(f4_6_comma) },
        FormulaEntry { id: "4.6a", params: &[], claimed_valid_in: &["A6"], known_failures: &[("F20", &["a", "b"])], variant_of: Some("4.6"), note: "third clause comma read as a product", builder: Fixed(f4_6_product) },
        FormulaEntry { id: "4.7", params: &[], claimed_valid_in: &["S5", "S6", "A6"], known_failures: &[], variant_of: None, note: "same formula as 3.11", builder: Fixed(f3_11) },
        FormulaEntry { id: "5.1", params: &[], claimed_valid_in: &["D8", "D12"], known_failures: &[("Q8", &["i", "j"])], variant_of: None, note: "(x^2 = 1) | (y^2 = 1) | (xy = yx)", builder: Fixed(f5_1) },
        FormulaEntry { id: "5.2", params: &["m"], claimed_valid_in: &[], known_failures: &[], variant_of: None, note: "x^m = 1, for even m", builder: M(f5_2) },
        FormulaEntry { id: "5.2'", params: &["m"], claimed_valid_in: &[], known_failures: &[], variant_of: None, note: "(x^2 = 1) | (x^m = 1), for odd m", builder: M(f5_2_odd) },
        FormulaEntry { id: "5.3", params: &["m", "p"], claimed_valid_in: &[], known_failures: &[], variant_of: None, note: "membership exponents 0..p^k-1; the printed range is 5.3p", builder: MP(f5_3) },
        FormulaEntry { id: "5.3p", params: &["m", "p"], claimed_valid_in: &[], known_failures: &[], variant_of: Some("5.3"), note: "as printed: membership exponents 1..p^k-1; fails in D24", builder: MP(f5_3_printed) },
        FormulaEntry { id: "5.4", params: &["m"], claimed_valid_in: &[], known_failures: &[], variant_of: None, note: "theta over m_2-th powers", builder: M(f5_4) },
        FormulaEntry { id: "5.5", params: &["m", "p"], claimed_valid_in: &[], known_failures: &[], variant_of: None, note: "for odd prime divisors p of even m", builder: MP(f5_5) },
        FormulaEntry { id: "5.6", params: &["m"], claimed_valid_in: &[], known_failures: &[], variant_of: None, note: "for odd m", builder: M(f5_6) },
    ]
}

/// Resolve a formula reference: "2.4", "paper:2.4", "omega:24",
/// "5.3@m=12,p=3". Returns the canonical id and the instantiated formula.
pub fn resolve(reference: &str) -> Result<(String, Ude)> {
    let reference = reference.trim();
    let reference = reference.strip_prefix("paper:").unwrap_or(reference);
    if let Some(n) = reference.strip_prefix("omega:") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::UnknownFormula(reference.to_string()))?;
        if n == 0 {
            return Err(Error::UnknownFormula(reference.to_string()));
        }
        return Ok((format!("omega:{}", n), Ude::omega(n)));
    }
    let (id, params) = match reference.split_once('@') {
        Some((id, params)) => (id, Some(params)),
        None => (reference, None),
    };
    let mut m = None;
    let mut p = None;
    if let Some(params) = params {
        for kv in params.split(',') {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("bad parameter `{}`", kv)))?;
            let value: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("bad parameter value `{}`", v)))?;
            match k.trim() {
                "m" => m = Some(value),
                "p" => p = Some(value),
                other => return Err(Error::Invalid(format!("unknown parameter `{}`", other))),
            }
        }
    }
    let entries = catalog();
    let entry = entries
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownFormula(id.to_string()))?;
    let ude = entry.instantiate(m, p)?;
    let canonical = match (m, p) {
        (Some(m), Some(p)) => format!("{}@m={},p={}", id, m, p),
        (Some(m), None) => format!("{}@m={}", id, m),
        _ => id.to_string(),
    };
    Ok((canonical, ude))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_unique() {
        let entries = catalog();
        let mut ids: Vec<&str> = entries.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn entry_2_4_shape() {
        let (_, u) = resolve("2.4").unwrap();
        assert_eq!(u.clauses.len(), 18);
        assert_eq!(u.variable_count, 3);
    }

    #[test]
    fn entry_4_3_shape() {
        let (_, u) = resolve("4.3").unwrap();
        assert_eq!(u.variable_count, 9);
        assert_eq!(u.clauses.len(), 9 + 36 + 36 + 36);
    }

    #[test]
    fn entry_3_7_shape() {
        let (_, u) = resolve("3.7").unwrap();
        assert_eq!(u.variable_count, 3);
        assert_eq!(u.clauses.len(), 18 + 3 + 6 + 12 + 12);
    }

    #[test]
    fn resolve_forms() {
        assert!(resolve("paper:2.10").is_ok());
        assert!(resolve("omega:24").is_ok());
        assert!(resolve("5.3@m=12,p=3").is_ok());
        assert!(matches!(resolve("5.3"), Err(Error::MissingParams { .. })));
        assert!(resolve("9.9").is_err());
    }

    #[test]
    fn dihedral_param_math() {
        assert_eq!(p_part(12, 2), (4, 3));
        assert_eq!(p_part(12, 3), (3, 4));
        assert_eq!(odd_part(8), 1);
        let (_, u) = resolve("5.3@m=6,p=3").unwrap();
        // (x1^2), (x2^2), two membership clauses of 3 equations each
        assert_eq!(u.clauses.len(), 4);
        assert_eq!(u.equation_count(), 2 + 3 + 3);
    }

    #[test]
    fn variants_differ() {
        let (_, printed) = resolve("3.8").unwrap();
        let (_, fixed) = resolve("3.8a").unwrap();
        assert_ne!(printed, fixed);
        let (_, comma) = resolve("4.6").unwrap();
        let (_, product) = resolve("4.6a").unwrap();
        assert_ne!(comma, product);
    }
}
