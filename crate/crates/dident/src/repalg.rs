//! Group algebras F_p[G] and identities of regular representations.
//!
//! An element u of the free-group algebra is an identity of Reg_K G exactly
//! when u(g_1,...,g_n) = 0 in KG for all group substitutions (1·u = u, so
//! annihilating KG and vanishing coincide). The checker works over prime
//! fields with p not dividing |G|.

use crate::error::{Error, Result};
use crate::formula::Ude;
use crate::group::FiniteGroup;
use crate::search::{is_didentity, SearchOptions, Status};
use crate::word::{self, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use std::fmt;

/// Vector over F_p indexed by group element id; the product is convolution
/// through the multiplication table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl AlgebraElement {
    pub fn zero(group: &FiniteGroup, p: u64) -> AlgebraElement {
        AlgebraElement { p, coeffs: vec![0; group.order()] }
    }

    pub fn embed(group: &FiniteGroup, p: u64, g: usize) -> AlgebraElement {
        let mut coeffs = vec![0; group.order()];
        coeffs[g] = 1 % p;
        AlgebraElement { p, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.p, other.p);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect();
        AlgebraElement { p: self.p, coeffs }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.p, other.p);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + self.p - b) % self.p)
            .collect();
        AlgebraElement { p: self.p, coeffs }
    }

    pub fn scale(&self, k: i64) -> AlgebraElement {
        let kk = k.rem_euclid(self.p as i64) as u64;
        let coeffs = self.coeffs.iter().map(|&a| a * kk % self.p).collect();
        AlgebraElement { p: self.p, coeffs }
    }

    /// Convolution product through the group table.
    pub fn mul(&self, other: &AlgebraElement, group: &FiniteGroup) -> AlgebraElement {
        assert_eq!(self.p, other.p);
        let mut coeffs = vec![0u64; group.order()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = group.mul(i, j);
                coeffs[k] = (coeffs[k] + a * b) % self.p;
            }
        }
        AlgebraElement { p: self.p, coeffs }
    }

    /// Right multiplication by a group element permutes coordinates.
    pub fn right_mul_element(&self, group: &FiniteGroup, g: usize) -> AlgebraElement {
        let mut coeffs = vec![0u64; group.order()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                coeffs[group.mul(i, g)] = a;
            }
        }
        AlgebraElement { p: self.p, coeffs }
    }

    /// v * (c - 1) for a group element c.
    fn mul_binomial(&self, group: &FiniteGroup, c: usize) -> AlgebraElement {
        self.right_mul_element(group, c).sub(self)
    }
}

/// An identity candidate for the regular representation.
#[derive(Clone, Debug, PartialEq)]
pub enum RepIdentity {
    /// Product of conjugated binomials (f_1^{y_1} - 1)...(f_k^{y_k} - 1).
    /// `factors[i].1` is the variable index of the i-th conjugator; x
    /// variables are 1..=x_vars and conjugators x_vars+1..=x_vars+y_vars.
    BinomialProduct { factors: Vec<(Word, usize)>, x_vars: usize, y_vars: usize },
    /// Plain word polynomial: sum of coefficient * word.
    Polynomial { terms: Vec<(i64, Word)>, vars: usize },
    /// The standard polynomial s_k, kept symbolic (k! terms).
    Standard { degree: usize },
}

impl RepIdentity {
    pub fn total_vars(&self) -> usize {
        match self {
            RepIdentity::BinomialProduct { x_vars, y_vars, .. } => x_vars + y_vars,
            RepIdentity::Polynomial { vars, .. } => *vars,
            RepIdentity::Standard { degree } => *degree,
        }
    }

    /// x^e - 1.
    pub fn power_identity(e: usize) -> RepIdentity {
        RepIdentity::Polynomial {
            terms: vec![(1, word::pow(word::var(1), e as i64)), (-1, Word::One)],
            vars: 1,
        }
    }

    /// v_s - 1 for the solvability word of class s.
    pub fn solvability_identity(s: usize) -> RepIdentity {
        RepIdentity::Polynomial {
            terms: vec![(1, solvability_word(s)), (-1, Word::One)],
            vars: 1 << s,
        }
    }
}

impl fmt::Display for RepIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepIdentity::BinomialProduct { factors, .. } => {
                for (w, y) in factors {
                    write!(f, "(({})^x{} - 1)", w, y)?;
                }
                Ok(())
            }
            RepIdentity::Polynomial { terms, .. } => {
                for (i, (c, w)) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " {} ", if *c < 0 { "-" } else { "+" })?;
                    } else if *c < 0 {
                        write!(f, "-")?;
                    }
                    let abs = c.abs();
                    if abs != 1 {
                        write!(f, "{}*", abs)?;
                    }
                    write!(f, "{}", w)?;
                }
                Ok(())
            }
            RepIdentity::Standard { degree } => write!(f, "s_{}", degree),
        }
    }
}

/// Translate a UDE delta into the product of binomials delta*. Omega
/// builtins are first expanded to their literal pairwise equations; every
/// equation contributes one factor with a fresh conjugator, in clause order.
pub fn translate(ude: &Ude) -> RepIdentity {
    let expanded = ude.expand_omegas();
    let x_vars = expanded.variable_count;
    let mut factors = Vec::new();
    let mut next_y = x_vars + 1;
    for clause in &expanded.clauses {
        for eq in &clause.equations {
            factors.push((eq.lhs.clone(), next_y));
            next_y += 1;
        }
    }
    let y_vars = next_y - x_vars - 1;
    RepIdentity::BinomialProduct { factors, x_vars, y_vars }
}

/// The standard polynomial s_k as a symbolic identity.
pub fn standard_polynomial(k: usize) -> RepIdentity {
    RepIdentity::Standard { degree: k }
}

/// Expand s_k into an explicit polynomial; exponential, for small k only.
pub fn materialize_standard(k: usize) -> Result<RepIdentity> {
    if k > 7 {
        return Err(Error::Invalid(format!("s_{} has {}! terms; too many to materialize", k, k)));
    }
    let mut terms = Vec::new();
    permute_with_sign(k, |perm, sign| {
        let w = word::prod(perm.iter().map(|&i| word::var(i)).collect());
        terms.push((sign, w));
    });
    Ok(RepIdentity::Polynomial { terms, vars: k })
}

/// Heap's algorithm; the sign flips on every transposition.
fn permute_with_sign<F: FnMut(&[usize], i64)>(k: usize, mut visit: F) {
    let mut perm: Vec<usize> = (1..=k).collect();
    let mut c = vec![0usize; k];
    let mut sign = 1i64;
    visit(&perm, sign);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            visit(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Nested commutator encoding solvability of class s over 2^s variables:
/// v_1 = [x1, x2], v_{s+1} = [v_s(x_1..), v_s(x_{2^s+1}..)].
pub fn solvability_word(s: usize) -> Word {
    fn build(s: usize, offset: usize) -> Word {
        if s == 1 {
            word::comm(word::var(offset + 1), word::var(offset + 2))
        } else {
            word::comm(build(s - 1, offset), build(s - 1, offset + (1 << (s - 1))))
        }
    }
    assert!(s >= 1);
    build(s, 0)
}

/// v_s is a law in G exactly when the derived series reaches 1 within s
/// steps; the series itself is computed by exhaustive commutator closure.
pub fn solvability_law_holds(group: &FiniteGroup, s: usize) -> bool {
    match group.derived_length() {
        Some(d) => d <= s,
        None => false,
    }
}

/// Evaluate a rep identity at a full assignment of group elements.
pub fn eval_repidentity(
    group: &FiniteGroup,
    p: u64,
    identity: &RepIdentity,
    assignment: &[usize],
) -> Result<AlgebraElement> {
    match identity {
        RepIdentity::BinomialProduct { factors, .. } => {
            let mut acc = AlgebraElement::embed(group, p, group.identity());
            for (w, yvar) in factors {
                let g = w.eval(group, assignment)?;
                if g == group.identity() {
                    // zero factor short-circuits the whole product
                    return Ok(AlgebraElement::zero(group, p));
                }
                let y = *assignment
                    .get(*yvar - 1)
                    .ok_or(Error::UnassignedVariable(*yvar))?;
                let c = group.conjugate(g, y);
                acc = acc.mul_binomial(group, c);
                if acc.is_zero() {
                    return Ok(acc);
                }
            }
            Ok(acc)
        }
        RepIdentity::Polynomial { terms, .. } => {
            let mut acc = AlgebraElement::zero(group, p);
            for (c, w) in terms {
                let g = w.eval(group, assignment)?;
                let cc = c.rem_euclid(p as i64) as u64;
                acc.coeffs[g] = (acc.coeffs[g] + cc) % p;
            }
            Ok(acc)
        }
        RepIdentity::Standard { degree } => {
            let k = *degree;
            if k > 10 {
                return Err(Error::Invalid(format!(
                    "s_{} evaluation exceeds the practical budget",
                    k
                )));
            }
            if assignment.len() < k {
                return Err(Error::UnassignedVariable(assignment.len() + 1));
            }
            let mut coeffs = vec![0i64; group.order()];
            permute_with_sign(k, |perm, sign| {
                let mut prod = group.identity();
                for &i in perm {
                    prod = group.mul(prod, assignment[i - 1]);
                }
                coeffs[prod] += sign;
            });
            let coeffs = coeffs
                .into_iter()
                .map(|c| c.rem_euclid(p as i64) as u64)
                .collect();
            Ok(AlgebraElement { p, coeffs })
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepMode {
    Exhaustive,
    Certified,
    Sampled,
}

impl std::str::FromStr for RepMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<RepMode> {
        match s {
            "exhaustive" => Ok(RepMode::Exhaustive),
            "certified" => Ok(RepMode::Certified),
            "sampled" => Ok(RepMode::Sampled),
            other => Err(Error::Invalid(format!("unknown mode `{}`", other))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepStatus {
    Identity,
    NotIdentity,
    /// All sampled assignments vanished; never upgraded to Identity.
    SampledPass,
    /// The certified route could not settle the question.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct RepVerdict {
    pub status: RepStatus,
    pub witness: Option<Vec<usize>>,
    pub mode: &'static str,
    pub assignments: u64,
}

impl RepVerdict {
    pub fn is_identity(&self) -> bool {
        self.status == RepStatus::Identity
    }
}

#[derive(Clone, Debug)]
pub struct RepOptions {
    pub samples: u64,
    pub seed: u64,
    pub assignment_budget: u64,
    pub search: SearchOptions,
}

impl Default for RepOptions {
    fn default() -> Self {
        RepOptions {
            samples: 1000,
            seed: 0x5eed,
            assignment_budget: 400_000_000,
            search: SearchOptions::default(),
        }
    }
}

/// Smallest prime not dividing the group order.
pub fn default_prime(group: &FiniteGroup) -> u64 {
    let mut p = 2u64;
    loop {
        if crate::construct::is_prime(p as usize) && group.order() as u64 % p != 0 {
            return p;
        }
        p += 1;
    }
}

/// Decide whether the identity holds in Reg over F_p.
///
/// * exhaustive: every assignment of group elements to every variable.
/// * certified: for a binomial product translated from delta, validity of
///   delta in G forces a zero factor everywhere; when delta fails, only the
///   conjugator extensions of delta's counterexample are scanned, and a
///   fully vanishing scan is reported inconclusive rather than identity.
/// * sampled: random assignments; can only refute or report a sampled pass.
pub fn is_rep_identity(
    group: &FiniteGroup,
    p: u64,
    identity: &RepIdentity,
    mode: RepMode,
    source: Option<&Ude>,
    opts: &RepOptions,
) -> Result<RepVerdict> {
    if !crate::construct::is_prime(p as usize) {
        return Err(Error::NotPrime(p));
    }
    if group.order() as u64 % p == 0 {
        return Err(Error::ModularCharacteristic { p, order: group.order() });
    }
    match mode {
        RepMode::Exhaustive => exhaustive_rep(group, p, identity, opts),
        RepMode::Sampled => sampled_rep(group, p, identity, opts),
        RepMode::Certified => {
            let (factors_ok, x_vars, y_vars) = match identity {
                RepIdentity::BinomialProduct { factors, x_vars, y_vars } => {
                    (!factors.is_empty(), *x_vars, *y_vars)
                }
                _ => (false, 0, 0),
            };
            if !factors_ok {
                return Err(Error::Invalid(
                    "certified mode needs a binomial product with its source formula".into(),
                ));
            }
            let ude = source.ok_or_else(|| {
                Error::Invalid("certified mode needs the source formula".into())
            })?;
            let verdict = is_didentity(group, ude, &opts.search)?;
            match verdict.status {
                Status::Valid => Ok(RepVerdict {
                    status: RepStatus::Identity,
                    witness: None,
                    mode: "certified",
                    assignments: 0,
                }),
                Status::Invalid => {
                    // scan conjugator extensions of the group counterexample
                    let cx = verdict.counterexample.expect("invalid verdict has witness");
                    let mut assignment = vec![0usize; x_vars + y_vars];
                    assignment[..x_vars].copy_from_slice(&cx[..x_vars]);
                    let mut checked = 0u64;
                    let mut done = false;
                    while !done {
                        checked += 1;
                        if checked > opts.assignment_budget {
                            return Err(Error::BudgetExceeded { nodes: checked });
                        }
                        let value = eval_repidentity(group, p, identity, &assignment)?;
                        if !value.is_zero() {
                            return Ok(RepVerdict {
                                status: RepStatus::NotIdentity,
                                witness: Some(assignment),
                                mode: "certified",
                                assignments: checked,
                            });
                        }
                        done = !increment(&mut assignment[x_vars..], group.order());
                    }
                    Ok(RepVerdict {
                        status: RepStatus::Inconclusive,
                        witness: None,
                        mode: "certified",
                        assignments: checked,
                    })
                }
            }
        }
    }
}

fn increment(slots: &mut [usize], base: usize) -> bool {
    for slot in slots.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

fn exhaustive_rep(
    group: &FiniteGroup,
    p: u64,
    identity: &RepIdentity,
    opts: &RepOptions,
) -> Result<RepVerdict> {
    let mut checked = 0u64;
    match identity {
        RepIdentity::BinomialProduct { factors, x_vars, y_vars } => {
            // for a fixed x-part, a factor evaluating to 1 kills the product
            // for every conjugator choice, so the y-scan is skipped
            let mut assignment = vec![0usize; x_vars + y_vars];
            loop {
                checked += 1;
                if checked > opts.assignment_budget {
                    return Err(Error::BudgetExceeded { nodes: checked });
                }
                let mut has_unit_factor = false;
                for (w, _) in factors {
                    if w.eval(group, &assignment)? == group.identity() {
                        has_unit_factor = true;
                        break;
                    }
                }
                if !has_unit_factor {
                    for slot in assignment[*x_vars..].iter_mut() {
                        *slot = 0;
                    }
                    loop {
                        checked += 1;
                        if checked > opts.assignment_budget {
                            return Err(Error::BudgetExceeded { nodes: checked });
                        }
                        let value = eval_repidentity(group, p, identity, &assignment)?;
                        if !value.is_zero() {
                            return Ok(RepVerdict {
                                status: RepStatus::NotIdentity,
                                witness: Some(assignment),
                                mode: "exhaustive",
                                assignments: checked,
                            });
                        }
                        if !increment(&mut assignment[*x_vars..], group.order()) {
                            break;
                        }
                    }
                }
                if !increment(&mut assignment[..*x_vars], group.order()) {
                    break;
                }
            }
            Ok(RepVerdict {
                status: RepStatus::Identity,
                witness: None,
                mode: "exhaustive",
                assignments: checked,
            })
        }
        _ => {
            let vars = identity.total_vars();
            let mut assignment = vec![0usize; vars];
            loop {
                checked += 1;
                if checked > opts.assignment_budget {
                    return Err(Error::BudgetExceeded { nodes: checked });
                }
                let value = eval_repidentity(group, p, identity, &assignment)?;
                if !value.is_zero() {
                    return Ok(RepVerdict {
                        status: RepStatus::NotIdentity,
                        witness: Some(assignment),
                        mode: "exhaustive",
                        assignments: checked,
                    });
                }
                if !increment(&mut assignment, group.order()) {
                    break;
                }
            }
            Ok(RepVerdict {
                status: RepStatus::Identity,
                witness: None,
                mode: "exhaustive",
                assignments: checked,
            })
        }
    }
}

fn sampled_rep(
    group: &FiniteGroup,
    p: u64,
    identity: &RepIdentity,
    opts: &RepOptions,
) -> Result<RepVerdict> {
    let mut rng = ChaCha12Rng::seed_from_u64(opts.seed);
    let vars = identity.total_vars();
    for k in 0..opts.samples {
        let assignment: Vec<usize> =
            (0..vars).map(|_| rng.gen_range(0..group.order())).collect();
        let value = eval_repidentity(group, p, identity, &assignment)?;
        if !value.is_zero() {
            return Ok(RepVerdict {
                status: RepStatus::NotIdentity,
                witness: Some(assignment),
                mode: "sampled",
                assignments: k + 1,
            });
        }
    }
    Ok(RepVerdict {
        status: RepStatus::SampledPass,
        witness: None,
        mode: "sampled",
        assignments: opts.samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::resolve_formula;
    use crate::construct;

    #[test]
    fn embed_arithmetic() {
        let d8 = construct::dihedral(8).unwrap();
        let one = AlgebraElement::embed(&d8, 3, 0);
        assert!(one.sub(&one).is_zero());
        // embed is multiplicative
        for g in 0..d8.order() {
            for h in 0..d8.order() {
                let lhs = AlgebraElement::embed(&d8, 3, g)
                    .mul(&AlgebraElement::embed(&d8, 3, h), &d8);
                let rhs = AlgebraElement::embed(&d8, 3, d8.mul(g, h));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn translate_example_2_10() {
        let (_, u) = resolve_formula("2.10").unwrap();
        let t = translate(&u);
        match &t {
            RepIdentity::BinomialProduct { factors, x_vars, y_vars } => {
                assert_eq!(factors.len(), 4);
                assert_eq!(*x_vars, 2);
                assert_eq!(*y_vars, 4);
                assert_eq!(factors[0].0.to_string(), "x1^4");
            }
            _ => panic!("expected binomial product"),
        }
    }

    #[test]
    fn translate_2_3_has_six_factors() {
        let (_, u) = resolve_formula("2.3").unwrap();
        let t = translate(&u);
        match &t {
            RepIdentity::BinomialProduct { factors, .. } => assert_eq!(factors.len(), 6),
            _ => panic!(),
        }
    }

    #[test]
    fn translate_single_clause() {
        let u = crate::formula::parse_formula("x1^4 = 1").unwrap();
        let t = translate(&u);
        match &t {
            RepIdentity::BinomialProduct { factors, x_vars, y_vars } => {
                assert_eq!(factors.len(), 1);
                assert_eq!((*x_vars, *y_vars), (1, 1));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn power_identity_on_d8() {
        let d8 = construct::dihedral(8).unwrap();
        let opts = RepOptions::default();
        // x^4 - 1 is an identity over F3
        let v = is_rep_identity(&d8, 3, &RepIdentity::power_identity(4), RepMode::Exhaustive, None, &opts).unwrap();
        assert!(v.is_identity());
        // x^2 - 1 is not; witness x = a
        let v = is_rep_identity(&d8, 3, &RepIdentity::power_identity(2), RepMode::Exhaustive, None, &opts).unwrap();
        assert_eq!(v.status, RepStatus::NotIdentity);
        let w = v.witness.unwrap();
        assert_ne!(d8.pow(w[0], 2), 0);
    }

    #[test]
    fn modular_characteristic_refused() {
        let d8 = construct::dihedral(8).unwrap();
        let opts = RepOptions::default();
        assert!(matches!(
            is_rep_identity(&d8, 2, &RepIdentity::power_identity(4), RepMode::Exhaustive, None, &opts),
            Err(Error::ModularCharacteristic { .. })
        ));
    }

    #[test]
    fn standard_polynomial_small() {
        // s_2 = x1 x2 - x2 x1
        let s2 = materialize_standard(2).unwrap();
        match &s2 {
            RepIdentity::Polynomial { terms, .. } => {
                assert_eq!(terms.len(), 2);
                assert_eq!(terms[0].0, 1);
                assert_eq!(terms[1].0, -1);
            }
            _ => panic!(),
        }
        // symbolic and materialized evaluations agree on random points
        let s3 = construct::symmetric(3);
        let sym = standard_polynomial(4);
        let mat = materialize_standard(4).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a: Vec<usize> = (0..4).map(|_| rng.gen_range(0..6)).collect();
            assert_eq!(
                eval_repidentity(&s3, 5, &sym, &a).unwrap(),
                eval_repidentity(&s3, 5, &mat, &a).unwrap()
            );
        }
    }

    #[test]
    fn s2_not_identity_on_noncommutative() {
        let s3 = construct::symmetric(3);
        let opts = RepOptions::default();
        let v = is_rep_identity(&s3, 5, &standard_polynomial(2), RepMode::Exhaustive, None, &opts).unwrap();
        assert_eq!(v.status, RepStatus::NotIdentity);
    }

    #[test]
    fn solvability_words() {
        assert_eq!(solvability_word(1).to_string(), "[x1,x2]");
        assert_eq!(
            solvability_word(3).to_string(),
            "[[[x1,x2],[x3,x4]],[[x5,x6],[x7,x8]]]"
        );
        let s4 = construct::symmetric(4);
        assert!(solvability_law_holds(&s4, 3));
        assert!(!solvability_law_holds(&s4, 2));
        let a5 = construct::alternating(5);
        assert!(!solvability_law_holds(&a5, 10));
    }

    #[test]
    fn certified_agrees_with_exhaustive_on_2_2() {
        let d8 = construct::dihedral(8).unwrap();
        let (_, u) = resolve_formula("2.2").unwrap();
        let t = translate(&u);
        let opts = RepOptions::default();
        let c = is_rep_identity(&d8, 3, &t, RepMode::Certified, Some(&u), &opts).unwrap();
        let e = is_rep_identity(&d8, 3, &t, RepMode::Exhaustive, None, &opts).unwrap();
        assert!(c.is_identity() && e.is_identity());
    }

    #[test]
    fn certified_refutes_via_witness_extension() {
        // x^2 = 1 is not a d-identity of D8 and x^2 - 1 (with conjugator)
        // is not a rep identity either
        let d8 = construct::dihedral(8).unwrap();
        let u = crate::formula::parse_formula("x1^2 = 1").unwrap();
        let t = translate(&u);
        let opts = RepOptions::default();
        let v = is_rep_identity(&d8, 3, &t, RepMode::Certified, Some(&u), &opts).unwrap();
        assert_eq!(v.status, RepStatus::NotIdentity);
        let w = v.witness.unwrap();
        assert!(!eval_repidentity(&d8, 3, &t, &w).unwrap().is_zero());
    }

    #[test]
    fn sampled_never_says_identity() {
        let d8 = construct::dihedral(8).unwrap();
        let opts = RepOptions { samples: 50, ..Default::default() };
        let v = is_rep_identity(&d8, 3, &RepIdentity::power_identity(4), RepMode::Sampled, None, &opts).unwrap();
        assert_eq!(v.status, RepStatus::SampledPass);
    }

    #[test]
    fn default_primes() {
        assert_eq!(default_prime(&construct::dihedral(8).unwrap()), 3);
        assert_eq!(default_prime(&construct::symmetric(4)), 5);
        assert_eq!(default_prime(&construct::alternating(6)), 7);
    }
}
