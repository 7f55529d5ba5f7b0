//! Verification campaigns: formula validity, named eliminations, exhaustive
//! basis dichotomies over the census, the parametric dihedral basis, lemma
//! instance sweeps and the regular-representation claims. Campaign items are
//! independent obligations and the report is a deterministic fold of them.

use crate::catalog::groups::Census;
use crate::catalog::{census_selfcheck, resolve_formula};
use crate::error::{Error, Result};
use crate::formula::Ude;
use crate::group::{is_isomorphic, is_section, FiniteGroup};
use crate::perm::Perm;
use crate::repalg::{
    self, is_rep_identity, standard_polynomial, translate, RepIdentity, RepMode, RepOptions,
    RepStatus,
};
use crate::report::{Report, ReportItem};
use crate::search::{is_didentity, SearchOptions, Status};
use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Elimination {
    pub group: String,
    pub formula: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

/// A basis claim: the target satisfies all the formulas, the listed groups
/// are eliminated, and over `scope_orders` every census group either fails a
/// formula or is a section of the target (weak claims exempt groups with
/// noncyclic center). `expected_violations` turns a claim into a gap
/// reproduction: the dichotomy must fail at exactly those groups.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisClaim {
    pub name: String,
    pub target: String,
    #[serde(default)]
    pub formulas: Vec<String>,
    #[serde(default)]
    pub scope_orders: Vec<usize>,
    #[serde(default)]
    pub eliminations: Vec<Elimination>,
    #[serde(default)]
    pub weak: bool,
    /// Pairs of catalog variants of which exactly one must be valid.
    #[serde(default)]
    pub adjudications: Vec<[String; 2]>,
    /// Variant formulas whose verdict is reported without affecting the
    /// outcome.
    #[serde(default)]
    pub variant_reports: Vec<String>,
    #[serde(default)]
    pub expected_violations: Vec<String>,
}

impl BasisClaim {
    fn new(name: &str, target: &str) -> BasisClaim {
        BasisClaim {
            name: name.to_string(),
            target: target.to_string(),
            formulas: Vec::new(),
            scope_orders: Vec::new(),
            eliminations: Vec::new(),
            weak: false,
            adjudications: Vec::new(),
            variant_reports: Vec::new(),
            expected_violations: Vec::new(),
        }
    }

    fn formulas(mut self, refs: &[&str]) -> BasisClaim {
        self.formulas = refs.iter().map(|s| s.to_string()).collect();
        self
    }

    fn scope(mut self, orders: std::ops::RangeInclusive<usize>) -> BasisClaim {
        self.scope_orders = orders.collect();
        self
    }

    fn eliminate(mut self, group: &str, formula: &str, witness: &[&str]) -> BasisClaim {
        self.eliminations.push(Elimination {
            group: group.to_string(),
            formula: formula.to_string(),
            witness: if witness.is_empty() {
                None
            } else {
                Some(witness.iter().map(|s| s.to_string()).collect())
            },
        });
        self
    }

    fn weak_claim(mut self) -> BasisClaim {
        self.weak = true;
        self
    }

    fn adjudicate(mut self, a: &str, b: &str) -> BasisClaim {
        self.adjudications.push([a.to_string(), b.to_string()]);
        self
    }

    fn report_variant(mut self, id: &str) -> BasisClaim {
        self.variant_reports.push(id.to_string());
        self
    }

    fn expect_violations(mut self, names: &[&str]) -> BasisClaim {
        self.expected_violations = names.iter().map(|s| s.to_string()).collect();
        self
    }
}

fn resolve_refs(refs: &[String]) -> Result<Vec<(String, Ude)>> {
    refs.iter().map(|r| resolve_formula(r)).collect()
}

/// Validity half of a claim: every formula must be a d-identity of the target.
pub fn verify_validity(claim: &BasisClaim, opts: &SearchOptions) -> Result<Report> {
    let census = Census::get();
    let target = census.resolve(&claim.target)?;
    let mut report = Report::new(&claim.name, Some(&claim.target));
    for (id, ude) in resolve_refs(&claim.formulas)? {
        let verdict = is_didentity(&target, &ude, opts)?;
        let mut item = ReportItem::check(
            "validity",
            &id,
            verdict.status == Status::Valid,
            match verdict.status {
                Status::Valid => "valid".to_string(),
                Status::Invalid => "invalid".to_string(),
            },
        )
        .with_nodes(verdict.nodes);
        if let Some(w) = verdict.witness_labels(&target) {
            item = item.with_witness(w);
        }
        report.push(item);
    }
    report.finish();
    Ok(report)
}

/// Elimination half: each (group, formula) pair must come out invalid, and a
/// stated witness must itself falsify every clause.
pub fn verify_eliminations(claim: &BasisClaim, opts: &SearchOptions) -> Result<Report> {
    let census = Census::get();
    let mut report = Report::new(&claim.name, Some(&claim.target));
    for elim in &claim.eliminations {
        let group = census.resolve(&elim.group)?;
        let (id, ude) = resolve_formula(&elim.formula)?;
        let verdict = is_didentity(&group, &ude, opts)?;
        let subject = format!("{} fails {}", elim.group, id);
        let mut item = ReportItem::check(
            "elimination",
            &subject,
            verdict.status == Status::Invalid,
            match verdict.status {
                Status::Invalid => "invalid as required".to_string(),
                Status::Valid => "unexpectedly valid".to_string(),
            },
        )
        .with_nodes(verdict.nodes);
        if let Some(w) = verdict.witness_labels(&group) {
            item = item.with_witness(w);
        }
        report.push(item);
        if let Some(witness_names) = &elim.witness {
            let assignment = resolve_witness(&group, witness_names, ude.variable_count)?;
            let falsifies = ude.falsified_by(&group, &assignment)?;
            report.push(ReportItem::check(
                "witness",
                &subject,
                falsifies,
                if falsifies {
                    format!("stated witness ({}) confirmed", witness_names.join(", "))
                } else {
                    format!("stated witness ({}) does NOT falsify", witness_names.join(", "))
                },
            ));
        }
    }
    report.finish();
    Ok(report)
}

/// Resolve witness element names; omega-builtin variables (beyond the names
/// given) are filled with distinct elements.
fn resolve_witness(
    group: &FiniteGroup,
    names: &[String],
    variable_count: usize,
) -> Result<Vec<usize>> {
    let mut assignment = Vec::with_capacity(variable_count);
    for name in names {
        assignment.push(group.element_by_name(name)?);
    }
    let mut filler = 0usize;
    while assignment.len() < variable_count {
        assignment.push(filler % group.order());
        filler += 1;
    }
    Ok(assignment)
}

/// The exhaustive dichotomy: every census group in scope fails some claim
/// formula, or is a section of the target, or (for weak claims) has a
/// noncyclic center and is exempt.
pub fn verify_basis_exhaustive(claim: &BasisClaim, opts: &SearchOptions) -> Result<Report> {
    let census = Census::get();
    let target = census.resolve(&claim.target)?;
    let formulas = resolve_refs(&claim.formulas)?;
    let mut report = Report::new(&claim.name, Some(&claim.target));
    let mut violations: Vec<String> = Vec::new();
    for &order in &claim.scope_orders {
        for group in census.groups_of_order(order)? {
            let mut failed: Option<(String, Vec<String>)> = None;
            for (id, ude) in &formulas {
                let verdict = is_didentity(&group, ude, opts)?;
                if verdict.status == Status::Invalid {
                    failed = Some((
                        id.clone(),
                        verdict.witness_labels(&group).unwrap_or_default(),
                    ));
                    break;
                }
            }
            let item = match failed {
                Some((id, witness)) => {
                    ReportItem::check("dichotomy", group.name(), true, format!("fails {}", id))
                        .with_witness(witness)
                }
                None => {
                    if claim.weak && !has_cyclic_center(&group) {
                        ReportItem::check(
                            "dichotomy",
                            group.name(),
                            true,
                            "satisfies all; exempt (noncyclic center)".to_string(),
                        )
                    } else if let Some((h, k)) = is_section(&target, &group, 3) {
                        ReportItem::check(
                            "dichotomy",
                            group.name(),
                            true,
                            format!(
                                "satisfies all; section H/K with |H| = {}, |K| = {}",
                                h.order(),
                                k.order()
                            ),
                        )
                    } else {
                        violations.push(group.name().to_string());
                        let expected =
                            claim.expected_violations.iter().any(|v| v == group.name());
                        ReportItem::check(
                            "dichotomy",
                            group.name(),
                            expected,
                            if expected {
                                "satisfies all yet is not a section (expected gap)".to_string()
                            } else {
                                "satisfies all yet is not a section".to_string()
                            },
                        )
                    }
                }
            };
            report.push(item);
        }
    }
    if !claim.expected_violations.is_empty() {
        let mut expected = claim.expected_violations.clone();
        expected.sort();
        violations.sort();
        report.push(ReportItem::check(
            "gap",
            "expected violations",
            violations == expected,
            format!("found [{}], expected [{}]", violations.join(", "), expected.join(", ")),
        ));
    }
    report.finish();
    Ok(report)
}

fn has_cyclic_center(group: &FiniteGroup) -> bool {
    let center = group.center();
    let z = group.subgroup_as_group(&center, "Z");
    z.exponent() == z.order()
}

/// Adjudication between two catalog variants: exactly one must be valid in
/// the target; the campaign binds to the valid one.
fn adjudicate_pair(
    target: &FiniteGroup,
    pair: &[String; 2],
    opts: &SearchOptions,
    report: &mut Report,
) -> Result<Option<String>> {
    let mut valid_ids = Vec::new();
    for reference in pair {
        let (id, ude) = resolve_formula(reference)?;
        let verdict = is_didentity(target, &ude, opts)?;
        let mut item = ReportItem::check(
            "adjudication",
            &id,
            true,
            match verdict.status {
                Status::Valid => "valid".to_string(),
                Status::Invalid => "invalid".to_string(),
            },
        )
        .with_nodes(verdict.nodes);
        if let Some(w) = verdict.witness_labels(target) {
            item = item.with_witness(w);
        }
        report.push(item);
        if verdict.status == Status::Valid {
            valid_ids.push(id);
        }
    }
    let resolved = if valid_ids.len() == 1 { Some(valid_ids[0].clone()) } else { None };
    report.push(ReportItem::check(
        "adjudication",
        &format!("{} vs {}", pair[0], pair[1]),
        resolved.is_some(),
        match &resolved {
            Some(id) => format!("exactly one variant is valid: {}", id),
            None => format!("{} variants valid; expected exactly one", valid_ids.len()),
        },
    ));
    Ok(resolved)
}

/// Run a full basis claim: adjudications, validity, eliminations, dichotomy.
pub fn run_basis_claim(claim: &BasisClaim, opts: &SearchOptions) -> Result<Report> {
    let start = Instant::now();
    let census = Census::get();
    let target = census.resolve(&claim.target)?;
    let mut report = Report::new(&claim.name, Some(&claim.target));

    for pair in &claim.adjudications {
        adjudicate_pair(&target, pair, opts, &mut report)?;
    }
    for reference in &claim.variant_reports {
        let (id, ude) = resolve_formula(reference)?;
        let verdict = is_didentity(&target, &ude, opts)?;
        let mut item = ReportItem::check(
            "variant",
            &id,
            true,
            match verdict.status {
                Status::Valid => "valid (reported only)".to_string(),
                Status::Invalid => "invalid (reported only)".to_string(),
            },
        );
        if let Some(w) = verdict.witness_labels(&target) {
            item = item.with_witness(w);
        }
        report.push(item);
    }

    let validity = verify_validity(claim, opts)?;
    report.items.extend(validity.items);
    let eliminations = verify_eliminations(claim, opts)?;
    report.items.extend(eliminations.items);
    if !claim.scope_orders.is_empty() {
        let dichotomy = verify_basis_exhaustive(claim, opts)?;
        report.items.extend(dichotomy.items);
    }
    report.finish();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// dihedral basis generator

/// The generated basis claim for D_{2m}.
///
/// Even m: omega(2m), 5.1, 5.2, 5.3 for every prime divisor of m, 5.4, and
/// 5.5 for every odd prime divisor. Odd m: omega(2m), 5.1, 5.2', 5.3 for
/// every prime divisor, and 5.6.
pub fn dihedral_basis(m: usize) -> Result<BasisClaim> {
    if m < 2 {
        return Err(Error::Invalid("dihedral basis needs m >= 2".into()));
    }
    let order = 2 * m;
    let mut formulas = vec![format!("omega:{}", order), "5.1".to_string()];
    let primes: Vec<usize> = (2..=m).filter(|&p| crate::construct::is_prime(p) && m % p == 0).collect();
    let mut claim = BasisClaim::new(&format!("dihedral-m{}", m), &format!("dihedral({})", order));
    if m % 2 == 0 {
        formulas.push(format!("5.2@m={}", m));
        for &p in &primes {
            formulas.push(format!("5.3@m={},p={}", m, p));
        }
        formulas.push(format!("5.4@m={}", m));
        for &p in primes.iter().filter(|&&p| p != 2) {
            formulas.push(format!("5.5@m={},p={}", m, p));
        }
        claim = claim
            .eliminate("Z2^3", &format!("5.4@m={}", m), &[])
            .eliminate("Z4xZ2", &format!("5.3@m={},p=2", m), &[]);
        for &p in primes.iter().filter(|&&p| p != 2) {
            claim = claim
                .eliminate(
                    &format!("elementary_abelian({},2)", p),
                    &format!("5.3@m={},p={}", m, p),
                    &[],
                )
                .eliminate(
                    &format!("direct_product(cyclic({}), elementary_abelian(2,2))", p),
                    &format!("5.5@m={},p={}", m, p),
                    &[],
                );
        }
    } else {
        formulas.push(format!("5.2'@m={}", m));
        for &p in &primes {
            formulas.push(format!("5.3@m={},p={}", m, p));
        }
        formulas.push(format!("5.6@m={}", m));
        claim = claim.eliminate("Z2^2", &format!("5.6@m={}", m), &[]);
        for &p in &primes {
            claim = claim.eliminate(
                &format!("elementary_abelian({},2)", p),
                &format!("5.3@m={},p={}", m, p),
                &[],
            );
        }
    }
    claim.formulas = formulas;
    if order <= 24 {
        claim.scope_orders = (1..=order).collect();
    }
    Ok(claim)
}

// ---------------------------------------------------------------------------
// lemma instance sweeps

fn elements_with<F: Fn(&Perm) -> bool>(group: &FiniteGroup, pred: F) -> Vec<usize> {
    let perms = group.perm_images().expect("permutation group");
    (0..group.order()).filter(|&g| pred(&perms[g])).collect()
}

/// All ordered pairs of n-cycles in S_{n+1}: some alpha * beta^d with
/// 1 <= d <= n-1 is not an n-cycle.
pub fn lemma1(n: usize) -> Result<Report> {
    let group = crate::construct::symmetric(n + 1);
    let perms = group.perm_images().unwrap();
    let cycles = elements_with(&group, |p| p.is_n_cycle(n));
    let mut report = Report::new(&format!("lemma1-n{}", n), None);
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for &a in &cycles {
        for &b in &cycles {
            checked += 1;
            let mut ok = false;
            let mut power = a;
            for _ in 1..=(n - 1) {
                power = group.mul(power, b);
                if !perms[power].is_n_cycle(n) {
                    ok = true;
                    break;
                }
            }
            if !ok {
                failures.push(format!("{}, {}", group.label(a), group.label(b)));
            }
        }
    }
    report.push(ReportItem::check(
        "lemma",
        &format!("{} ordered pairs of {}-cycles in S{}", checked, n, n + 1),
        failures.is_empty(),
        if failures.is_empty() {
            "every pair admits d with alpha*beta^d not an n-cycle".to_string()
        } else {
            format!("failing pairs: {}", failures.join("; "))
        },
    ));
    report.finish();
    Ok(report)
}

/// Census sweep: the unique order-24 group without elements of order 6 is S4.
pub fn lemma2() -> Result<Report> {
    let census = Census::get();
    let mut report = Report::new("lemma2", None);
    let mut hits = Vec::new();
    for group in census.groups_of_order(24)? {
        let has6 = group.order_spectrum().iter().any(|&(o, _)| o == 6);
        if !has6 {
            hits.push(group);
        }
    }
    let s4 = census.group("S4")?;
    let pass = hits.len() == 1 && is_isomorphic(&hits[0], &s4).is_some();
    let found = hits.iter().map(|g| g.name().to_string()).collect::<Vec<_>>().join(", ");
    report.push(ReportItem::check(
        "lemma",
        "order-24 groups without order-6 elements",
        pass,
        format!("found [{}]; unique and isomorphic to S4: {}", found, pass),
    ));
    report.finish();
    Ok(report)
}

/// All ordered pairs of 4-cycles in S5: one of x1x2, x1x2^2, x1x2^3 has
/// order dividing 15.
pub fn lemma3() -> Result<Report> {
    let group = crate::construct::symmetric(5);
    let four_cycles = elements_with(&group, |p| p.is_n_cycle(4));
    let mut report = Report::new("lemma3", None);
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for &a in &four_cycles {
        for &b in &four_cycles {
            checked += 1;
            let mut ok = false;
            let mut power = a;
            for _ in 1..=3 {
                power = group.mul(power, b);
                if group.pow(power, 15) == 0 {
                    ok = true;
                    break;
                }
            }
            if !ok {
                failures.push(format!("{}, {}", group.label(a), group.label(b)));
            }
        }
    }
    report.push(ReportItem::check(
        "lemma",
        &format!("{} ordered pairs of 4-cycles in S5", checked),
        failures.is_empty(),
        if failures.is_empty() {
            "some x1*x2^d has order dividing 15".to_string()
        } else {
            format!("failing pairs: {}", failures.join("; "))
        },
    ));
    report.finish();
    Ok(report)
}

/// All ordered pairs of order-3 elements of A6 in distinct Sylow
/// 3-subgroups: alpha*beta or alpha*beta^2 has order different from 3.
pub fn lemma4() -> Result<Report> {
    let group = crate::construct::alternating(6);
    let order3: Vec<usize> =
        (0..group.order()).filter(|&g| group.element_order(g) == 3).collect();
    let mut report = Report::new("lemma4", None);
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for &a in &order3 {
        for &b in &order3 {
            // same Sylow 3-subgroup exactly when <a, b> is a 3-group
            let generated = group.closure(&[a, b]).len();
            if generated == 3 || generated == 9 {
                continue;
            }
            checked += 1;
            let ab = group.mul(a, b);
            let ab2 = group.mul(ab, b);
            if group.element_order(ab) == 3 && group.element_order(ab2) == 3 {
                failures.push(format!("{}, {}", group.label(a), group.label(b)));
            }
        }
    }
    report.push(ReportItem::check(
        "lemma",
        &format!("{} ordered pairs in distinct Sylow 3-subgroups of A6", checked),
        failures.is_empty() && checked > 0,
        if failures.is_empty() {
            "alpha*beta or alpha*beta^2 always has order != 3".to_string()
        } else {
            format!("failing pairs: {}", failures.join("; "))
        },
    ));
    report.finish();
    Ok(report)
}

/// All ordered pairs of 5-cycles in S6 with distinct supports: one of
/// alpha*beta, alpha*beta^3, alpha^2*beta is not a 5-cycle.
pub fn lemma5_s4() -> Result<Report> {
    let group = crate::construct::symmetric(6);
    let perms = group.perm_images().unwrap();
    let five_cycles = elements_with(&group, |p| p.is_n_cycle(5));
    let mut report = Report::new("lemma5-s4", None);
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for &a in &five_cycles {
        for &b in &five_cycles {
            if perms[a].support() == perms[b].support() {
                continue;
            }
            checked += 1;
            let ab = group.mul(a, b);
            let ab3 = group.mul(a, group.pow(b, 3));
            let a2b = group.mul(group.mul(a, a), b);
            if perms[ab].is_n_cycle(5) && perms[ab3].is_n_cycle(5) && perms[a2b].is_n_cycle(5) {
                failures.push(format!("{}, {}", group.label(a), group.label(b)));
            }
        }
    }
    report.push(ReportItem::check(
        "lemma",
        &format!("{} ordered pairs of 5-cycles in S6 with distinct supports", checked),
        failures.is_empty(),
        if failures.is_empty() {
            "one of alpha*beta, alpha*beta^3, alpha^2*beta is never a 5-cycle".to_string()
        } else {
            format!("failing pairs: {}", failures.join("; "))
        },
    ));
    report.finish();
    Ok(report)
}

/// Census sweep of the structure lemma behind the dihedral series: every
/// census group of order <= 24 satisfying 5.1 is abelian or is A : Z2 with
/// an abelian A inverted from outside.
pub fn lemma5_s5(opts: &SearchOptions) -> Result<Report> {
    let census = Census::get();
    let (_, five_one) = resolve_formula("5.1")?;
    let mut report = Report::new("lemma5-s5", None);
    for order in 1..=24 {
        for group in census.groups_of_order(order)? {
            let verdict = is_didentity(&group, &five_one, opts)?;
            if verdict.status == Status::Invalid {
                continue;
            }
            if group.is_abelian() {
                report.push(ReportItem::check(
                    "lemma",
                    group.name(),
                    true,
                    "satisfies 5.1; abelian".to_string(),
                ));
                continue;
            }
            // the subgroup generated by the non-involutions must be abelian
            // of index 2 with every outside element acting by inversion
            let gens: Vec<usize> = (1..group.order())
                .filter(|&g| group.element_order(g) > 2)
                .collect();
            let a = group.subgroup(&gens);
            let a_group = group.subgroup_as_group(&a, "A");
            let index_two = a.order() * 2 == group.order();
            let abelian = a_group.is_abelian();
            let inverts = (0..group.order())
                .filter(|g| !a.contains(*g))
                .all(|b| a.members.iter().all(|&m| group.conjugate(m, b) == group.inv(m)));
            report.push(ReportItem::check(
                "lemma",
                group.name(),
                index_two && abelian && inverts,
                format!(
                    "satisfies 5.1; decomposes as A : Z2 with |A| = {} and inversion action",
                    a.order()
                ),
            ));
        }
    }
    report.finish();
    Ok(report)
}

/// For every even m <= max_m: an abelian census group of exponent dividing m
/// without sections Z2^3, Z4xZ2, Z_p^2, Z_p x Z2^2 (p an odd prime divisor
/// of m) is a section of D_{2m}.
pub fn lemma7(max_m: usize) -> Result<Report> {
    let census = Census::get();
    let mut report = Report::new("lemma7", None);
    for m in (2..=max_m).step_by(2) {
        let dihedral = census.resolve(&format!("dihedral({})", 2 * m))?;
        let mut obstructions: Vec<std::sync::Arc<FiniteGroup>> =
            vec![census.group("Z2^3")?, census.group("Z4xZ2")?];
        for p in (3..=m).filter(|&p| crate::construct::is_prime(p) && m % p == 0) {
            obstructions.push(census.resolve(&format!("elementary_abelian({},2)", p))?);
            obstructions.push(census.resolve(&format!(
                "direct_product(cyclic({}), elementary_abelian(2,2))",
                p
            ))?);
        }
        let mut checked = 0;
        let mut bad: Vec<String> = Vec::new();
        for order in 1..=24usize {
            for group in census.groups_of_order(order)? {
                if !group.is_abelian() || m % group.exponent() != 0 {
                    continue;
                }
                let obstructed = obstructions
                    .iter()
                    .any(|t| is_section(&group, t, 3).is_some());
                if obstructed {
                    continue;
                }
                checked += 1;
                if is_section(&dihedral, &group, 3).is_none() {
                    bad.push(group.name().to_string());
                }
            }
        }
        report.push(ReportItem::check(
            "lemma",
            &format!("m = {} ({} unobstructed abelian groups)", m, checked),
            bad.is_empty(),
            if bad.is_empty() {
                format!("all are sections of D{}", 2 * m)
            } else {
                format!("not sections of D{}: {}", 2 * m, bad.join(", "))
            },
        ));
    }
    report.finish();
    Ok(report)
}

// ---------------------------------------------------------------------------
// regular-representation claims

fn rep_item(name: &str, verdict: &repalg::RepVerdict, expect: RepStatus) -> ReportItem {
    let ok = verdict.status == expect;
    ReportItem::check(
        "rep",
        name,
        ok,
        format!("{:?} via {} ({} assignments)", verdict.status, verdict.mode, verdict.assignments),
    )
}

/// Reg D8 over F3: the omega translation certified, x^4 - 1 and the
/// translated 2.3 exhaustive, plus a negative control.
pub fn prop5(opts: &RepOptions) -> Result<Report> {
    let census = Census::get();
    let d8 = census.group("D8")?;
    let p = 3u64;
    let mut report = Report::new("prop5", Some("D8"));

    let (_, omega8) = resolve_formula("2.1")?;
    let t61 = translate(&omega8);
    let v = is_rep_identity(&d8, p, &t61, RepMode::Certified, Some(&omega8), opts)?;
    report.push(rep_item("6.1 (omega(8) translated)", &v, RepStatus::Identity));

    let v = is_rep_identity(&d8, p, &RepIdentity::power_identity(4), RepMode::Exhaustive, None, opts)?;
    report.push(rep_item("6.2 (x^4 - 1)", &v, RepStatus::Identity));

    let (_, f23) = resolve_formula("2.3")?;
    let t63 = translate(&f23);
    let v = is_rep_identity(&d8, p, &t63, RepMode::Exhaustive, None, opts)?;
    report.push(rep_item("6.3 (2.3 translated, exhaustive)", &v, RepStatus::Identity));
    let v = is_rep_identity(&d8, p, &t63, RepMode::Certified, Some(&f23), opts)?;
    report.push(rep_item("6.3 (2.3 translated, certified)", &v, RepStatus::Identity));

    // conjugator-free x^4 - 1 agrees with the translated single-clause form
    let (_, f22) = resolve_formula("2.2")?;
    let t22 = translate(&f22);
    let v = is_rep_identity(&d8, p, &t22, RepMode::Exhaustive, None, opts)?;
    report.push(rep_item("2.2 translated (with conjugator)", &v, RepStatus::Identity));

    let v = is_rep_identity(&d8, p, &RepIdentity::power_identity(2), RepMode::Exhaustive, None, opts)?;
    report.push(rep_item("negative control x^2 - 1", &v, RepStatus::NotIdentity));

    report.finish();
    Ok(report)
}

/// Reg S4 over F5: x^12 - 1 exhaustive, the translated 2.10-2.13 and
/// omega(24) certified, and the solvability identity v_3 - 1 via the derived
/// series plus sampling.
pub fn prop6(opts: &RepOptions) -> Result<Report> {
    let census = Census::get();
    let s4 = census.group("S4")?;
    let p = 5u64;
    let mut report = Report::new("prop6", Some("S4"));

    let v = is_rep_identity(&s4, p, &RepIdentity::power_identity(12), RepMode::Exhaustive, None, opts)?;
    report.push(rep_item("6.4 (x^12 - 1)", &v, RepStatus::Identity));

    for id in ["omega:24", "2.10", "2.11", "2.12", "2.13"] {
        let (canonical, ude) = resolve_formula(id)?;
        let t = translate(&ude);
        let v = is_rep_identity(&s4, p, &t, RepMode::Certified, Some(&ude), opts)?;
        report.push(rep_item(&format!("{}* certified", canonical), &v, RepStatus::Identity));
    }

    // 6.5 = v_3 - 1: the derived series (an exhaustive arity-2 computation
    // per level) certifies the law; sampling corroborates the algebra side
    let dl = s4.derived_length();
    report.push(ReportItem::check(
        "rep",
        "6.5 derived series",
        dl == Some(3),
        format!("derived length {:?}; v_3 is a law iff the length is <= 3", dl),
    ));
    let v65 = RepIdentity::solvability_identity(3);
    let sampled = RepOptions { samples: 10_000, ..opts.clone() };
    let v = is_rep_identity(&s4, p, &v65, RepMode::Sampled, None, &sampled)?;
    report.push(rep_item("6.5 (v_3 - 1) sampled 10^4", &v, RepStatus::SampledPass));

    // negative control: v_2 - 1 is not an identity (derived length 3 > 2)
    let v = is_rep_identity(&s4, p, &RepIdentity::solvability_identity(2), RepMode::Exhaustive, None, opts)?;
    report.push(rep_item("negative control v_2 - 1", &v, RepStatus::NotIdentity));

    report.finish();
    Ok(report)
}

/// Reg A6 over F7: x^60 - 1 exhaustive, the translated 4.1-4.7 certified
/// (4.6 under the product reading), and the standard polynomial s_361
/// validated structurally with the dimension property sampled at small
/// degree; s_361 itself has 361! terms and is explicitly not evaluated.
pub fn prop7(opts: &RepOptions) -> Result<Report> {
    let census = Census::get();
    let a6 = census.group("A6")?;
    let p = 7u64;
    let mut report = Report::new("prop7", Some("A6"));

    let v = is_rep_identity(&a6, p, &RepIdentity::power_identity(60), RepMode::Exhaustive, None, opts)?;
    report.push(rep_item("x^60 - 1", &v, RepStatus::Identity));

    for id in ["4.1", "4.2", "4.3", "4.4", "4.5", "4.6a", "4.7"] {
        let (canonical, ude) = resolve_formula(id)?;
        let t = translate(&ude);
        let v = is_rep_identity(&a6, p, &t, RepMode::Certified, Some(&ude), opts)?;
        report.push(rep_item(&format!("{}* certified", canonical), &v, RepStatus::Identity));
    }

    // s_361: structural construction only (361! terms are not evaluable);
    // the dimension property s_{|G|+1} = 0 is sampled at small degree below
    let s361 = standard_polynomial(361);
    report.push(ReportItem::check(
        "rep",
        "s_361 structural",
        s361.total_vars() == 361 && a6.order() + 1 == 361,
        "degree 361 = |A6| + 1; represented symbolically, substituted by the \
         small-degree dimension property, never evaluated"
            .to_string(),
    ));
    for (name, prime, samples) in [("S3", 5u64, 1000u64), ("D8", 3u64, 1000u64)] {
        let g = census.group(name)?;
        let s = standard_polynomial(g.order() + 1);
        let sample_opts = RepOptions { samples, ..opts.clone() };
        let v = is_rep_identity(&g, prime, &s, RepMode::Sampled, None, &sample_opts)?;
        report.push(rep_item(
            &format!("s_{} over F{}[{}] sampled 10^3", g.order() + 1, prime, name),
            &v,
            RepStatus::SampledPass,
        ));
    }

    report.finish();
    Ok(report)
}

// ---------------------------------------------------------------------------
// built-in claims

pub fn builtin_basis_claims() -> Vec<BasisClaim> {
    vec![
        BasisClaim::new("prop1", "D8")
            .formulas(&["2.1", "2.2", "2.3", "2.4"])
            .scope(1..=8)
            .eliminate("Z2^3", "2.4", &["e1", "e2", "e3"]),
        BasisClaim::new("prop1-neg", "D8")
            .formulas(&["2.1", "2.2", "2.3"])
            .scope(1..=8)
            .expect_violations(&["Z2^3"]),
        BasisClaim::new("prop1-weak", "D8")
            .formulas(&["2.1", "2.2", "2.3"])
            .scope(1..=8)
            .weak_claim(),
        BasisClaim::new("prop2", "Q8")
            .formulas(&["2.1", "2.2", "2.5", "2.6"])
            .scope(1..=8)
            .eliminate("Z4xZ2", "2.5", &["g1", "g2"])
            .eliminate("D8", "2.5", &["a", "b"])
            .eliminate("Z2^3", "2.6", &["e1", "e2", "e3"]),
        BasisClaim::new("prop3", "A4")
            .formulas(&["omega:12", "2.7", "2.8", "2.9", "2.10"])
            .scope(1..=12)
            .eliminate("S3", "2.8", &["(12)", "(13)"])
            .eliminate("Z2^3", "2.9", &["e1", "e2", "e3"])
            .eliminate("Z3^2", "2.10", &["e1", "e2"]),
        BasisClaim::new("prop3-weak", "A4")
            .formulas(&["omega:12", "2.7", "2.8"])
            .scope(1..=12)
            .weak_claim(),
        BasisClaim::new("prop4", "S4")
            .formulas(&["omega:24", "2.10", "2.11", "2.12", "2.13"])
            .scope(1..=24)
            .eliminate("Z4xZ2", "2.12", &["g1", "g1*g2"])
            .eliminate("Q8", "2.12", &["i", "j"])
            .eliminate("Z2^3", "2.13", &["e1", "e2", "e3"]),
        BasisClaim::new("thm1", "A5")
            .formulas(&["omega:60", "3.1", "3.2", "3.3", "3.4"])
            .eliminate("Z2^3", "3.2", &["e1", "e2", "e3"])
            .eliminate("Z3^2", "3.3", &["e1", "e2"])
            .eliminate("Z5^2", "3.4", &["e1", "e2"]),
        BasisClaim::new("thm2", "S5")
            .formulas(&["omega:120", "3.5", "3.6", "3.7", "3.9", "3.10", "3.11"])
            .adjudicate("3.8", "3.8a")
            .eliminate("Z2xZ6", "3.9", &["g1", "g1*g2"])
            .eliminate("Z3:Z4", "3.10", &["a", "b"]),
        BasisClaim::new("thm3", "A6")
            .formulas(&["4.1", "4.2", "4.3", "4.4", "4.5", "4.6a", "4.7"])
            .report_variant("4.6")
            .eliminate("F20", "4.6a", &["a", "b"])
            .eliminate("Z2^3", "4.5", &["e1", "e2", "e3"])
            .eliminate("Z3^3", "4.3", &[]),
        BasisClaim::new("note-s4-pk", "S4")
            .formulas(&["omega:24", "2.10", "2.11", "pk-s4"])
            .scope(1..=24)
            .weak_claim()
            .expect_violations(&["Q8"]),
        BasisClaim::new("note-s5-312", "S5")
            .eliminate("S5", "3.12", &["(123)(45)", "(14)(25)"]),
    ]
}

pub fn builtin_claim_names() -> Vec<&'static str> {
    vec![
        "prop1", "prop1-neg", "prop1-weak", "prop2", "prop3", "prop3-weak", "prop4",
        "thm1", "thm2", "thm3", "thm4", "note-s4-pk", "note-s5-312",
        "prop5", "prop6", "prop7",
        "lemma1", "lemma2", "lemma3", "lemma4", "lemma5s4", "lemma5s5", "lemma7",
        "census",
    ]
}

/// Options shared by claim runs.
#[derive(Clone, Debug, Default)]
pub struct CampaignOptions {
    pub search: SearchOptions,
    pub rep: RepOptions,
}

/// Run a claim by built-in name.
pub fn run_builtin_claim(name: &str, opts: &CampaignOptions) -> Result<Report> {
    if let Some(claim) = builtin_basis_claims().into_iter().find(|c| c.name == name) {
        return run_basis_claim(&claim, &opts.search);
    }
    match name {
        "thm4" => run_dihedral_series(2, 12, &opts.search),
        "prop5" => prop5(&opts.rep),
        "prop6" => prop6(&opts.rep),
        "prop7" => prop7(&opts.rep),
        "lemma1" => {
            let mut report = Report::new("lemma1", None);
            for n in [3, 4, 5] {
                let sub = lemma1(n)?;
                report.items.extend(sub.items);
            }
            report.finish();
            Ok(report)
        }
        "lemma2" => lemma2(),
        "lemma3" => lemma3(),
        "lemma4" => lemma4(),
        "lemma5s4" => lemma5_s4(),
        "lemma5s5" => lemma5_s5(&opts.search),
        "lemma7" => lemma7(24),
        "census" => census_selfcheck(),
        other => Err(Error::UnknownClaim(other.to_string())),
    }
}

/// The dihedral series campaign: for every m in the range, the generated
/// formulas are valid in D_{2m}, the obstruction groups fail the designated
/// formulas, and (for 2m <= 24) the census dichotomy holds.
pub fn run_dihedral_series(m_lo: usize, m_hi: usize, opts: &SearchOptions) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("thm4", None);
    for m in m_lo..=m_hi {
        let claim = dihedral_basis(m)?;
        let sub = run_basis_claim(&claim, opts)?;
        for mut item in sub.items {
            item.subject = format!("m={}: {}", m, item.subject);
            report.push(item);
        }
    }
    report.finish();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn prop1_passes() {
        let claim = builtin_basis_claims().into_iter().find(|c| c.name == "prop1").unwrap();
        let report = run_basis_claim(&claim, &opts()).unwrap();
        for item in report.items.iter().filter(|i| !i.pass) {
            eprintln!("FAILED: {} {} -- {}", item.kind, item.subject, item.outcome);
        }
        assert!(report.pass);
    }

    #[test]
    fn prop1_negative_control() {
        let claim = builtin_basis_claims().into_iter().find(|c| c.name == "prop1-neg").unwrap();
        let report = run_basis_claim(&claim, &opts()).unwrap();
        assert!(report.pass, "gap expected at exactly Z2^3");
        let z23 = report.items.iter().find(|i| i.subject == "Z2^3").unwrap();
        assert!(z23.outcome.contains("expected gap"));
    }

    #[test]
    fn prop1_weak_control() {
        let claim = builtin_basis_claims().into_iter().find(|c| c.name == "prop1-weak").unwrap();
        let report = run_basis_claim(&claim, &opts()).unwrap();
        assert!(report.pass);
        let z23 = report.items.iter().find(|i| i.subject == "Z2^3").unwrap();
        assert!(z23.outcome.contains("exempt"));
    }

    #[test]
    fn dihedral_basis_shapes() {
        let c6 = dihedral_basis(6).unwrap();
        assert_eq!(
            c6.formulas,
            vec!["omega:12", "5.1", "5.2@m=6", "5.3@m=6,p=2", "5.3@m=6,p=3", "5.4@m=6", "5.5@m=6,p=3"]
        );
        let c3 = dihedral_basis(3).unwrap();
        assert_eq!(
            c3.formulas,
            vec!["omega:6", "5.1", "5.2'@m=3", "5.3@m=3,p=3", "5.6@m=3"]
        );
        let c4 = dihedral_basis(4).unwrap();
        assert!(c4.formulas.iter().all(|f| !f.starts_with("5.5")));
    }

    #[test]
    fn lemma2_unique_s4() {
        assert!(lemma2().unwrap().pass);
    }
}
