//! Deciding whether a UDE is a d-identity of a finite group.
//!
//! Two strategies share a verdict type. `Exhaustive` scans every assignment
//! and reports the lexicographically least falsifier; it is the slow,
//! trusted oracle. `Backtrack` prunes:
//!   (a) a variable alone in a clause has its domain cut to the elements
//!       falsifying that clause;
//!   (b) falsifying assignments are closed under simultaneous conjugation,
//!       so the first branching variable only ranges over conjugacy-class
//!       representatives of its domain;
//!   (c) after each assignment every fully-instantiated clause is evaluated
//!       and a satisfied clause prunes the branch;
//!   (d) omega builtins are decided by pigeonhole, never searched.
//! Both report invalid only with a falsifier that is re-checked on emission.

use crate::error::{Error, Result};
use crate::formula::{Clause, Ude};
use crate::group::FiniteGroup;
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Auto,
    Exhaustive,
    Backtrack,
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "exhaustive" => Ok(Strategy::Exhaustive),
            "backtrack" => Ok(Strategy::Backtrack),
            other => Err(Error::Invalid(format!("unknown strategy `{}`", other))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub strategy: Strategy,
    /// Hard cap on visited nodes; exceeding it reports indeterminate.
    pub node_budget: u64,
    /// `Auto` picks exhaustive only when |G|^vars stays below this.
    pub exhaustive_budget: u64,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            strategy: Strategy::Auto,
            node_budget: 200_000_000,
            exhaustive_budget: 1_000_000,
            workers: 1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Valid,
    Invalid,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    /// Falsifying assignment (element ids for x1..xn) when invalid.
    pub counterexample: Option<Vec<usize>>,
    pub nodes: u64,
    pub elapsed_ms: u64,
    pub strategy_used: &'static str,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.status == Status::Valid
    }

    pub fn witness_labels(&self, group: &FiniteGroup) -> Option<Vec<String>> {
        self.counterexample
            .as_ref()
            .map(|cx| cx.iter().map(|&g| group.label(g).to_string()).collect())
    }
}

/// Decide validity of omega(n) in G analytically: valid iff |G| <= n, with
/// n+1 distinct elements as the falsifier otherwise.
pub fn omega_valid(group: &FiniteGroup, n: usize) -> Verdict {
    if group.order() <= n {
        Verdict {
            status: Status::Valid,
            counterexample: None,
            nodes: 0,
            elapsed_ms: 0,
            strategy_used: "pigeonhole",
        }
    } else {
        Verdict {
            status: Status::Invalid,
            counterexample: Some((0..=n).collect()),
            nodes: 0,
            elapsed_ms: 0,
            strategy_used: "pigeonhole",
        }
    }
}

pub fn is_didentity(group: &FiniteGroup, ude: &Ude, opts: &SearchOptions) -> Result<Verdict> {
    let start = Instant::now();
    let strategy = match opts.strategy {
        Strategy::Auto => {
            let total = (group.order() as f64).powi(ude.variable_count.max(1) as i32);
            if total <= opts.exhaustive_budget as f64 {
                Strategy::Exhaustive
            } else {
                Strategy::Backtrack
            }
        }
        s => s,
    };
    let mut verdict = match strategy {
        Strategy::Exhaustive => exhaustive(group, ude, opts)?,
        Strategy::Backtrack => backtrack(group, ude, opts)?,
        Strategy::Auto => unreachable!(),
    };
    verdict.elapsed_ms = start.elapsed().as_millis() as u64;
    if let Some(cx) = &verdict.counterexample {
        // soundness: every emitted counterexample must falsify the formula
        assert!(
            ude.falsified_by(group, cx)?,
            "internal error: emitted counterexample does not falsify the formula"
        );
    }
    Ok(verdict)
}

fn exhaustive(group: &FiniteGroup, ude: &Ude, opts: &SearchOptions) -> Result<Verdict> {
    let vars = ude.variable_count;
    let n = group.order();
    if vars == 0 {
        // no variables: an empty disjunction over no clauses is vacuously
        // falsified, a formula with clauses but no variables is constant
        let empty: Vec<usize> = Vec::new();
        let holds = ude.holds(group, &empty)?;
        return Ok(Verdict {
            status: if holds { Status::Valid } else { Status::Invalid },
            counterexample: if holds { None } else { Some(empty) },
            nodes: 1,
            elapsed_ms: 0,
            strategy_used: "exhaustive",
        });
    }
    let mut assignment = vec![0usize; vars];
    let mut nodes: u64 = 0;
    loop {
        nodes += 1;
        if nodes > opts.node_budget {
            return Err(Error::BudgetExceeded { nodes });
        }
        if !ude.holds(group, &assignment)? {
            return Ok(Verdict {
                status: Status::Invalid,
                counterexample: Some(assignment),
                nodes,
                elapsed_ms: 0,
                strategy_used: "exhaustive",
            });
        }
        let mut k = vars;
        loop {
            if k == 0 {
                return Ok(Verdict {
                    status: Status::Valid,
                    counterexample: None,
                    nodes,
                    elapsed_ms: 0,
                    strategy_used: "exhaustive",
                });
            }
            assignment[k - 1] += 1;
            if assignment[k - 1] < n {
                break;
            }
            assignment[k - 1] = 0;
            k -= 1;
        }
    }
}

struct Plan {
    /// Search positions: order[d] = variable index handled at depth d.
    order: Vec<usize>,
    /// Restricted domain per variable index (1-based key, dense vec).
    domains: Vec<Vec<usize>>,
    /// Clauses evaluated once the depth-d variable is assigned.
    buckets: Vec<Vec<Clause>>,
    /// Representatives for the first branching variable.
    reps: Vec<usize>,
}

fn make_plan(group: &FiniteGroup, ude: &Ude) -> Result<Option<Plan>> {
    let vars = ude.variable_count;
    let omega_vars = ude.omega_vars();
    let search_vars: Vec<usize> =
        (1..=vars).filter(|v| !omega_vars.contains(v)).collect();

    // (a) unary domain restriction
    let mut domains: Vec<Vec<usize>> = vec![Vec::new(); vars + 1];
    let mut scratch = vec![0usize; vars];
    for &v in &search_vars {
        let unary: Vec<&Clause> =
            ude.clauses.iter().filter(|c| c.vars() == [v]).collect();
        let mut domain = Vec::new();
        'g: for g in 0..group.order() {
            scratch[v - 1] = g;
            for c in &unary {
                if c.holds(group, &scratch)? {
                    continue 'g;
                }
            }
            domain.push(g);
        }
        if domain.is_empty() {
            // some unary clause holds for every element: the UDE is valid
            return Ok(None);
        }
        domains[v] = domain;
    }

    // variable order: most constrained first, ties by index
    let mut order = search_vars.clone();
    order.sort_by_key(|&v| (domains[v].len(), v));

    // (c) clause scheduling by deepest variable position
    let pos_of: Vec<usize> = {
        let mut p = vec![usize::MAX; vars + 1];
        for (d, &v) in order.iter().enumerate() {
            p[v] = d;
        }
        p
    };
    let mut buckets: Vec<Vec<Clause>> = vec![Vec::new(); order.len()];
    for c in &ude.clauses {
        // clauses with no variables are constant and handled by the caller
        if let Some(depth) = c.vars().iter().map(|&v| pos_of[v]).max() {
            buckets[depth].push(c.clone());
        }
    }

    // (b) conjugacy-class representatives for the first branching variable
    let reps = if let Some(&first) = order.first() {
        let mut reps = Vec::new();
        for class in group.conjugacy_classes() {
            if let Some(&rep) = class.iter().find(|&&g| domains[first].binary_search(&g).is_ok())
            {
                // domains are conjugation-closed, so the class is either
                // fully inside or fully outside; take its least member
                debug_assert!(class.iter().all(|&g| domains[first].binary_search(&g).is_ok()));
                reps.push(rep);
            }
        }
        reps
    } else {
        Vec::new()
    };

    Ok(Some(Plan { order, domains, buckets, reps }))
}

fn backtrack(group: &FiniteGroup, ude: &Ude, opts: &SearchOptions) -> Result<Verdict> {
    let valid = |nodes: u64| Verdict {
        status: Status::Valid,
        counterexample: None,
        nodes,
        elapsed_ms: 0,
        strategy_used: "backtrack",
    };
    // (d) omega builtins: each must be independently falsifiable
    for om in &ude.omegas {
        if group.order() <= om.n {
            return Ok(valid(0));
        }
    }
    // constant clauses hold or fail regardless of the assignment
    let scratch = vec![0usize; ude.variable_count];
    for c in &ude.clauses {
        if c.vars().is_empty() && c.holds(group, &scratch)? {
            return Ok(valid(0));
        }
    }
    let plan = match make_plan(group, ude)? {
        Some(plan) => plan,
        None => return Ok(valid(0)),
    };

    let mut nodes = 0u64;
    let found = if plan.order.is_empty() {
        // nothing left to search: remaining clauses are constant-false and
        // omega builtins are falsifiable
        Some(Vec::new())
    } else if opts.workers > 1 && plan.reps.len() > 1 {
        search_parallel(group, ude, &plan, opts)?
    } else {
        let mut assignment = vec![0usize; ude.variable_count];
        search_from(group, &plan, 0, &mut assignment, &mut nodes, opts.node_budget)?
            .map(|()| assignment)
    };

    match found {
        Some(mut assignment) => {
            assignment.resize(ude.variable_count, 0);
            fill_omega_vars(group, ude, &mut assignment);
            Ok(Verdict {
                status: Status::Invalid,
                counterexample: Some(assignment),
                nodes,
                elapsed_ms: 0,
                strategy_used: "backtrack",
            })
        }
        None => Ok(valid(nodes)),
    }
}

/// Assign each omega block n+1 distinct elements.
fn fill_omega_vars(group: &FiniteGroup, ude: &Ude, assignment: &mut [usize]) {
    for om in &ude.omegas {
        debug_assert!(group.order() > om.n);
        for (k, v) in om.vars().enumerate() {
            assignment[v - 1] = k;
        }
    }
}

/// Depth-first search; returns Ok(Some(())) leaving the falsifier in
/// `assignment`.
fn search_from(
    group: &FiniteGroup,
    plan: &Plan,
    depth: usize,
    assignment: &mut Vec<usize>,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<()>> {
    if depth == plan.order.len() {
        return Ok(Some(()));
    }
    let v = plan.order[depth];
    let candidates: &[usize] =
        if depth == 0 { &plan.reps } else { &plan.domains[v] };
    'cand: for &g in candidates {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExceeded { nodes: *nodes });
        }
        assignment[v - 1] = g;
        for clause in &plan.buckets[depth] {
            if clause.holds(group, assignment)? {
                continue 'cand;
            }
        }
        if search_from(group, plan, depth + 1, assignment, nodes, budget)?.is_some() {
            return Ok(Some(()));
        }
    }
    Ok(None)
}

/// Partition the first variable's representatives across worker threads.
/// The merged result is the least falsifier (by assignment tuple) among the
/// workers' findings, so the outcome is schedule-independent.
fn search_parallel(
    group: &FiniteGroup,
    ude: &Ude,
    plan: &Plan,
    opts: &SearchOptions,
) -> Result<Option<Vec<usize>>> {
    let workers = opts.workers.min(plan.reps.len());
    let chunks: Vec<Vec<usize>> = (0..workers)
        .map(|w| {
            plan.reps
                .iter()
                .copied()
                .skip(w)
                .step_by(workers)
                .collect()
        })
        .collect();
    let budget_each = opts.node_budget / workers as u64;
    let results: Vec<Result<Option<Vec<usize>>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                scope.spawn(move || -> Result<Option<Vec<usize>>> {
                    let mut best: Option<Vec<usize>> = None;
                    for &rep in chunk {
                        let mut assignment = vec![0usize; ude.variable_count];
                        let v = plan.order[0];
                        assignment[v - 1] = rep;
                        let mut nodes = 0u64;
                        let blocked = plan.buckets[0]
                            .iter()
                            .map(|c| c.holds(group, &assignment))
                            .collect::<Result<Vec<bool>>>()?
                            .into_iter()
                            .any(|b| b);
                        if blocked {
                            continue;
                        }
                        if search_from(group, plan, 1, &mut assignment, &mut nodes, budget_each)?
                            .is_some()
                        {
                            if best.as_ref().map_or(true, |b| assignment < *b) {
                                best = Some(assignment);
                            }
                        }
                    }
                    Ok(best)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut best: Option<Vec<usize>> = None;
    for r in results {
        if let Some(found) = r? {
            if best.as_ref().map_or(true, |b| found < *b) {
                best = Some(found);
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::formula::parse_formula;

    fn check(group: &FiniteGroup, text: &str, strategy: Strategy) -> Verdict {
        let ude = parse_formula(text).unwrap();
        let opts = SearchOptions { strategy, ..Default::default() };
        is_didentity(group, &ude, &opts).unwrap()
    }

    #[test]
    fn x4_valid_in_d8() {
        let d8 = construct::dihedral(8).unwrap();
        assert!(check(&d8, "x1^4 = 1", Strategy::Exhaustive).is_valid());
        assert!(check(&d8, "x1^4 = 1", Strategy::Backtrack).is_valid());
        assert!(!check(&d8, "x1^2 = 1", Strategy::Backtrack).is_valid());
    }

    #[test]
    fn omega_pigeonhole() {
        let d8 = construct::dihedral(8).unwrap();
        assert!(omega_valid(&d8, 8).is_valid());
        let c9 = construct::cyclic(9);
        let v = omega_valid(&c9, 8);
        assert!(!v.is_valid());
        assert_eq!(v.counterexample.as_ref().unwrap().len(), 9);
        let c2 = construct::cyclic(2);
        assert!(!omega_valid(&c2, 1).is_valid());
    }

    #[test]
    fn exhaustive_reports_least_counterexample() {
        let c4 = construct::cyclic(4);
        let v = check(&c4, "x1^2 = 1", Strategy::Exhaustive);
        assert_eq!(v.counterexample, Some(vec![1]));
    }

    #[test]
    fn backtrack_agrees_with_exhaustive_small() {
        let groups = [
            construct::cyclic(6),
            construct::dihedral(8).unwrap(),
            construct::quaternion8(),
            construct::symmetric(3),
        ];
        let formulas = [
            "x1^2 = 1 | x1^3 = 1",
            "(x1^2 = 1) | (x2^2 = 1) | ([x1,x2] = 1)",
            "theta(x1,x2,x3)",
            "x1 = x2 | x1*x2 = 1",
        ];
        for g in &groups {
            for f in &formulas {
                let e = check(g, f, Strategy::Exhaustive);
                let b = check(g, f, Strategy::Backtrack);
                assert_eq!(e.status, b.status, "{} on {}", f, g.name());
            }
        }
    }

    #[test]
    fn backtrack_counterexample_is_verified() {
        let e8 = construct::elementary_abelian(2, 3).unwrap();
        let ude = parse_formula("theta(x1,x2,x3)").unwrap();
        let opts = SearchOptions { strategy: Strategy::Backtrack, ..Default::default() };
        let v = is_didentity(&e8, &ude, &opts).unwrap();
        assert_eq!(v.status, Status::Invalid);
        let cx = v.counterexample.unwrap();
        assert!(ude.falsified_by(&e8, &cx).unwrap());
    }

    #[test]
    fn omega_builtin_in_search() {
        let c3 = construct::cyclic(3);
        let c5 = construct::cyclic(5);
        let ude = parse_formula("omega(3)").unwrap();
        let opts = SearchOptions { strategy: Strategy::Backtrack, ..Default::default() };
        assert!(is_didentity(&c3, &ude, &opts).unwrap().is_valid());
        let v = is_didentity(&c5, &ude, &opts).unwrap();
        assert!(!v.is_valid());
        // the counterexample carries 4 distinct elements
        let cx = v.counterexample.unwrap();
        assert_eq!(cx.len(), 4);
        // mixing omega with an unsatisfiable clause stays decidable
        let mixed = parse_formula("omega(3) | x1^2 = 1").unwrap();
        let v = is_didentity(&c5, &mixed, &opts).unwrap();
        assert!(!v.is_valid());
    }

    #[test]
    fn parallel_matches_serial() {
        let s4 = construct::symmetric(4);
        let ude = parse_formula("(x1^3 = 1) | (x2^3 = 1) | ((x1*x2)^2 = 1)").unwrap();
        let serial = is_didentity(
            &s4,
            &ude,
            &SearchOptions { strategy: Strategy::Backtrack, ..Default::default() },
        )
        .unwrap();
        let parallel = is_didentity(
            &s4,
            &ude,
            &SearchOptions { strategy: Strategy::Backtrack, workers: 4, ..Default::default() },
        )
        .unwrap();
        assert_eq!(serial.status, parallel.status);
    }

    #[test]
    fn budget_exceeded_is_an_error() {
        let s4 = construct::symmetric(4);
        let ude = parse_formula("(x1*x2*x3)^12 = 1").unwrap();
        let opts = SearchOptions {
            strategy: Strategy::Exhaustive,
            node_budget: 10,
            ..Default::default()
        };
        assert!(matches!(
            is_didentity(&s4, &ude, &opts),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
