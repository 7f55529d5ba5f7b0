//! Universal disjunctions of equations (UDEs).
//!
//! A UDE is a list of clauses plus zero or more pigeonhole builtins. Each
//! clause carries one or more word equations `w = 1` and holds when any of
//! them does; macro-produced disjuncts like `x ∈ ⟨y⟩` stay grouped as one
//! clause. An `omega(n)` builtin asserts that among its own n+1 dedicated
//! variables two coincide; it is kept symbolic so that validity can be
//! decided by pigeonhole instead of search.

use crate::error::{Error, ParseError, Result};
use crate::group::FiniteGroup;
use crate::word::{self, Word};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Equation {
    pub lhs: Word,
}

impl Equation {
    pub fn new(lhs: Word) -> Equation {
        Equation { lhs }
    }

    /// w1 = w2 normalised to w1 * w2^-1 = 1; `w = 1` keeps lhs = w.
    pub fn between(w1: Word, w2: Word) -> Equation {
        if w2 == Word::One {
            Equation { lhs: w1 }
        } else if w1 == Word::One {
            Equation { lhs: w2 }
        } else {
            Equation { lhs: word::prod(vec![w1, word::inv(w2)]) }
        }
    }

    pub fn holds(&self, group: &FiniteGroup, assignment: &[usize]) -> Result<bool> {
        Ok(self.lhs.eval(group, assignment)? == group.identity())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clause {
    pub equations: Vec<Equation>,
}

impl Clause {
    pub fn single(lhs: Word) -> Clause {
        Clause { equations: vec![Equation::new(lhs)] }
    }

    pub fn holds(&self, group: &FiniteGroup, assignment: &[usize]) -> Result<bool> {
        for eq in &self.equations {
            if eq.holds(group, assignment)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn vars(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for eq in &self.equations {
            eq.lhs.collect_vars(&mut out);
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Pigeonhole builtin over its own block of n+1 variables
/// first_var .. first_var+n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OmegaClause {
    pub n: usize,
    pub first_var: usize,
}

impl OmegaClause {
    pub fn vars(&self) -> std::ops::RangeInclusive<usize> {
        self.first_var..=self.first_var + self.n
    }

    pub fn holds(&self, assignment: &[usize]) -> bool {
        for i in self.first_var..=self.first_var + self.n {
            for j in (i + 1)..=self.first_var + self.n {
                if assignment[i - 1] == assignment[j - 1] {
                    return true;
                }
            }
        }
        false
    }

    /// The literal pairwise form x_i * x_j^-1 = 1 over the block, (i, j) in
    /// lexicographic order.
    pub fn expand(&self) -> Vec<Clause> {
        let mut out = Vec::new();
        for i in self.first_var..=self.first_var + self.n {
            for j in (i + 1)..=self.first_var + self.n {
                out.push(Clause::single(word::prod(vec![
                    word::var(i),
                    word::inv(word::var(j)),
                ])));
            }
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ude {
    pub clauses: Vec<Clause>,
    pub omegas: Vec<OmegaClause>,
    pub variable_count: usize,
}

impl Ude {
    /// Build from clauses; the variable count is the largest index used and
    /// variables must be contiguous from x1.
    pub fn new(clauses: Vec<Clause>) -> Result<Ude> {
        let mut vars = Vec::new();
        for c in &clauses {
            for v in c.vars() {
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
        }
        vars.sort_unstable();
        let max = vars.last().copied().unwrap_or(0);
        if vars.len() != max {
            let missing = (1..=max).find(|v| !vars.contains(v)).unwrap_or(1);
            return Err(Error::Invalid(format!(
                "non-contiguous variables: x{} is unused",
                missing
            )));
        }
        Ok(Ude { clauses, omegas: Vec::new(), variable_count: max })
    }

    /// Append an omega(n) builtin over a fresh block of n+1 variables.
    pub fn with_omega(mut self, n: usize) -> Ude {
        let first_var = self.variable_count + 1;
        self.omegas.push(OmegaClause { n, first_var });
        self.variable_count += n + 1;
        self
    }

    /// The pure pigeonhole formula omega(n).
    pub fn omega(n: usize) -> Ude {
        Ude { clauses: Vec::new(), omegas: Vec::new(), variable_count: 0 }.with_omega(n)
    }

    /// Total number of word equations across all clauses (omega builtins
    /// count their pairwise expansions).
    pub fn equation_count(&self) -> usize {
        self.clauses.iter().map(|c| c.equations.len()).sum::<usize>()
            + self.omegas.iter().map(|o| (o.n + 1) * o.n / 2).sum::<usize>()
    }

    pub fn holds(&self, group: &FiniteGroup, assignment: &[usize]) -> Result<bool> {
        for om in &self.omegas {
            if om.holds(assignment) {
                return Ok(true);
            }
        }
        for c in &self.clauses {
            if c.holds(group, assignment)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// True when the assignment falsifies every clause and builtin.
    pub fn falsified_by(&self, group: &FiniteGroup, assignment: &[usize]) -> Result<bool> {
        Ok(!self.holds(group, assignment)?)
    }

    /// Same semantics with every omega builtin replaced by its literal
    /// pairwise clauses.
    pub fn expand_omegas(&self) -> Ude {
        let mut clauses = self.clauses.clone();
        for om in &self.omegas {
            clauses.extend(om.expand());
        }
        Ude { clauses, omegas: Vec::new(), variable_count: self.variable_count }
    }

    /// Variables owned by omega builtins.
    pub fn omega_vars(&self) -> Vec<usize> {
        self.omegas.iter().flat_map(|o| o.vars()).collect()
    }
}

impl fmt::Display for Ude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for om in &self.omegas {
            if !first {
                write!(f, " | ")?;
            }
            write!(f, "omega({})", om.n)?;
            first = false;
        }
        for c in &self.clauses {
            for eq in &c.equations {
                if !first {
                    write!(f, " | ")?;
                }
                write!(f, "{} = 1", eq.lhs)?;
                first = false;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// macros

/// x ∈ ⟨y⟩ as the clause ⋁_{t=lo}^{hi} x = y^t.
pub fn in_cyc(x: Word, y: Word, lo: i64, hi: i64) -> Clause {
    let mut equations = Vec::new();
    for t in lo..=hi {
        let rhs = match t {
            0 => Word::One,
            1 => y.clone(),
            _ => word::pow(y.clone(), t),
        };
        equations.push(Equation::between(x.clone(), rhs));
    }
    Clause { equations }
}

/// The three-variable cyclic-membership formula, scaled: with s(w) = w^scale,
/// the 18 clauses ⋁_{i≠j} s(wi) ∈ ⟨s(wj)⟩, ⋁_σ s(w_{σ1}) ∈ ⟨s(w_{σ2}w_{σ3})⟩
/// and ⋁_σ s(w_{σ1}w_{σ2}) ∈ ⟨s(w_{σ2}w_{σ3})⟩, memberships over exponents
/// 0..=hi. The scale applies to the products, not factorwise.
pub fn theta_clauses_scaled(words: [Word; 3], scale: usize, hi: i64) -> Vec<Clause> {
    let w = |i: usize| words[i - 1].clone();
    let s = |word: Word| {
        if scale == 1 {
            word
        } else {
            crate::word::pow(word, scale as i64)
        }
    };
    let mut out = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                out.push(in_cyc(s(w(i)), s(w(j)), 0, hi));
            }
        }
    }
    let perms = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
    for sigma in perms {
        out.push(in_cyc(
            s(w(sigma[0])),
            s(word::prod(vec![w(sigma[1]), w(sigma[2])])),
            0,
            hi,
        ));
    }
    for sigma in perms {
        out.push(in_cyc(
            s(word::prod(vec![w(sigma[0]), w(sigma[1])])),
            s(word::prod(vec![w(sigma[1]), w(sigma[2])])),
            0,
            hi,
        ));
    }
    out
}

/// theta with the order-4 membership range used by the formula catalog.
pub fn theta_clauses(words: [Word; 3]) -> Vec<Clause> {
    theta_clauses_scaled(words, 1, 3)
}

// ---------------------------------------------------------------------------
// DSL parser

/// Parse the formula DSL: clauses separated by `|`; equations `w = w`; word
/// operators `*` (or juxtaposition), `^k` (power), `^w` (conjugation),
/// `[w,w]` (commutator), `~w` (inverse), parentheses; macros `omega(n)`,
/// `theta(w,w,w)`, `in_cyc(w,w,lo,hi)`. Clauses may be parenthesised.
pub fn parse_formula(text: &str) -> Result<Ude> {
    let p = FormulaParser { chars: text.chars().collect() };
    let mut clauses: Vec<Clause> = Vec::new();
    let mut omegas: Vec<usize> = Vec::new();
    p.parse_disjunction(0, p.chars.len(), &mut clauses, &mut omegas)?;
    let mut ude = Ude::new(clauses)?;
    for n in omegas {
        ude = ude.with_omega(n);
    }
    Ok(ude)
}

struct FormulaParser {
    chars: Vec<char>,
}

impl FormulaParser {
    fn err(&self, msg: &str, at: usize) -> Error {
        ParseError::new(msg, (at + 1).min(self.chars.len().max(1))).into()
    }

    fn trim(&self, mut start: usize, mut end: usize) -> (usize, usize) {
        while start < end && self.chars[start].is_whitespace() {
            start += 1;
        }
        while end > start && self.chars[end - 1].is_whitespace() {
            end -= 1;
        }
        (start, end)
    }

    /// Position of `target` at bracket depth 0 within [start, end).
    fn find_top_level(&self, start: usize, end: usize, target: char) -> Option<usize> {
        let mut depth = 0i32;
        for i in start..end {
            match self.chars[i] {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                c if c == target && depth == 0 => return Some(i),
                _ => {}
            }
        }
        None
    }

    fn matching_bracket(&self, open: usize, end: usize) -> Option<usize> {
        let mut depth = 0i32;
        for i in open..end {
            match self.chars[i] {
                '(' | '[' => depth += 1,
                ')' | ']' => {
                    depth -= 1;
                    if depth == 0 {
                        return Some(i);
                    }
                }
                _ => {}
            }
        }
        None
    }

    fn parse_disjunction(
        &self,
        start: usize,
        end: usize,
        clauses: &mut Vec<Clause>,
        omegas: &mut Vec<usize>,
    ) -> Result<()> {
        let mut at = start;
        loop {
            let bar = self.find_top_level(at, end, '|');
            let seg_end = bar.unwrap_or(end);
            self.parse_clause(at, seg_end, clauses, omegas)?;
            match bar {
                Some(b) => at = b + 1,
                None => return Ok(()),
            }
        }
    }

    fn parse_clause(
        &self,
        start: usize,
        end: usize,
        clauses: &mut Vec<Clause>,
        omegas: &mut Vec<usize>,
    ) -> Result<()> {
        let (start, end) = self.trim(start, end);
        if start >= end {
            return Err(self.err("expected clause", start));
        }
        // parenthesised clause group: outer parens span the segment and the
        // inside contains a top-level `=` or `|`
        if self.chars[start] == '(' {
            if let Some(close) = self.matching_bracket(start, end) {
                if close == end - 1 {
                    let has_eq = self.find_top_level(start + 1, close, '=').is_some()
                        || self.find_top_level(start + 1, close, '|').is_some();
                    if has_eq {
                        return self.parse_disjunction(start + 1, close, clauses, omegas);
                    }
                }
            } else {
                return Err(self.err("unbalanced parenthesis", end.saturating_sub(1)));
            }
        }
        // macro call spanning the whole segment
        if let Some(out) = self.try_macro(start, end)? {
            match out {
                MacroOut::Omega(n) => omegas.push(n),
                MacroOut::Clauses(cs) => clauses.extend(cs),
            }
            return Ok(());
        }
        // equation w = w
        match self.find_top_level(start, end, '=') {
            Some(eq) => {
                let lhs = self.parse_word_range(start, eq)?;
                let rhs = self.parse_word_range(eq + 1, end)?;
                clauses.push(Clause { equations: vec![Equation::between(lhs, rhs)] });
                Ok(())
            }
            None => Err(self.err("expected `=`", end.saturating_sub(1))),
        }
    }

    fn try_macro(&self, start: usize, end: usize) -> Result<Option<MacroOut>> {
        let (start, end) = self.trim(start, end);
        let mut name_end = start;
        while name_end < end
            && (self.chars[name_end].is_ascii_alphanumeric() || self.chars[name_end] == '_')
        {
            name_end += 1;
        }
        let name: String = self.chars[start..name_end].iter().collect();
        if !matches!(name.as_str(), "omega" | "theta" | "in_cyc") {
            return Ok(None);
        }
        let (open, _) = self.trim(name_end, end);
        if open >= end || self.chars[open] != '(' {
            return Err(self.err("expected `(` after macro name", open));
        }
        let close = self
            .matching_bracket(open, end)
            .ok_or_else(|| self.err("unbalanced parenthesis", end.saturating_sub(1)))?;
        let (after, _) = self.trim(close + 1, end);
        if after != end {
            return Err(self.err("unexpected input after macro", after));
        }
        let args = self.split_args(open + 1, close);
        match name.as_str() {
            "omega" => {
                if args.len() != 1 {
                    return Err(self.err("omega takes one argument", open));
                }
                let n = self.parse_int_range(args[0].0, args[0].1)?;
                if n < 1 {
                    return Err(self.err("omega needs n >= 1", args[0].0));
                }
                Ok(Some(MacroOut::Omega(n as usize)))
            }
            "theta" => {
                if args.len() != 3 {
                    return Err(self.err("theta takes three word arguments", open));
                }
                let w1 = self.parse_word_range(args[0].0, args[0].1)?;
                let w2 = self.parse_word_range(args[1].0, args[1].1)?;
                let w3 = self.parse_word_range(args[2].0, args[2].1)?;
                Ok(Some(MacroOut::Clauses(theta_clauses([w1, w2, w3]))))
            }
            "in_cyc" => {
                if args.len() != 4 {
                    return Err(self.err("in_cyc takes (word, word, lo, hi)", open));
                }
                let x = self.parse_word_range(args[0].0, args[0].1)?;
                let y = self.parse_word_range(args[1].0, args[1].1)?;
                let lo = self.parse_int_range(args[2].0, args[2].1)?;
                let hi = self.parse_int_range(args[3].0, args[3].1)?;
                if lo > hi {
                    return Err(self.err("in_cyc needs lo <= hi", args[2].0));
                }
                Ok(Some(MacroOut::Clauses(vec![in_cyc(x, y, lo, hi)])))
            }
            _ => unreachable!(),
        }
    }

    fn split_args(&self, start: usize, end: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut at = start;
        loop {
            match self.find_top_level(at, end, ',') {
                Some(c) => {
                    out.push((at, c));
                    at = c + 1;
                }
                None => {
                    out.push((at, end));
                    return out;
                }
            }
        }
    }

    fn parse_int_range(&self, start: usize, end: usize) -> Result<i64> {
        let (start, end) = self.trim(start, end);
        let s: String = self.chars[start..end].iter().collect();
        s.parse::<i64>().map_err(|_| self.err("expected integer", start))
    }

    /// Parse a whole range as a word; everything must be consumed.
    fn parse_word_range(&self, start: usize, end: usize) -> Result<Word> {
        let (start, end) = self.trim(start, end);
        let mut cursor = start;
        let w = self.word_at(&mut cursor, end)?;
        let (c, _) = self.trim(cursor, end);
        if c != end {
            return Err(self.err("unexpected input", c));
        }
        Ok(w)
    }

    fn word_at(&self, cursor: &mut usize, end: usize) -> Result<Word> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws_at(cursor, end);
            if *cursor >= end {
                break;
            }
            if self.chars[*cursor] == '*' {
                *cursor += 1;
                continue;
            }
            factors.push(self.factor_at(cursor, end)?);
        }
        if factors.is_empty() {
            return Err(self.err("expected word", *cursor));
        }
        Ok(word::prod(factors))
    }

    fn skip_ws_at(&self, cursor: &mut usize, end: usize) {
        while *cursor < end && self.chars[*cursor].is_whitespace() {
            *cursor += 1;
        }
    }

    fn factor_at(&self, cursor: &mut usize, end: usize) -> Result<Word> {
        let mut base = self.atom_at(cursor, end)?;
        loop {
            self.skip_ws_at(cursor, end);
            if *cursor < end && self.chars[*cursor] == '^' {
                *cursor += 1;
                self.skip_ws_at(cursor, end);
                if *cursor >= end {
                    return Err(self.err("expected exponent or conjugator", *cursor));
                }
                let c = self.chars[*cursor];
                if c.is_ascii_digit() || c == '-' {
                    let mut sign = 1i64;
                    if c == '-' {
                        sign = -1;
                        *cursor += 1;
                    }
                    let digits_start = *cursor;
                    while *cursor < end && self.chars[*cursor].is_ascii_digit() {
                        *cursor += 1;
                    }
                    if digits_start == *cursor {
                        return Err(self.err("expected exponent", *cursor));
                    }
                    let s: String = self.chars[digits_start..*cursor].iter().collect();
                    let k: i64 = s
                        .parse()
                        .map_err(|_| self.err("exponent out of range", digits_start))?;
                    base = word::pow(base, sign * k);
                } else if c == '(' && self.paren_is_exponent(*cursor, end) {
                    // parenthesised signed exponent like ^(-1)
                    let close = self.matching_bracket(*cursor, end).unwrap();
                    let k = self.parse_int_range(*cursor + 1, close)?;
                    *cursor = close + 1;
                    base = word::pow(base, k);
                } else {
                    let by = self.atom_at(cursor, end)?;
                    base = word::conj(base, by);
                }
            } else {
                break;
            }
        }
        Ok(base)
    }

    fn paren_is_exponent(&self, open: usize, end: usize) -> bool {
        match self.matching_bracket(open, end) {
            Some(close) => {
                let inner: String = self.chars[open + 1..close].iter().collect();
                inner.trim().parse::<i64>().is_ok()
            }
            None => false,
        }
    }

    fn atom_at(&self, cursor: &mut usize, end: usize) -> Result<Word> {
        self.skip_ws_at(cursor, end);
        if *cursor >= end {
            return Err(self.err("expected word", *cursor));
        }
        match self.chars[*cursor] {
            'x' => {
                *cursor += 1;
                let start = *cursor;
                while *cursor < end && self.chars[*cursor].is_ascii_digit() {
                    *cursor += 1;
                }
                if start == *cursor {
                    return Err(self.err("expected variable index", *cursor));
                }
                let s: String = self.chars[start..*cursor].iter().collect();
                let i: usize =
                    s.parse().map_err(|_| self.err("variable index out of range", start))?;
                if i == 0 {
                    return Err(self.err("variables are 1-based", start));
                }
                Ok(word::var(i))
            }
            '1' => {
                *cursor += 1;
                Ok(Word::One)
            }
            '(' => {
                let close = self
                    .matching_bracket(*cursor, end)
                    .ok_or_else(|| self.err("unbalanced parenthesis", end.saturating_sub(1)))?;
                let w = self.parse_word_range(*cursor + 1, close)?;
                *cursor = close + 1;
                Ok(w)
            }
            '[' => {
                let close = self
                    .matching_bracket(*cursor, end)
                    .ok_or_else(|| self.err("unbalanced bracket", end.saturating_sub(1)))?;
                let comma = self
                    .find_top_level(*cursor + 1, close, ',')
                    .ok_or_else(|| self.err("commutator needs two words", *cursor))?;
                let a = self.parse_word_range(*cursor + 1, comma)?;
                let b = self.parse_word_range(comma + 1, close)?;
                *cursor = close + 1;
                Ok(word::comm(a, b))
            }
            '~' => {
                *cursor += 1;
                let w = self.atom_at(cursor, end)?;
                Ok(word::inv(w))
            }
            _ => Err(self.err("expected variable, `1`, `(`, `[` or `~`", *cursor)),
        }
    }
}

enum MacroOut {
    Omega(usize),
    Clauses(Vec<Clause>),
}

/// True iff the two formulas have identical falsifier sets over the group;
/// both must quantify over the same number of variables. Exhaustive, so only
/// sensible when |G|^vars is within the given budget.
pub fn check_equivalent_on(
    group: &FiniteGroup,
    u1: &Ude,
    u2: &Ude,
    budget: u64,
) -> Result<bool> {
    if u1.variable_count != u2.variable_count {
        return Err(Error::Invalid(format!(
            "variable counts differ: {} vs {}",
            u1.variable_count, u2.variable_count
        )));
    }
    let vars = u1.variable_count;
    let n = group.order();
    let total = (n as f64).powi(vars as i32);
    if total > budget as f64 {
        return Err(Error::BudgetExceeded { nodes: budget });
    }
    let mut assignment = vec![0usize; vars];
    loop {
        if u1.holds(group, &assignment)? != u2.holds(group, &assignment)? {
            return Ok(false);
        }
        // odometer
        let mut k = vars;
        loop {
            if k == 0 {
                return Ok(true);
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn parse_three_clause() {
        let u = parse_formula("(x1^2 = 1) | (x2^2 = 1) | ([x1,x2] = 1)").unwrap();
        assert_eq!(u.clauses.len(), 3);
        assert_eq!(u.variable_count, 2);
    }

    #[test]
    fn parse_theta_has_18_clauses() {
        let u = parse_formula("theta(x1,x2,x3)").unwrap();
        assert_eq!(u.clauses.len(), 18);
        assert_eq!(u.variable_count, 3);
        // each membership clause expands to four equations
        assert_eq!(u.equation_count(), 72);
    }

    #[test]
    fn parse_error_position() {
        let err = parse_formula("(x1^2 = 1").unwrap_err();
        match err {
            Error::Parse(p) => assert_eq!(p.column, 9),
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn parse_rejects_gap_variables() {
        assert!(parse_formula("(x1 = 1) | (x3 = 1)").is_err());
    }

    #[test]
    fn parse_conjugation_and_powers() {
        let u = parse_formula("x1^x2 = 1 | (x1*x2^2)^15 = 1 | x1^-1 = x2").unwrap();
        assert_eq!(u.clauses.len(), 3);
        let d8 = construct::dihedral(8).unwrap();
        let a = d8.element_by_name("a").unwrap();
        let b = d8.element_by_name("b").unwrap();
        // x1^x2 with x1=a, x2=b gives a^-1 in D8
        let w = &u.clauses[0].equations[0].lhs;
        assert_eq!(w.eval(&d8, &[a, b]).unwrap(), d8.inv(a));
    }

    #[test]
    fn eval_examples_from_symmetric_groups() {
        let s4 = construct::symmetric(4);
        let x1 = s4.element_by_name("(123)").unwrap();
        let x2 = s4.element_by_name("(124)").unwrap();
        let w = word::prod(vec![word::var(1), word::var(2)]);
        let out = w.eval(&s4, &[x1, x2]).unwrap();
        assert_eq!(s4.label(out), "(14)(23)");

        let s3 = construct::symmetric(3);
        let t12 = s3.element_by_name("(12)").unwrap();
        let t13 = s3.element_by_name("(13)").unwrap();
        let w = word::conj(word::var(1), word::var(2));
        let out = w.eval(&s3, &[t12, t13]).unwrap();
        assert_eq!(s3.label(out), "(23)");

        let a5 = construct::alternating(5);
        let c = a5.element_by_name("(12345)").unwrap();
        let w = word::pow(word::var(1), 3);
        let out = w.eval(&a5, &[c]).unwrap();
        assert_eq!(a5.label(out), "(14253)");
    }

    #[test]
    fn omega_expansion_matches_builtin() {
        let g = construct::cyclic(4);
        let builtin = Ude::omega(3);
        let literal = builtin.expand_omegas();
        assert!(check_equivalent_on(&g, &builtin, &literal, 1_000_000).unwrap());
    }

    #[test]
    fn in_cyc_matches_handwritten() {
        let d8 = construct::dihedral(8).unwrap();
        let macro_form = parse_formula("in_cyc(x1, x2, 0, 3)").unwrap();
        let hand =
            parse_formula("x1 = 1 | x1 = x2 | x1 = x2^2 | x1 = x2^3").unwrap();
        assert!(check_equivalent_on(&d8, &macro_form, &hand, 1_000_000).unwrap());
        // grouped as one clause of four equations
        assert_eq!(macro_form.clauses.len(), 1);
        assert_eq!(macro_form.equation_count(), 4);
    }

    #[test]
    fn ude_equivalent_to_itself() {
        let g = construct::cyclic(6);
        let u = parse_formula("x1^2 = 1 | x1^3 = 1").unwrap();
        assert!(check_equivalent_on(&g, &u, &u, 1_000_000).unwrap());
    }

    #[test]
    fn display_reparses() {
        for text in [
            "(x1^2 = 1) | (x2^2 = 1) | ([x1,x2] = 1)",
            "theta(x1,x2,x3)",
            "omega(4) | x1^2 = 1",
            "in_cyc(x1^3, x2^3, 1, 5)",
        ] {
            let u = parse_formula(text).unwrap();
            let shown = u.to_string();
            let re = parse_formula(&shown).unwrap();
            let g = construct::symmetric(3);
            if u.variable_count <= 3 {
                assert!(check_equivalent_on(&g, &u, &re, 10_000_000).unwrap(), "{}", text);
            }
        }
    }
}
