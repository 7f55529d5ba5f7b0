//! Multiplication-table-backed finite groups.
//!
//! Element ids are assigned in closure-discovery order with the identity
//! pinned to id 0. Groups are immutable after construction; derived data
//! (conjugacy classes, element orders) is cached lazily behind `OnceLock`.

use crate::error::{Error, Result};
use crate::perm::Perm;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

/// Full associativity scan is cubic; above this order constructed tables are
/// spot-checked on generator triples instead.
pub const FULL_CHECK_ORDER: usize = 64;

/// Default bound on closure size for generator-built groups.
pub const DEFAULT_SIZE_BOUND: usize = 1024;

pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
    perm_images: Option<Vec<Perm>>,
    generators: Vec<usize>,
    classes: OnceLock<Vec<Vec<usize>>>,
    class_of: OnceLock<Vec<usize>>,
    orders: OnceLock<Vec<usize>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            name: self.name.clone(),
            order: self.order,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            labels: self.labels.clone(),
            perm_images: self.perm_images.clone(),
            generators: self.generators.clone(),
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
            orders: OnceLock::new(),
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    /// Build from an explicit multiplication table; `table[i][j]` is the id
    /// of element i*j and id 0 must act as the identity. Validated on entry:
    /// Latin square, two-sided identity and inverses always; associativity by
    /// full triple scan up to order 64, by generator spot checks above.
    pub fn from_table(
        name: &str,
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteGroup> {
        let order = table.len();
        if order == 0 {
            return Err(Error::BadTable("empty table".into()));
        }
        let mut mul = vec![0u16; order * order];
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::BadTable(format!("row {} has length {}", i, row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(Error::BadTable(format!(
                        "entry [{}][{}] = {} out of range",
                        i, j, v
                    )));
                }
                mul[i * order + j] = v as u16;
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != order {
                    return Err(Error::BadTable("label count differs from order".into()));
                }
                l
            }
            None => (0..order).map(|i| format!("g{}", i)).collect(),
        };
        let mut group = FiniteGroup {
            name: name.to_string(),
            order,
            mul,
            inv: vec![0; order],
            labels,
            perm_images: None,
            generators: Vec::new(),
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
            orders: OnceLock::new(),
        };
        group.fill_inverses()?;
        group.validate(order <= FULL_CHECK_ORDER)?;
        group.generators = group.find_generators();
        Ok(group)
    }

    /// Closure of abstract generators under an associative operation.
    /// Ids are assigned in BFS discovery order, identity first. Labels are
    /// reduced generator words ("1", "a", "a^2*b", ...).
    pub fn from_closure<T, F>(
        name: &str,
        gens: Vec<(T, String)>,
        identity: T,
        op: F,
        bound: usize,
    ) -> Result<FiniteGroup>
    where
        T: Clone + Eq + std::hash::Hash,
        F: Fn(&T, &T) -> T,
    {
        Self::from_closure_impl(name, gens, identity, op, bound).map(|(g, _)| g)
    }

    fn from_closure_impl<T, F>(
        name: &str,
        gens: Vec<(T, String)>,
        identity: T,
        op: F,
        bound: usize,
    ) -> Result<(FiniteGroup, Vec<T>)>
    where
        T: Clone + Eq + std::hash::Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut index: HashMap<T, usize> = HashMap::new();
        let mut elems: Vec<T> = Vec::new();
        let mut words: Vec<Vec<usize>> = Vec::new();
        index.insert(identity.clone(), 0);
        elems.push(identity);
        words.push(Vec::new());
        let mut frontier = 0;
        while frontier < elems.len() {
            let current = elems[frontier].clone();
            for (gi, (g, _)) in gens.iter().enumerate() {
                let next = op(&current, g);
                if !index.contains_key(&next) {
                    if elems.len() >= bound {
                        return Err(Error::SizeBound { bound });
                    }
                    index.insert(next.clone(), elems.len());
                    let mut w = words[frontier].clone();
                    w.push(gi);
                    elems.push(next);
                    words.push(w);
                }
            }
            frontier += 1;
        }
        let order = elems.len();
        let mut mul = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                let prod = op(&elems[i], &elems[j]);
                mul[i * order + j] = index[&prod] as u16;
            }
        }
        let labels = words
            .iter()
            .map(|w| word_label(w, &gens.iter().map(|(_, l)| l.clone()).collect::<Vec<_>>()))
            .collect();
        let mut group = FiniteGroup {
            name: name.to_string(),
            order,
            mul,
            inv: vec![0; order],
            labels,
            perm_images: None,
            generators: Vec::new(),
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
            orders: OnceLock::new(),
        };
        // generator ids are the images of the identity under each generator
        group.generators = gens
            .iter()
            .map(|(g, _)| {
                let opd = op(&elems[0], g);
                index[&opd]
            })
            .collect();
        group.fill_inverses()?;
        group.validate(order <= FULL_CHECK_ORDER)?;
        Ok((group, elems))
    }

    /// Closure of permutation generators; element labels are cycle notation
    /// and `perm_images` is populated.
    pub fn from_perm_generators(name: &str, gens: &[Perm], bound: usize) -> Result<FiniteGroup> {
        if gens.is_empty() {
            return Err(Error::Invalid("need at least one permutation generator".into()));
        }
        let degree = gens[0].degree();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let gen_pairs: Vec<(Perm, String)> =
            gens.iter().map(|g| (g.clone(), g.to_string())).collect();
        let (mut group, elems) = FiniteGroup::from_closure_impl(
            name,
            gen_pairs,
            Perm::identity(degree),
            |a, b| a.compose(b).expect("equal degrees"),
            bound,
        )?;
        group.labels = elems.iter().map(|p| p.to_string()).collect();
        group.perm_images = Some(elems);
        Ok(group)
    }

    fn fill_inverses(&mut self) -> Result<()> {
        for g in 0..self.order {
            let mut found = None;
            for h in 0..self.order {
                if self.mul[g * self.order + h] == 0 && self.mul[h * self.order + g] == 0 {
                    found = Some(h);
                    break;
                }
            }
            match found {
                Some(h) => self.inv[g] = h as u16,
                None => return Err(Error::BadTable(format!("element {} has no inverse", g))),
            }
        }
        Ok(())
    }

    /// Latin-square, identity, inverse and associativity checks.
    pub fn validate(&self, full_associativity: bool) -> Result<()> {
        let n = self.order;
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(Error::BadTable(format!("id 0 is not an identity at {}", g)));
            }
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for h in 0..n {
                let r = self.mul(g, h);
                let c = self.mul(h, g);
                if seen_row[r] || seen_col[c] {
                    return Err(Error::BadTable(format!("row/col {} is not a permutation", g)));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
            let gi = self.inv(g);
            if self.mul(g, gi) != 0 || self.mul(gi, g) != 0 {
                return Err(Error::BadTable(format!("bad inverse for {}", g)));
            }
        }
        if full_associativity {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::BadTable(format!(
                                "associativity fails at ({}, {}, {})",
                                a, b, c
                            )));
                        }
                    }
                }
            }
        } else {
            // spot checks: generator triples against random elements
            let gens = if self.generators.is_empty() {
                (0..n.min(8)).collect::<Vec<_>>()
            } else {
                self.generators.clone()
            };
            let mut state = 0x9e3779b97f4a7c15u64 ^ (n as u64);
            let mut rnd = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            for &a in &gens {
                for &b in &gens {
                    let ab = self.mul(a, b);
                    for _ in 0..64 {
                        let c = rnd();
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::BadTable("associativity spot check failed".into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline(always)]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline(always)]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// h^-1 g h.
    #[inline(always)]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// g^-1 h^-1 g h.
    #[inline(always)]
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let (mut base, mut e) = if k < 0 { (self.inv(g), (-k) as u64) } else { (g, k as u64) };
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn perm_images(&self) -> Option<&[Perm]> {
        self.perm_images.as_deref()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Look up an element id by label, generator word (over g1..gk or the
    /// generator labels) or cycle notation for permutation groups.
    pub fn element_by_name(&self, name: &str) -> Result<usize> {
        let name = name.trim();
        if let Some(id) = self.labels.iter().position(|l| l == name) {
            return Ok(id);
        }
        if name == "1" || name == "()" {
            return Ok(0);
        }
        if let Some(perms) = &self.perm_images {
            if name.starts_with('(') {
                if let Ok(p) = Perm::parse(name, Some(perms[0].degree())) {
                    if let Some(id) = perms.iter().position(|q| *q == p) {
                        return Ok(id);
                    }
                }
            }
        }
        if let Some(id) = self.parse_generator_word(name) {
            return Ok(id);
        }
        Err(Error::NoSuchElement(name.to_string()))
    }

    /// Parse products like "g1*g2^-1" (also "a", "b" aliases for g1, g2).
    fn parse_generator_word(&self, text: &str) -> Option<usize> {
        let mut acc = 0usize;
        for part in text.split('*') {
            let part = part.trim();
            if part.is_empty() {
                return None;
            }
            let (base, exp) = match part.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim().parse::<i64>().ok()?),
                None => (part, 1),
            };
            let gen_index = if let Some(rest) = base.strip_prefix('g') {
                rest.parse::<usize>().ok()?.checked_sub(1)?
            } else if base.len() == 1 {
                let c = base.chars().next().unwrap();
                if c.is_ascii_lowercase() {
                    (c as usize) - ('a' as usize)
                } else {
                    return None;
                }
            } else {
                return None;
            };
            let gen = *self.generators.get(gen_index)?;
            acc = self.mul(acc, self.pow(gen, exp));
        }
        Some(acc)
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.element_orders()[g]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.orders.get_or_init(|| {
            (0..self.order)
                .map(|g| {
                    let mut acc = g;
                    let mut k = 1;
                    while acc != 0 {
                        acc = self.mul(acc, g);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn exponent(&self) -> usize {
        self.element_orders().iter().fold(1, |acc, &k| lcm(acc, k))
    }

    /// Sorted (order, count) pairs over all elements.
    pub fn order_spectrum(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &k in self.element_orders() {
            *counts.entry(k).or_insert(0) += 1;
        }
        let mut out: Vec<(usize, usize)> = counts.into_iter().collect();
        out.sort_unstable();
        out
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in (a + 1)..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.classes.get_or_init(|| {
            let mut class_of = vec![usize::MAX; self.order];
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for g in 0..self.order {
                if class_of[g] != usize::MAX {
                    continue;
                }
                let idx = classes.len();
                let mut class = Vec::new();
                for h in 0..self.order {
                    let c = self.conjugate(g, h);
                    if class_of[c] == usize::MAX {
                        class_of[c] = idx;
                        class.push(c);
                    }
                }
                class.sort_unstable();
                classes.push(class);
            }
            let _ = self.class_of.set(class_of);
            classes
        })
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.conjugacy_classes();
        self.class_of.get().expect("classes computed")[g]
    }

    pub fn class_size(&self, g: usize) -> usize {
        let classes = self.conjugacy_classes();
        classes[self.class_of(g)].len()
    }

    /// Multiset of conjugacy class sizes, sorted.
    pub fn class_size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        sizes
    }

    pub fn center(&self) -> Subgroup {
        let members: Vec<usize> = (0..self.order)
            .filter(|&g| (0..self.order).all(|h| self.mul(g, h) == self.mul(h, g)))
            .collect();
        Subgroup { members: members.clone(), generators: members }
    }

    /// Derived series down to the trivial group; the last entry repeats if
    /// the series stabilises above 1 (unsolvable).
    pub fn derived_series(&self) -> Vec<Vec<usize>> {
        let mut series = vec![(0..self.order).collect::<Vec<usize>>()];
        loop {
            let current = series.last().unwrap();
            let mut gens = Vec::new();
            for &a in current {
                for &b in current {
                    let c = self.commutator(a, b);
                    if c != 0 && !gens.contains(&c) {
                        gens.push(c);
                    }
                }
            }
            let next = self.closure(&gens);
            if next.len() == current.len() {
                break;
            }
            let stop = next.len() == 1;
            series.push(next);
            if stop {
                break;
            }
        }
        series
    }

    /// Length of the derived series when it reaches 1; None for unsolvable.
    pub fn derived_length(&self) -> Option<usize> {
        let series = self.derived_series();
        if series.last().unwrap().len() == 1 {
            Some(series.len() - 1)
        } else {
            None
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_length().is_some()
    }

    /// Sorted member list of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut members = vec![0usize];
        let mut frontier = 0;
        while frontier < members.len() {
            let current = members[frontier];
            for &g in gens {
                let next = self.mul(current, g);
                if !in_set[next] {
                    in_set[next] = true;
                    members.push(next);
                }
            }
            frontier += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        Subgroup { members: self.closure(gens), generators: gens.to_vec() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { members: vec![0], generators: vec![] }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order).collect(),
            generators: self.generators.clone(),
        }
    }

    /// All subgroups generated by at most `max_gens` elements, deduplicated
    /// by member set. Complete whenever every subgroup of the group is
    /// `max_gens`-generated; `subgroups_complete` checks that heuristic.
    pub fn subgroups(&self, max_gens: usize) -> Vec<Subgroup> {
        let mut by_members: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        by_members.insert(vec![0], vec![]);
        let mut last_level: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![0], vec![])];
        for _level in 0..max_gens {
            let mut next_level: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
            for (members, gens) in &last_level {
                for g in 1..self.order {
                    if members.binary_search(&g).is_ok() {
                        continue;
                    }
                    let mut new_gens = gens.clone();
                    new_gens.push(g);
                    let new_members = self.closure(&new_gens);
                    if !by_members.contains_key(&new_members) {
                        by_members.insert(new_members.clone(), new_gens.clone());
                        next_level.push((new_members, new_gens));
                    }
                }
            }
            if next_level.is_empty() {
                break;
            }
            last_level = next_level;
        }
        let mut out: Vec<Subgroup> = by_members
            .into_iter()
            .map(|(members, generators)| Subgroup { members, generators })
            .collect();
        out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        out
    }

    /// True when raising the generator bound by one finds no new subgroup.
    pub fn subgroups_complete(&self, max_gens: usize) -> bool {
        self.subgroups(max_gens).len() == self.subgroups(max_gens + 1).len()
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        for &m in &sub.members {
            for g in 0..self.order {
                if sub.members.binary_search(&self.conjugate(m, g)).is_err() {
                    return false;
                }
            }
        }
        true
    }

    pub fn normal_subgroups(&self, max_gens: usize) -> Vec<Subgroup> {
        self.subgroups(max_gens)
            .into_iter()
            .filter(|s| self.is_normal(s))
            .collect()
    }

    /// The subgroup as a standalone group; labels and permutation images are
    /// inherited from the parent.
    pub fn subgroup_as_group(&self, sub: &Subgroup, name: &str) -> FiniteGroup {
        let order = sub.members.len();
        let pos: HashMap<usize, usize> =
            sub.members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut mul = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                mul[i * order + j] = pos[&self.mul(sub.members[i], sub.members[j])] as u16;
            }
        }
        let labels = sub.members.iter().map(|&m| self.labels[m].clone()).collect();
        let perm_images = self
            .perm_images
            .as_ref()
            .map(|ps| sub.members.iter().map(|&m| ps[m].clone()).collect());
        let mut inv = vec![0u16; order];
        for i in 0..order {
            inv[i] = pos[&self.inv(sub.members[i])] as u16;
        }
        FiniteGroup {
            name: name.to_string(),
            order,
            mul,
            inv,
            labels,
            perm_images,
            generators: sub
                .generators
                .iter()
                .map(|g| pos[g])
                .collect::<Vec<_>>(),
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
            orders: OnceLock::new(),
        }
    }

    /// Quotient by a normal subgroup. Cosets become elements labelled by a
    /// representative in brackets; coset of the identity gets id 0.
    pub fn quotient(&self, kernel: &Subgroup) -> Result<FiniteGroup> {
        if !self.is_normal(kernel) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            for &k in &kernel.members {
                coset_of[self.mul(k, g)] = idx;
            }
            reps.push(g);
        }
        let order = reps.len();
        let mut mul = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                mul[i * order + j] = coset_of[self.mul(reps[i], reps[j])] as u16;
            }
        }
        let labels = reps.iter().map(|&r| format!("[{}]", self.labels[r])).collect();
        let mut inv = vec![0u16; order];
        for i in 0..order {
            inv[i] = coset_of[self.inv(reps[i])] as u16;
        }
        let mut group = FiniteGroup {
            name: format!("{}/{}", self.name, kernel.order()),
            order,
            mul,
            inv,
            labels,
            perm_images: None,
            generators: Vec::new(),
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
            orders: OnceLock::new(),
        };
        group.validate(order <= FULL_CHECK_ORDER)?;
        group.generators = group.find_generators();
        Ok(group)
    }

    /// Pin the generator list; the elements must generate the group.
    pub fn set_generators(&mut self, gens: Vec<usize>) -> Result<()> {
        if self.closure(&gens).len() != self.order {
            return Err(Error::Invalid("elements do not generate the group".into()));
        }
        self.generators = gens;
        Ok(())
    }

    /// Relabel every element by a shortest-found word in the named
    /// generators, presentation style ("1", "a", "a^2*b").
    pub fn relabel_by_generator_words(&mut self, gens: &[usize], names: &[String]) -> Result<()> {
        if self.closure(gens).len() != self.order {
            return Err(Error::Invalid("elements do not generate the group".into()));
        }
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order];
        words[0] = Some(Vec::new());
        let mut queue = vec![0usize];
        let mut at = 0;
        while at < queue.len() {
            let cur = queue[at];
            for (k, &g) in gens.iter().enumerate() {
                let next = self.mul(cur, g);
                if words[next].is_none() {
                    let mut w = words[cur].clone().unwrap();
                    w.push(k);
                    words[next] = Some(w);
                    queue.push(next);
                }
            }
            at += 1;
        }
        self.labels = words
            .into_iter()
            .map(|w| word_label(&w.unwrap(), names))
            .collect();
        self.generators = gens.to_vec();
        Ok(())
    }

    /// Small generating sequence found greedily, elements of high order first.
    pub fn find_generators(&self) -> Vec<usize> {
        if self.order == 1 {
            return Vec::new();
        }
        let orders = self.element_orders();
        let mut by_order: Vec<usize> = (1..self.order).collect();
        by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
        let mut gens: Vec<usize> = Vec::new();
        let mut members = vec![0usize];
        for g in by_order {
            if members.binary_search(&g).is_ok() {
                continue;
            }
            gens.push(g);
            members = self.closure(&gens);
            if members.len() == self.order {
                break;
            }
        }
        gens
    }

    /// Direct product; elements are pairs labelled "(l, r)".
    pub fn direct_product(&self, other: &FiniteGroup, name: &str) -> Result<FiniteGroup> {
        let n1 = self.order;
        let n2 = other.order;
        let order = n1 * n2;
        if order > u16::MAX as usize {
            return Err(Error::SizeBound { bound: u16::MAX as usize });
        }
        let id = |a: usize, b: usize| a * n2 + b;
        let mut mul = vec![0u16; order * order];
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                for a2 in 0..n1 {
                    for b2 in 0..n2 {
                        mul[id(a1, b1) * order + id(a2, b2)] =
                            id(self.mul(a1, a2), other.mul(b1, b2)) as u16;
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(order);
        for a in 0..n1 {
            for b in 0..n2 {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
            }
        }
        let mut inv = vec![0u16; order];
        for a in 0..n1 {
            for b in 0..n2 {
                inv[id(a, b)] = id(self.inv(a), other.inv(b)) as u16;
            }
        }
        let mut generators: Vec<usize> =
            self.generators.iter().map(|&g| id(g, 0)).collect();
        generators.extend(other.generators.iter().map(|&g| id(0, g)));
        let group = FiniteGroup {
            name: name.to_string(),
            order,
            mul,
            inv,
            labels,
            perm_images: None,
            generators,
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
            orders: OnceLock::new(),
        };
        group.validate(order <= FULL_CHECK_ORDER)?;
        Ok(group)
    }
}

fn word_label(word: &[usize], gen_labels: &[String]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let g = word[i];
        let mut run = 1;
        while i + run < word.len() && word[i + run] == g {
            run += 1;
        }
        if run == 1 {
            parts.push(gen_labels[g].clone());
        } else {
            parts.push(format!("{}^{}", gen_labels[g], run));
        }
        i += run;
    }
    parts.join("*")
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Subgroup of a fixed parent group, stored as a sorted member set plus the
/// generators it was built from. The parent is passed explicitly to methods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub members: Vec<usize>,
    pub generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }
}

/// Witness for an isomorphism: images of the source group's generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub generator_images: Vec<(usize, usize)>,
}

/// Generator-image backtracking search for an isomorphism, pruned by order
/// spectrum, center order and conjugacy-class-size multiset. Complete at the
/// orders this crate works with.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<IsoWitness> {
    if g.order() != h.order() {
        return None;
    }
    if g.order() == 1 {
        return Some(IsoWitness { generator_images: vec![] });
    }
    if g.order_spectrum() != h.order_spectrum() {
        return None;
    }
    if g.center().order() != h.center().order() {
        return None;
    }
    if g.class_size_multiset() != h.class_size_multiset() {
        return None;
    }
    let gens = g.find_generators();
    let mut images = vec![0usize; gens.len()];
    if extend_iso(g, h, &gens, &mut images, 0) {
        Some(IsoWitness {
            generator_images: gens.into_iter().zip(images).collect(),
        })
    } else {
        None
    }
}

fn extend_iso(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &mut [usize],
    depth: usize,
) -> bool {
    if depth == gens.len() {
        return check_full_iso(g, h, gens, images);
    }
    let src = gens[depth];
    let src_order = g.element_order(src);
    let src_class = g.class_size(src);
    for cand in 0..h.order() {
        if h.element_order(cand) != src_order || h.class_size(cand) != src_class {
            continue;
        }
        images[depth] = cand;
        if partial_consistent(g, h, &gens[..=depth], &images[..=depth])
            && extend_iso(g, h, gens, images, depth + 1)
        {
            return true;
        }
    }
    false
}

/// Extends the partial generator map by closure and checks it stays a
/// well-defined injective homomorphism on the generated subgroup.
fn partial_consistent(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    let mut map: HashMap<usize, usize> = HashMap::new();
    map.insert(0, 0);
    let mut queue = vec![0usize];
    let mut used = vec![false; h.order()];
    used[0] = true;
    let mut at = 0;
    while at < queue.len() {
        let cur = queue[at];
        let cur_img = map[&cur];
        for (k, &gen) in gens.iter().enumerate() {
            let next = g.mul(cur, gen);
            let next_img = h.mul(cur_img, images[k]);
            match map.get(&next) {
                Some(&existing) => {
                    if existing != next_img {
                        return false;
                    }
                }
                None => {
                    if used[next_img] {
                        return false; // not injective
                    }
                    used[next_img] = true;
                    map.insert(next, next_img);
                    queue.push(next);
                }
            }
        }
        at += 1;
    }
    true
}

fn check_full_iso(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    // build the full map; fails if the images generate a proper subgroup
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut used = vec![false; h.order()];
    used[0] = true;
    let mut at = 0;
    while at < queue.len() {
        let cur = queue[at];
        for (k, &gen) in gens.iter().enumerate() {
            let next = g.mul(cur, gen);
            let next_img = h.mul(map[cur], images[k]);
            if map[next] == usize::MAX {
                if used[next_img] {
                    return false;
                }
                used[next_img] = true;
                map[next] = next_img;
                queue.push(next);
            } else if map[next] != next_img {
                return false;
            }
        }
        at += 1;
    }
    if queue.len() != g.order() {
        return false;
    }
    // full homomorphism check over all pairs
    for a in 0..g.order() {
        for b in 0..g.order() {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

/// Verify a witness: extend the generator images and run the full table check.
pub fn verify_iso_witness(g: &FiniteGroup, h: &FiniteGroup, witness: &IsoWitness) -> bool {
    let gens: Vec<usize> = witness.generator_images.iter().map(|&(s, _)| s).collect();
    let images: Vec<usize> = witness.generator_images.iter().map(|&(_, t)| t).collect();
    if g.closure(&gens).len() != g.order() || g.order() != h.order() {
        return g.order() == 1 && h.order() == 1;
    }
    check_full_iso(g, h, &gens, &images)
}

/// Search for (H, K) with K normal in H <= G and H/K isomorphic to T, over
/// subgroups generated by at most `max_gens` elements.
pub fn is_section(g: &FiniteGroup, t: &FiniteGroup, max_gens: usize) -> Option<(Subgroup, Subgroup)> {
    let t_order = t.order();
    if t_order > g.order() {
        return None;
    }
    for sub in g.subgroups(max_gens) {
        if sub.order() % t_order != 0 {
            continue;
        }
        if sub.order() == t_order {
            let h_group = g.subgroup_as_group(&sub, "H");
            if is_isomorphic(&h_group, t).is_some() {
                return Some((sub.clone(), Subgroup { members: vec![0], generators: vec![] }));
            }
            continue;
        }
        let h_group = g.subgroup_as_group(&sub, "H");
        let kernel_order = sub.order() / t_order;
        for k in h_group.normal_subgroups(max_gens) {
            if k.order() != kernel_order {
                continue;
            }
            if let Ok(q) = h_group.quotient(&k) {
                if is_isomorphic(&q, t).is_some() {
                    // map K's members back to parent ids
                    let k_parent = Subgroup {
                        members: k.members.iter().map(|&m| sub.members[m]).collect(),
                        generators: k.generators.iter().map(|&m| sub.members[m]).collect(),
                    };
                    return Some((sub, k_parent));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn cyclic_basics() {
        let g = construct::cyclic(6);
        assert_eq!(g.order(), 6);
        assert_eq!(g.element_order(1), 6);
        assert_eq!(g.exponent(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.order_spectrum(), vec![(1, 1), (2, 1), (3, 2), (6, 2)]);
    }

    #[test]
    fn trivial_group_has_one_class() {
        let g = construct::cyclic(1);
        assert_eq!(g.conjugacy_classes().len(), 1);
        assert_eq!(g.subgroups(1).len(), 1);
    }

    #[test]
    fn perm_group_order_20() {
        let a = Perm::parse("(1 2 3 4 5)", Some(5)).unwrap();
        let b = Perm::parse("(2 3 5 4)", Some(5)).unwrap();
        let g = FiniteGroup::from_perm_generators("F20", &[a, b], DEFAULT_SIZE_BOUND).unwrap();
        assert_eq!(g.order(), 20);
    }

    #[test]
    fn perm_group_order_18() {
        let gens = vec![
            Perm::parse("(123)", Some(6)).unwrap(),
            Perm::parse("(456)", Some(6)).unwrap(),
            Perm::parse("(12)(45)", Some(6)).unwrap(),
        ];
        let g = FiniteGroup::from_perm_generators("G18", &gens, DEFAULT_SIZE_BOUND).unwrap();
        assert_eq!(g.order(), 18);
    }

    #[test]
    fn perm_closure_of_three_cycle() {
        let a = Perm::parse("(123)", Some(3)).unwrap();
        let g = FiniteGroup::from_perm_generators("C3", &[a], DEFAULT_SIZE_BOUND).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn element_orders_in_perm_groups() {
        let s5 = construct::symmetric(5);
        let g = s5.element_by_name("(123)(45)").unwrap();
        assert_eq!(s5.element_order(g), 6);
        let a5 = construct::alternating(5);
        let g = a5.element_by_name("(12345)").unwrap();
        assert_eq!(a5.element_order(g), 5);
    }

    #[test]
    fn mul_table_matches_perm_compose() {
        let g = construct::symmetric(4);
        let perms = g.perm_images().unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = perms[a].compose(&perms[b]).unwrap();
                assert_eq!(perms[g.mul(a, b)], ab);
            }
        }
    }

    #[test]
    fn exponents() {
        assert_eq!(construct::dihedral(8).unwrap().exponent(), 4);
        assert_eq!(construct::symmetric(4).exponent(), 12);
        assert_eq!(construct::alternating(6).exponent(), 60);
    }

    #[test]
    fn spectra() {
        let q8 = construct::quaternion8();
        assert_eq!(q8.order_spectrum(), vec![(1, 1), (2, 1), (4, 6)]);
        let e8 = construct::elementary_abelian(2, 3).unwrap();
        assert_eq!(e8.order_spectrum(), vec![(1, 1), (2, 7)]);
        let d8 = construct::dihedral(8).unwrap();
        assert_eq!(d8.order_spectrum(), vec![(1, 1), (2, 5), (4, 2)]);
    }

    #[test]
    fn subgroup_counts() {
        let q8 = construct::quaternion8();
        assert_eq!(q8.subgroups(2).len(), 6);
        let a4 = construct::alternating(4);
        assert_eq!(a4.subgroups(2).len(), 10);
        assert!(a4.subgroups_complete(2));
    }

    #[test]
    fn normal_subgroups_of_s4() {
        let s4 = construct::symmetric(4);
        let normals = s4.normal_subgroups(3);
        let orders: Vec<usize> = normals.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }

    #[test]
    fn a4_has_normal_v4() {
        let a4 = construct::alternating(4);
        let normals = a4.normal_subgroups(2);
        let v4 = normals.iter().find(|s| s.order() == 4).expect("V4 normal in A4");
        let g = a4.subgroup_as_group(v4, "V4");
        assert_eq!(g.exponent(), 2);
    }

    #[test]
    fn quotients() {
        let a4 = construct::alternating(4);
        let v4 = a4
            .normal_subgroups(2)
            .into_iter()
            .find(|s| s.order() == 4)
            .unwrap();
        let q = a4.quotient(&v4).unwrap();
        assert!(is_isomorphic(&q, &construct::cyclic(3)).is_some());

        let d8 = construct::dihedral(8).unwrap();
        let center = d8.center();
        let q = d8.quotient(&center).unwrap();
        assert!(is_isomorphic(&q, &construct::elementary_abelian(2, 2).unwrap()).is_some());

        let triv = a4.trivial_subgroup();
        let q = a4.quotient(&triv).unwrap();
        assert!(is_isomorphic(&q, &a4).is_some());
        let full = a4.full_subgroup();
        assert_eq!(a4.quotient(&full).unwrap().order(), 1);
    }

    #[test]
    fn quotient_requires_normal() {
        let s4 = construct::symmetric(4);
        let t = s4.element_by_name("(12)").unwrap();
        let sub = s4.subgroup(&[t]);
        assert!(matches!(s4.quotient(&sub), Err(Error::NotNormal)));
    }

    #[test]
    fn iso_negative_and_positive() {
        let d8 = construct::dihedral(8).unwrap();
        let q8 = construct::quaternion8();
        assert!(is_isomorphic(&d8, &q8).is_none());
        let w = is_isomorphic(&d8, &d8).unwrap();
        assert!(verify_iso_witness(&d8, &d8, &w));
    }

    #[test]
    fn derived_lengths() {
        assert_eq!(construct::symmetric(4).derived_length(), Some(3));
        assert_eq!(construct::alternating(5).derived_length(), None);
        assert!(!construct::alternating(5).is_solvable());
        assert!(construct::symmetric(4).is_solvable());
        assert_eq!(construct::cyclic(5).derived_length(), Some(1));
        assert_eq!(construct::cyclic(1).derived_length(), Some(0));
    }

    #[test]
    fn sections() {
        let d8 = construct::dihedral(8).unwrap();
        let e8 = construct::elementary_abelian(2, 3).unwrap();
        assert!(is_section(&d8, &e8, 3).is_none());
        let a5 = construct::alternating(5);
        let s3 = construct::symmetric(3);
        assert!(is_section(&a5, &s3, 2).is_some());
    }

    #[test]
    fn element_order_divides_exponent() {
        for g in [
            construct::dihedral(12).unwrap(),
            construct::quaternion8(),
            construct::symmetric(4),
        ] {
            let e = g.exponent();
            for id in 0..g.order() {
                assert_eq!(e % g.element_order(id), 0);
            }
            assert_eq!(g.order() % e, 0);
        }
    }
}
