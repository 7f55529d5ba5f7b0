//! Census of every group the verifier needs by name: all groups of order
//! up to 24 up to isomorphism, plus the named larger groups the campaigns
//! reference. Each entry is a construction recipe, not a stored table, so
//! rebuilding is deterministic and labels are stable.

use crate::construct;
use crate::error::{Error, Result};
use crate::group::{is_isomorphic, FiniteGroup};
use crate::perm::Perm;
use crate::report::{Report, ReportItem};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Debug)]
pub enum Recipe {
    /// A construction expression in the `construct` grammar.
    Expr(&'static str),
    /// Closure of permutation generators in cycle notation.
    Perms(&'static [&'static str]),
}

#[derive(Clone, Debug)]
pub struct GroupEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub order: usize,
    pub recipe: Recipe,
    pub note: &'static str,
}

impl GroupEntry {
    pub fn build(&self) -> Result<FiniteGroup> {
        let mut g = match &self.recipe {
            Recipe::Expr(expr) => construct::parse_construction(expr)?,
            Recipe::Perms(cycles) => {
                let degree = cycles
                    .iter()
                    .map(|c| Perm::parse(c, None).map(|p| p.degree()))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .max()
                    .unwrap_or(1);
                let perms = cycles
                    .iter()
                    .map(|c| Perm::parse(c, Some(degree)))
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::from_perm_generators(self.name, &perms, 1024)?
            }
        };
        g.set_name(self.name);
        Ok(g)
    }

    pub fn construction_display(&self) -> String {
        match &self.recipe {
            Recipe::Expr(e) => e.to_string(),
            Recipe::Perms(cycles) => format!("perm_generators: {}", cycles.join(", ")),
        }
    }
}

/// Groups of order <= 24, one entry per isomorphism class.
pub fn census_entries() -> Vec<GroupEntry> {
    use Recipe::*;
    let e = |name, aliases, order, recipe, note| GroupEntry { name, aliases, order, recipe, note };
    vec![
        e("Z1", &["1", "trivial"], 1, Expr("cyclic(1)"), ""),
        e("Z2", &[], 2, Expr("cyclic(2)"), ""),
        e("Z3", &[], 3, Expr("cyclic(3)"), ""),
        e("Z4", &[], 4, Expr("cyclic(4)"), ""),
        e("Z2^2", &["V4", "Z2xZ2"], 4, Expr("elementary_abelian(2,2)"), "Klein four-group"),
        e("Z5", &[], 5, Expr("cyclic(5)"), ""),
        e("Z6", &[], 6, Expr("cyclic(6)"), ""),
        e("S3", &["D6"], 6, Expr("symmetric(3)"), ""),
        e("Z7", &[], 7, Expr("cyclic(7)"), ""),
        e("Z8", &[], 8, Expr("cyclic(8)"), ""),
        e("Z4xZ2", &[], 8, Expr("direct_product(cyclic(4), cyclic(2))"), "at least three elements of order 4"),
        e("Z2^3", &["Z2xZ2xZ2"], 8, Expr("elementary_abelian(2,3)"), ""),
        e("D8", &[], 8, Expr("dihedral(8)"), ""),
        e("Q8", &[], 8, Expr("quaternion8"), "at least three elements of order 4"),
        e("Z9", &[], 9, Expr("cyclic(9)"), ""),
        e("Z3^2", &["Z3xZ3"], 9, Expr("elementary_abelian(3,2)"), ""),
        e("Z10", &[], 10, Expr("cyclic(10)"), ""),
        e("D10", &[], 10, Expr("dihedral(10)"), ""),
        e("Z11", &[], 11, Expr("cyclic(11)"), ""),
        e("Z12", &[], 12, Expr("cyclic(12)"), ""),
        e("Z6xZ2", &["Z2xZ6"], 12, Expr("direct_product(cyclic(6), cyclic(2))"), ""),
        e("A4", &[], 12, Expr("alternating(4)"), ""),
        e("D12", &[], 12, Expr("dihedral(12)"), ""),
        e("Z3:Z4", &["Dic3"], 12, Expr("semidirect(cyclic(3), cyclic(4), b: a -> a^-1)"), "a^3 = b^4 = 1, a^b = a^-1"),
        e("Z13", &[], 13, Expr("cyclic(13)"), ""),
        e("Z14", &[], 14, Expr("cyclic(14)"), ""),
        e("D14", &[], 14, Expr("dihedral(14)"), ""),
        e("Z15", &[], 15, Expr("cyclic(15)"), ""),
        e("Z16", &[], 16, Expr("cyclic(16)"), ""),
        e("Z8xZ2", &[], 16, Expr("direct_product(cyclic(8), cyclic(2))"), ""),
        e("Z4xZ4", &[], 16, Expr("direct_product(cyclic(4), cyclic(4))"), ""),
        e("Z4xZ2^2", &[], 16, Expr("direct_product(cyclic(4), elementary_abelian(2,2))"), ""),
        e("Z2^4", &[], 16, Expr("elementary_abelian(2,4)"), ""),
        e("D16", &[], 16, Expr("dihedral(16)"), ""),
        e("QD16", &["SD16"], 16, Expr("semidirect(cyclic(8), cyclic(2), a -> a^3)"), "semidihedral"),
        e("M16", &["M4(2)"], 16, Expr("semidirect(cyclic(8), cyclic(2), a -> a^5)"), "modular group of order 16"),
        e("Q16", &[], 16, Expr("dicyclic(4)"), "generalized quaternion"),
        e("D8xZ2", &[], 16, Expr("direct_product(dihedral(8), cyclic(2))"), ""),
        e("Q8xZ2", &[], 16, Expr("direct_product(quaternion8, cyclic(2))"), ""),
        e("Z4:Z4", &[], 16, Expr("semidirect(cyclic(4), cyclic(4), b: a -> a^-1)"), ""),
        e("(Z4xZ2):Z2", &[], 16, Expr("semidirect(direct_product(cyclic(4), cyclic(2)), cyclic(2), a1 -> a1*a2; a2 -> a2)"), ""),
        e("D8oZ4", &["Pauli"], 16, Expr("semidirect(direct_product(cyclic(4), cyclic(2)), cyclic(2), a1 -> a1; a2 -> a1^2*a2)"), "central product of D8 and Z4"),
        e("Z17", &[], 17, Expr("cyclic(17)"), ""),
        e("Z18", &[], 18, Expr("cyclic(18)"), ""),
        e("Z3xZ6", &["Z6xZ3"], 18, Expr("direct_product(cyclic(3), cyclic(6))"), ""),
        e("D18", &[], 18, Expr("dihedral(18)"), ""),
        e("S3xZ3", &[], 18, Expr("direct_product(symmetric(3), cyclic(3))"), ""),
        e("(Z3xZ3):Z2", &["E9:Z2"], 18, Expr("semidirect(elementary_abelian(3,2), cyclic(2), a1 -> a1^-1; a2 -> a2^-1)"), "generalized dihedral; the subgroup of A6 generated by (123), (456), (12)(45)"),
        e("Z19", &[], 19, Expr("cyclic(19)"), ""),
        e("Z20", &[], 20, Expr("cyclic(20)"), ""),
        e("Z10xZ2", &["Z2xZ10"], 20, Expr("direct_product(cyclic(10), cyclic(2))"), ""),
        e("D20", &[], 20, Expr("dihedral(20)"), ""),
        e("Dic5", &["Q20"], 20, Expr("dicyclic(5)"), ""),
        e("F20", &["Z5:Z4"], 20, Expr("semidirect(cyclic(5), cyclic(4), a -> a^2)"), "a^5 = b^4 = 1, a^b = a^2; the subgroup of S5 generated by (12345) and (2354)"),
        e("Z21", &[], 21, Expr("cyclic(21)"), ""),
        e("Z7:Z3", &[], 21, Expr("semidirect(cyclic(7), cyclic(3), a -> a^2)"), ""),
        e("Z22", &[], 22, Expr("cyclic(22)"), ""),
        e("D22", &[], 22, Expr("dihedral(22)"), ""),
        e("Z23", &[], 23, Expr("cyclic(23)"), ""),
        e("Z24", &[], 24, Expr("cyclic(24)"), ""),
        e("Z12xZ2", &[], 24, Expr("direct_product(cyclic(12), cyclic(2))"), ""),
        e("Z6xZ2^2", &[], 24, Expr("direct_product(cyclic(6), elementary_abelian(2,2))"), ""),
        e("S4", &[], 24, Expr("symmetric(4)"), "the unique order-24 group without elements of order 6"),
        e("A4xZ2", &[], 24, Expr("direct_product(alternating(4), cyclic(2))"), ""),
        e("D24", &[], 24, Expr("dihedral(24)"), ""),
        e("Dic6", &["Q24"], 24, Expr("dicyclic(6)"), ""),
        e("SL(2,3)", &["SL23"], 24, Expr("sl2(3)"), ""),
        e("Z3xD8", &["D8xZ3"], 24, Expr("direct_product(cyclic(3), dihedral(8))"), ""),
        e("Z3xQ8", &["Q8xZ3"], 24, Expr("direct_product(cyclic(3), quaternion8)"), ""),
        e("S3xZ4", &[], 24, Expr("direct_product(symmetric(3), cyclic(4))"), ""),
        e("D12xZ2", &[], 24, Expr("direct_product(dihedral(12), cyclic(2))"), ""),
        e("Dic3xZ2", &["(Z3:Z4)xZ2"], 24, Expr("direct_product(dicyclic(3), cyclic(2))"), ""),
        e("Z3:Z8", &[], 24, Expr("semidirect(cyclic(3), cyclic(8), a -> a^-1)"), ""),
        e("Z3:D8", &[], 24, Expr("semidirect(cyclic(3), dihedral(8), b1: a -> a^-1; b2: a -> a)"), "rotation inverts, reflection centralizes"),
    ]
}

/// Named groups above order 24 used by the campaigns.
pub fn named_entries() -> Vec<GroupEntry> {
    use Recipe::*;
    let e = |name, aliases, order, recipe, note| GroupEntry { name, aliases, order, recipe, note };
    vec![
        e("Z3^3", &["Z3xZ3xZ3"], 27, Expr("elementary_abelian(3,3)"), "exponent-3 group of order 27"),
        e("Z5^2", &["Z5xZ5"], 25, Expr("elementary_abelian(5,2)"), ""),
        e("(Z3xZ3):Z4", &["Z3^2:Z4"], 36, Expr("semidirect(elementary_abelian(3,2), cyclic(4), b: a1 -> a2; a2 -> a1^-1)"), "b swaps the basis with one inversion; b^2 inverts; also the subgroup of A6 generated by (123), (456), (1425)(36)"),
        e("D48", &[], 48, Expr("dihedral(48)"), ""),
        e("A5", &[], 60, Expr("alternating(5)"), ""),
        e("S4:Z3", &[], 72, Perms(&["(1 2 3 4)", "(1 2)", "(1 2 3)(5 6 7)"]), "S4 extended by conjugation with a 3-cycle on extra points; has elements of order 6"),
        e("S5", &[], 120, Expr("symmetric(5)"), ""),
        e("SL(2,5)", &["SL25"], 120, Expr("sl2(5)"), "exactly one involution; has elements of order 10"),
        e("A5xZ2", &[], 120, Expr("direct_product(alternating(5), cyclic(2))"), "has elements of order 10"),
        e("A5xZ3", &[], 180, Expr("direct_product(alternating(5), cyclic(3))"), "has elements of order 15"),
        e("A6", &[], 360, Expr("alternating(6)"), ""),
        e("S6", &[], 720, Expr("symmetric(6)"), ""),
    ]
}

/// Expected number of isomorphism classes per order 1..=24.
pub const CLASS_COUNTS: [usize; 24] = [
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15,
];

/// Shared, lazily-built census with a group cache.
pub struct Census {
    entries: Vec<GroupEntry>,
    cache: Mutex<HashMap<String, Arc<FiniteGroup>>>,
}

static CENSUS: OnceLock<Census> = OnceLock::new();

impl Census {
    pub fn get() -> &'static Census {
        CENSUS.get_or_init(|| {
            let mut entries = census_entries();
            entries.extend(named_entries());
            Census { entries, cache: Mutex::new(HashMap::new()) }
        })
    }

    pub fn entries(&self) -> &[GroupEntry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Option<&GroupEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name || e.aliases.contains(&name))
    }

    /// Build (or fetch from cache) the named group.
    pub fn group(&self, name: &str) -> Result<Arc<FiniteGroup>> {
        let entry = self
            .entry(name)
            .ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
        let key = entry.name.to_string();
        if let Some(g) = self.cache.lock().unwrap().get(&key) {
            return Ok(Arc::clone(g));
        }
        let built = Arc::new(entry.build()?);
        self.cache.lock().unwrap().insert(key, Arc::clone(&built));
        Ok(built)
    }

    /// Census name or construction expression or perm generators via a
    /// leading '(' — the resolver used by the CLI and claim files.
    pub fn resolve(&self, name: &str) -> Result<Arc<FiniteGroup>> {
        if self.entry(name).is_some() {
            return self.group(name);
        }
        match construct::parse_construction(name) {
            Ok(g) => Ok(Arc::new(g)),
            Err(construct_err) => {
                if name.trim_start().starts_with('(') {
                    let parts: Vec<&str> = name.split_whitespace().collect();
                    let joined = parts.join(" ");
                    let degree = Perm::parse(&joined, None).map(|p| p.degree()).ok();
                    if let Some(degree) = degree {
                        let perm = Perm::parse(&joined, Some(degree))?;
                        return Ok(Arc::new(FiniteGroup::from_perm_generators(
                            name,
                            &[perm],
                            1024,
                        )?));
                    }
                }
                Err(construct_err)
            }
        }
    }

    /// The complete classification for 1 <= n <= 24.
    pub fn groups_of_order(&self, n: usize) -> Result<Vec<Arc<FiniteGroup>>> {
        if n == 0 || n > 24 {
            return Err(Error::Invalid(format!(
                "census covers orders 1..=24, got {}",
                n
            )));
        }
        census_entries()
            .iter()
            .filter(|e| e.order == n)
            .map(|e| self.group(e.name))
            .collect()
    }
}

/// Pairwise non-isomorphism within each order, counts against the
/// classification, and the structural facts attached to entries.
pub fn census_selfcheck() -> Result<Report> {
    let census = Census::get();
    let mut report = Report::new("census", None);

    for n in 1..=24usize {
        let groups = census.groups_of_order(n)?;
        let expected = CLASS_COUNTS[n - 1];
        report.push(ReportItem::check(
            "count",
            &format!("order {}", n),
            groups.len() == expected,
            format!("{} classes, expected {}", groups.len(), expected),
        ));
        for g in &groups {
            report.push(ReportItem::check(
                "order",
                g.name(),
                g.order() == n,
                format!("built order {}", g.order()),
            ));
        }
        for i in 0..groups.len() {
            for j in (i + 1)..groups.len() {
                let iso = is_isomorphic(&groups[i], &groups[j]).is_some();
                if iso {
                    report.push(ReportItem::check(
                        "pairwise-noniso",
                        &format!("{} vs {}", groups[i].name(), groups[j].name()),
                        false,
                        "unexpected isomorphism".to_string(),
                    ));
                }
            }
        }
    }

    // structural facts
    let z4z2 = census.group("Z4xZ2")?;
    let q8 = census.group("Q8")?;
    for g in [&z4z2, &q8] {
        let order4 = g
            .order_spectrum()
            .iter()
            .find(|&&(o, _)| o == 4)
            .map(|&(_, c)| c)
            .unwrap_or(0);
        report.push(ReportItem::check(
            "fact",
            &format!("{} has three distinct elements of order 4", g.name()),
            order4 >= 3,
            format!("{} elements of order 4", order4),
        ));
    }

    // exactly one order-24 group without elements of order 6, and it is S4
    let mut no_order6 = Vec::new();
    for g in census.groups_of_order(24)? {
        let has6 = g.order_spectrum().iter().any(|&(o, _)| o == 6);
        if !has6 {
            no_order6.push(g);
        }
    }
    let s4 = census.group("S4")?;
    let unique_s4 = no_order6.len() == 1 && is_isomorphic(&no_order6[0], &s4).is_some();
    report.push(ReportItem::check(
        "fact",
        "order-24 without order-6 elements",
        unique_s4,
        format!(
            "found: {}",
            no_order6.iter().map(|g| g.name().to_string()).collect::<Vec<_>>().join(", ")
        ),
    ));

    // named-group facts
    let sl25 = census.group("SL(2,5)")?;
    let involutions = sl25
        .order_spectrum()
        .iter()
        .find(|&&(o, _)| o == 2)
        .map(|&(_, c)| c)
        .unwrap_or(0);
    report.push(ReportItem::check(
        "fact",
        "SL(2,5) has exactly one involution",
        sl25.order() == 120 && involutions == 1,
        format!("order {}, {} involutions", sl25.order(), involutions),
    ));
    for (name, ord) in [("SL(2,5)", 10), ("A5xZ2", 10), ("A5xZ3", 15)] {
        let g = census.group(name)?;
        let has = g.order_spectrum().iter().any(|&(o, _)| o == ord);
        report.push(ReportItem::check(
            "fact",
            &format!("{} has elements of order {}", name, ord),
            has,
            String::new(),
        ));
    }
    let s4z3 = census.group("S4:Z3")?;
    report.push(ReportItem::check(
        "fact",
        "S4:Z3 has order 72 and an element of order 6",
        s4z3.order() == 72 && s4z3.order_spectrum().iter().any(|&(o, _)| o == 6),
        format!("order {}", s4z3.order()),
    ));

    // permutation realizations named in the notes
    let f20 = census.group("F20")?;
    let f20_perm = FiniteGroup::from_perm_generators(
        "F20-perm",
        &[Perm::parse("(1 2 3 4 5)", Some(5))?, Perm::parse("(2 3 5 4)", Some(5))?],
        1024,
    )?;
    report.push(ReportItem::check(
        "fact",
        "F20 is the subgroup of S5 generated by (12345), (2354)",
        is_isomorphic(&f20, &f20_perm).is_some(),
        String::new(),
    ));
    let g18 = census.group("(Z3xZ3):Z2")?;
    let g18_perm = FiniteGroup::from_perm_generators(
        "G18-perm",
        &[
            Perm::parse("(1 2 3)", Some(6))?,
            Perm::parse("(4 5 6)", Some(6))?,
            Perm::parse("(1 2)(4 5)", Some(6))?,
        ],
        1024,
    )?;
    report.push(ReportItem::check(
        "fact",
        "(Z3xZ3):Z2 is the subgroup of A6 generated by (123), (456), (12)(45)",
        is_isomorphic(&g18, &g18_perm).is_some(),
        String::new(),
    ));
    let g36 = census.group("(Z3xZ3):Z4")?;
    let g36_perm = FiniteGroup::from_perm_generators(
        "G36-perm",
        &[
            Perm::parse("(1 2 3)", Some(6))?,
            Perm::parse("(4 5 6)", Some(6))?,
            Perm::parse("(1 4 2 5)(3 6)", Some(6))?,
        ],
        1024,
    )?;
    report.push(ReportItem::check(
        "fact",
        "(Z3xZ3):Z4 is the subgroup of A6 generated by (123), (456), (1425)(36)",
        is_isomorphic(&g36, &g36_perm).is_some(),
        String::new(),
    ));
    // b^2 acts by inversion
    let b = g36.element_by_name("b")?;
    let a1 = g36.element_by_name("a1")?;
    let b2 = g36.mul(b, b);
    report.push(ReportItem::check(
        "fact",
        "(Z3xZ3):Z4 satisfies a^(b^2) = a^-1",
        g36.conjugate(a1, b2) == g36.inv(a1),
        String::new(),
    ));

    // every group of order 16 has an abelian section of order 8
    let abelians: Vec<Arc<FiniteGroup>> =
        vec![census.group("Z8")?, census.group("Z4xZ2")?, census.group("Z2^3")?];
    for g in census.groups_of_order(16)? {
        let has = abelians
            .iter()
            .any(|t| crate::group::is_section(&g, t, 3).is_some());
        report.push(ReportItem::check(
            "fact",
            &format!("{} has an abelian section of order 8", g.name()),
            has,
            String::new(),
        ));
    }

    report.finish();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_per_order() {
        let census = Census::get();
        for n in [1, 4, 6, 8, 10, 12, 16, 18, 20, 21, 24] {
            let groups = census.groups_of_order(n).unwrap();
            assert_eq!(groups.len(), CLASS_COUNTS[n - 1], "order {}", n);
        }
    }

    #[test]
    fn order_8_names() {
        let census = Census::get();
        let names: Vec<String> = census
            .groups_of_order(8)
            .unwrap()
            .iter()
            .map(|g| g.name().to_string())
            .collect();
        assert_eq!(names, vec!["Z8", "Z4xZ2", "Z2^3", "D8", "Q8"]);
    }

    #[test]
    fn resolver_accepts_expressions() {
        let census = Census::get();
        assert_eq!(census.resolve("Q8").unwrap().order(), 8);
        assert_eq!(census.resolve("cyclic(9)").unwrap().order(), 9);
        assert_eq!(census.resolve("V4").unwrap().order(), 4);
        assert!(census.resolve("nope(3)").is_err());
    }

    #[test]
    fn selfcheck_passes() {
        let report = census_selfcheck().unwrap();
        for item in report.items.iter().filter(|i| !i.pass) {
            eprintln!("FAILED: {} {} -- {}", item.kind, item.subject, item.outcome);
        }
        assert!(report.pass);
    }

    #[test]
    fn named_groups_build() {
        let census = Census::get();
        assert_eq!(census.group("SL(2,5)").unwrap().order(), 120);
        assert_eq!(census.group("A5xZ3").unwrap().order(), 180);
        assert_eq!(census.group("S4:Z3").unwrap().order(), 72);
        assert_eq!(census.group("S6").unwrap().order(), 720);
    }
}
