//! Permutations on points 1..degree.
//!
//! Composition is right-action: in a product `a * b` the left factor acts
//! first, so `(a*b)(i) = b(a(i))`. All cycle arithmetic in the catalog and
//! reports follows this convention.

use crate::error::{Error, ParseError, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    /// images[i] = image of point i, 0-based internally.
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { images: (0..degree as u8).collect() }
    }

    /// Build from 1-based images: `images[i-1]` is the image of point i.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut raw = Vec::with_capacity(degree);
        for &img in images {
            if img < 1 || img > degree || seen[img - 1] {
                return Err(Error::NotAPermutation(format!("images {:?}", images)));
            }
            seen[img - 1] = true;
            raw.push((img - 1) as u8);
        }
        Ok(Perm { images: raw })
    }

    /// Build from disjoint cycles over 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from < 1 || from > degree {
                    return Err(Error::NotAPermutation(format!("point {} out of range", from)));
                }
                if seen[from - 1] {
                    return Err(Error::NotAPermutation(format!("point {} repeated", from)));
                }
                seen[from - 1] = true;
                images[from - 1] = to;
            }
        }
        Perm::from_images(&images)
    }

    /// Parse cycle notation like `(1 2 3)(4 5)`. Single-digit points may be
    /// written without separators, e.g. `(123)(45)`. `()` and `1` denote the
    /// identity. When `degree` is absent the largest point mentioned is used.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Perm> {
        let cycles = parse_cycles(text)?;
        let max_point = cycles.iter().flatten().copied().max().unwrap_or(1);
        let degree = match degree {
            Some(d) => {
                if max_point > d {
                    return Err(Error::NotAPermutation(format!(
                        "point {} exceeds degree {}",
                        max_point, d
                    )));
                }
                d
            }
            None => max_point,
        };
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// `self * other`: self acts first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = self.images.iter().map(|&i| other.images[i as usize]).collect();
        Ok(Perm { images })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u8 == img)
    }

    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self).unwrap();
            k += 1;
        }
        k
    }

    /// Nontrivial cycles, each starting at its least point, sorted by start.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 1..=self.degree() {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut point = self.apply(start);
            while point != start {
                seen[point - 1] = true;
                cycle.push(point);
                point = self.apply(point);
            }
            out.push(cycle);
        }
        out
    }

    /// Points moved by the permutation (1-based).
    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    /// Multiset of nontrivial cycle lengths, sorted.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable();
        lens
    }

    pub fn is_n_cycle(&self, n: usize) -> bool {
        self.cycle_type() == [n]
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let chars: Vec<char> = text.chars().collect();
    let len = chars.len().max(1);
    let mut pos = 0;
    let mut cycles = Vec::new();
    let err = |msg: &str, at: usize| -> Error { ParseError::new(msg, (at + 1).min(len)).into() };
    while pos < chars.len() {
        let c = chars[pos];
        if c.is_whitespace() {
            pos += 1;
        } else if c == '1'
            && cycles.is_empty()
            && chars[pos..].iter().all(|&c| c == '1' || c.is_whitespace())
        {
            // bare "1" is the identity
            return Ok(vec![]);
        } else if c == '(' {
            let open = pos;
            pos += 1;
            let body_start = pos;
            while pos < chars.len() && chars[pos] != ')' {
                let c = chars[pos];
                if !(c.is_ascii_digit() || c.is_whitespace() || c == ',') {
                    return Err(err("expected point or `)`", pos));
                }
                pos += 1;
            }
            if pos >= chars.len() {
                return Err(err("unclosed cycle", chars.len()));
            }
            let body: Vec<char> = chars[body_start..pos].to_vec();
            pos += 1; // consume ')'
            // a cycle with separators lists multi-digit points; a compact
            // cycle like (123) lists single-digit points
            let spaced = body.iter().any(|c| c.is_whitespace() || *c == ',');
            let mut cycle = Vec::new();
            if spaced {
                let s: String = body.iter().collect();
                for part in s.split(|c: char| c.is_whitespace() || c == ',') {
                    if part.is_empty() {
                        continue;
                    }
                    let n: usize =
                        part.parse().map_err(|_| err("bad point", body_start))?;
                    if n == 0 {
                        return Err(err("points are 1-based", body_start));
                    }
                    cycle.push(n);
                }
            } else {
                for (k, d) in body.iter().enumerate() {
                    let n = d.to_digit(10).unwrap() as usize;
                    if n == 0 {
                        return Err(err("points are 1-based", body_start + k));
                    }
                    cycle.push(n);
                }
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            } else if cycle.is_empty() && body.iter().any(|c| c.is_ascii_digit()) {
                return Err(err("bad cycle", open));
            }
        } else {
            return Err(err("expected `(`", pos));
        }
    }
    Ok(cycles)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        let compact = self.degree() <= 9;
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 && !compact {
                    write!(f, " ")?;
                }
                write!(f, "{}", p)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, deg: usize) -> Perm {
        Perm::parse(s, Some(deg)).unwrap()
    }

    #[test]
    fn compose_left_factor_acts_first() {
        // (123)(124) = (14)(23)
        let a = p("(1 2 3)", 4);
        let b = p("(1 2 4)", 4);
        assert_eq!(a.compose(&b).unwrap(), p("(1 4)(2 3)", 4));
        // (123) * id = (123)
        let id = Perm::identity(4);
        assert_eq!(a.compose(&id).unwrap(), a);
        // (123)(145) = (12345)
        let a = p("(123)", 5);
        let c = p("(145)", 5);
        assert_eq!(a.compose(&c).unwrap(), p("(12345)", 5));
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = p("(12)", 2);
        let b = p("(12)", 3);
        assert!(matches!(a.compose(&b), Err(Error::DegreeMismatch(2, 3))));
    }

    #[test]
    fn parse_compact_and_spaced() {
        assert_eq!(p("(123)(45)", 5), p("(1 2 3)(4 5)", 5));
        assert_eq!(Perm::parse("(1 2 3)", None).unwrap().degree(), 3);
        assert_eq!(Perm::parse("()", None).unwrap(), Perm::identity(1));
        assert_eq!(Perm::parse("1", None).unwrap(), Perm::identity(1));
        // a spaced cycle admits multi-digit points
        let q = Perm::parse("(10 11)", None).unwrap();
        assert_eq!(q.degree(), 11);
        assert_eq!(q.apply(10), 11);
        assert!(Perm::parse("(12", None).is_err());
        assert!(Perm::parse("(1 1)", None).is_err());
    }

    #[test]
    fn order_and_cycles() {
        assert_eq!(p("(12345)", 5).order(), 5);
        assert_eq!(p("(123)(45)", 5).order(), 6);
        assert_eq!(p("(123)(45)", 5).cycle_type(), vec![2, 3]);
        assert!(p("(12345)", 5).is_n_cycle(5));
        assert!(!p("(123)(45)", 5).is_n_cycle(5));
        assert_eq!(p("(12)(34)", 5).support(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn inverse_round_trip() {
        let a = p("(1 5 2 4)(3 6)", 6);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
        assert_eq!(format!("{}", a), "(1524)(36)");
    }
}
