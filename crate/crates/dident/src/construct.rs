//! Named group constructions and the construction-expression parser.
//!
//! Expression grammar:
//!   cyclic(n), dihedral(2m), quaternion8, dicyclic(n), elementary_abelian(p,k),
//!   symmetric(n), alternating(n), sl2(p), direct_product(A, B),
//!   semidirect(A, B, action)
//! where the semidirect action lists generator images, e.g.
//!   semidirect(cyclic(3), cyclic(4), b: a -> a^-1)
//!   semidirect(elementary_abelian(3,2), cyclic(2), a1 -> a1^-1; a2 -> a2^-1)
//! A's generators are named a1, a2, ... and B's b1, b2, ... ("a" and "b" are
//! aliases for a1 and b1).

use crate::error::{Error, ParseError, Result};
use crate::group::{FiniteGroup, DEFAULT_SIZE_BOUND};
use crate::perm::Perm;

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{}", i),
        })
        .collect();
    FiniteGroup::from_table(&format!("Z{}", n), table, Some(labels)).unwrap()
}

/// Dihedral group of the given (even) order 2m.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::Invalid(format!("dihedral takes an even order, got {}", order)));
    }
    let m = order / 2;
    // element (i, e) with id i + e*m represents a^i b^e, a^b = a^-1
    let id = |i: usize, e: usize| i + e * m;
    let mut table = vec![vec![0usize; order]; order];
    for i in 0..m {
        for e in 0..2 {
            for k in 0..m {
                for l in 0..2 {
                    let (ri, re) = if e == 0 {
                        ((i + k) % m, l)
                    } else {
                        ((i + m - k % m) % m, 1 - l)
                    };
                    table[id(i, e)][id(k, l)] = id(ri, re);
                }
            }
        }
    }
    let mut labels = vec![String::new(); order];
    for e in 0..2 {
        for i in 0..m {
            labels[id(i, e)] = match (i, e) {
                (0, 0) => "1".to_string(),
                (1, 0) => "a".to_string(),
                (_, 0) => format!("a^{}", i),
                (0, 1) => "b".to_string(),
                (1, 1) => "a*b".to_string(),
                _ => format!("a^{}*b", i),
            };
        }
    }
    let mut g = FiniteGroup::from_table(&format!("D{}", order), table, Some(labels))?;
    if m == 1 {
        g.set_generators(vec![1])?;
    } else {
        g.set_generators(vec![1, m])?;
    }
    Ok(g)
}

/// Dicyclic group of order 4n; dicyclic(2) is the quaternion group.
pub fn dicyclic(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::Invalid("dicyclic needs n >= 2".into()));
    }
    let m = 2 * n; // order of a
    let order = 4 * n;
    let id = |i: usize, e: usize| i + e * m;
    let mut table = vec![vec![0usize; order]; order];
    for i in 0..m {
        for e in 0..2 {
            for k in 0..m {
                for l in 0..2 {
                    let (ri, re) = if e == 0 {
                        ((i + k) % m, l)
                    } else if l == 0 {
                        ((i + m - k) % m, 1)
                    } else {
                        ((i + m - k + n) % m, 0)
                    };
                    table[id(i, e)][id(k, l)] = id(ri, re);
                }
            }
        }
    }
    let mut labels = vec![String::new(); order];
    for i in 0..m {
        labels[id(i, 0)] = match i {
            0 => "1".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{}", i),
        };
        labels[id(i, 1)] = match i {
            0 => "b".to_string(),
            1 => "a*b".to_string(),
            _ => format!("a^{}*b", i),
        };
    }
    let mut g = FiniteGroup::from_table(&format!("Dic{}", n), table, Some(labels))?;
    g.set_generators(vec![1, m])?;
    Ok(g)
}

/// The quaternion group with the classical {±1, ±i, ±j, ±k} labels.
pub fn quaternion8() -> FiniteGroup {
    let g = dicyclic(2).unwrap();
    let labels = ["1", "i", "-1", "-i", "j", "k", "-j", "-k"];
    let mut q = FiniteGroup::from_table(
        "Q8",
        (0..8).map(|i| (0..8).map(|j| g.mul(i, j)).collect()).collect(),
        Some(labels.iter().map(|s| s.to_string()).collect()),
    )
    .unwrap();
    q.set_generators(vec![1, 4]).unwrap();
    q
}

/// Elementary abelian group of order p^k with basis generators e1..ek.
pub fn elementary_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p as u64));
    }
    let order = p.checked_pow(k as u32).filter(|&n| n <= u16::MAX as usize).ok_or(
        Error::SizeBound { bound: u16::MAX as usize },
    )?;
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = Vec::with_capacity(k);
        for _ in 0..k {
            d.push(x % p);
            x /= p;
        }
        d
    };
    let mut table = vec![vec![0usize; order]; order];
    for i in 0..order {
        for j in 0..order {
            let (di, dj) = (digits(i), digits(j));
            let mut sum = 0;
            let mut base = 1;
            for t in 0..k {
                sum += ((di[t] + dj[t]) % p) * base;
                base *= p;
            }
            table[i][j] = sum;
        }
    }
    let labels = (0..order)
        .map(|i| {
            let d = digits(i);
            let parts: Vec<String> = d
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(t, &c)| if c == 1 { format!("e{}", t + 1) } else { format!("e{}^{}", t + 1, c) })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        })
        .collect();
    FiniteGroup::from_table(&format!("Z{}^{}", p, k), table, Some(labels))
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n <= 1 {
        return cyclic(1);
    }
    let mut gens = vec![Perm::from_cycles(n, &[vec![1, 2]]).unwrap()];
    if n >= 3 {
        gens.push(Perm::from_cycles(n, &[(1..=n).collect()]).unwrap());
    }
    let bound = factorial(n).max(DEFAULT_SIZE_BOUND);
    FiniteGroup::from_perm_generators(&format!("S{}", n), &gens, bound).unwrap()
}

pub fn alternating(n: usize) -> FiniteGroup {
    if n <= 2 {
        return cyclic(1);
    }
    let mut gens = vec![Perm::from_cycles(n, &[vec![1, 2, 3]]).unwrap()];
    if n >= 4 {
        if n % 2 == 1 {
            gens.push(Perm::from_cycles(n, &[(1..=n).collect()]).unwrap());
        } else {
            gens.push(Perm::from_cycles(n, &[(2..=n).collect()]).unwrap());
        }
    }
    let bound = (factorial(n) / 2).max(DEFAULT_SIZE_BOUND);
    FiniteGroup::from_perm_generators(&format!("A{}", n), &gens, bound).unwrap()
}

/// SL(2, p) built by closure of the two standard unipotent/rotation
/// generators over the field of p elements.
pub fn sl2(p: usize) -> Result<FiniteGroup> {
    if !is_prime(p) || p > 13 {
        return Err(Error::Invalid(format!("sl2 expects a small prime, got {}", p)));
    }
    type Mat = [u8; 4];
    let p8 = p as u8;
    let mul = move |x: &Mat, y: &Mat| -> Mat {
        let m = |a: u8, b: u8| ((a as u16 * b as u16) % p8 as u16) as u8;
        let s = |a: u8, b: u8| ((a as u16 + b as u16) % p8 as u16) as u8;
        [
            s(m(x[0], y[0]), m(x[1], y[2])),
            s(m(x[0], y[1]), m(x[1], y[3])),
            s(m(x[2], y[0]), m(x[3], y[2])),
            s(m(x[2], y[1]), m(x[3], y[3])),
        ]
    };
    let s: Mat = [1, 1, 0, 1];
    let t: Mat = [0, 1, p8 - 1, 0];
    let identity: Mat = [1, 0, 0, 1];
    FiniteGroup::from_closure(
        &format!("SL(2,{})", p),
        vec![(s, "s".to_string()), (t, "t".to_string())],
        identity,
        mul,
        4096,
    )
}

/// Semidirect product A ⋊ B. The action gives, for each generator of B (in
/// `B.generators()` order), the images of A's generators under conjugation:
/// `action[k][i]` is the id in A of `a_i^{b_k}`. The action is validated to
/// extend to automorphisms of A and to respect B's relations.
pub fn semidirect(
    a: &FiniteGroup,
    b: &FiniteGroup,
    action: &[Vec<usize>],
    name: &str,
) -> Result<FiniteGroup> {
    let a_gens = a.generators().to_vec();
    let b_gens = b.generators().to_vec();
    if action.len() != b_gens.len() {
        return Err(Error::BadAction(format!(
            "need images for {} B-generators, got {}",
            b_gens.len(),
            action.len()
        )));
    }
    // extend each generator action to an automorphism of A
    let mut gen_autos: Vec<Vec<usize>> = Vec::with_capacity(action.len());
    for images in action {
        if images.len() != a_gens.len() {
            return Err(Error::BadAction(format!(
                "need images for {} A-generators, got {}",
                a_gens.len(),
                images.len()
            )));
        }
        gen_autos.push(extend_automorphism(a, &a_gens, images)?);
    }
    // extend to all of B, checking consistency with B's relations
    let mut autos: Vec<Option<Vec<usize>>> = vec![None; b.order()];
    autos[0] = Some((0..a.order()).collect());
    let mut queue = vec![0usize];
    let mut at = 0;
    while at < queue.len() {
        let cur = queue[at];
        for (k, &gen) in b_gens.iter().enumerate() {
            let next = b.mul(cur, gen);
            // a^(cur*gen) = (a^cur)^gen
            let composed: Vec<usize> = autos[cur]
                .as_ref()
                .unwrap()
                .iter()
                .map(|&x| gen_autos[k][x])
                .collect();
            match &autos[next] {
                Some(existing) => {
                    if *existing != composed {
                        return Err(Error::BadAction(
                            "action is inconsistent with the relations of B".into(),
                        ));
                    }
                }
                None => {
                    autos[next] = Some(composed);
                    queue.push(next);
                }
            }
        }
        at += 1;
    }
    if queue.len() != b.order() {
        return Err(Error::BadAction("generators do not generate B".into()));
    }
    let autos: Vec<Vec<usize>> = autos.into_iter().map(|o| o.unwrap()).collect();

    // product: (a1, b1)(a2, b2) = (a1 * a2^(b1^-1), b1 b2)
    let na = a.order();
    let nb = b.order();
    let order = na * nb;
    if order > u16::MAX as usize {
        return Err(Error::SizeBound { bound: u16::MAX as usize });
    }
    let id = |x: usize, y: usize| x * nb + y;
    let mut table = vec![vec![0usize; order]; order];
    for x1 in 0..na {
        for y1 in 0..nb {
            let twist = &autos[b.inv(y1)];
            for x2 in 0..na {
                for y2 in 0..nb {
                    table[id(x1, y1)][id(x2, y2)] = id(a.mul(x1, twist[x2]), b.mul(y1, y2));
                }
            }
        }
    }
    let mut group = FiniteGroup::from_table(name, table, None)?;
    // presentation-style labels over a1.. / b1.. generators
    let mut gen_ids: Vec<usize> = a_gens.iter().map(|&g| id(g, 0)).collect();
    gen_ids.extend(b_gens.iter().map(|&g| id(0, g)));
    let mut names: Vec<String> = if a_gens.len() == 1 {
        vec!["a".to_string()]
    } else {
        (1..=a_gens.len()).map(|i| format!("a{}", i)).collect()
    };
    names.extend(if b_gens.len() == 1 {
        vec!["b".to_string()]
    } else {
        (1..=b_gens.len()).map(|i| format!("b{}", i)).collect()
    });
    group.relabel_by_generator_words(&gen_ids, &names)?;
    Ok(group)
}

/// Extend generator images to an automorphism of `a`, or fail.
fn extend_automorphism(a: &FiniteGroup, gens: &[usize], images: &[usize]) -> Result<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    map[0] = 0;
    let mut used = vec![false; a.order()];
    used[0] = true;
    let mut queue = vec![0usize];
    let mut at = 0;
    while at < queue.len() {
        let cur = queue[at];
        for (k, &gen) in gens.iter().enumerate() {
            let next = a.mul(cur, gen);
            let img = a.mul(map[cur], images[k]);
            if map[next] == usize::MAX {
                if used[img] {
                    return Err(Error::BadAction("generator images are not injective".into()));
                }
                used[img] = true;
                map[next] = img;
                queue.push(next);
            } else if map[next] != img {
                return Err(Error::BadAction("generator images are inconsistent".into()));
            }
        }
        at += 1;
    }
    if queue.len() != a.order() {
        return Err(Error::BadAction("generators do not generate A".into()));
    }
    for x in 0..a.order() {
        for y in 0..a.order() {
            if map[a.mul(x, y)] != a.mul(map[x], map[y]) {
                return Err(Error::BadAction("images do not define a homomorphism".into()));
            }
        }
    }
    Ok(map)
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

// ---------------------------------------------------------------------------
// construction-expression parser

pub fn parse_construction(text: &str) -> Result<FiniteGroup> {
    parse_construction_bounded(text, DEFAULT_SIZE_BOUND)
}

pub fn parse_construction_bounded(text: &str, bound: usize) -> Result<FiniteGroup> {
    let mut p = ExprParser { chars: text.chars().collect(), pos: 0, bound };
    let g = p.parse_expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("trailing input").into());
    }
    if g.order() > bound {
        return Err(Error::SizeBound { bound });
    }
    Ok(g)
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
    bound: usize,
}

impl ExprParser {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::new(msg, (self.pos + 1).min(self.chars.len().max(1)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c)).into())
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected identifier").into());
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer").into());
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("integer out of range").into())
    }

    fn parse_expr(&mut self) -> Result<FiniteGroup> {
        let name = self.ident()?;
        match name.as_str() {
            "quaternion8" => Ok(quaternion8()),
            "cyclic" => {
                let n = self.one_int()?;
                if n == 0 || n > self.bound {
                    return Err(Error::SizeBound { bound: self.bound });
                }
                Ok(cyclic(n))
            }
            "dihedral" => {
                let n = self.one_int()?;
                if n > self.bound {
                    return Err(Error::SizeBound { bound: self.bound });
                }
                dihedral(n)
            }
            "dicyclic" => {
                let n = self.one_int()?;
                if 4 * n > self.bound {
                    return Err(Error::SizeBound { bound: self.bound });
                }
                dicyclic(n)
            }
            "symmetric" => {
                let n = self.one_int()?;
                if n > 6 {
                    return Err(Error::SizeBound { bound: self.bound });
                }
                Ok(symmetric(n))
            }
            "alternating" => {
                let n = self.one_int()?;
                if n > 7 {
                    return Err(Error::SizeBound { bound: self.bound });
                }
                Ok(alternating(n))
            }
            "sl2" => {
                let p = self.one_int()?;
                sl2(p)
            }
            "elementary_abelian" => {
                self.expect('(')?;
                let p = self.integer()?;
                self.expect(',')?;
                let k = self.integer()?;
                self.expect(')')?;
                let g = elementary_abelian(p, k)?;
                if g.order() > self.bound {
                    return Err(Error::SizeBound { bound: self.bound });
                }
                Ok(g)
            }
            "direct_product" => {
                self.expect('(')?;
                let a = self.parse_expr()?;
                self.expect(',')?;
                let b = self.parse_expr()?;
                self.expect(')')?;
                if a.order().saturating_mul(b.order()) > self.bound {
                    return Err(Error::SizeBound { bound: self.bound });
                }
                a.direct_product(&b, &format!("{}x{}", a.name(), b.name()))
            }
            "semidirect" => {
                self.expect('(')?;
                let a = self.parse_expr()?;
                self.expect(',')?;
                let b = self.parse_expr()?;
                self.expect(',')?;
                let action = self.parse_action(&a, &b)?;
                self.expect(')')?;
                if a.order().saturating_mul(b.order()) > self.bound {
                    return Err(Error::SizeBound { bound: self.bound });
                }
                semidirect(&a, &b, &action, &format!("{}:{}", a.name(), b.name()))
            }
            other => Err(self.err(&format!("unknown construction `{}`", other)).into()),
        }
    }

    fn one_int(&mut self) -> Result<usize> {
        self.expect('(')?;
        let n = self.integer()?;
        self.expect(')')?;
        Ok(n)
    }

    /// Mappings `[bK:] aI -> word` separated by `;`. Unprefixed mappings
    /// belong to b1.
    fn parse_action(&mut self, a: &FiniteGroup, b: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
        let a_gens = a.generators().len();
        let b_gens = b.generators().len();
        let mut action: Vec<Vec<Option<usize>>> = vec![vec![None; a_gens]; b_gens];
        loop {
            let first = self.ident()?;
            let (b_index, a_index) = if self.peek() == Some(':') {
                self.pos += 1;
                let b_index = parse_gen_index(&first, 'b')
                    .ok_or_else(|| Error::from(self.err("expected b-generator before `:`")))?;
                let a_name = self.ident()?;
                let a_index = parse_gen_index(&a_name, 'a')
                    .ok_or_else(|| Error::from(self.err("expected a-generator")))?;
                (b_index, a_index)
            } else {
                let a_index = parse_gen_index(&first, 'a')
                    .ok_or_else(|| Error::from(self.err("expected a-generator")))?;
                (0, a_index)
            };
            self.skip_ws();
            if !(self.peek() == Some('-')) {
                return Err(self.err("expected `->`").into());
            }
            self.pos += 1;
            self.expect('>')?;
            let word = self.parse_gen_word(a)?;
            if b_index >= b_gens || a_index >= a_gens {
                return Err(Error::BadAction("generator index out of range".into()));
            }
            action[b_index][a_index] = Some(word);
            match self.peek() {
                Some(';') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut out = Vec::with_capacity(b_gens);
        for (bi, row) in action.into_iter().enumerate() {
            let mut images = Vec::with_capacity(a_gens);
            for (ai, img) in row.into_iter().enumerate() {
                images.push(img.ok_or_else(|| {
                    Error::BadAction(format!("missing image of a{} under b{}", ai + 1, bi + 1))
                })?);
            }
            out.push(images);
        }
        Ok(out)
    }

    /// A word over A's generators: `a1^-1*a2` etc. Returns the element id.
    fn parse_gen_word(&mut self, a: &FiniteGroup) -> Result<usize> {
        let mut acc = 0usize;
        loop {
            let name = self.ident()?;
            let index = parse_gen_index(&name, 'a')
                .ok_or_else(|| Error::from(self.err("expected a-generator")))?;
            let gen = *a
                .generators()
                .get(index)
                .ok_or_else(|| Error::BadAction(format!("A has no generator {}", name)))?;
            let mut exp: i64 = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                self.skip_ws();
                let mut sign = 1i64;
                if self.peek() == Some('-') {
                    sign = -1;
                    self.pos += 1;
                }
                exp = sign * self.integer()? as i64;
            }
            acc = a.mul(acc, a.pow(gen, exp));
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(acc)
    }
}

/// "a" -> 0, "a3" -> 2, "b2" -> 1 (for prefix 'b'), "1"-based suffixes.
fn parse_gen_index(name: &str, prefix: char) -> Option<usize> {
    let mut chars = name.chars();
    if chars.next()? != prefix {
        return None;
    }
    let rest: String = chars.collect();
    if rest.is_empty() {
        Some(0)
    } else {
        rest.parse::<usize>().ok()?.checked_sub(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    #[test]
    fn semidirect_examples() {
        // <a, b | a^3 = b^4 = 1, a^b = a^-1> has order 12
        let g = parse_construction("semidirect(cyclic(3), cyclic(4), b: a -> a^-1)").unwrap();
        assert_eq!(g.order(), 12);
        // <a, b | a^5 = b^4 = 1, a^b = a^2> has order 20
        let g = parse_construction("semidirect(cyclic(5), cyclic(4), a -> a^2)").unwrap();
        assert_eq!(g.order(), 20);
        let v4 = parse_construction("direct_product(cyclic(2), cyclic(2))").unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
    }

    #[test]
    fn semidirect_rejects_bad_actions() {
        // a -> a^2 is not an automorphism of Z4 (not injective on <a>)
        assert!(parse_construction("semidirect(cyclic(4), cyclic(2), a -> a^2)").is_err());
        // inversion has order 2, inconsistent with |b| = 3
        assert!(parse_construction("semidirect(cyclic(5), cyclic(3), a -> a^-1)").is_err());
    }

    #[test]
    fn dicyclic_is_quaternion_family() {
        let q8 = quaternion8();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.order_spectrum(), vec![(1, 1), (2, 1), (4, 6)]);
        let dic3 = dicyclic(3).unwrap();
        let zr = parse_construction("semidirect(cyclic(3), cyclic(4), b: a -> a^-1)").unwrap();
        assert!(is_isomorphic(&dic3, &zr).is_some());
        let q16 = dicyclic(4).unwrap();
        assert_eq!(q16.order(), 16);
        // generalized quaternion: unique involution
        assert_eq!(q16.order_spectrum().iter().find(|&&(o, _)| o == 2).unwrap().1, 1);
    }

    #[test]
    fn sl2_small() {
        assert_eq!(sl2(3).unwrap().order(), 24);
        let g = sl2(5).unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(g.order_spectrum().iter().find(|&&(o, _)| o == 2).unwrap().1, 1);
    }

    #[test]
    fn dihedral_identities() {
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.order(), 8);
        let a = d8.element_by_name("a").unwrap();
        let b = d8.element_by_name("b").unwrap();
        assert_eq!(d8.element_order(a), 4);
        assert_eq!(d8.element_order(b), 2);
        assert_eq!(d8.conjugate(a, b), d8.inv(a));
        assert!(dihedral(7).is_err());
    }

    #[test]
    fn parser_errors() {
        assert!(parse_construction("nonsense(3)").is_err());
        assert!(parse_construction("cyclic(3) junk").is_err());
        assert!(parse_construction("cyclic(99999)").is_err());
        assert!(parse_construction("symmetric(9)").is_err());
    }
}
