//! Free-group words over variables x1, x2, ...

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Word {
    /// The empty word.
    One,
    /// Variable x_i, 1-based.
    Var(usize),
    Inverse(Box<Word>),
    Power(Box<Word>, i64),
    Product(Vec<Word>),
    /// Conjugate(w, by) = by^-1 * w * by.
    Conjugate(Box<Word>, Box<Word>),
    /// Commutator(a, b) = a^-1 b^-1 a b.
    Commutator(Box<Word>, Box<Word>),
}

pub fn var(i: usize) -> Word {
    Word::Var(i)
}

pub fn pow(w: Word, k: i64) -> Word {
    Word::Power(Box::new(w), k)
}

pub fn prod(ws: Vec<Word>) -> Word {
    match ws.len() {
        0 => Word::One,
        1 => ws.into_iter().next().unwrap(),
        _ => Word::Product(ws),
    }
}

pub fn inv(w: Word) -> Word {
    Word::Inverse(Box::new(w))
}

pub fn conj(w: Word, by: Word) -> Word {
    Word::Conjugate(Box::new(w), Box::new(by))
}

pub fn comm(a: Word, b: Word) -> Word {
    Word::Commutator(Box::new(a), Box::new(b))
}

impl Word {
    /// Largest variable index appearing in the word, 0 if none.
    pub fn max_var(&self) -> usize {
        match self {
            Word::One => 0,
            Word::Var(i) => *i,
            Word::Inverse(w) | Word::Power(w, _) => w.max_var(),
            Word::Product(ws) => ws.iter().map(|w| w.max_var()).max().unwrap_or(0),
            Word::Conjugate(a, b) | Word::Commutator(a, b) => a.max_var().max(b.max_var()),
        }
    }

    pub fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            Word::One => {}
            Word::Var(i) => {
                if !out.contains(i) {
                    out.push(*i);
                }
            }
            Word::Inverse(w) | Word::Power(w, _) => w.collect_vars(out),
            Word::Product(ws) => ws.iter().for_each(|w| w.collect_vars(out)),
            Word::Conjugate(a, b) | Word::Commutator(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn vars(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort_unstable();
        out
    }

    /// Expand to a flat sequence of signed letters. Conjugates become
    /// b^-1 a b, commutators a^-1 b^-1 a b, powers repeat (negative powers
    /// invert). No free reduction is performed.
    pub fn letters(&self) -> Vec<(usize, i8)> {
        let mut out = Vec::new();
        self.push_letters(&mut out, false);
        out
    }

    fn push_letters(&self, out: &mut Vec<(usize, i8)>, inverted: bool) {
        match self {
            Word::One => {}
            Word::Var(i) => out.push((*i, if inverted { -1 } else { 1 })),
            Word::Inverse(w) => w.push_letters(out, !inverted),
            Word::Power(w, k) => {
                let (reps, flip) = if *k < 0 { ((-k) as usize, !inverted) } else { (*k as usize, inverted) };
                for _ in 0..reps {
                    w.push_letters(out, flip);
                }
            }
            Word::Product(ws) => {
                if inverted {
                    for w in ws.iter().rev() {
                        w.push_letters(out, true);
                    }
                } else {
                    for w in ws {
                        w.push_letters(out, false);
                    }
                }
            }
            Word::Conjugate(a, b) => {
                // b^-1 a b; inverted conjugate is b^-1 a^-1 b
                b.push_letters(out, true);
                a.push_letters(out, inverted);
                b.push_letters(out, false);
            }
            Word::Commutator(a, b) => {
                if inverted {
                    // [a,b]^-1 = b^-1 a^-1 b a
                    b.push_letters(out, true);
                    a.push_letters(out, true);
                    b.push_letters(out, false);
                    a.push_letters(out, false);
                } else {
                    a.push_letters(out, true);
                    b.push_letters(out, true);
                    a.push_letters(out, false);
                    b.push_letters(out, false);
                }
            }
        }
    }

    /// Evaluate at an assignment: `assignment[i-1]` is the element for x_i.
    pub fn eval(&self, group: &FiniteGroup, assignment: &[usize]) -> Result<usize> {
        match self {
            Word::One => Ok(0),
            Word::Var(i) => assignment
                .get(*i - 1)
                .copied()
                .ok_or(Error::UnassignedVariable(*i)),
            Word::Inverse(w) => Ok(group.inv(w.eval(group, assignment)?)),
            Word::Power(w, k) => Ok(group.pow(w.eval(group, assignment)?, *k)),
            Word::Product(ws) => {
                let mut acc = 0;
                for w in ws {
                    acc = group.mul(acc, w.eval(group, assignment)?);
                }
                Ok(acc)
            }
            Word::Conjugate(a, b) => {
                let g = a.eval(group, assignment)?;
                let h = b.eval(group, assignment)?;
                Ok(group.conjugate(g, h))
            }
            Word::Commutator(a, b) => {
                let g = a.eval(group, assignment)?;
                let h = b.eval(group, assignment)?;
                Ok(group.commutator(g, h))
            }
        }
    }

    fn is_atom(&self) -> bool {
        matches!(self, Word::Var(_) | Word::One | Word::Commutator(_, _))
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_atom() {
            write!(f, "{}", self)
        } else {
            write!(f, "({})", self)
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::One => write!(f, "1"),
            Word::Var(i) => write!(f, "x{}", i),
            Word::Inverse(w) => {
                write!(f, "~")?;
                w.fmt_atom(f)
            }
            Word::Power(w, k) => {
                w.fmt_atom(f)?;
                if *k < 0 {
                    write!(f, "^({})", k)
                } else {
                    write!(f, "^{}", k)
                }
            }
            Word::Product(ws) => {
                for (i, w) in ws.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    if matches!(w, Word::Product(_)) {
                        write!(f, "({})", w)?;
                    } else {
                        write!(f, "{}", w)?;
                    }
                }
                Ok(())
            }
            Word::Conjugate(a, b) => {
                a.fmt_atom(f)?;
                write!(f, "^")?;
                b.fmt_atom(f)
            }
            Word::Commutator(a, b) => write!(f, "[{},{}]", a, b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_expand_conventions() {
        // x1^x2 -> x2^-1 x1 x2
        let w = conj(var(1), var(2));
        assert_eq!(w.letters(), vec![(2, -1), (1, 1), (2, 1)]);
        // [x1,x2] -> x1^-1 x2^-1 x1 x2
        let w = comm(var(1), var(2));
        assert_eq!(w.letters(), vec![(1, -1), (2, -1), (1, 1), (2, 1)]);
        // x1^-2 -> x1^-1 x1^-1
        let w = pow(var(1), -2);
        assert_eq!(w.letters(), vec![(1, -1), (1, -1)]);
        // (x1*x2)^-1 -> x2^-1 x1^-1
        let w = inv(prod(vec![var(1), var(2)]));
        assert_eq!(w.letters(), vec![(2, -1), (1, -1)]);
    }

    #[test]
    fn display_round_shapes() {
        let w = pow(prod(vec![var(1), pow(var(2), 2)]), 15);
        assert_eq!(w.to_string(), "(x1*x2^2)^15");
        let w = conj(var(1), var(2));
        assert_eq!(w.to_string(), "x1^x2");
        let w = comm(var(1), var(2));
        assert_eq!(w.to_string(), "[x1,x2]");
    }
}
