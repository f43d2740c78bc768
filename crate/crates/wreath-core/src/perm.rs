//! Permutations of {1..degree} stored as 0-based image vectors.
//!
//! Composition is a right action: `a.compose(&b)` applies `a` first, then
//! `b`. External text (parser, `Display`) is 1-based cycle notation such as
//! `(1,2)(3,4,5)`; the identity prints as `()`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from a 0-based images vector, checking that it
    /// is a bijection of {0..degree-1}.
    pub fn new(img: Vec<usize>) -> Result<Self> {
        let n = img.len();
        let mut seen = alloc::vec![false; n];
        for &x in &img {
            if x >= n || seen[x] {
                return Err(Error::NotBijective);
            }
            seen[x] = true;
        }
        Ok(Perm { img })
    }

    pub fn identity(degree: usize) -> Self {
        Perm {
            img: (0..degree).collect(),
        }
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<usize> = (0..degree).collect();
        let mut seen = alloc::vec![false; degree];
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                if x >= degree {
                    return Err(Error::Parse(format!(
                        "point {} out of range 1..={}",
                        x + 1,
                        degree
                    )));
                }
                if seen[x] {
                    return Err(Error::Parse(format!("repeated point {}", x + 1)));
                }
                seen[x] = true;
                img[x] = cyc[(i + 1) % cyc.len()];
            }
        }
        Ok(Perm { img })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn min_moved_point(&self) -> Option<usize> {
        self.img
            .iter()
            .enumerate()
            .find(|&(i, &x)| i != x)
            .map(|(i, _)| i)
    }

    /// `self` applied first, then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Perm {
            img: self.img.iter().map(|&x| other.img[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut img = alloc::vec![0; self.degree()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x] = i;
        }
        Perm { img }
    }

    /// Conjugate in product order `by * self * by^-1`: apply `by`, then
    /// `self`, then `by^-1`. Conjugating `(1,2)` by `(1,3)` yields `(2,3)`.
    pub fn conjugate(&self, by: &Perm) -> Result<Perm> {
        by.compose(self)?.compose(&by.inverse())
    }

    /// Commutator `self * other * self^-1 * other^-1`.
    pub fn commutator(&self, other: &Perm) -> Result<Perm> {
        self.compose(other)?
            .compose(&self.inverse())?
            .compose(&other.inverse())
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point. 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.img[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.img[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(core::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    fn cycle_count(&self) -> usize {
        let cyc = self.cycles();
        let moved: usize = cyc.iter().map(|c| c.len()).sum();
        cyc.len() + (self.degree() - moved)
    }

    /// Degree minus number of cycles (fixed points count as cycles). Equals
    /// the minimal number of transpositions whose product is `self`.
    pub fn rank(&self) -> usize {
        self.degree() - self.cycle_count()
    }

    /// True when the permutation is even, i.e. the rank is even.
    pub fn is_even(&self) -> bool {
        self.rank().is_multiple_of(2)
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::from(1u8);
        for c in self.cycles() {
            acc = lcm_big(&acc, &BigUint::from(c.len()));
        }
        acc
    }

    /// Parses 1-based cycle notation, e.g. `(1,2)(3,4,5)` or `()`.
    /// Whitespace is ignored; repeated points and points outside
    /// `1..=degree` are rejected.
    pub fn parse(s: &str, degree: usize) -> Result<Perm> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
        if chars.peek().is_none() {
            return Err(Error::Parse(String::from("empty permutation literal")));
        }
        while let Some(c) = chars.next() {
            if c != '(' {
                return Err(Error::Parse(format!("expected '(' but found '{c}'")));
            }
            let mut cyc: Vec<usize> = Vec::new();
            loop {
                match chars.peek() {
                    Some(')') => {
                        chars.next();
                        break;
                    }
                    Some(d) if d.is_ascii_digit() => {
                        let mut num = 0usize;
                        while let Some(d) = chars.peek() {
                            if let Some(v) = d.to_digit(10) {
                                num = num
                                    .checked_mul(10)
                                    .and_then(|n| n.checked_add(v as usize))
                                    .ok_or_else(|| Error::Parse(String::from("point too large")))?;
                                chars.next();
                            } else {
                                break;
                            }
                        }
                        if num == 0 {
                            return Err(Error::Parse(String::from("points are 1-based")));
                        }
                        cyc.push(num - 1);
                        match chars.peek() {
                            Some(',') => {
                                chars.next();
                                if !matches!(chars.peek(), Some(d) if d.is_ascii_digit()) {
                                    return Err(Error::Parse(String::from(
                                        "expected a point after ','",
                                    )));
                                }
                            }
                            Some(')') => {}
                            other => {
                                return Err(Error::Parse(format!(
                                    "unexpected {:?} inside cycle",
                                    other
                                )))
                            }
                        }
                    }
                    other => {
                        return Err(Error::Parse(format!("unexpected {:?} inside cycle", other)))
                    }
                }
            }
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
        }
        Perm::from_cycles(degree, &cycles)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, x) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn lcm_big(a: &BigUint, b: &BigUint) -> BigUint {
    let zero = BigUint::from(0u8);
    if *a == zero || *b == zero {
        return zero;
    }
    let g = gcd_big(a.clone(), b.clone());
    a / &g * b
}

fn gcd_big(mut a: BigUint, mut b: BigUint) -> BigUint {
    let zero = BigUint::from(0u8);
    while b != zero {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(s: &str, d: usize) -> Perm {
        Perm::parse(s, d).unwrap()
    }

    #[test]
    fn compose_is_apply_left_then_right() {
        let a = p("(1,2)", 3);
        let b = p("(2,3)", 3);
        let ab = a.compose(&b).unwrap();
        // 1 -> 2 -> 3
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.to_string(), "(1,3,2)");
    }

    #[test]
    fn conjugation_relabels_points() {
        let a = p("(1,2)", 3);
        let by = p("(1,3)", 3);
        assert_eq!(a.conjugate(&by).unwrap().to_string(), "(2,3)");
    }

    #[test]
    fn commutator_of_transpositions_is_a_three_cycle() {
        let a = p("(1,2)", 3);
        let b = p("(1,3)", 3);
        let c = a.commutator(&b).unwrap();
        assert_eq!(c.cycle_type(), vec![3]);
        assert!(c.is_even());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Perm::identity(5).rank(), 0);
        assert_eq!(p("(1,2)", 5).rank(), 1);
        assert_eq!(p("(1,2)(3,4)", 5).rank(), 2);
        assert_eq!(p("(1,2,3)", 5).rank(), 2);
        assert_eq!(p("(1,2,3,4,5)", 5).rank(), 4);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Perm::parse("(1,2", 3).is_err());
        assert!(Perm::parse("(1,1)", 3).is_err());
        assert!(Perm::parse("(1,2)(2,3)", 3).is_err());
        assert!(Perm::parse("(0,1)", 3).is_err());
        assert!(Perm::parse("(1,4)", 3).is_err());
        assert!(Perm::parse("", 3).is_err());
        assert!(Perm::parse("(1,2,)", 3).is_err());
    }

    #[test]
    fn parse_accepts_whitespace_and_roundtrips() {
        let a = Perm::parse(" ( 1 , 2 ) ( 3 , 5 , 4 )", 6).unwrap();
        assert_eq!(a.to_string(), "(1,2)(3,5,4)");
        let back = Perm::parse(&a.to_string(), 6).unwrap();
        assert_eq!(a, back);
        assert_eq!(Perm::identity(4).to_string(), "()");
        assert_eq!(p("()", 4), Perm::identity(4));
    }

    #[test]
    fn inverse_and_order() {
        let a = p("(1,2,3)(4,5)", 5);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
        assert_eq!(a.order(), BigUint::from(6u8));
    }
}
