//! Permutations of `{0, …, n-1}` acting on the right.
//!
//! The product `a * b` applies `a` first and then `b`, so `i^(ab) = (i^a)^b`.
//! Conjugation follows the same convention: `x^g = g⁻¹ x g`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let degree = images.len();
        let mut seen = alloc::vec![false; degree];
        for &i in &images {
            let i = i as usize;
            if i >= degree || seen[i] {
                return Err(Error::InvalidPermutation { degree });
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from disjoint cycles given as 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Perm> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = alloc::vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let a = a as usize;
                if a >= degree || touched[a] {
                    return Err(Error::InvalidPermutation { degree });
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Perm { images }
    }

    /// `g⁻¹ · self · g`
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        let mut images = alloc::vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[j as usize];
        }
        Perm { images }
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Nontrivial cycles, each starting at its smallest point, in order of that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32);
                i = self.image(i);
            }
            out.push(cycle);
        }
        out
    }

    /// Parses 1-based disjoint cycle notation such as `(1 2)(3 4)`, or `()` for the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Perm> {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let bytes = text.as_bytes();
        let mut pos = 0;
        let err = |position: usize, message: &str| Error::Parse {
            position,
            message: String::from(message),
        };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(err(pos, "empty permutation"));
        }
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(err(pos, "expected '('"));
            }
            pos += 1;
            let mut cycle = Vec::new();
            loop {
                skip_ws(&mut pos);
                if pos >= bytes.len() {
                    return Err(err(pos, "unterminated cycle"));
                }
                match bytes[pos] {
                    b')' => {
                        pos += 1;
                        break;
                    }
                    b',' => pos += 1,
                    c if c.is_ascii_digit() => {
                        let start = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        let point: usize = text[start..pos]
                            .parse()
                            .map_err(|_| err(start, "bad point"))?;
                        if point == 0 || point > degree {
                            return Err(err(start, "point out of range"));
                        }
                        cycle.push(point as u32 - 1);
                    }
                    _ => return Err(err(pos, "unexpected character in cycle")),
                }
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
            skip_ws(&mut pos);
        }
        Perm::from_cycles(degree, &cycles).map_err(|_| err(0, "cycles are not disjoint"))
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        self.then(rhs)
    }
}

/// 1-based cycle notation; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse_cycles(4, "(1 2)(3 4)").unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2]);
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(Perm::parse_cycles(3, " ( ) ").unwrap(), Perm::identity(3));
        assert_eq!(Perm::parse_cycles(5, "(1,2,3)").unwrap().to_string(), "(1 2 3)");
        assert!(Perm::parse_cycles(3, "(1 4)").is_err());
        assert!(Perm::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Perm::parse_cycles(3, "1 2").is_err());
    }

    #[test]
    fn right_action_conventions() {
        let a = Perm::parse_cycles(3, "(1 2)").unwrap();
        let b = Perm::parse_cycles(3, "(2 3)").unwrap();
        // 1 -> 2 under a, then 2 -> 3 under b
        assert_eq!((&a * &b).image(0), 2);
        assert_eq!(a.conjugate_by(&b), &(&b.inverse() * &a) * &b);
        assert_eq!(a.conjugate_by(&b).to_string(), "(1 3)");
    }

    #[test]
    fn order_and_inverse() {
        let p = Perm::parse_cycles(5, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p.order(), 6);
        assert!((&p * &p.inverse()).is_identity());
        assert_eq!(Perm::from_images(vec![0, 0]), Err(Error::InvalidPermutation { degree: 2 }));
    }
}
