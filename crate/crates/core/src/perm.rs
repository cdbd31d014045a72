//! Permutations of `0..n`, acting on the right.
//!
//! `x.apply(p)` is written `xp` in the usual notation and `p.then(q)` is the
//! product `pq`, i.e. apply `p` first. Automorphisms and group elements all
//! use this convention.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm(Box<[u32]>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", &self.0)
    }
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u32).collect())
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::Structural(format!("image {x} of point {i} is out of range 0..{n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::Structural(format!("point {x} is hit twice")));
            }
        }
        Ok(Perm(images.into_iter().map(|x| x as u32).collect()))
    }

    /// Caller guarantees `images` is a bijection of `0..len`.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        debug_assert!(Perm::from_images(images.iter().map(|&x| x as usize).collect()).is_ok());
        Perm(images.into_boxed_slice())
    }

    /// Parses cycle notation such as `(0 1)(2 3 4)` on `degree` points.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidParameter(format!("expected `(` in `{text}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidParameter(format!("unclosed cycle in `{text}`")))?;
            let cycle: Vec<usize> = open[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidParameter(format!("bad point `{s}` in `{text}`")))
                })
                .collect::<Result<_>>()?;
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::InvalidParameter(format!("point {p} exceeds degree {degree}")));
                }
                images[p] = cycle[(k + 1) % cycle.len()];
            }
            rest = open[close + 1..].trim_start();
        }
        Perm::from_images(images)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images().collect()
    }

    /// The product `self * other`: apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv.into_boxed_slice())
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        other.inverse().then(self).then(other)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| self.0[x as usize] as usize == i)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(i, &x)| *i == x as usize).map(|(i, _)| i)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the permutation, the lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_applies_left_factor_first() {
        let p = Perm::from_cycles("(0 1)", 3).unwrap();
        let q = Perm::from_cycles("(1 2)", 3).unwrap();
        // 0 -p-> 1 -q-> 2
        assert_eq!(p.then(&q).apply(0), 2);
        assert_eq!(q.then(&p).apply(0), 1);
    }

    #[test]
    fn order_and_inverse() {
        let p = Perm::from_cycles("(0 1 2)(3 4)", 5).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.then(&p.inverse()).is_identity());
        assert!(!p.is_involution());
        assert_eq!(p.cycles().len(), 2);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![0, 5]).is_err());
        assert!(Perm::from_cycles("(0 7)", 3).is_err());
    }
}
