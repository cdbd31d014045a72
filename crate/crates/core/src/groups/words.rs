use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An involution on facet ids `0..k`; facet `F` is paired with `pair(F)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacetPairing {
    pair: Vec<usize>,
}

impl FacetPairing {
    pub fn new(pair: Vec<usize>) -> Result<FacetPairing> {
        for (f, &g) in pair.iter().enumerate() {
            if g >= pair.len() || pair[g] != f {
                return Err(Error::InvalidParameter(format!("facet pairing is not an involution at {f}")));
            }
        }
        Ok(FacetPairing { pair })
    }

    pub fn identity(k: usize) -> FacetPairing {
        FacetPairing { pair: (0..k).collect() }
    }

    pub fn num_facets(&self) -> usize {
        self.pair.len()
    }

    #[inline]
    pub fn pair(&self, f: usize) -> usize {
        self.pair[f]
    }
}

/// A cancellation-free word in the generators `α_F`, one per facet, subject
/// only to `α_F α_{pair(F)} = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    letters: Vec<u32>,
    pairing: Arc<FacetPairing>,
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| format!("a{l}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl ReducedWord {
    pub fn empty(pairing: Arc<FacetPairing>) -> ReducedWord {
        ReducedWord { letters: vec![], pairing }
    }

    pub fn generator(pairing: Arc<FacetPairing>, facet: usize) -> Result<ReducedWord> {
        if facet >= pairing.num_facets() {
            return Err(Error::InvalidParameter(format!("no facet {facet}")));
        }
        Ok(ReducedWord { letters: vec![facet as u32], pairing })
    }

    /// Reduces an arbitrary letter sequence.
    pub fn from_letters(pairing: Arc<FacetPairing>, letters: &[usize]) -> Result<ReducedWord> {
        let mut w = ReducedWord::empty(pairing);
        for &l in letters {
            if l >= w.pairing.num_facets() {
                return Err(Error::InvalidParameter(format!("no facet {l}")));
            }
            w.push(l);
        }
        Ok(w)
    }

    pub fn pairing(&self) -> &Arc<FacetPairing> {
        &self.pairing
    }

    pub fn letters(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.letters.iter().map(|&l| l as usize)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.letters.last().map(|&l| l as usize)
    }

    pub fn first(&self) -> Option<usize> {
        self.letters.first().map(|&l| l as usize)
    }

    /// Right-multiplies by one generator, cancelling if possible.
    pub(crate) fn push(&mut self, letter: usize) {
        match self.letters.last() {
            Some(&l) if self.pairing.pair(l as usize) == letter => {
                self.letters.pop();
            }
            _ => self.letters.push(letter as u32),
        }
    }

    /// Left-multiplies by one generator, cancelling if possible.
    pub fn left_mul_generator(&self, letter: usize) -> ReducedWord {
        let mut letters = self.letters.clone();
        match letters.first() {
            Some(&l) if self.pairing.pair(l as usize) == letter => {
                letters.remove(0);
            }
            _ => letters.insert(0, letter as u32),
        }
        ReducedWord { letters, pairing: self.pairing.clone() }
    }

    fn same_pairing(&self, other: &ReducedWord) -> bool {
        Arc::ptr_eq(&self.pairing, &other.pairing) || self.pairing == other.pairing
    }

    pub fn multiply(&self, other: &ReducedWord) -> Result<ReducedWord> {
        if !self.same_pairing(other) {
            return Err(Error::MismatchedPairing);
        }
        let mut w = self.clone();
        for l in other.letters() {
            w.push(l);
        }
        Ok(w)
    }

    pub fn invert(&self) -> ReducedWord {
        let letters = self.letters.iter().rev().map(|&l| self.pairing.pair(l as usize) as u32).collect();
        ReducedWord { letters, pairing: self.pairing.clone() }
    }

    /// Order in the free product; `None` means infinite.
    pub fn order(&self) -> Option<u64> {
        let pair = |l: u32| self.pairing.pair(l as usize) as u32;
        let mut core: &[u32] = &self.letters;
        while core.len() >= 2 && pair(core[0]) == core[core.len() - 1] {
            core = &core[1..core.len() - 1];
        }
        match core {
            [] => Some(1),
            [l] if pair(*l) == *l => Some(2),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairing() -> Arc<FacetPairing> {
        // 0 <-> 1 paired, 2 and 3 self-paired.
        Arc::new(FacetPairing::new(vec![1, 0, 2, 3]).unwrap())
    }

    #[test]
    fn defining_relation_cancels() {
        let p = pairing();
        let a = ReducedWord::generator(p.clone(), 0).unwrap();
        let b = ReducedWord::generator(p.clone(), 1).unwrap();
        assert!(a.multiply(&b).unwrap().is_empty());
        let c = ReducedWord::generator(p.clone(), 2).unwrap();
        assert!(c.multiply(&c).unwrap().is_empty());
        let e = ReducedWord::empty(p);
        assert_eq!(a.multiply(&e).unwrap(), a);
    }

    #[test]
    fn identity_pairing_makes_involutions() {
        let p = Arc::new(FacetPairing::identity(4));
        for f in 0..4 {
            let g = ReducedWord::generator(p.clone(), f).unwrap();
            assert!(g.multiply(&g).unwrap().is_empty());
            assert_eq!(g.order(), Some(2));
        }
    }

    #[test]
    fn inverse_and_order() {
        let p = pairing();
        let w = ReducedWord::from_letters(p.clone(), &[0, 2, 3, 1, 1]).unwrap();
        assert_eq!(w.len(), 5);
        assert!(w.multiply(&w.invert()).unwrap().is_empty());
        assert_eq!(w.order(), None);
        let conj = ReducedWord::from_letters(p.clone(), &[0, 2, 1]).unwrap();
        assert_eq!(conj.order(), Some(2));
        assert_eq!(ReducedWord::from_letters(p, &[0, 1]).unwrap().order(), Some(1));
    }

    #[test]
    fn mismatched_pairings_are_rejected() {
        let a = ReducedWord::generator(pairing(), 0).unwrap();
        let b = ReducedWord::generator(Arc::new(FacetPairing::identity(4)), 0).unwrap();
        assert_eq!(a.multiply(&b), Err(Error::MismatchedPairing));
    }
}
