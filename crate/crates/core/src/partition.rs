//! Canonically labeled partitions of `0..n` and a small union-find.

use serde::{Deserialize, Serialize};

/// A partition of `0..n` whose blocks are numbered in order of their
/// smallest element. Two partitions are equal iff they have the same blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    label: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonicalizes an arbitrary labeling: elements sharing a label share a block.
    pub fn from_labels<L: Eq + std::hash::Hash + Clone>(labels: &[L]) -> Partition {
        let mut ids = std::collections::HashMap::new();
        let mut label = Vec::with_capacity(labels.len());
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (x, l) in labels.iter().enumerate() {
            let next = ids.len();
            let id = *ids.entry(l.clone()).or_insert(next);
            if id == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[id].push(x);
            label.push(id);
        }
        Partition { label, blocks }
    }

    pub fn discrete(n: usize) -> Partition {
        Partition { label: (0..n).collect(), blocks: (0..n).map(|x| vec![x]).collect() }
    }

    pub fn trivial(n: usize) -> Partition {
        let blocks = if n == 0 { vec![] } else { vec![(0..n).collect()] };
        Partition { label: vec![0; n], blocks }
    }

    /// Number of elements partitioned.
    pub fn len(&self) -> usize {
        self.label.len()
    }

    pub fn is_empty(&self) -> bool {
        self.label.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    #[inline]
    pub fn block_of(&self, x: usize) -> usize {
        self.label[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.label
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Smallest element of block `b`, its canonical name.
    pub fn representative(&self, b: usize) -> usize {
        self.blocks[b][0]
    }

    #[inline]
    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.label[x] == self.label[y]
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.len() == coarser.len()
            && self.blocks.iter().all(|b| b.iter().all(|&x| coarser.same_block(x, b[0])))
    }

    /// Common refinement: same block iff same block in both.
    pub fn meet(&self, other: &Partition) -> Partition {
        let pairs: Vec<(usize, usize)> = (0..self.len()).map(|x| (self.label[x], other.label[x])).collect();
        Partition::from_labels(&pairs)
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two elements were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_labels_follow_smallest_element() {
        let p = Partition::from_labels(&['b', 'a', 'b', 'c']);
        assert_eq!(p.labels(), &[0, 1, 0, 2]);
        assert_eq!(p.block(0), &[0, 2]);
        assert_eq!(p.representative(2), 3);
        assert_eq!(p, Partition::from_labels(&[7, 1, 7, 0]));
    }

    #[test]
    fn refinement_and_meet() {
        let coarse = Partition::from_labels(&[0, 0, 1, 1]);
        let fine = Partition::from_labels(&[0, 1, 2, 2]);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        let other = Partition::from_labels(&[0, 1, 0, 1]);
        assert_eq!(coarse.meet(&other), Partition::discrete(4));
    }

    #[test]
    fn union_find_components() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 3));
        assert!(uf.union(3, 4));
        assert!(!uf.union(0, 4));
        let p = uf.into_partition();
        assert_eq!(p.num_blocks(), 3);
        assert!(p.same_block(0, 4));
    }
}
