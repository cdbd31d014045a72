//! Flag graphs of premaniplexes and maniplexes.
//!
//! A premaniplex of rank `n` is stored as `n` maps on the dense flag set
//! `0..m`; `adj(i, f)` is the flag `i`-adjacent to `f`. A fixed point of color
//! `i` is a semiedge. Faces and sections are connected components after
//! deleting colors, labeled by their smallest flag.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, UnionFind};
use crate::perm::Perm;

/// A finite sequence of colors, read as a walk: the first color is applied first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ColorWord(pub Vec<usize>);

impl ColorWord {
    pub fn new(colors: impl Into<Vec<usize>>) -> ColorWord {
        ColorWord(colors.into())
    }

    /// The alternating word `(i, j, i, j, ...)` of the given length.
    pub fn alternating(i: usize, j: usize, len: usize) -> ColorWord {
        ColorWord((0..len).map(|k| if k % 2 == 0 { i } else { j }).collect())
    }
}

/// An `i`-face: a component after deleting the edges of color `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceId {
    pub rank_index: usize,
    pub component_index: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Premaniplex {
    rank: usize,
    num_flags: usize,
    adj: Vec<Vec<u32>>,
}

impl fmt::Debug for Premaniplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Premaniplex(rank {}, {} flags)", self.rank, self.num_flags)
    }
}

/// Outcome of [`Premaniplex::validate`]. Semiedges are legal in a
/// premaniplex and are listed for information only.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// `(color, flag)` where `adj(color, adj(color, flag)) != flag`.
    pub involution_failures: Vec<(usize, usize)>,
    /// `(i, j, flag)` with `|i - j| > 1` where the `(i, j, i, j)` walk from `flag` is open.
    pub commutation_failures: Vec<(usize, usize, usize)>,
    /// `(color, flag)` fixed points.
    pub semiedges: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.involution_failures.is_empty() && self.commutation_failures.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if let Some(&(color, flag)) = self.involution_failures.first() {
            return Err(Error::NotInvolution { color, flag });
        }
        if let Some(&(i, j, flag)) = self.commutation_failures.first() {
            return Err(Error::NotCommuting { i, j, flag });
        }
        Ok(())
    }
}

/// Why a valid premaniplex fails to be a maniplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ManiplexDefect {
    Semiedge { color: usize, flag: usize },
    /// `flag` is joined to one neighbor by edges of both colors.
    ParallelEdges { i: usize, j: usize, flag: usize },
    Disconnected { components: usize },
}

impl ManiplexDefect {
    pub fn reason(&self) -> &'static str {
        match self {
            ManiplexDefect::Semiedge { .. } => "semiedge",
            ManiplexDefect::ParallelEdges { .. } => "parallel edges",
            ManiplexDefect::Disconnected { .. } => "disconnected",
        }
    }
}

impl fmt::Display for ManiplexDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ManiplexDefect::Semiedge { color, flag } => write!(f, "semiedge of color {color} at flag {flag}"),
            ManiplexDefect::ParallelEdges { i, j, flag } => {
                write!(f, "parallel edges of colors {i} and {j} at flag {flag}")
            }
            ManiplexDefect::Disconnected { components } => write!(f, "disconnected ({components} components)"),
        }
    }
}

impl Premaniplex {
    /// Builds a flag graph after checking only its shape: every color is a map
    /// of `0..m` into itself. The premaniplex axioms are not checked; use
    /// [`Premaniplex::new`] for that.
    pub fn from_raw(rank: usize, adjacency: Vec<Vec<usize>>) -> Result<Premaniplex> {
        if rank == 0 {
            return Err(Error::Structural("rank must be at least 1".into()));
        }
        if adjacency.len() != rank {
            return Err(Error::Structural(format!("expected {rank} colors, got {}", adjacency.len())));
        }
        let num_flags = adjacency[0].len();
        if num_flags == 0 {
            return Err(Error::Structural("no flags".into()));
        }
        let mut adj = Vec::with_capacity(rank);
        for (i, row) in adjacency.into_iter().enumerate() {
            if row.len() != num_flags {
                return Err(Error::Structural(format!(
                    "color {i} has {} images, expected {num_flags}",
                    row.len()
                )));
            }
            if let Some((f, &x)) = row.iter().enumerate().find(|(_, &x)| x >= num_flags) {
                return Err(Error::Structural(format!("color {i} sends flag {f} to {x}, out of range")));
            }
            adj.push(row.into_iter().map(|x| x as u32).collect());
        }
        Ok(Premaniplex { rank, num_flags, adj })
    }

    /// Builds and validates a premaniplex.
    pub fn new(rank: usize, adjacency: Vec<Vec<usize>>) -> Result<Premaniplex> {
        let p = Premaniplex::from_raw(rank, adjacency)?;
        p.validate().into_result()?;
        Ok(p)
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn num_flags(&self) -> usize {
        self.num_flags
    }

    #[inline]
    pub fn adj(&self, color: usize, flag: usize) -> usize {
        self.adj[color][flag] as usize
    }

    pub fn adjacency(&self, color: usize) -> &[u32] {
        &self.adj[color]
    }

    /// Color `i` as a permutation. Only meaningful on validated graphs.
    pub fn color_perm(&self, color: usize) -> Perm {
        Perm::from_images_unchecked(self.adj[color].clone())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for i in 0..self.rank {
            for f in 0..self.num_flags {
                let g = self.adj(i, f);
                if g == f {
                    report.semiedges.push((i, f));
                }
                if self.adj(i, g) != f {
                    report.involution_failures.push((i, f));
                }
            }
        }
        for i in 0..self.rank {
            for j in i + 2..self.rank {
                for f in 0..self.num_flags {
                    if self.apply_word(f, &ColorWord(vec![i, j, i, j])) != f {
                        report.commutation_failures.push((i, j, f));
                    }
                }
            }
        }
        report
    }

    /// Components of the subgraph using only the colors for which `keep` holds.
    pub fn components_by(&self, keep: impl Fn(usize) -> bool) -> Partition {
        let mut uf = UnionFind::new(self.num_flags);
        for i in (0..self.rank).filter(|&i| keep(i)) {
            for f in 0..self.num_flags {
                uf.union(f, self.adj(i, f));
            }
        }
        uf.into_partition()
    }

    pub fn is_connected(&self) -> bool {
        self.components_by(|_| true).num_blocks() == 1
    }

    /// The first reason this (valid) premaniplex is not a maniplex, if any.
    pub fn maniplex_defect(&self) -> Option<ManiplexDefect> {
        for i in 0..self.rank {
            if let Some(flag) = (0..self.num_flags).find(|&f| self.adj(i, f) == f) {
                return Some(ManiplexDefect::Semiedge { color: i, flag });
            }
        }
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if let Some(flag) = (0..self.num_flags).find(|&f| self.adj(i, f) == self.adj(j, f)) {
                    return Some(ManiplexDefect::ParallelEdges { i, j, flag });
                }
            }
        }
        let components = self.components_by(|_| true).num_blocks();
        if components > 1 {
            return Some(ManiplexDefect::Disconnected { components });
        }
        None
    }

    pub fn is_maniplex(&self) -> bool {
        self.maniplex_defect().is_none()
    }

    fn check_color(&self, color: usize) -> Result<()> {
        if color >= self.rank {
            Err(Error::ColorOutOfRange { color, rank: self.rank })
        } else {
            Ok(())
        }
    }

    /// The `i`-faces: components after deleting color `i`.
    pub fn faces(&self, i: usize) -> Result<Partition> {
        self.check_color(i)?;
        Ok(self.components_by(|c| c != i))
    }

    pub fn facets(&self) -> Partition {
        self.components_by(|c| c + 1 != self.rank)
    }

    pub fn vertices(&self) -> Partition {
        self.components_by(|c| c != 0)
    }

    pub fn face_of(&self, i: usize, flag: usize) -> Result<FaceId> {
        Ok(FaceId { rank_index: i, component_index: self.faces(i)?.block_of(flag) })
    }

    /// Components using only colors in `[k, l]`.
    pub fn section_components(&self, k: usize, l: usize) -> Result<Partition> {
        self.check_color(l)?;
        if k > l {
            return Err(Error::InvalidParameter(format!("section [{k}, {l}] is empty")));
        }
        Ok(self.components_by(|c| k <= c && c <= l))
    }

    pub fn vertex_figures(&self) -> Partition {
        self.components_by(|c| c >= 1)
    }

    /// Colors reversed: `i`-adjacency becomes `(n-1-i)`-adjacency.
    pub fn dual(&self) -> Premaniplex {
        Premaniplex {
            rank: self.rank,
            num_flags: self.num_flags,
            adj: self.adj.iter().rev().cloned().collect(),
        }
    }

    /// Endpoint of the walk from `flag` following `word` left to right.
    pub fn apply_word(&self, flag: usize, word: &ColorWord) -> usize {
        word.0.iter().fold(flag, |f, &c| self.adj(c, f))
    }

    /// The rank-`n+1` premaniplex with `extra` as its new top color.
    pub fn with_top_color(&self, extra: &Perm) -> Premaniplex {
        assert_eq!(extra.len(), self.num_flags);
        let mut adj = self.adj.clone();
        adj.push(extra.as_slice().to_vec());
        Premaniplex { rank: self.rank + 1, num_flags: self.num_flags, adj }
    }

    /// The subgraph on `flags` using colors `lo..hi`, recolored from 0.
    /// `flags` must be closed under those colors; flag `k` of the result is
    /// `flags[k]`.
    pub fn induced(&self, flags: &[usize], lo: usize, hi: usize) -> Premaniplex {
        let mut local = vec![u32::MAX; self.num_flags];
        for (k, &f) in flags.iter().enumerate() {
            local[f] = k as u32;
        }
        let adj = (lo..hi)
            .map(|c| {
                flags
                    .iter()
                    .map(|&f| {
                        let g = local[self.adj(c, f)];
                        assert!(g != u32::MAX, "flag set not closed under color {c}");
                        g
                    })
                    .collect()
            })
            .collect();
        Premaniplex { rank: hi - lo, num_flags: flags.len(), adj }
    }

    /// Disjoint union; the flags of `other` are shifted by `self.num_flags()`.
    pub fn disjoint_union(&self, other: &Premaniplex) -> Result<Premaniplex> {
        if self.rank != other.rank {
            return Err(Error::InvalidParameter("ranks differ".into()));
        }
        let shift = self.num_flags as u32;
        let adj = self
            .adj
            .iter()
            .zip(&other.adj)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&x| x + shift)).collect())
            .collect();
        Ok(Premaniplex { rank: self.rank, num_flags: self.num_flags + other.num_flags, adj })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cube, polygon};

    fn square() -> Premaniplex {
        polygon(4).unwrap()
    }

    #[test]
    fn square_is_a_maniplex() {
        let sq = square();
        assert_eq!(sq.num_flags(), 8);
        assert!(sq.validate().is_ok());
        assert!(sq.is_maniplex());
    }

    #[test]
    fn commutation_violation_is_witnessed() {
        // Rank 3 on 4 flags: colors 0 and 2 generate a non-commuting pair.
        let p = Premaniplex::from_raw(3, vec![vec![1, 0, 3, 2], vec![0, 1, 2, 3], vec![0, 2, 1, 3]]).unwrap();
        let report = p.validate();
        assert!(report.involution_failures.is_empty());
        assert!(!report.commutation_failures.is_empty());
        let (i, j, f) = report.commutation_failures[0];
        assert_eq!((i, j), (0, 2));
        assert_ne!(p.apply_word(f, &ColorWord::new([0, 2, 0, 2])), f);
        assert!(matches!(report.into_result(), Err(Error::NotCommuting { .. })));
    }

    #[test]
    fn fixed_point_is_a_semiedge_not_a_failure() {
        // Rank 2 with a semiedge of color 0 at flag 3.
        let p = Premaniplex::from_raw(2, vec![vec![1, 0, 2, 3], vec![3, 2, 1, 0]]).unwrap();
        let report = p.validate();
        assert!(report.is_ok());
        assert!(report.semiedges.contains(&(0, 3)));
        assert_eq!(p.maniplex_defect().map(|d| d.reason()), Some("semiedge"));
    }

    #[test]
    fn out_of_range_is_structural() {
        let err = Premaniplex::from_raw(1, vec![vec![1, 2]]).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
        let err = Premaniplex::new(1, vec![vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotInvolution { .. }));
    }

    #[test]
    fn disconnected_union() {
        let two = square().disjoint_union(&square()).unwrap();
        assert!(two.validate().is_ok());
        assert_eq!(two.maniplex_defect(), Some(ManiplexDefect::Disconnected { components: 2 }));
    }

    #[test]
    fn faces_and_sections() {
        let sq = square();
        assert_eq!(sq.faces(0).unwrap().num_blocks(), 4);
        assert!(sq.faces(2).is_err());
        assert_eq!(sq.section_components(0, 1).unwrap().num_blocks(), 1);
        assert!(sq.section_components(1, 0).is_err());

        let c = cube(3).unwrap();
        assert_eq!(c.faces(2).unwrap().num_blocks(), 6);
        assert_eq!(c.section_components(1, 2).unwrap().num_blocks(), 8);
        for i in 0..3 {
            let single = c.section_components(i, i).unwrap();
            assert!(single.blocks().iter().all(|b| b.len() <= 2));
        }
    }

    #[test]
    fn duality() {
        let c = cube(3).unwrap();
        assert_eq!(c.dual().facets().num_blocks(), 8);
        assert_eq!(c.dual().dual(), c);
        assert_eq!(c.facets(), c.dual().vertices());
    }

    #[test]
    fn words() {
        let sq = square();
        assert_eq!(sq.apply_word(0, &ColorWord::alternating(0, 1, 8)), 0);
        assert_eq!(sq.apply_word(5, &ColorWord::new([1, 1])), 5);
        let c = cube(3).unwrap();
        for f in 0..c.num_flags() {
            assert_eq!(c.apply_word(f, &ColorWord::new([0, 2, 0, 2])), f);
        }
    }
}
