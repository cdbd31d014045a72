//! Color-preserving automorphisms, flag orbits, symmetry type graphs and
//! isomorphism testing.
//!
//! On a connected premaniplex an automorphism is determined by the image of
//! one flag, so every search here tries each candidate image of a base flag
//! and extends breadth-first.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maniplex::Premaniplex;
use crate::partition::{Partition, UnionFind};
use crate::perm::Perm;

/// Extends `a ↦ b` to a color-preserving map from `p` to `q`, if one exists.
/// Requires `p` connected; the result is injective only if it is returned.
pub fn extend_map(p: &Premaniplex, q: &Premaniplex, a: usize, b: usize) -> Option<Perm> {
    if p.rank() != q.rank() || p.num_flags() != q.num_flags() {
        return None;
    }
    let m = p.num_flags();
    let mut map = vec![u32::MAX; m];
    map[a] = b as u32;
    let mut queue = VecDeque::from([a]);
    let mut reached = 1;
    while let Some(f) = queue.pop_front() {
        let img = map[f] as usize;
        for c in 0..p.rank() {
            let g = p.adj(c, f);
            let h = q.adj(c, img) as u32;
            if map[g] == u32::MAX {
                map[g] = h;
                reached += 1;
                queue.push_back(g);
            } else if map[g] != h {
                return None;
            }
        }
    }
    if reached != m {
        return None;
    }
    let mut hit = vec![false; m];
    for &x in &map {
        if std::mem::replace(&mut hit[x as usize], true) {
            return None;
        }
    }
    Some(Perm::from_images_unchecked(map))
}

/// Checks that `perm` commutes with every color on every flag.
pub fn check_automorphism(p: &Premaniplex, perm: &Perm) -> Result<()> {
    for c in 0..p.rank() {
        for f in 0..p.num_flags() {
            if perm.apply(p.adj(c, f)) != p.adj(c, perm.apply(f)) {
                return Err(Error::NotAutomorphism { color: c, flag: f });
            }
        }
    }
    Ok(())
}

fn require_connected(p: &Premaniplex) -> Result<()> {
    if p.is_connected() {
        Ok(())
    } else {
        Err(Error::Precondition("premaniplex is not connected".into()))
    }
}

/// The automorphism group of a connected premaniplex, listed in order of the
/// image of flag 0. The identity comes first.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    perms: Vec<Perm>,
    /// `by_image[x]` is the automorphism sending flag 0 to `x`.
    by_image: Vec<Option<u32>>,
}

impl AutomorphismGroup {
    pub fn of(p: &Premaniplex) -> Result<AutomorphismGroup> {
        require_connected(p)?;
        let perms: Vec<Perm> = (0..p.num_flags())
            .into_par_iter()
            .filter_map(|g| extend_map(p, p, 0, g))
            .collect();
        let mut by_image = vec![None; p.num_flags()];
        for (k, t) in perms.iter().enumerate() {
            by_image[t.apply(0)] = Some(k as u32);
        }
        Ok(AutomorphismGroup { perms, by_image })
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn get(&self, k: usize) -> &Perm {
        &self.perms[k]
    }

    pub fn into_perms(self) -> Vec<Perm> {
        self.perms
    }

    /// Index of the automorphism sending flag 0 to `x`.
    pub fn sending_base_to(&self, x: usize) -> Option<usize> {
        self.by_image[x].map(|k| k as usize)
    }

    /// Index of the automorphism sending `from` to `to`.
    pub fn sending(&self, from: usize, to: usize) -> Option<usize> {
        match (self.sending_base_to(from), self.sending_base_to(to)) {
            // τ with 0τ = from and σ with 0σ = to: τ⁻¹σ sends `from` to `to`.
            (Some(t), Some(s)) => {
                let x = self.perms[t].inverse().then(&self.perms[s]).apply(0);
                self.sending_base_to(x)
            }
            (Some(_), None) | (None, Some(_)) => None,
            (None, None) => self.perms.iter().position(|p| p.apply(from) == to),
        }
    }

    /// Index of the product `ab` (apply `a`, then `b`).
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let x = self.perms[b].apply(self.perms[a].apply(0));
        self.by_image[x].expect("closed under composition") as usize
    }

    pub fn invert(&self, a: usize) -> usize {
        let x = self.perms[a].inverse().apply(0);
        self.by_image[x].expect("closed under inversion") as usize
    }

    /// Sorted indices of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut head = 0;
        while head < out.len() {
            let e = out[head];
            for &g in gens {
                let f = self.compose(e, g);
                if !seen[f] {
                    seen[f] = true;
                    out.push(f);
                }
            }
            head += 1;
        }
        out.sort_unstable();
        out
    }

    /// A [`crate::groups::GroupModel`] on the same elements; every element is
    /// declared a generator.
    pub fn to_group_model(&self) -> Result<crate::groups::GroupModel> {
        crate::groups::GroupModel::from_complete(self.perms.clone())
    }
}

pub fn automorphism_group(p: &Premaniplex) -> Result<Vec<Perm>> {
    Ok(AutomorphismGroup::of(p)?.into_perms())
}

/// Orbits of the group generated by `perms`.
pub fn orbits_of(num_flags: usize, perms: &[Perm]) -> Partition {
    let mut uf = UnionFind::new(num_flags);
    for t in perms {
        for f in 0..num_flags {
            uf.union(f, t.apply(f));
        }
    }
    uf.into_partition()
}

pub fn flag_orbits(p: &Premaniplex) -> Result<Partition> {
    Ok(orbits_of(p.num_flags(), AutomorphismGroup::of(p)?.perms()))
}

pub fn num_orbits(p: &Premaniplex) -> Result<usize> {
    Ok(flag_orbits(p)?.num_blocks())
}

pub fn is_regular(p: &Premaniplex) -> Result<bool> {
    Ok(num_orbits(p)? == 1)
}

/// A quotient of a premaniplex by a flag partition. Nodes are numbered in
/// order of their smallest flag, so two quotients of the same premaniplex are
/// equal exactly when they have the same orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryTypeGraph {
    pub graph: Premaniplex,
    pub orbits: Partition,
}

impl SymmetryTypeGraph {
    pub fn num_nodes(&self) -> usize {
        self.graph.num_flags()
    }

    /// Node containing `flag`.
    pub fn node_of(&self, flag: usize) -> usize {
        self.orbits.block_of(flag)
    }
}

/// Quotient by an arbitrary partition, checking that every color respects it.
pub fn quotient_by_partition(p: &Premaniplex, orbits: Partition) -> Result<SymmetryTypeGraph> {
    for c in 0..p.rank() {
        for block in orbits.blocks() {
            let a = block[0];
            let target = orbits.block_of(p.adj(c, a));
            if let Some(&b) = block.iter().find(|&&b| orbits.block_of(p.adj(c, b)) != target) {
                return Err(Error::IllDefinedQuotient { color: c, a, b });
            }
        }
    }
    let adjacency = (0..p.rank())
        .map(|c| {
            (0..orbits.num_blocks())
                .map(|b| orbits.block_of(p.adj(c, orbits.representative(b))))
                .collect()
        })
        .collect();
    let graph = Premaniplex::from_raw(p.rank(), adjacency)?;
    Ok(SymmetryTypeGraph { graph, orbits })
}

/// Quotient by the orbits of the group generated by `perms`. The
/// permutations need not be automorphisms; only well-definedness is checked.
pub fn quotient_by(p: &Premaniplex, perms: &[Perm]) -> Result<SymmetryTypeGraph> {
    quotient_by_partition(p, orbits_of(p.num_flags(), perms))
}

pub fn symmetry_type_graph(p: &Premaniplex) -> Result<SymmetryTypeGraph> {
    quotient_by(p, AutomorphismGroup::of(p)?.perms())
}

/// A color-preserving bijection from `p` to `q`, if the two are isomorphic.
/// Both must be connected.
pub fn is_isomorphic(p: &Premaniplex, q: &Premaniplex) -> Option<Perm> {
    if p.rank() != q.rank() || p.num_flags() != q.num_flags() {
        return None;
    }
    (0..q.num_flags()).into_par_iter().find_map_first(|b| extend_map(p, q, 0, b))
}

/// Facets grouped by isomorphism of their induced colored subgraphs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FacetClasses {
    /// Partition of facet indices (blocks of `Premaniplex::facets`).
    pub classes: Partition,
    /// For each facet, a map from the flags of its class representative
    /// (sorted) to its own flags, position by position.
    pub witnesses: Vec<Vec<usize>>,
}

/// Flags of one facet as a rank-`n-1` premaniplex; flag `k` of the result is
/// `flags[k]`.
pub fn facet_subgraph(p: &Premaniplex, flags: &[usize]) -> Premaniplex {
    p.induced(flags, 0, p.rank() - 1)
}

pub fn facet_isomorphism_classes(p: &Premaniplex) -> Result<FacetClasses> {
    if p.rank() < 2 {
        return Err(Error::Precondition("facet classes need rank at least 2".into()));
    }
    let facets = p.facets();
    let graphs: Vec<Premaniplex> = facets.blocks().iter().map(|b| facet_subgraph(p, b)).collect();
    let mut reps: Vec<usize> = vec![];
    let mut label = vec![0; facets.num_blocks()];
    let mut witnesses = vec![vec![]; facets.num_blocks()];
    for (f, g) in graphs.iter().enumerate() {
        let found = reps.iter().enumerate().find_map(|(k, &r)| is_isomorphic(&graphs[r], g).map(|w| (k, r, w)));
        match found {
            Some((k, r, w)) => {
                label[f] = k;
                witnesses[f] = facets.block(r).iter().enumerate().map(|(i, _)| facets.block(f)[w.apply(i)]).collect();
            }
            None => {
                label[f] = reps.len();
                reps.push(f);
                witnesses[f] = facets.block(f).to_vec();
            }
        }
    }
    Ok(FacetClasses { classes: Partition::from_labels(&label), witnesses })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CanonicalReport {
    pub canonical: bool,
    /// Flags Φ for which no automorphism sends Φ to its top-color neighbor.
    pub missing: Option<usize>,
    /// The group generated by the automorphisms `Φ ↦ Φ^n`, if all exist.
    pub group: Vec<Perm>,
    pub acts_freely_on_facets: bool,
    pub acts_transitively_on_facets: bool,
}

/// Decides whether a maniplex is a canonical Cayley extension of its facets:
/// every flag Φ must be sent to its top-color neighbor by an automorphism,
/// and the group those automorphisms generate must act freely on facets.
pub fn detect_canonical(p: &Premaniplex) -> Result<CanonicalReport> {
    let aut = AutomorphismGroup::of(p)?;
    let top = p.rank() - 1;
    let mut gens: Vec<usize> = vec![];
    let mut missing = None;
    let mut used = vec![false; aut.order()];
    for f in 0..p.num_flags() {
        match aut.sending(f, p.adj(top, f)) {
            Some(k) => {
                if !std::mem::replace(&mut used[k], true) {
                    gens.push(k);
                }
            }
            None => {
                missing = Some(f);
                break;
            }
        }
    }
    if missing.is_some() {
        return Ok(CanonicalReport {
            canonical: false,
            missing,
            group: vec![],
            acts_freely_on_facets: false,
            acts_transitively_on_facets: false,
        });
    }
    let members = aut.subgroup_generated(&gens);
    let facets = p.facets();
    let free = members.iter().filter(|&&g| g != 0).all(|&g| {
        let t = aut.get(g);
        (0..facets.num_blocks()).all(|b| facets.block_of(t.apply(facets.representative(b))) != b)
    });
    let reached: HashSet<usize> =
        members.iter().map(|&g| facets.block_of(aut.get(g).apply(0))).collect();
    let transitive = reached.len() == facets.num_blocks();
    Ok(CanonicalReport {
        canonical: free && transitive,
        missing: None,
        group: members.iter().map(|&g| aut.get(g).clone()).collect(),
        acts_freely_on_facets: free,
        acts_transitively_on_facets: transitive,
    })
}

/// Whether `p` has exactly two flag orbits with `i`-adjacent flags in the
/// same orbit precisely for `i ≠ n-1`.
pub fn is_two_orbit_top_bar(p: &Premaniplex) -> Result<bool> {
    let orbits = flag_orbits(p)?;
    if orbits.num_blocks() != 2 {
        return Ok(false);
    }
    let top = p.rank() - 1;
    Ok((0..p.rank()).all(|i| (0..p.num_flags()).all(|f| orbits.same_block(f, p.adj(i, f)) == (i != top))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cube, polygon, square_pyramid};

    #[test]
    fn orders_of_seeds() {
        assert_eq!(automorphism_group(&polygon(4).unwrap()).unwrap().len(), 8);
        let cube3 = cube(3).unwrap();
        let aut = automorphism_group(&cube3).unwrap();
        assert_eq!(aut.len(), 48);
        assert!(aut[0].is_identity());
        for t in &aut {
            check_automorphism(&cube3, t).unwrap();
        }
    }

    #[test]
    fn pyramid_has_four_orbits() {
        let pyr = square_pyramid();
        assert_eq!(automorphism_group(&pyr).unwrap().len(), 8);
        assert_eq!(num_orbits(&pyr).unwrap(), 4);
        let stg = symmetry_type_graph(&pyr).unwrap();
        assert_eq!(stg.num_nodes(), 4);
        assert!(stg.graph.validate().is_ok());
    }

    #[test]
    fn regular_stg_is_one_node_of_semiedges() {
        let stg = symmetry_type_graph(&cube(3).unwrap()).unwrap();
        assert_eq!(stg.num_nodes(), 1);
        assert_eq!(stg.graph.validate().semiedges.len(), 3);
    }

    #[test]
    fn ill_defined_quotient_has_witness() {
        let sq = polygon(4).unwrap();
        // Identify flags 0 and 2 only: their 0-neighbors 1 and 3 stay apart.
        let part = Partition::from_labels(&[0, 1, 0, 3, 4, 5, 6, 7]);
        match quotient_by_partition(&sq, part) {
            Err(Error::IllDefinedQuotient { color, a, b }) => {
                assert_eq!((a, b), (0, 2));
                assert_ne!(sq.adj(color, a), sq.adj(color, b));
            }
            other => panic!("expected ill-defined quotient, got {other:?}"),
        }
    }

    #[test]
    fn isomorphism() {
        let sq = polygon(4).unwrap();
        assert!(is_isomorphic(&sq, &sq.dual()).is_some());
        assert!(is_isomorphic(&sq, &cube(3).unwrap()).is_none());
        let c = cube(3).unwrap();
        let w = is_isomorphic(&c, &c.dual().dual()).unwrap();
        assert!(w.is_identity());
    }

    #[test]
    fn facet_classes() {
        let c = facet_isomorphism_classes(&cube(3).unwrap()).unwrap();
        assert_eq!(c.classes.num_blocks(), 1);
        assert_eq!(c.classes.block(0).len(), 6);
        let pyr = square_pyramid();
        let classes = facet_isomorphism_classes(&pyr).unwrap();
        let mut sizes: Vec<usize> = classes.classes.blocks().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 4]);
        // Witnesses are color-preserving between facet flag sets.
        let facets = pyr.facets();
        for (f, w) in classes.witnesses.iter().enumerate() {
            let rep = facets.block(classes.classes.representative(classes.classes.block_of(f)));
            for (i, &x) in rep.iter().enumerate() {
                for c in 0..2 {
                    let j = rep.iter().position(|&y| y == pyr.adj(c, x)).unwrap();
                    assert_eq!(pyr.adj(c, w[i]), w[j]);
                }
            }
        }
    }

    #[test]
    fn cube_is_not_canonical_over_its_facets() {
        // The reflections swapping adjacent facets generate a group of order
        // 24, which cannot act freely on 6 facets.
        let r = detect_canonical(&cube(3).unwrap()).unwrap();
        assert!(!r.canonical);
        assert_eq!(r.group.len(), 24);
    }
}
