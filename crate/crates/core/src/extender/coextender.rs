use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::GroupModel;
use crate::maniplex::Premaniplex;
use crate::partition::Partition;
use crate::perm::Perm;

use super::{derived_maniplex, CayleyExtender, DerivedManiplex, PreExtender};

/// A Cayley coextender: a vertex pairing `r_{-1}` commuting with colors
/// `1..n`, and a voltage per vertex with `ξ'(r_{-1} v) = ξ'(v)^-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coextender {
    base: Premaniplex,
    extender: CayleyExtender,
}

impl Coextender {
    /// `xi[v]` is the voltage of vertex `v` (blocks of `base.vertices()`).
    pub fn new(base: Premaniplex, r_minus1: Perm, group: Arc<GroupModel>, xi: Vec<usize>) -> Result<Coextender> {
        let n = base.rank();
        if r_minus1.len() != base.num_flags() {
            return Err(Error::Structural("r_-1 has the wrong number of images".into()));
        }
        if let Some(flag) = (0..r_minus1.len()).find(|&f| r_minus1.apply(r_minus1.apply(f)) != f) {
            return Err(Error::NotInvolution { color: 0, flag });
        }
        for i in 1..n {
            if let Some(flag) =
                (0..r_minus1.len()).find(|&f| r_minus1.apply(base.adj(i, f)) != base.adj(i, r_minus1.apply(f)))
            {
                return Err(Error::NotCommuting { i, j: 0, flag });
            }
        }
        let pre = PreExtender::new(base.dual(), r_minus1)?;
        let extender = CayleyExtender::new(pre, group, xi)?;
        Ok(Coextender { base, extender })
    }

    pub fn canonical(base: Premaniplex, group: Arc<GroupModel>, xi: Vec<usize>) -> Result<Coextender> {
        let id = Perm::identity(base.num_flags());
        Coextender::new(base, id, group, xi)
    }

    pub fn base(&self) -> &Premaniplex {
        &self.base
    }

    pub fn r_minus1(&self) -> &Perm {
        self.extender.pre().rn()
    }

    pub fn group(&self) -> &Arc<GroupModel> {
        self.extender.group()
    }

    /// Voltages indexed by vertex.
    pub fn xi(&self) -> &[usize] {
        self.extender.xi()
    }

    pub fn vertices(&self) -> &Partition {
        self.extender.pre().facets()
    }

    /// The equivalent extender on the dual of the base.
    pub fn as_dual_extender(&self) -> &CayleyExtender {
        &self.extender
    }

    /// The coextension: new color 0 from `r_{-1}`, base colors shifted up by one.
    /// Flags keep the `(Φ, γ)` indexing of the dual construction.
    pub fn coextension(&self) -> DerivedManiplex {
        let d = derived_maniplex(&self.extender);
        let graph = d.graph.dual();
        DerivedManiplex {
            diagnostics: super::DerivedDiagnostics { defect: graph.maniplex_defect(), ..d.diagnostics },
            graph,
            ..d
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{polygon, simplex};
    use std::collections::BTreeSet;

    #[test]
    fn dual_ditope_of_square() {
        let z2 = Arc::new(GroupModel::cyclic(2).unwrap());
        let c = z2.generators()[0];
        let co = Coextender::canonical(polygon(4).unwrap(), z2, vec![c; 4]).unwrap();
        let m = co.coextension();
        assert_eq!(m.num_flags(), 16);
        assert!(m.is_maniplex());
        // {2, 4}: two vertices, each on four edges.
        assert_eq!(m.graph.vertices().num_blocks(), 2);
        assert_eq!(m.graph.facets().num_blocks(), 4);
    }

    #[test]
    fn r_minus1_must_commute() {
        let z2 = Arc::new(GroupModel::cyclic(2).unwrap());
        let sq = polygon(4).unwrap();
        let bad = Perm::from_cycles("(0 1)", 8).unwrap();
        assert!(matches!(
            Coextender::new(sq, bad, z2, vec![1; 4]),
            Err(Error::NotCommuting { .. })
        ));
    }

    #[test]
    fn colorful_skeleton_is_the_cayley_graph() {
        for n in 2..=3 {
            let k = simplex(n).unwrap();
            let g = Arc::new(GroupModel::elem_abelian_2(n + 1).unwrap());
            let verts = k.vertices();
            let xi: Vec<usize> = (0..verts.num_blocks()).map(|v| g.generators()[v]).collect();
            let co = Coextender::canonical(k.clone(), g.clone(), xi.clone()).unwrap();
            let m = co.coextension();
            assert_eq!(m.num_flags(), k.num_flags() << (n + 1));
            assert!(m.is_maniplex());
            let vertices = m.graph.vertices();
            assert_eq!(vertices.num_blocks(), g.order());
            let gamma_of = |b: usize| m.provenance(vertices.representative(b)).1;
            for b in vertices.blocks() {
                assert!(b.iter().all(|&x| m.provenance(x).1 == m.provenance(b[0]).1));
            }
            let edges = m.graph.faces(1).unwrap();
            let skeleton: BTreeSet<(usize, usize)> = edges
                .blocks()
                .iter()
                .map(|e| {
                    let ends: BTreeSet<usize> = e.iter().map(|&x| gamma_of(vertices.block_of(x))).collect();
                    let v: Vec<usize> = ends.into_iter().collect();
                    (v[0], v[v.len() - 1])
                })
                .collect();
            let cayley: BTreeSet<(usize, usize)> = (0..g.order())
                .flat_map(|x| xi.iter().map(move |&s| (x, s)))
                .map(|(x, s)| {
                    let y = g.compose(s, x);
                    (x.min(y), x.max(y))
                })
                .collect();
            assert_eq!(skeleton, cayley);
        }
    }
}
