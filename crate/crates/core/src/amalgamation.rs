//! Flat amalgamation of a Cayley coextension and a Cayley extension of the
//! same base.
//!
//! Flags are `(Φ, γ', γ)` with `γ' ∈ G'`, `γ ∈ G`, stored at index
//! `Φ·|G'||G| + γ'·|G| + γ`. Color 0 follows `r_{-1}` and multiplies `γ'` by
//! the vertex voltage, colors `1..=n` are the colors of `K` shifted up by
//! one, and color `n + 1` follows `r_n` and multiplies `γ` by the facet
//! voltage.

use crate::error::{Error, Result};
use crate::extender::{CayleyExtender, Coextender, DerivedManiplex};
use crate::maniplex::Premaniplex;

#[derive(Debug, Clone)]
pub struct AmalgamationSpec {
    pub coextender: Coextender,
    pub extender: CayleyExtender,
}

impl AmalgamationSpec {
    /// Checks that both sides share the base and that `(r_n r_{-1})^2`
    /// fixes every flag.
    pub fn new(coextender: Coextender, extender: CayleyExtender) -> Result<AmalgamationSpec> {
        if coextender.base() != extender.base() {
            return Err(Error::Precondition("coextender and extender have different bases".into()));
        }
        let n = extender.base().rank();
        let (rm, rn) = (coextender.r_minus1(), extender.pre().rn());
        let step = |f: usize| rn.apply(rm.apply(f));
        if let Some(flag) = (0..extender.base().num_flags()).find(|&f| step(step(f)) != f) {
            return Err(Error::NotCommuting { i: 0, j: n + 1, flag });
        }
        Ok(AmalgamationSpec { coextender, extender })
    }

    pub fn base(&self) -> &Premaniplex {
        self.extender.base()
    }
}

/// Builds the rank `n + 2` flat amalgamation. Both the coextension and the
/// extension must be maniplexes.
pub fn flat_amalgamate(spec: &AmalgamationSpec) -> Result<DerivedManiplex> {
    let co = &spec.coextender;
    let ext = &spec.extender;
    if let Some(d) = co.coextension().diagnostics.defect {
        return Err(Error::Precondition(format!("coextension is not a maniplex: {d}")));
    }
    if let Some(d) = ext.derive().diagnostics.defect {
        return Err(Error::Precondition(format!("extension is not a maniplex: {d}")));
    }
    let k = spec.base();
    let n = k.rank();
    let (g1, g2) = (co.group(), ext.group());
    let (o1, o2) = (g1.order(), g2.order());
    let block = o1 * o2;
    let vertices = co.vertices();
    let left1: Vec<Vec<u32>> = co.xi().iter().map(|&g| g1.left_mult_table(g)).collect();
    let left2: Vec<Vec<u32>> = ext.xi().iter().map(|&g| g2.left_mult_table(g)).collect();
    let m = k.num_flags() * block;
    let mut adjacency = vec![vec![0usize; m]; n + 2];
    for phi in 0..k.num_flags() {
        let bottom = co.r_minus1().apply(phi);
        let top = ext.pre().rn().apply(phi);
        let t1 = &left1[vertices.block_of(phi)];
        let t2 = &left2[ext.pre().facet_of(phi)];
        for a in 0..o1 {
            for b in 0..o2 {
                let x = phi * block + a * o2 + b;
                adjacency[0][x] = bottom * block + t1[a] as usize * o2 + b;
                for i in 0..n {
                    adjacency[i + 1][x] = k.adj(i, phi) * block + a * o2 + b;
                }
                adjacency[n + 1][x] = top * block + a * o2 + t2[b] as usize;
            }
        }
    }
    let graph = Premaniplex::new(n + 2, adjacency)?;
    Ok(DerivedManiplex::from_parts(graph, k.num_flags(), block))
}

/// Every vertex shares a flag with every facet.
pub fn is_flat(m: &Premaniplex) -> bool {
    let vertices = m.vertices();
    let facets = m.facets();
    let mut incident = vec![false; vertices.num_blocks() * facets.num_blocks()];
    for f in 0..m.num_flags() {
        incident[vertices.block_of(f) * facets.num_blocks() + facets.block_of(f)] = true;
    }
    incident.into_iter().all(|b| b)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::automorphisms::is_isomorphic;
    use crate::constructions::{cube, ditope, polygon, toroid_44};
    use crate::extender::is_polytopal;
    use crate::groups::GroupModel;
    use crate::perm::Perm;

    fn dual_ditope(k: &Premaniplex) -> Coextender {
        let z2 = Arc::new(GroupModel::cyclic(2).unwrap());
        let c = z2.generators()[0];
        Coextender::canonical(k.clone(), z2, vec![c; k.vertices().num_blocks()]).unwrap()
    }

    #[test]
    fn ditope_amalgamation_of_the_square() {
        let sq = polygon(4).unwrap();
        let spec = AmalgamationSpec::new(dual_ditope(&sq), ditope(&sq).unwrap()).unwrap();
        let m = flat_amalgamate(&spec).unwrap();
        assert_eq!(m.num_flags(), 32);
        assert_eq!(m.graph.rank(), 4);
        assert!(m.is_maniplex());
        assert!(is_flat(&m.graph));
        assert_eq!(is_polytopal(&m.graph), None);
    }

    #[test]
    fn facets_and_vertex_figures() {
        let sq = polygon(4).unwrap();
        let co = dual_ditope(&sq);
        let ext = ditope(&sq).unwrap();
        let spec = AmalgamationSpec::new(co.clone(), ext.clone()).unwrap();
        let m = flat_amalgamate(&spec).unwrap().graph;
        let facets = m.facets();
        assert_eq!(facets.num_blocks(), 2);
        for b in facets.blocks() {
            assert_eq!(b.len(), 16);
            assert!(is_isomorphic(&m.induced(b, 0, 3), &co.coextension().graph).is_some());
        }
        let vf = m.vertex_figures();
        assert_eq!(vf.num_blocks(), 2);
        for b in vf.blocks() {
            assert!(is_isomorphic(&m.induced(b, 1, 4), &ext.derive().graph).is_some());
        }
    }

    #[test]
    fn flatness_examples() {
        assert!(!is_flat(&cube(3).unwrap()));
        assert!(is_flat(&ditope(&polygon(5).unwrap()).unwrap().derive().graph));
    }

    #[test]
    fn non_commuting_pairings_are_rejected() {
        let ext = toroid_44(3, 3).unwrap();
        let k = ext.base().clone();
        // Swap two vertices flag by flag, leaving the others fixed.
        let verts = k.vertices();
        let swap = |a: usize, b: usize| {
            let mut images: Vec<usize> = (0..k.num_flags()).collect();
            let (x, y) = (verts.block(a)[0], verts.block(b)[0]);
            for (p, q) in [(x, y), (k.adj(1, x), k.adj(1, y))] {
                images[p] = q;
                images[q] = p;
            }
            Perm::from_images(images).unwrap()
        };
        let rn = ext.pre().rn();
        let r_minus1 = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
            .map(|(a, b)| swap(a, b))
            .find(|t| {
                let step = |f: usize| rn.apply(t.apply(f));
                (0..8).any(|f| step(step(f)) != f)
            })
            .unwrap();
        let z2 = Arc::new(GroupModel::cyclic(2).unwrap());
        let c = z2.generators()[0];
        let co = Coextender::new(k.clone(), r_minus1.clone(), z2, vec![c; 4]).unwrap();
        match AmalgamationSpec::new(co, ext.clone()) {
            Err(Error::NotCommuting { i: 0, j: 3, flag }) => {
                let rn = ext.pre().rn();
                let step = |f: usize| rn.apply(r_minus1.apply(f));
                assert_ne!(step(step(flag)), flag);
            }
            other => panic!("expected a commutation witness, got {other:?}"),
        }
    }
}
