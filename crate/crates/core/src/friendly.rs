//! Friendly sets of base automorphisms and the friendly group `♥(K, rn)`.
//!
//! A set `S ⊆ Aut(K)` is `(rn, rn')`-friendly when every `τ ∈ S` has, for
//! every flag `Φ`, a friend `τ̄ ∈ S` with `rn'(Φτ) = (rn Φ) τ̄`. The friend
//! only depends on the facet of `Φ`. The greatest `rn`-friendly set is a
//! group, and the symmetry type graph of the universal extension is the
//! quotient of the pre-extension by it.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::automorphisms::{
    check_automorphism, extend_map, facet_subgraph, orbits_of, quotient_by, AutomorphismGroup, SymmetryTypeGraph,
};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::constructions::square_pyramid;
use crate::extender::{CayleyExtender, DerivedManiplex, PreExtender};
use crate::maniplex::Premaniplex;
use crate::partition::Partition;
use crate::perm::Perm;

/// A flag at which an element of the set has no friend.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriendlessFlag {
    /// Index into the tested set.
    pub element: usize,
    pub flag: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriendCheck {
    pub friendly: bool,
    /// `friends[t][F]`: index of the friend of element `t` on facet `F`
    /// (blocks of `K.facets()`). Empty unless the set is friendly.
    pub friends: Vec<Vec<usize>>,
    pub counterexample: Option<FriendlessFlag>,
}

/// Tests whether `set` is `(rn, rn2)`-friendly. The friend of each element
/// is found on one flag per facet and then checked on every flag.
pub fn is_friendly_set(k: &Premaniplex, rn: &Perm, rn2: &Perm, set: &[Perm]) -> Result<FriendCheck> {
    for t in set {
        check_automorphism(k, t)?;
    }
    let facets = k.facets();
    let mut friends = vec![vec![0; facets.num_blocks()]; set.len()];
    for (f, block) in facets.blocks().iter().enumerate() {
        let x = rn.apply(block[0]);
        let by_image: std::collections::HashMap<usize, usize> =
            set.iter().enumerate().map(|(s, sigma)| (sigma.apply(x), s)).collect();
        for (t, tau) in set.iter().enumerate() {
            let friend = match by_image.get(&rn2.apply(tau.apply(block[0]))) {
                Some(&s) => s,
                None => {
                    return Ok(FriendCheck {
                        friendly: false,
                        friends: vec![],
                        counterexample: Some(FriendlessFlag { element: t, flag: block[0] }),
                    })
                }
            };
            if let Some(&flag) = block
                .iter()
                .find(|&&phi| rn2.apply(tau.apply(phi)) != set[friend].apply(rn.apply(phi)))
            {
                return Ok(FriendCheck {
                    friendly: false,
                    friends: vec![],
                    counterexample: Some(FriendlessFlag { element: t, flag }),
                });
            }
            friends[t][f] = friend;
        }
    }
    Ok(FriendCheck { friendly: true, friends, counterexample: None })
}

/// One round of the refinement computing `♥(K, rn)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriendlyComputationState {
    pub iteration: usize,
    /// `P_k`.
    pub partition: Partition,
    /// `G_k`, as indices into the automorphism group of `K`.
    pub group: Vec<usize>,
    /// `P'_k`, the orbits of `G_k`.
    pub orbits: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriendlyGroup {
    /// Elements ordered by the image of flag 0; the identity comes first.
    pub elements: Vec<Perm>,
    /// `friends[t][F]` indexes `elements`.
    pub friends: Vec<Vec<usize>>,
    /// Refinement rounds; empty for the subgroup oracle.
    pub history: Vec<FriendlyComputationState>,
}

impl FriendlyGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Closed under inverses and products.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&Perm> = self.elements.iter().collect();
        self.elements.iter().all(|a| set.contains(&a.inverse()))
            && self.elements.iter().all(|a| self.elements.iter().all(|b| set.contains(&a.then(b))))
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }
}

fn sorted_by_base_image(mut perms: Vec<Perm>) -> Vec<Perm> {
    perms.sort_by_key(|p| p.apply(0));
    perms
}

fn with_friends(pre: &PreExtender, elements: Vec<Perm>, history: Vec<FriendlyComputationState>) -> Result<FriendlyGroup> {
    let elements = sorted_by_base_image(elements);
    let check = is_friendly_set(pre.base(), pre.rn(), pre.rn(), &elements)?;
    if !check.friendly {
        return Err(Error::Precondition(format!(
            "computed group is not friendly at {:?}",
            check.counterexample
        )));
    }
    Ok(FriendlyGroup { elements, friends: check.friends, history })
}

/// `♥(K, rn)` by partition refinement: starting from the trivial partition,
/// `G_k` keeps the automorphisms preserving every block of `P_k`, `P'_k` is
/// the orbit partition of `G_k`, and `P_{k+1}` splits `P'_k` by the
/// `P'_k`-class of the `rn`-image. Stops when `P_{k+1} = P'_k`.
pub fn friendly_group(pre: &PreExtender) -> Result<FriendlyGroup> {
    let k = pre.base();
    let m = k.num_flags();
    let aut = AutomorphismGroup::of(k)?;
    let mut partition = Partition::trivial(m);
    let mut history = vec![];
    loop {
        let group: Vec<usize> = (0..aut.order())
            .filter(|&t| (0..m).all(|f| partition.same_block(f, aut.get(t).apply(f))))
            .collect();
        let perms: Vec<Perm> = group.iter().map(|&t| aut.get(t).clone()).collect();
        let orbits = orbits_of(m, &perms);
        let rn_class: Vec<usize> = (0..m).map(|f| orbits.block_of(pre.rn().apply(f))).collect();
        let next = orbits.meet(&Partition::from_labels(&rn_class));
        let done = next == orbits;
        history.push(FriendlyComputationState { iteration: history.len(), partition, group, orbits });
        if done {
            return with_friends(pre, perms, history);
        }
        partition = next;
    }
}

/// `♥(K, rn)` by brute force: the largest friendly subgroup of `Aut(K)`,
/// which must contain every other friendly subgroup.
pub fn heart_oracle(pre: &PreExtender) -> Result<FriendlyGroup> {
    let k = pre.base();
    let aut = AutomorphismGroup::of(k)?;
    let cap = Caps::global().subgroup_oracle;
    if aut.order() > cap {
        return Err(Error::CapExceeded { what: "automorphism group order for the subgroup oracle", cap });
    }
    let model = aut.to_group_model()?;
    let mut friendly: Vec<Vec<usize>> = vec![];
    for sub in model.all_subgroups()? {
        let perms: Vec<Perm> = sub.iter().map(|&g| model.element(g).clone()).collect();
        if is_friendly_set(k, pre.rn(), pre.rn(), &perms)?.friendly {
            friendly.push(sub);
        }
    }
    let greatest = friendly.iter().max_by_key(|s| s.len()).expect("the trivial subgroup is friendly");
    let top: HashSet<usize> = greatest.iter().copied().collect();
    if let Some(other) = friendly.iter().find(|s| !s.iter().all(|g| top.contains(g))) {
        return Err(Error::Precondition(format!(
            "friendly subgroups of orders {} and {} are not nested",
            greatest.len(),
            other.len()
        )));
    }
    let perms = greatest.iter().map(|&g| model.element(g).clone()).collect();
    with_friends(pre, perms, vec![])
}

/// The symmetry type graph of the universal extension: `K_rn / ♥(K, rn)`.
pub fn predicted_stg_universal(pre: &PreExtender) -> Result<SymmetryTypeGraph> {
    let heart = friendly_group(pre)?;
    quotient_by(&pre.pre_extension(), &heart.elements)
}

/// `S_τ`: for each `γ`, the automorphism `Φ ↦ first coordinate of (Φ, γ)τ`
/// of the base, deduplicated in order of `γ`.
pub fn facet_action_set(m: &DerivedManiplex, base: &Premaniplex, tau: &Perm) -> Result<Vec<Perm>> {
    if tau.len() != m.num_flags() || base.num_flags() != m.base_flags() {
        return Err(Error::Precondition("automorphism does not match the derived maniplex".into()));
    }
    let mut seen = HashSet::new();
    let mut out = vec![];
    for gamma in 0..m.group_order() {
        let images = (0..base.num_flags()).map(|phi| m.provenance(tau.apply(m.flag(phi, gamma))).0).collect();
        let p = Perm::from_images(images)?;
        if seen.insert(p.clone()) {
            check_automorphism(base, &p)?;
            out.push(p);
        }
    }
    Ok(out)
}

/// Comparison of the symmetry type graph of a derived maniplex with the
/// quotient of the pre-extension by the union of all `S_τ`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StgConsistency {
    pub derived_nodes: usize,
    /// Order of `H`, the union of the `S_τ`.
    pub h_order: usize,
    /// `H` is closed under products.
    pub h_is_group: bool,
    /// `H` is the restriction of the stabilizer of the base facet.
    pub h_is_base_facet_stabilizer: bool,
    /// `H ≤ ♥(K, rn)`.
    pub h_in_heart: bool,
    /// Node labels and adjacencies agree.
    pub equal: bool,
}

pub fn stg_consistency(ext: &CayleyExtender) -> Result<StgConsistency> {
    let base = ext.base();
    let m = ext.derive();
    let aut = AutomorphismGroup::of(&m.graph)?;
    let mut h: Vec<Perm> = vec![];
    let mut seen = HashSet::new();
    for tau in aut.perms() {
        for s in facet_action_set(&m, base, tau)? {
            if seen.insert(s.clone()) {
                h.push(s);
            }
        }
    }
    let h_is_group = h.iter().all(|a| h.iter().all(|b| seen.contains(&a.then(b))));
    let identity = ext.group().identity();
    let stabilizer: HashSet<Perm> = aut
        .perms()
        .iter()
        .filter(|t| (0..base.num_flags()).all(|phi| m.provenance(t.apply(m.flag(phi, identity))).1 == identity))
        .map(|t| {
            Perm::from_images((0..base.num_flags()).map(|phi| m.provenance(t.apply(m.flag(phi, identity))).0).collect())
        })
        .collect::<Result<_>>()?;
    let h_is_base_facet_stabilizer = stabilizer == seen;
    let heart = friendly_group(ext.pre())?;
    let h_in_heart = h.iter().all(|s| heart.contains(s));

    let derived = quotient_by(&m.graph, aut.perms())?;
    let predicted = quotient_by(&ext.pre().pre_extension(), &h)?;
    let labels_agree = (0..base.num_flags()).all(|phi| derived.node_of(m.flag(phi, identity)) == predicted.node_of(phi));
    Ok(StgConsistency {
        derived_nodes: derived.num_nodes(),
        h_order: h.len(),
        h_is_group,
        h_is_base_facet_stabilizer,
        h_in_heart,
        equal: labels_agree && derived.graph == predicted.graph,
    })
}

/// `rn^τ(Φ) = (rn(Φ τ^-1)) τ`.
pub fn conjugate_pairing(rn: &Perm, tau: &Perm) -> Perm {
    rn.conjugate_by(tau)
}

/// Decides whether `U(K, rn)` and `U(K, rn2)` are isomorphic: some
/// `τ ∈ Aut(K)` makes `K_{rn^τ} / ♥(K, rn)^τ` equal to `K_{rn2} / ♥(K, rn2)`
/// on the same flag set. Returns the first such `τ`.
pub fn universal_extensions_isomorphic(pre: &PreExtender, pre2: &PreExtender) -> Result<Option<Perm>> {
    if pre.base() != pre2.base() {
        return Err(Error::Precondition("pre-extenders have different bases".into()));
    }
    let k = pre.base();
    let heart = friendly_group(pre)?;
    let heart2 = friendly_group(pre2)?;
    let target = quotient_by(&pre2.pre_extension(), &heart2.elements)?;
    let aut = AutomorphismGroup::of(k)?;
    for tau in aut.perms() {
        let conj: Vec<Perm> = heart.elements.iter().map(|s| s.conjugate_by(tau)).collect();
        if orbits_of(k.num_flags(), &conj) != target.orbits {
            continue;
        }
        let q = quotient_by(&k.with_top_color(&conjugate_pairing(pre.rn(), tau)), &conj)?;
        if q == target {
            return Ok(Some(tau.clone()));
        }
    }
    Ok(None)
}

/// A map between facets given on flags of `K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetMap {
    pub from_facet: usize,
    pub to_facet: usize,
    /// Pairs `(Φ, Φσ)` over the flags of the source facet.
    pub flags: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub unique: bool,
    pub maps_checked: usize,
    pub maps_extending: usize,
    /// First facet isomorphism or involutory facet automorphism that is not
    /// the restriction of an automorphism of `K`.
    pub witness: Option<FacetMap>,
}

/// All color-preserving isomorphisms from facet `a` to facet `b`.
pub fn facet_isomorphisms(k: &Premaniplex, a: usize, b: usize) -> Vec<FacetMap> {
    let facets = k.facets();
    let (fa, fb) = (facets.block(a), facets.block(b));
    let (ga, gb) = (facet_subgraph(k, fa), facet_subgraph(k, fb));
    (0..fb.len())
        .filter_map(|y| extend_map(&ga, &gb, 0, y))
        .map(|s| FacetMap {
            from_facet: a,
            to_facet: b,
            flags: fa.iter().enumerate().map(|(i, &phi)| (phi, fb[s.apply(i)])).collect(),
        })
        .collect()
}

/// Whether some automorphism of `K` restricts to `map`.
pub fn facet_map_extends(aut: &AutomorphismGroup, map: &FacetMap) -> bool {
    let (phi, psi) = map.flags[0];
    aut.sending(phi, psi)
        .is_some_and(|t| map.flags.iter().all(|&(x, y)| aut.get(t).apply(x) == y))
}

/// Whether `K` has a unique universal extension: every isomorphism between
/// distinct facets and every involutory automorphism of a facet must be the
/// restriction of an automorphism of `K`.
pub fn has_unique_universal_extension(k: &Premaniplex) -> Result<UniquenessReport> {
    if !k.is_maniplex() {
        return Err(Error::Precondition("base is not a maniplex".into()));
    }
    let aut = AutomorphismGroup::of(k)?;
    let nf = k.facets().num_blocks();
    let mut report = UniquenessReport { unique: true, maps_checked: 0, maps_extending: 0, witness: None };
    let consider = |map: FacetMap, report: &mut UniquenessReport| {
        report.maps_checked += 1;
        if facet_map_extends(&aut, &map) {
            report.maps_extending += 1;
        } else if report.witness.is_none() {
            report.unique = false;
            report.witness = Some(map);
        }
    };
    for a in 0..nf {
        for b in a + 1..nf {
            for map in facet_isomorphisms(k, a, b) {
                consider(map, &mut report);
            }
        }
        for map in facet_isomorphisms(k, a, a) {
            let lookup: std::collections::HashMap<usize, usize> = map.flags.iter().copied().collect();
            let identity = map.flags.iter().all(|&(x, y)| x == y);
            let involution = map.flags.iter().all(|&(x, y)| lookup[&y] == x);
            if involution && !identity {
                consider(map, &mut report);
            }
        }
    }
    Ok(report)
}

/// The square pyramid with two triangles glued by a facet isomorphism that
/// does not extend to an automorphism; every other facet is fixed.
pub fn pyramid_triangle_pairing() -> PreExtender {
    let k = square_pyramid();
    let aut = AutomorphismGroup::of(&k).expect("pyramid pairing");
    let facets = k.facets();
    let triangles: Vec<usize> = (0..facets.num_blocks()).filter(|&f| facets.block(f).len() == 6).collect();
    let (a, b) = (triangles[0], triangles[2]);
    let map = facet_isomorphisms(&k, a, b).into_iter().find(|m| !facet_map_extends(&aut, m)).expect("pyramid pairing");
    let mut images: Vec<usize> = (0..k.num_flags()).collect();
    for &(x, y) in &map.flags {
        images[x] = y;
        images[y] = x;
    }
    PreExtender::new(k, Perm::from_images(images).expect("pyramid pairing")).expect("pyramid pairing")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphisms::automorphism_group;
    use crate::constructions::{cube, polygon, simplex, square_pyramid, toroid_44, two_hat};

    fn square_id() -> PreExtender {
        PreExtender::canonical(polygon(4).unwrap())
    }

    /// The pyramid with its two opposite side triangles (facets 2 and 4)
    /// swapped through a flag bijection that no automorphism induces.
    #[test]
    fn trivial_sets() {
        let k = polygon(4).unwrap();
        let id = Perm::identity(8);
        assert!(is_friendly_set(&k, &id, &id, &[id.clone()]).unwrap().friendly);
        let not_aut = Perm::from_cycles("(0 1)", 8).unwrap();
        assert!(is_friendly_set(&k, &id, &id, &[not_aut]).is_err());
    }

    #[test]
    fn automorphisms_commuting_with_rn_are_friendly() {
        let pre = toroid_44(3, 3).unwrap().pre().clone();
        let k = pre.base();
        let commuting: Vec<Perm> = automorphism_group(k)
            .unwrap()
            .into_iter()
            .filter(|t| (0..8).all(|f| pre.rn().apply(t.apply(f)) == t.apply(pre.rn().apply(f))))
            .collect();
        assert!(is_friendly_set(k, pre.rn(), pre.rn(), &commuting).unwrap().friendly);
    }

    /// The toroidal pairing of the square with one pair of opposite edges
    /// glued by a half-turn instead of a reflection.
    fn twisted_square() -> PreExtender {
        let pre = toroid_44(3, 3).unwrap().pre().clone();
        let k = pre.base().clone();
        let f0 = pre.facet_of(0);
        let f1 = pre.facet_of(pre.rn().apply(0));
        let images = (0..k.num_flags())
            .map(|f| {
                let facet = pre.facet_of(f);
                if facet == f0 || facet == f1 {
                    k.adj(0, pre.rn().apply(f))
                } else {
                    pre.rn().apply(f)
                }
            })
            .collect();
        PreExtender::new(k, Perm::from_images(images).unwrap()).unwrap()
    }

    #[test]
    fn toroidal_pairing_commutes_with_every_automorphism() {
        let pre = toroid_44(3, 3).unwrap().pre().clone();
        let k = pre.base();
        for t in automorphism_group(k).unwrap() {
            assert!(is_friendly_set(k, pre.rn(), pre.rn(), &[t]).unwrap().friendly);
        }
    }

    #[test]
    fn lonely_element_has_a_witness() {
        let pre = twisted_square();
        let k = pre.base();
        let found = automorphism_group(k).unwrap().into_iter().find_map(|t| {
            let c = is_friendly_set(k, pre.rn(), pre.rn(), &[t]).unwrap();
            c.counterexample
        });
        let w = found.expect("some singleton is not friendly");
        assert_eq!(w.element, 0);
    }

    #[test]
    fn identity_pairing_gives_the_whole_group() {
        for k in [polygon(4).unwrap(), cube(3).unwrap(), square_pyramid()] {
            let order = automorphism_group(&k).unwrap().len();
            let pre = PreExtender::canonical(k);
            let heart = friendly_group(&pre).unwrap();
            assert_eq!(heart.order(), order);
            assert!(heart.is_closed());
        }
    }

    #[test]
    fn refinement_matches_oracle() {
        for pre in [
            square_id(),
            toroid_44(3, 3).unwrap().pre().clone(),
            twisted_square(),
            PreExtender::canonical(square_pyramid()),
            pyramid_triangle_pairing(),
        ] {
            let a = friendly_group(&pre).unwrap();
            let b = heart_oracle(&pre).unwrap();
            assert_eq!(a.elements, b.elements);
            for w in a.history.windows(2) {
                assert!(w[1].partition.refines(&w[0].orbits));
                assert!(w[0].orbits.refines(&w[0].partition));
                assert!(w[1].group.iter().all(|g| w[0].group.contains(g)));
            }
        }
    }

    #[test]
    fn pyramid_pairing_shrinks_the_heart() {
        let pre = pyramid_triangle_pairing();
        let heart = friendly_group(&pre).unwrap();
        assert!(heart.order() < 8);
        assert!(heart.is_closed());
    }

    #[test]
    fn predicted_stgs() {
        let stg = predicted_stg_universal(&square_id()).unwrap();
        assert_eq!(stg.num_nodes(), 1);
        for c in 0..3 {
            assert_eq!(stg.graph.adj(c, 0), 0);
        }
        let pyr = PreExtender::canonical(square_pyramid());
        let stg = predicted_stg_universal(&pyr).unwrap();
        let base = crate::automorphisms::symmetry_type_graph(&square_pyramid()).unwrap();
        assert_eq!(stg.num_nodes(), 4);
        assert_eq!(stg.orbits, base.orbits);
        for node in 0..4 {
            assert_eq!(stg.graph.adj(3, node), node);
        }
    }

    #[test]
    fn deck_transformations_act_trivially_on_the_base() {
        let ext = two_hat(&polygon(4).unwrap()).unwrap();
        let m = ext.derive();
        for g in 0..ext.group().order() {
            let deck = m.deck_transformation(ext.group(), g);
            assert_eq!(facet_action_set(&m, ext.base(), &deck).unwrap(), vec![Perm::identity(8)]);
        }
    }

    #[test]
    fn facet_actions_are_friendly_and_give_the_stg() {
        let ext = two_hat(&polygon(4).unwrap()).unwrap();
        let m = ext.derive();
        for tau in automorphism_group(&m.graph).unwrap().iter().step_by(17) {
            let s = facet_action_set(&m, ext.base(), tau).unwrap();
            let rn = ext.pre().rn();
            assert!(is_friendly_set(ext.base(), rn, rn, &s).unwrap().friendly);
        }
        let c = stg_consistency(&ext).unwrap();
        assert!(c.equal && c.h_is_group && c.h_is_base_facet_stabilizer && c.h_in_heart, "{c:?}");
        assert_eq!(c.h_order, 8);
    }

    #[test]
    fn conjugation_law() {
        let pre = pyramid_triangle_pairing();
        let heart = friendly_group(&pre).unwrap();
        for tau in automorphism_group(pre.base()).unwrap() {
            let conj = PreExtender::new(pre.base().clone(), conjugate_pairing(pre.rn(), &tau)).unwrap();
            let mut expected: Vec<Perm> = heart.elements.iter().map(|s| s.conjugate_by(&tau)).collect();
            expected.sort_by_key(|p| p.apply(0));
            assert_eq!(friendly_group(&conj).unwrap().elements, expected);
        }
    }

    #[test]
    fn universal_isomorphism() {
        let tor = toroid_44(3, 3).unwrap().pre().clone();
        let sq = PreExtender::canonical(tor.base().clone());
        assert_eq!(universal_extensions_isomorphic(&sq, &sq).unwrap(), Some(Perm::identity(8)));
        assert!(universal_extensions_isomorphic(&sq, &twisted_square()).unwrap().is_some());
        assert!(universal_extensions_isomorphic(&sq, &tor).unwrap().is_some());
        let pyr = PreExtender::canonical(square_pyramid());
        assert!(universal_extensions_isomorphic(&pyr, &pyramid_triangle_pairing()).unwrap().is_none());
    }

    #[test]
    fn uniqueness_of_universal_extensions() {
        for k in [polygon(4).unwrap(), cube(3).unwrap(), simplex(3).unwrap()] {
            let r = has_unique_universal_extension(&k).unwrap();
            assert!(r.unique && r.witness.is_none());
        }
        let pyr = square_pyramid();
        let r = has_unique_universal_extension(&pyr).unwrap();
        assert!(!r.unique);
        let w = r.witness.unwrap();
        let aut = AutomorphismGroup::of(&pyr).unwrap();
        assert!(!facet_map_extends(&aut, &w));
        let facets = pyr.facets();
        let triangles: Vec<usize> = (0..5).filter(|&f| facets.block(f).len() == 6).collect();
        let maps = facet_isomorphisms(&pyr, triangles[0], triangles[1]);
        assert_eq!(maps.len(), 6);
        assert_eq!(maps.iter().filter(|m| facet_map_extends(&aut, m)).count(), 2);
    }
}
