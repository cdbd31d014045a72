//! Bounded exhaustive search for Cayley extenders whose derived maniplex is
//! not polytopal.

use std::sync::Arc;

use crate::error::Result;
use crate::friendly::facet_isomorphisms;
use crate::groups::{parse_group_spec, GroupModel};
use crate::maniplex::Premaniplex;
use crate::perm::Perm;

use super::{face_lattice_oracle, is_polytopal, CayleyExtender, PolytopalityWitness, PreExtender};

/// Voltage groups of order at most 8, smallest first.
pub const SMALL_GROUPS: &[&str] = &[
    "cyclic 2",
    "cyclic 3",
    "cyclic 4",
    "elemabelian2 2",
    "cyclic 5",
    "cyclic 6",
    "dihedral 3",
    "cyclic 7",
    "cyclic 8",
    "product cyclic 4 ; cyclic 2",
    "elemabelian2 3",
    "dihedral 4",
    "perm (0 1 2 3)(4 5 6 7), (0 4 2 6)(1 7 3 5)",
];

#[derive(Debug, Clone)]
pub struct NonPolytopalHit {
    pub extender: CayleyExtender,
    pub witness: PolytopalityWitness,
    /// Verdict of the face-lattice oracle on the same derived graph.
    pub oracle_polytopal: bool,
}

#[derive(Debug, Clone, Default)]
pub struct SearchOutcome {
    pub pairings: usize,
    pub extenders: usize,
    pub maniplexes: usize,
    pub non_polytopal: usize,
    /// Instances where the two checkers disagree.
    pub disagreements: usize,
    pub first: Option<NonPolytopalHit>,
}

/// Facet pairings of `k` whose restriction differs from the identity on at
/// most `max_moved` facets.
pub fn small_pairings(k: &Premaniplex, max_moved: usize) -> Vec<Perm> {
    let nf = k.facets().num_blocks();
    let m = k.num_flags();
    // Non-identity pieces: (facets touched, flag pairs).
    let mut pieces: Vec<(Vec<usize>, Vec<(usize, usize)>)> = vec![];
    for a in 0..nf {
        for map in facet_isomorphisms(k, a, a) {
            let lookup: std::collections::HashMap<usize, usize> = map.flags.iter().copied().collect();
            let identity = map.flags.iter().all(|&(x, y)| x == y);
            let involution = map.flags.iter().all(|&(x, y)| lookup[&y] == x);
            if involution && !identity {
                pieces.push((vec![a], map.flags));
            }
        }
        for b in a + 1..nf {
            for map in facet_isomorphisms(k, a, b) {
                pieces.push((vec![a, b], map.flags));
            }
        }
    }
    let mut out = vec![Perm::identity(m)];
    let build = |chosen: &[&(Vec<usize>, Vec<(usize, usize)>)]| {
        let mut images: Vec<usize> = (0..m).collect();
        for (_, flags) in chosen {
            for &(x, y) in flags {
                images[x] = y;
                images[y] = x;
            }
        }
        Perm::from_images(images).expect("pairing")
    };
    for (i, p) in pieces.iter().enumerate() {
        if p.0.len() <= max_moved {
            out.push(build(&[p]));
        }
        for q in &pieces[i + 1..] {
            let disjoint = p.0.iter().all(|f| !q.0.contains(f));
            if disjoint && p.0.len() + q.0.len() <= max_moved {
                out.push(build(&[p, q]));
            }
        }
    }
    out
}

/// Searches every pairing from [`small_pairings`], every group of
/// [`SMALL_GROUPS`] and every voltage assignment with `ξ(rn F) = ξ(F)^-1`
/// that generates the group. Derived graphs that are maniplexes are checked
/// with [`is_polytopal`] and the face-lattice oracle.
pub fn search_non_polytopal(k: &Premaniplex, max_moved: usize, stop_at_first: bool) -> Result<SearchOutcome> {
    let mut outcome = SearchOutcome::default();
    let groups: Vec<Arc<GroupModel>> = SMALL_GROUPS
        .iter()
        .map(|s| parse_group_spec(s).map(Arc::new))
        .collect::<Result<_>>()?;
    let pairings = small_pairings(k, max_moved);
    outcome.pairings = pairings.len();
    for g in &groups {
        let involutions: Vec<usize> = (0..g.order()).filter(|&x| g.invert(x) == x).collect();
        let everything: Vec<usize> = (0..g.order()).collect();
        for rn in &pairings {
            let pre = PreExtender::new(k.clone(), rn.clone())?;
            let reps: Vec<usize> = (0..pre.num_facets()).filter(|&f| pre.pairing().pair(f) >= f).collect();
            let choices: Vec<&[usize]> = reps
                .iter()
                .map(|&f| if pre.pairing().pair(f) == f { &involutions[..] } else { &everything[..] })
                .collect();
            let mut counter = vec![0usize; reps.len()];
            loop {
                let given: Vec<(usize, usize)> =
                    reps.iter().zip(&counter).zip(&choices).map(|((&f, &c), ch)| (f, ch[c])).collect();
                if g.subgroup_generated(&given.iter().map(|x| x.1).collect::<Vec<_>>()).len() == g.order() {
                    let ext = CayleyExtender::from_partial(pre.clone(), g.clone(), &given)?;
                    outcome.extenders += 1;
                    let d = ext.derive();
                    if d.is_maniplex() {
                        outcome.maniplexes += 1;
                        let witness = is_polytopal(&d.graph);
                        let oracle = face_lattice_oracle(&d.graph)?;
                        if oracle == witness.is_some() {
                            outcome.disagreements += 1;
                        }
                        if let Some(witness) = witness {
                            outcome.non_polytopal += 1;
                            if outcome.first.is_none() {
                                outcome.first =
                                    Some(NonPolytopalHit { extender: ext, witness, oracle_polytopal: oracle });
                                if stop_at_first {
                                    return Ok(outcome);
                                }
                            }
                        }
                    }
                }
                // Odometer over the voltage choices.
                let mut pos = 0;
                while pos < counter.len() {
                    counter[pos] += 1;
                    if counter[pos] < choices[pos].len() {
                        break;
                    }
                    counter[pos] = 0;
                    pos += 1;
                }
                if pos == counter.len() {
                    break;
                }
            }
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::polygon;

    #[test]
    fn pairings_of_the_square() {
        let sq = polygon(4).unwrap();
        let ps = small_pairings(&sq, 2);
        assert!(ps[0].is_identity());
        for p in &ps {
            PreExtender::new(sq.clone(), p.clone()).unwrap();
        }
        // 4 self-flips, 6 pairs with 2 isomorphisms each, 6 pairs of flips.
        assert_eq!(ps.len(), 1 + 4 + 12 + 6);
    }

    #[test]
    fn every_group_parses_with_order_at_most_8() {
        for s in SMALL_GROUPS {
            let g = parse_group_spec(s).unwrap();
            assert!(g.order() <= 8, "{s}");
        }
    }
}
