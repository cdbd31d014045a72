use std::sync::Arc;

use crate::error::{Error, Result};
use crate::extender::{CayleyExtender, PreExtender};
use crate::groups::GroupModel;
use crate::maniplex::Premaniplex;
use crate::perm::Perm;

use super::seeds::{cube, cube_flags};

fn require_maniplex(k: &Premaniplex) -> Result<()> {
    match k.maniplex_defect() {
        None => Ok(()),
        Some(d) => Err(Error::Precondition(format!("base is not a maniplex: {d}"))),
    }
}

/// Fails with the first flag whose facet is glued to itself along a subfacet.
pub fn check_no_self_glued_facet(k: &Premaniplex) -> Result<()> {
    let facets = k.facets();
    let sub = k.rank() - 1;
    match (0..k.num_flags()).find(|&f| facets.same_block(f, k.adj(sub, f))) {
        Some(flag) => Err(Error::Precondition(format!("facet of flag {flag} is glued to itself"))),
        None => Ok(()),
    }
}

/// The ditope `{K, 2}`: canonical, `G = Z_2`, every voltage the involution.
pub fn ditope(k: &Premaniplex) -> Result<CayleyExtender> {
    require_maniplex(k)?;
    let pre = PreExtender::canonical(k.clone());
    let g = Arc::new(GroupModel::cyclic(2)?);
    let c = g.generators()[0];
    let xi = vec![c; pre.num_facets()];
    CayleyExtender::new(pre, g, xi)
}

/// Canonical extender over `Z_2^k` with `ξ(F) = e_{coloring[F]}`.
pub fn color_coded(k: &Premaniplex, coloring: &[usize]) -> Result<CayleyExtender> {
    require_maniplex(k)?;
    let pre = PreExtender::canonical(k.clone());
    if coloring.len() != pre.num_facets() {
        return Err(Error::InvalidParameter(format!(
            "{} colors for {} facets",
            coloring.len(),
            pre.num_facets()
        )));
    }
    let classes = coloring.iter().max().map_or(0, |&c| c + 1);
    let g = Arc::new(GroupModel::elem_abelian_2(classes)?);
    let xi = coloring.iter().map(|&c| g.generators()[c]).collect();
    CayleyExtender::new(pre, g, xi)
}

/// `2^K`: every facet in its own color class.
pub fn two_hat(k: &Premaniplex) -> Result<CayleyExtender> {
    require_maniplex(k)?;
    check_no_self_glued_facet(k)?;
    let n = k.facets().num_blocks();
    color_coded(k, &(0..n).collect::<Vec<_>>())
}

/// `2s^{K-1}` over `Z_s^{m-1} ⋊ <χ>`, facets numbered by smallest flag so
/// the facet of flag 0 is `F_0`.
pub fn two_hat_s_minus1(k: &Premaniplex, s: usize) -> Result<CayleyExtender> {
    require_maniplex(k)?;
    check_no_self_glued_facet(k)?;
    let pre = PreExtender::canonical(k.clone());
    let g = Arc::new(GroupModel::semidirect_zs_inversion(s, pre.num_facets())?);
    let xi = g.generators().to_vec();
    CayleyExtender::new(pre, g, xi)
}

/// Facet adjacency: facets sharing a subfacet.
pub fn facet_graph(k: &Premaniplex) -> Vec<Vec<usize>> {
    let facets = k.facets();
    let sub = k.rank() - 1;
    let mut adj = vec![vec![]; facets.num_blocks()];
    for f in 0..k.num_flags() {
        let (a, b) = (facets.block_of(f), facets.block_of(k.adj(sub, f)));
        if !adj[a].contains(&b) {
            adj[a].push(b);
        }
    }
    adj
}

/// Proper 2-coloring of the facet graph with the facet of flag 0 colored 0,
/// or an odd closed walk of facets.
pub fn facet_two_coloring(k: &Premaniplex) -> Result<Vec<usize>, Vec<usize>> {
    let adj = facet_graph(k);
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != usize::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                if color[b] == usize::MAX {
                    color[b] = 1 - color[a];
                    parent[b] = a;
                    queue.push_back(b);
                } else if color[b] == color[a] {
                    let path_to_root = |mut x: usize| {
                        let mut p = vec![x];
                        while parent[x] != usize::MAX {
                            x = parent[x];
                            p.push(x);
                        }
                        p
                    };
                    let (pa, pb) = (path_to_root(a), path_to_root(b));
                    let common = pa.iter().find(|x| pb.contains(x)).copied().unwrap_or(start);
                    let mut cycle: Vec<usize> = pa.iter().copied().take_while(|&x| x != common).collect();
                    cycle.push(common);
                    let back: Vec<usize> = pb.iter().copied().take_while(|&x| x != common).collect();
                    cycle.extend(back.into_iter().rev());
                    return Err(cycle);
                }
            }
        }
    }
    Ok(color)
}

/// The flat extension `K|2m` over the dihedral group of order `2m`; `two_m`
/// must be even. Facets are colored `x`, `y` by a proper 2-coloring.
pub fn flat_extension(k: &Premaniplex, two_m: usize) -> Result<CayleyExtender> {
    require_maniplex(k)?;
    if two_m < 2 || two_m % 2 != 0 {
        return Err(Error::InvalidParameter(format!("flat extension needs an even 2m >= 2, got {two_m}")));
    }
    let coloring = facet_two_coloring(k).map_err(|cycle| {
        Error::Precondition(format!("facet graph is not bipartite; odd cycle through facets {cycle:?}"))
    })?;
    let pre = PreExtender::canonical(k.clone());
    let g = Arc::new(GroupModel::dihedral(two_m / 2)?);
    let xi = coloring.iter().map(|&c| g.generators()[c]).collect();
    CayleyExtender::new(pre, g, xi)
}

/// Toroid `{4, 3^{n-2}, 4}` with a rectangular lattice, as an extender of the
/// `n`-cube: the facet `x_k = ±1` is paired with `x_k = ∓1` through the
/// reflection in direction `k`, with voltage `±e_k` in `Z_{a_1} × ... × Z_{a_n}`.
pub fn toroid_cubic(periods: &[usize]) -> Result<CayleyExtender> {
    let n = periods.len();
    if n == 0 {
        return Err(Error::InvalidParameter("toroid needs at least one period".into()));
    }
    if let Some(&a) = periods.iter().find(|&&a| a < 2) {
        return Err(Error::InvalidParameter(format!(
            "toroid period {a} is below 2: the derived graph would have semiedges or parallel edges"
        )));
    }
    let base = cube(n)?;
    let flags = cube_flags(n);
    let index: std::collections::HashMap<&Vec<(usize, bool)>, usize> =
        flags.iter().enumerate().map(|(i, f)| (f, i)).collect();
    // The facet of a flag is its last entry (coordinate, sign).
    let rn = Perm::from_images(
        flags
            .iter()
            .map(|f| {
                let k = f[n - 1].0;
                let g: Vec<(usize, bool)> = f.iter().map(|&(c, s)| (c, if c == k { !s } else { s })).collect();
                index[&g]
            })
            .collect(),
    )?;
    let pre = PreExtender::new(base, rn)?;
    let factors = periods.iter().map(|&a| GroupModel::cyclic(a)).collect::<Result<Vec<_>>>()?;
    let g = Arc::new(GroupModel::direct_product(&factors)?);
    let xi = (0..pre.num_facets())
        .map(|facet| {
            let (k, positive) = flags[pre.facets().representative(facet)][n - 1];
            let e = g.generators()[k];
            if positive {
                e
            } else {
                g.invert(e)
            }
        })
        .collect();
    CayleyExtender::new(pre, g, xi)
}

/// The toroidal map `{4,4}_{(a,0),(0,b)}`.
pub fn toroid_44(a: usize, b: usize) -> Result<CayleyExtender> {
    toroid_cubic(&[a, b])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::seeds::{polygon, square_pyramid};

    #[test]
    fn flag_counts() {
        let sq = polygon(4).unwrap();
        assert_eq!(ditope(&sq).unwrap().derived_flag_count(), 16);
        assert_eq!(two_hat(&sq).unwrap().derived_flag_count(), 128);
        assert_eq!(two_hat_s_minus1(&sq, 3).unwrap().derived_flag_count(), 432);
        assert_eq!(flat_extension(&sq, 6).unwrap().derived_flag_count(), 48);
        assert_eq!(toroid_44(3, 2).unwrap().derived_flag_count(), 48);
        assert_eq!(two_hat(&cube(3).unwrap()).unwrap().derived_flag_count(), 3072);
    }

    #[test]
    fn single_color_class_is_the_ditope() {
        let sq = polygon(4).unwrap();
        let one = color_coded(&sq, &[0, 0, 0, 0]).unwrap().derive();
        let d = ditope(&sq).unwrap().derive();
        assert_eq!(one.graph, d.graph);
    }

    #[test]
    fn flat_extension_rejects_odd_facet_cycles() {
        let err = flat_extension(&polygon(3).unwrap(), 4).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("odd cycle")));
        assert!(facet_two_coloring(&square_pyramid()).is_err());
        let cycle = facet_two_coloring(&polygon(5).unwrap()).unwrap_err();
        assert_eq!(cycle.len() % 2, 1);
        let adj = facet_graph(&polygon(5).unwrap());
        for w in 0..cycle.len() {
            assert!(adj[cycle[w]].contains(&cycle[(w + 1) % cycle.len()]));
        }
    }

    #[test]
    fn self_glued_facets_are_rejected() {
        // The digon's two vertices are both ends of each edge.
        let digon = polygon(2).unwrap();
        assert!(check_no_self_glued_facet(&digon).is_ok());
        let hemi = crate::maniplex::Premaniplex::new(2, vec![vec![1, 0], vec![1, 0]]);
        assert!(hemi.is_ok());
    }

    #[test]
    fn toroid_periods_must_be_at_least_two() {
        assert!(toroid_44(1, 3).is_err());
        let t = toroid_44(3, 2).unwrap().derive();
        assert!(t.is_maniplex());
        assert_eq!(t.graph.vertices().num_blocks(), 6);
        assert_eq!(t.graph.faces(1).unwrap().num_blocks(), 12);
        assert_eq!(t.graph.facets().num_blocks(), 6);
    }

    #[test]
    fn semidirect_generators_are_involutions() {
        let ext = two_hat_s_minus1(&polygon(4).unwrap(), 4).unwrap();
        for &g in ext.xi() {
            assert_eq!(ext.group().element_order(g), 2);
        }
    }
}
