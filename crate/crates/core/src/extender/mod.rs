//! Pre-extenders, Cayley extenders and their derived maniplexes.
//!
//! A pre-extender pairs the facets of a rank-`n` maniplex `K` through a flag
//! involution `rn` commuting with colors `0..n-1`. A Cayley extender adds a
//! voltage `ξ(F)` in a finite group per facet, with `ξ(rn F) = ξ(F)^-1`. The
//! derived maniplex has flags `(Φ, γ)`, stored at index `Φ·|G| + γ`:
//! `(Φ, γ)^i = (Φ^i, γ)` for `i < n` and `(Φ, γ)^n = (rn Φ, ξ(F) γ)`.

mod coextender;
mod polytopal;
mod quotient;
mod search;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{FacetPairing, GroupModel};
use crate::maniplex::{ManiplexDefect, Premaniplex};
use crate::partition::Partition;
use crate::perm::Perm;

pub use coextender::Coextender;
pub use polytopal::{face_lattice_oracle, is_polytopal, PolytopalityWitness};
pub use quotient::{quotient_extension, QuotientExtension};
pub use search::{search_non_polytopal, small_pairings, NonPolytopalHit, SearchOutcome, SMALL_GROUPS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreExtender {
    base: Premaniplex,
    rn: Perm,
    facets: Partition,
    pairing: Arc<FacetPairing>,
}

impl PreExtender {
    /// Validates `rn` against `base`: it must be an involution commuting with
    /// every color below `n - 1`.
    pub fn new(base: Premaniplex, rn: Perm) -> Result<PreExtender> {
        let n = base.rank();
        if rn.len() != base.num_flags() {
            return Err(Error::Structural(format!(
                "rn has {} images but the base has {} flags",
                rn.len(),
                base.num_flags()
            )));
        }
        if let Some(flag) = (0..rn.len()).find(|&f| rn.apply(rn.apply(f)) != f) {
            return Err(Error::NotInvolution { color: n, flag });
        }
        for i in 0..n.saturating_sub(1) {
            if let Some(flag) = (0..rn.len()).find(|&f| rn.apply(base.adj(i, f)) != base.adj(i, rn.apply(f))) {
                return Err(Error::NotCommuting { i, j: n, flag });
            }
        }
        let facets = base.facets();
        let pair = (0..facets.num_blocks())
            .map(|b| facets.block_of(rn.apply(facets.representative(b))))
            .collect();
        let pairing = Arc::new(FacetPairing::new(pair)?);
        Ok(PreExtender { base, rn, facets, pairing })
    }

    /// The pre-extender with `rn = Id`.
    pub fn canonical(base: Premaniplex) -> PreExtender {
        let rn = Perm::identity(base.num_flags());
        PreExtender::new(base, rn).expect("identity pairing is always valid")
    }

    pub fn base(&self) -> &Premaniplex {
        &self.base
    }

    pub fn rn(&self) -> &Perm {
        &self.rn
    }

    pub fn is_canonical(&self) -> bool {
        self.rn.is_identity()
    }

    /// Facets of the base, numbered by smallest flag.
    pub fn facets(&self) -> &Partition {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.num_blocks()
    }

    pub fn facet_of(&self, flag: usize) -> usize {
        self.facets.block_of(flag)
    }

    pub fn pairing(&self) -> &Arc<FacetPairing> {
        &self.pairing
    }

    /// Whether `rn` fixes every flag of facet `f`.
    pub fn fixes_facet_pointwise(&self, f: usize) -> bool {
        self.facets.block(f).iter().all(|&x| self.rn.apply(x) == x)
    }

    /// Whether some flag `Φ` of facet `f` has `rn Φ` adjacent to `Φ` in `K`.
    pub fn facet_has_adjacent_image(&self, f: usize) -> bool {
        self.facets
            .block(f)
            .iter()
            .any(|&x| (0..self.base.rank()).any(|i| self.base.adj(i, x) == self.rn.apply(x)))
    }

    /// The rank-`n+1` premaniplex `K_rn`: `K` with `rn` as top color.
    pub fn pre_extension(&self) -> Premaniplex {
        self.base.with_top_color(&self.rn)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CayleyExtender {
    pre: PreExtender,
    group: Arc<GroupModel>,
    xi: Vec<usize>,
}

impl CayleyExtender {
    /// `xi[F]` is the voltage of facet `F` (element index in `group`).
    pub fn new(pre: PreExtender, group: Arc<GroupModel>, xi: Vec<usize>) -> Result<CayleyExtender> {
        if xi.len() != pre.num_facets() {
            return Err(Error::InvalidParameter(format!(
                "{} voltages for {} facets",
                xi.len(),
                pre.num_facets()
            )));
        }
        if let Some(&g) = xi.iter().find(|&&g| g >= group.order()) {
            return Err(Error::InvalidParameter(format!("voltage index {g} outside the group")));
        }
        for f in 0..xi.len() {
            if xi[pre.pairing.pair(f)] != group.invert(xi[f]) {
                return Err(Error::VoltageNotInverse { facet: pre.facets.representative(f) });
            }
        }
        Ok(CayleyExtender { pre, group, xi })
    }

    /// Voltages given on one facet of each `rn`-pair; the partner receives
    /// the inverse. Facets are addressed by index.
    pub fn from_partial(pre: PreExtender, group: Arc<GroupModel>, given: &[(usize, usize)]) -> Result<CayleyExtender> {
        let mut xi = vec![None; pre.num_facets()];
        for &(f, g) in given {
            if f >= xi.len() || g >= group.order() {
                return Err(Error::InvalidParameter(format!("bad voltage entry ({f}, {g})")));
            }
            let partner = pre.pairing.pair(f);
            let ginv = group.invert(g);
            for (facet, value) in [(f, g), (partner, ginv)] {
                match xi[facet] {
                    Some(old) if old != value => {
                        return Err(Error::VoltageNotInverse { facet: pre.facets.representative(facet) })
                    }
                    _ => xi[facet] = Some(value),
                }
            }
        }
        let xi = xi
            .into_iter()
            .enumerate()
            .map(|(f, v)| {
                v.ok_or_else(|| Error::InvalidParameter(format!("no voltage for facet at flag {}", pre.facets.representative(f))))
            })
            .collect::<Result<Vec<_>>>()?;
        CayleyExtender::new(pre, group, xi)
    }

    pub fn pre(&self) -> &PreExtender {
        &self.pre
    }

    pub fn base(&self) -> &Premaniplex {
        &self.pre.base
    }

    pub fn group(&self) -> &Arc<GroupModel> {
        &self.group
    }

    pub fn xi(&self) -> &[usize] {
        &self.xi
    }

    pub fn voltage_of_flag(&self, flag: usize) -> usize {
        self.xi[self.pre.facet_of(flag)]
    }

    /// Number of flags of the derived maniplex.
    pub fn derived_flag_count(&self) -> usize {
        self.base().num_flags() * self.group.order()
    }

    pub fn derive(&self) -> DerivedManiplex {
        derived_maniplex(self)
    }
}

/// Diagnostics recorded while building a derived graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedDiagnostics {
    /// Whether the voltages generate the whole group.
    pub voltages_generate: bool,
    /// Facets with trivial voltage although `rn` fixes them pointwise or
    /// sends one of their flags to a neighbor.
    pub degenerate_facets: Vec<usize>,
    pub defect: Option<ManiplexDefect>,
}

impl DerivedDiagnostics {
    pub fn is_maniplex(&self) -> bool {
        self.defect.is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivedManiplex {
    pub graph: Premaniplex,
    base_flags: usize,
    group_order: usize,
    pub diagnostics: DerivedDiagnostics,
}

impl DerivedManiplex {
    pub(crate) fn from_parts(graph: Premaniplex, base_flags: usize, group_order: usize) -> DerivedManiplex {
        let defect = graph.maniplex_defect();
        DerivedManiplex {
            graph,
            base_flags,
            group_order,
            diagnostics: DerivedDiagnostics { voltages_generate: true, degenerate_facets: vec![], defect },
        }
    }

    pub fn num_flags(&self) -> usize {
        self.graph.num_flags()
    }

    pub fn is_maniplex(&self) -> bool {
        self.diagnostics.is_maniplex()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn base_flags(&self) -> usize {
        self.base_flags
    }

    #[inline]
    pub fn flag(&self, phi: usize, gamma: usize) -> usize {
        phi * self.group_order + gamma
    }

    /// `(Φ, γ)` of a derived flag.
    #[inline]
    pub fn provenance(&self, flag: usize) -> (usize, usize) {
        (flag / self.group_order, flag % self.group_order)
    }

    /// The deck transformation `(Φ, γ) ↦ (Φ, γ g)`.
    pub fn deck_transformation(&self, group: &GroupModel, g: usize) -> Perm {
        let right: Vec<usize> = (0..self.group_order).map(|x| group.compose(x, g)).collect();
        let images = (0..self.num_flags())
            .map(|f| {
                let (phi, gamma) = self.provenance(f);
                self.flag(phi, right[gamma]) as u32
            })
            .collect();
        Perm::from_images_unchecked(images)
    }
}

pub fn pre_extension(pre: &PreExtender) -> Premaniplex {
    pre.pre_extension()
}

pub fn derived_maniplex(ext: &CayleyExtender) -> DerivedManiplex {
    let k = ext.base();
    let n = k.rank();
    let order = ext.group.order();
    let left: Vec<Vec<u32>> = ext.xi.iter().map(|&g| ext.group.left_mult_table(g)).collect();
    let m = k.num_flags() * order;
    let mut adjacency = vec![vec![0usize; m]; n + 1];
    for phi in 0..k.num_flags() {
        let top = ext.pre.rn.apply(phi);
        let table = &left[ext.pre.facet_of(phi)];
        for gamma in 0..order {
            let x = phi * order + gamma;
            for (i, row) in adjacency.iter_mut().enumerate().take(n) {
                row[x] = k.adj(i, phi) * order + gamma;
            }
            adjacency[n][x] = top * order + table[gamma] as usize;
        }
    }
    let graph = Premaniplex::from_raw(n + 1, adjacency).expect("derived adjacency is in range");
    let voltages_generate = ext.group.subgroup_generated(&ext.xi).len() == order;
    let degenerate_facets = (0..ext.pre.num_facets())
        .filter(|&f| {
            ext.xi[f] == 0 && (ext.pre.fixes_facet_pointwise(f) || ext.pre.facet_has_adjacent_image(f))
        })
        .collect();
    let defect = graph.maniplex_defect();
    DerivedManiplex {
        graph,
        base_flags: k.num_flags(),
        group_order: order,
        diagnostics: DerivedDiagnostics { voltages_generate, degenerate_facets, defect },
    }
}
