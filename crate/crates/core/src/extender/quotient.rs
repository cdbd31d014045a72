use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::GroupModel;

use super::{derived_maniplex, CayleyExtender};

/// An extender pushed through a surjective homomorphism `G → H`, with the
/// covering of derived graphs verified flag by flag.
#[derive(Debug, Clone)]
pub struct QuotientExtension {
    pub extender: CayleyExtender,
    /// `hom[g]` is the image of element `g` of the original group.
    pub hom: Vec<usize>,
    /// `(Φ, γ) ↦ (Φ, hom γ)` commutes with every color.
    pub covering_verified: bool,
}

/// `images[k]` is the image of the `k`-th generator of the extender's group.
pub fn quotient_extension(ext: &CayleyExtender, target: Arc<GroupModel>, images: &[usize]) -> Result<QuotientExtension> {
    let hom = ext.group().homomorphism_to(&target, images)?;
    let reached: HashSet<usize> = hom.iter().copied().collect();
    if reached.len() != target.order() {
        return Err(Error::NotHomomorphism(format!(
            "image has {} of {} elements, not surjective",
            reached.len(),
            target.order()
        )));
    }
    let xi = ext.xi().iter().map(|&g| hom[g]).collect();
    let extender = CayleyExtender::new(ext.pre().clone(), target, xi)?;
    let upper = derived_maniplex(ext);
    let lower = derived_maniplex(&extender);
    let project = |x: usize| {
        let (phi, gamma) = upper.provenance(x);
        lower.flag(phi, hom[gamma])
    };
    let covering_verified = (0..upper.graph.rank()).all(|c| {
        (0..upper.num_flags()).all(|x| project(upper.graph.adj(c, x)) == lower.graph.adj(c, project(x)))
    });
    Ok(QuotientExtension { extender, hom, covering_verified })
}
