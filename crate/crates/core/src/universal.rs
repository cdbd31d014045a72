//! Truncated balls of the universal extension `U(K, rn)` and the order of
//! `r_{n-1} r_n` in Cayley and universal extensions.
//!
//! The universal voltage group is the free product generated by `α_F`, one per
//! facet, with `α_F α_{rn F} = 1`. A ball of radius `L` keeps the flags
//! `(Φ, w)` with `|w| ≤ L`; color-`n` edges leaving the ball are reported as
//! missing rather than closed up.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::extender::{CayleyExtender, PreExtender};
use crate::groups::ReducedWord;
use crate::maniplex::Premaniplex;
use crate::perm::lcm;

#[derive(Debug, Clone)]
pub struct UniversalBall {
    pre: PreExtender,
    radius: usize,
    words: Vec<ReducedWord>,
    index: HashMap<Vec<usize>, usize>,
    /// `level_start[k]` is the index of the first word of length `k`; one
    /// extra entry closes the last level.
    level_start: Vec<usize>,
    /// `adjacency[c][x]`, `None` where the neighbor lies outside the ball.
    adjacency: Vec<Vec<Option<u32>>>,
}

impl UniversalBall {
    /// Enumerates reduced words breadth-first, appending generators in facet
    /// order, and builds the flags `(Φ, w)` at index `Φ·W + w`.
    pub fn new(pre: &PreExtender, radius: usize) -> Result<UniversalBall> {
        let cap = Caps::global().ball_words;
        let pairing = pre.pairing().clone();
        let k = pairing.num_facets();
        let mut words = vec![ReducedWord::empty(pairing.clone())];
        let mut level_start = vec![0, 1];
        for _ in 0..radius {
            let (lo, hi) = (level_start[level_start.len() - 2], level_start[level_start.len() - 1]);
            for w in lo..hi {
                for a in 0..k {
                    if words[w].last().is_some_and(|l| pairing.pair(l) == a) {
                        continue;
                    }
                    let mut next = words[w].clone();
                    next.push(a);
                    words.push(next);
                    if words.len() > cap {
                        return Err(Error::CapExceeded { what: "universal ball word count", cap });
                    }
                }
            }
            level_start.push(words.len());
        }
        let index: HashMap<Vec<usize>, usize> =
            words.iter().enumerate().map(|(i, w)| (w.letters().collect(), i)).collect();
        let base = pre.base();
        let n = base.rank();
        let wc = words.len();
        let mut adjacency = vec![vec![None; base.num_flags() * wc]; n + 1];
        for phi in 0..base.num_flags() {
            let facet = pre.facet_of(phi);
            let top = pre.rn().apply(phi);
            for (w, word) in words.iter().enumerate() {
                let x = phi * wc + w;
                for (c, row) in adjacency.iter_mut().enumerate().take(n) {
                    row[x] = Some((base.adj(c, phi) * wc + w) as u32);
                }
                let moved: Vec<usize> = word.left_mul_generator(facet).letters().collect();
                adjacency[n][x] = index.get(&moved).map(|&v| (top * wc + v) as u32);
            }
        }
        Ok(UniversalBall { pre: pre.clone(), radius, words, index, level_start, adjacency })
    }

    pub fn pre(&self) -> &PreExtender {
        &self.pre
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn rank(&self) -> usize {
        self.adjacency.len()
    }

    pub fn words(&self) -> &[ReducedWord] {
        &self.words
    }

    pub fn word_index(&self, word: &ReducedWord) -> Option<usize> {
        self.index.get(&word.letters().collect::<Vec<_>>()).copied()
    }

    pub fn num_flags(&self) -> usize {
        self.adjacency[0].len()
    }

    #[inline]
    pub fn flag(&self, phi: usize, word: usize) -> usize {
        phi * self.words.len() + word
    }

    /// `(Φ, word index)` of a ball flag.
    #[inline]
    pub fn provenance(&self, flag: usize) -> (usize, usize) {
        (flag / self.words.len(), flag % self.words.len())
    }

    pub fn word_length(&self, flag: usize) -> usize {
        self.words[self.provenance(flag).1].len()
    }

    /// Flags whose word is shorter than the radius.
    pub fn is_interior(&self, flag: usize) -> bool {
        self.word_length(flag) < self.radius
    }

    pub fn adj(&self, color: usize, flag: usize) -> Option<usize> {
        self.adjacency[color][flag].map(|y| y as usize)
    }

    /// Number of reduced words of each length `0..=L`.
    pub fn census(&self) -> Vec<usize> {
        self.level_start.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Cumulative word counts by radius.
    pub fn cumulative_census(&self) -> Vec<usize> {
        self.level_start[1..].to_vec()
    }
}

/// Result of [`ball_local_checks`]. Flag ids refer to the ball.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallReport {
    pub interior_flags: usize,
    /// Interior flags missing a neighbor.
    pub missing_neighbors: Vec<usize>,
    pub involution_failures: Vec<(usize, usize)>,
    pub commutation_failures: Vec<(usize, usize, usize)>,
    pub semiedges: Vec<(usize, usize)>,
    pub parallel_edges: Vec<(usize, usize, usize)>,
    /// Whether the `(n-1, n)` walk was examined (only when the predicted
    /// order is infinite).
    pub walk_checked: bool,
    /// Start flags whose alternating walk came back inside the ball.
    pub walk_returns: Vec<usize>,
}

impl BallReport {
    pub fn passes(&self) -> bool {
        self.missing_neighbors.is_empty()
            && self.involution_failures.is_empty()
            && self.commutation_failures.is_empty()
            && self.semiedges.is_empty()
            && self.parallel_edges.is_empty()
            && self.walk_returns.is_empty()
    }
}

/// Local maniplex axioms on the interior of a ball: all neighbors present,
/// involutions, `(r_i r_j)^2 = 1` for `|i - j| > 1` where the walk stays in
/// the ball, no semiedges or parallel edges, and, if `r_{n-1} r_n` has
/// infinite order, no return of the alternating walk within `2L` steps.
pub fn ball_local_checks(ball: &UniversalBall) -> BallReport {
    let r = ball.rank();
    let n = r - 1;
    let l = ball.radius();
    let mut report = BallReport {
        interior_flags: 0,
        missing_neighbors: vec![],
        involution_failures: vec![],
        commutation_failures: vec![],
        semiedges: vec![],
        parallel_edges: vec![],
        walk_checked: false,
        walk_returns: vec![],
    };
    for x in 0..ball.num_flags() {
        if !ball.is_interior(x) {
            continue;
        }
        report.interior_flags += 1;
        let nb: Vec<Option<usize>> = (0..r).map(|c| ball.adj(c, x)).collect();
        if nb.iter().any(Option::is_none) {
            report.missing_neighbors.push(x);
            continue;
        }
        let nb: Vec<usize> = nb.into_iter().flatten().collect();
        for c in 0..r {
            if ball.adj(c, nb[c]) != Some(x) {
                report.involution_failures.push((c, x));
            }
            if nb[c] == x {
                report.semiedges.push((c, x));
            }
            for d in c + 1..r {
                if nb[c] == nb[d] {
                    report.parallel_edges.push((c, d, x));
                }
            }
        }
        if ball.word_length(x) + 2 <= l {
            for i in 0..r {
                for j in i + 2..r {
                    let walk = [i, j, i, j];
                    let end = walk.iter().try_fold(x, |y, &c| ball.adj(c, y));
                    if end != Some(x) {
                        report.commutation_failures.push((i, j, x));
                    }
                }
            }
        }
    }
    if rn_order_universal(ball.pre()) == RnOrder::Infinite {
        report.walk_checked = true;
        for x in (0..ball.num_flags()).filter(|&x| ball.is_interior(x)) {
            let mut y = x;
            for step in 0..2 * l {
                let c = if step % 2 == 0 { n } else { n - 1 };
                match ball.adj(c, y) {
                    None => break,
                    Some(z) => y = z,
                }
                if y == x {
                    report.walk_returns.push(x);
                    break;
                }
            }
        }
    }
    report
}

/// Order of `r_{n-1} r_n`, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RnOrder {
    Finite(u64),
    Infinite,
}

impl fmt::Display for RnOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RnOrder::Finite(k) => write!(f, "{k}"),
            RnOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// Cycles of `Φ ↦ (rn Φ)^{n-1}` on base flags. Along a cycle `Φ_0 .. Φ_{L-1}`
/// the walk `r_n` then `r_{n-1}` multiplies the voltage on the left by
/// `ξ(Φ_{L-1}) ··· ξ(Φ_0)`; the order on the cycle is `L` times the order of
/// that product.
fn top_cycles(pre: &PreExtender) -> Vec<Vec<usize>> {
    let k = pre.base();
    let n = k.rank();
    let psi = |f: usize| k.adj(n - 1, pre.rn().apply(f));
    let mut seen = vec![false; k.num_flags()];
    let mut cycles = vec![];
    for start in 0..k.num_flags() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![];
        let mut f = start;
        while !seen[f] {
            seen[f] = true;
            cycle.push(f);
            f = psi(f);
        }
        cycles.push(cycle);
    }
    cycles
}

/// Predicted order of `r_{n-1} r_n` in the derived maniplex of `ext`.
pub fn rn_order_predicted(ext: &CayleyExtender) -> u64 {
    let g = ext.group();
    top_cycles(ext.pre()).iter().fold(1, |acc, cycle| {
        let v = cycle
            .iter()
            .fold(g.identity(), |v, &f| g.compose(ext.voltage_of_flag(f), v));
        lcm(acc, cycle.len() as u64 * g.element_order(v))
    })
}

/// For canonical extenders: twice the lcm of the orders of `ξ(F') ξ(F)` over
/// facets `F`, `F'` sharing a subfacet. `None` when `rn` is not the identity.
pub fn rn_order_canonical_formula(ext: &CayleyExtender) -> Option<u64> {
    if !ext.pre().is_canonical() {
        return None;
    }
    let k = ext.base();
    let n = k.rank();
    let g = ext.group();
    Some(
        2 * (0..k.num_flags()).fold(1, |acc, f| {
            let xi_f = ext.voltage_of_flag(f);
            let xi_g = ext.voltage_of_flag(k.adj(n - 1, f));
            lcm(acc, g.element_order(g.compose(xi_g, xi_f)))
        }),
    )
}

/// Order of `r_{n-1} r_n` in the universal extension.
pub fn rn_order_universal(pre: &PreExtender) -> RnOrder {
    let pairing = pre.pairing().clone();
    let mut total = 1;
    for cycle in top_cycles(pre) {
        let mut v = ReducedWord::empty(pairing.clone());
        for &f in &cycle {
            v = v.left_mul_generator(pre.facet_of(f));
        }
        match v.order() {
            None => return RnOrder::Infinite,
            Some(o) => total = lcm(total, cycle.len() as u64 * o),
        }
    }
    RnOrder::Finite(total)
}

/// Order of the flag permutation `r_{n-1} ∘ r_n` of a rank-`n+1` premaniplex.
pub fn rn_order_actual(m: &Premaniplex) -> u64 {
    let n = m.rank() - 1;
    let perm = crate::perm::Perm::from_images(
        (0..m.num_flags()).map(|f| m.adj(n - 1, m.adj(n, f))).collect(),
    )
    .expect("composition of involutions is a permutation");
    perm.order()
}

/// Checks that `(Φ, w) ↦ (Φ, ξ(w))` maps the ball into the derived graph of
/// `ext` compatibly with every adjacency present in the ball.
pub fn project_to(ball: &UniversalBall, ext: &CayleyExtender) -> Result<bool> {
    if ext.pre() != ball.pre() {
        return Err(Error::Precondition("extender and ball use different pre-extenders".into()));
    }
    let g = ext.group();
    let derived = ext.derive();
    let evaluate = |w: &ReducedWord| {
        w.letters()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .fold(g.identity(), |acc, l| g.compose(ext.xi()[l], acc))
    };
    let values: Vec<usize> = ball.words().iter().map(evaluate).collect();
    let project = |x: usize| {
        let (phi, w) = ball.provenance(x);
        derived.flag(phi, values[w])
    };
    for c in 0..ball.rank() {
        for x in 0..ball.num_flags() {
            if let Some(y) = ball.adj(c, x) {
                if project(y) != derived.graph.adj(c, project(x)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
