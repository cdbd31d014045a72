use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::maniplex::Premaniplex;
use crate::partition::Partition;

/// Two flags connected by colors in `[k, n-1]` and by colors in `[0, m]` but
/// not by colors in `[k, m]`. When `k = m + 1` the interval is empty and the
/// flags are simply distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopalityWitness {
    pub k: usize,
    pub m: usize,
    pub flags: (usize, usize),
}

/// Path-intersection check on the flag graph. Returns `None` when the
/// maniplex is polytopal.
pub fn is_polytopal(p: &Premaniplex) -> Option<PolytopalityWitness> {
    let n = p.rank();
    // components[a][b - a] for the interval [a, b].
    let intervals: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let parts: Vec<Partition> = intervals
        .par_iter()
        .map(|&(a, b)| p.components_by(|c| a <= c && c <= b))
        .collect();
    let comp = |a: usize, b: usize| -> &Partition {
        let idx = intervals.iter().position(|&iv| iv == (a, b)).expect("interval");
        &parts[idx]
    };
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|m| (0..=(m + 1).min(n - 1)).map(move |k| (k, m))).collect();
    let results: Vec<Option<PolytopalityWitness>> = pairs
        .par_iter()
        .map(|&(k, m)| {
            let upper = comp(k, n - 1);
            let lower = comp(0, m);
            let middle = if k <= m { Some(comp(k, m)) } else { None };
            let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
            for f in 0..p.num_flags() {
                let key = (upper.block_of(f), lower.block_of(f));
                match seen.get(&key) {
                    None => {
                        seen.insert(key, f);
                    }
                    Some(&g) => {
                        let joined = middle.is_some_and(|c| c.same_block(f, g));
                        if !joined {
                            return Some(PolytopalityWitness { k, m, flags: (g, f) });
                        }
                    }
                }
            }
            None
        })
        .collect();
    results.into_iter().flatten().next()
}

/// Independent polytopality check through the face poset: faces of every
/// rank plus a least and greatest face, incidence by sharing a flag. True iff
/// the order is transitive, maximal chains correspond one-to-one to flags and
/// every interval of length 2 is a diamond.
pub fn face_lattice_oracle(p: &Premaniplex) -> Result<bool> {
    let cap = Caps::global().face_lattice_flags;
    if p.num_flags() > cap {
        return Err(Error::CapExceeded { what: "face lattice flag count", cap });
    }
    let n = p.rank();
    let faces: Vec<Partition> = (0..n).map(|i| p.faces(i).expect("color in range")).collect();
    // Element ids: 0 = least face, then faces rank by rank, then greatest face.
    let mut offset = vec![1usize];
    for part in &faces {
        offset.push(offset.last().unwrap() + part.num_blocks());
    }
    let top = *offset.last().unwrap();
    let count = top + 1;
    let rank_of = |e: usize| -> isize {
        if e == 0 {
            -1
        } else if e == top {
            n as isize
        } else {
            (offset.iter().rposition(|&o| o <= e).unwrap()) as isize
        }
    };
    let chain_of = |f: usize| -> Vec<usize> {
        let mut c = vec![0];
        c.extend((0..n).map(|i| offset[i] + faces[i].block_of(f)));
        c.push(top);
        c
    };
    let mut less: HashSet<(usize, usize)> = HashSet::new();
    let mut up: Vec<Vec<usize>> = vec![vec![]; count];
    let mut add = |a: usize, b: usize, less: &mut HashSet<(usize, usize)>| {
        if less.insert((a, b)) {
            up[a].push(b);
        }
    };
    for f in 0..p.num_flags() {
        let c = chain_of(f);
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                add(c[i], c[j], &mut less);
            }
        }
    }
    for e in 1..top {
        add(0, e, &mut less);
        add(e, top, &mut less);
    }
    add(0, top, &mut less);
    // Transitivity.
    for a in 0..count {
        for &b in &up[a] {
            for &c in &up[b] {
                if !less.contains(&(a, c)) {
                    return Ok(false);
                }
            }
        }
    }
    // Covers.
    let covers: Vec<Vec<usize>> = (0..count)
        .map(|a| {
            up[a]
                .iter()
                .copied()
                .filter(|&b| !up[a].iter().any(|&z| less.contains(&(z, b))))
                .collect()
        })
        .collect();
    // Maximal chains, abandoning once they outnumber the flags.
    let limit = p.num_flags();
    let mut chains: HashSet<Vec<usize>> = HashSet::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![0]];
    while let Some(chain) = stack.pop() {
        let last = *chain.last().unwrap();
        if last == top {
            chains.insert(chain);
            if chains.len() > limit {
                return Ok(false);
            }
            continue;
        }
        for &b in &covers[last] {
            let mut next = chain.clone();
            next.push(b);
            stack.push(next);
        }
    }
    let flag_chains: HashSet<Vec<usize>> = (0..p.num_flags()).map(chain_of).collect();
    if flag_chains.len() != p.num_flags() || flag_chains != chains {
        return Ok(false);
    }
    // Diamond condition on every interval F < H with rank difference 2.
    for a in 0..count {
        for &b in &up[a] {
            if rank_of(b) - rank_of(a) != 2 {
                continue;
            }
            let between = up[a].iter().filter(|&&z| less.contains(&(z, b))).count();
            if between != 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
