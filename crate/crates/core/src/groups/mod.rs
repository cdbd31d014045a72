//! Finite groups as enumerated permutation groups, and reduced words in the
//! universal voltage group.

mod spec;
mod words;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::Perm;

pub use spec::parse_group_spec;
pub use words::{FacetPairing, ReducedWord};

/// A finite group, fully enumerated as permutations of `0..degree`.
///
/// Elements are addressed by index; the identity is always index 0. The
/// product `compose(a, b)` is `ab`: apply `a`, then `b`.
#[derive(Clone)]
pub struct GroupModel {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    generators: Vec<usize>,
    names: Vec<String>,
    /// Shortest-word tree: `parent[e] = (prefix element, generator position)`.
    parent: Vec<Option<(usize, usize)>>,
    spec: String,
}

impl fmt::Debug for GroupModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupModel({}, order {})", self.spec, self.order())
    }
}

impl PartialEq for GroupModel {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.generators == other.generators
    }
}

impl GroupModel {
    /// Closure of the given permutations, with generators named `g0, g1, ...`.
    pub fn from_permutations(generators: Vec<Perm>) -> Result<GroupModel> {
        let names = (0..generators.len()).map(|k| format!("g{k}")).collect();
        let spec = perm_spec(&generators);
        GroupModel::from_named_permutations(generators, names, spec)
    }

    pub fn from_named_permutations(generators: Vec<Perm>, names: Vec<String>, spec: String) -> Result<GroupModel> {
        GroupModel::closure(generators, names, spec, Caps::global().group_order)
    }

    pub(crate) fn closure(generators: Vec<Perm>, names: Vec<String>, spec: String, cap: usize) -> Result<GroupModel> {
        assert_eq!(generators.len(), names.len());
        let degree = generators.first().map_or(0, Perm::len);
        if generators.iter().any(|g| g.len() != degree) {
            return Err(Error::InvalidParameter("generators act on different point sets".into()));
        }
        let mut sorted: Vec<&Perm> = generators.iter().collect();
        sorted.sort();
        sorted.dedup();
        let mut elements = vec![Perm::identity(degree)];
        let mut index = HashMap::from([(elements[0].clone(), 0)]);
        let mut head = 0;
        while head < elements.len() {
            for s in &sorted {
                let p = elements[head].then(s);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { what: "group order", cap });
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            head += 1;
        }
        Ok(GroupModel::finish(degree, elements, index, &generators, names, spec))
    }

    /// Builds the model from a complete element list with the identity first.
    fn finish(
        degree: usize,
        elements: Vec<Perm>,
        index: HashMap<Perm, usize>,
        generators: &[Perm],
        names: Vec<String>,
        spec: String,
    ) -> GroupModel {
        let gen_idx: Vec<usize> = generators.iter().map(|g| index[g]).collect();
        let mut parent = vec![None; elements.len()];
        let mut seen = vec![false; elements.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for (k, g) in generators.iter().enumerate() {
                let f = index[&elements[e].then(g)];
                if !seen[f] {
                    seen[f] = true;
                    parent[f] = Some((e, k));
                    queue.push_back(f);
                }
            }
        }
        GroupModel { degree, elements, index, generators: gen_idx, names, parent, spec }
    }

    /// Wraps a list that is already a group (closed, identity included). A
    /// small generating set `g0, g1, ...` is chosen greedily.
    pub fn from_complete(mut elements: Vec<Perm>) -> Result<GroupModel> {
        let degree = elements.first().map_or(0, Perm::len);
        let id = Perm::identity(degree);
        let pos = elements
            .iter()
            .position(|p| *p == id)
            .ok_or_else(|| Error::InvalidParameter("element list lacks the identity".into()))?;
        elements.swap(0, pos);
        let index: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        for a in &elements {
            if !index.contains_key(&a.inverse()) {
                return Err(Error::InvalidParameter("element list is not closed under inversion".into()));
            }
        }
        let mut gens: Vec<Perm> = vec![];
        let mut reached: HashSet<Perm> = HashSet::from([id]);
        for e in &elements {
            if reached.contains(e) {
                continue;
            }
            gens.push(e.clone());
            let mut frontier: Vec<Perm> = reached.iter().cloned().collect();
            while let Some(x) = frontier.pop() {
                for g in &gens {
                    let y = x.then(g);
                    if !index.contains_key(&y) {
                        return Err(Error::InvalidParameter("element list is not closed".into()));
                    }
                    if reached.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
        }
        let names = (0..gens.len()).map(|k| format!("g{k}")).collect();
        let spec = perm_spec(&gens);
        Ok(GroupModel::finish(degree, elements, index, &gens, names, spec))
    }

    pub fn cyclic(k: usize) -> Result<GroupModel> {
        if k == 0 {
            return Err(Error::InvalidParameter("cyclic group order must be at least 1".into()));
        }
        let gen = Perm::from_images((0..k).map(|i| (i + 1) % k).collect())?;
        GroupModel::from_named_permutations(vec![gen], vec!["c".into()], format!("cyclic {k}"))
    }

    /// Dihedral group of order `2m` generated by involutions `x`, `y` with `(xy)^m = 1`.
    pub fn dihedral(m: usize) -> Result<GroupModel> {
        if m == 0 {
            return Err(Error::InvalidParameter("dihedral parameter must be at least 1".into()));
        }
        let n = 2 * m;
        let x = Perm::from_images((0..n).map(|p| p ^ 1).collect())?;
        let y = Perm::from_images((0..n).map(|p| if p % 2 == 1 { (p + 1) % n } else { (p + n - 1) % n }).collect())?;
        GroupModel::from_named_permutations(vec![x, y], vec!["x".into(), "y".into()], format!("dihedral {m}"))
    }

    /// `Z_2^k` with generators `e0, ..., e{k-1}`.
    pub fn elem_abelian_2(k: usize) -> Result<GroupModel> {
        if k == 0 {
            return Err(Error::InvalidParameter("elementary abelian rank must be at least 1".into()));
        }
        let gens = (0..k)
            .map(|j| Perm::from_images((0..2 * k).map(|p| if p / 2 == j { p ^ 1 } else { p }).collect()))
            .collect::<Result<Vec<_>>>()?;
        let names = (0..k).map(|j| format!("e{j}")).collect();
        GroupModel::from_named_permutations(gens, names, format!("elemabelian2 {k}"))
    }

    /// Direct product acting on the disjoint union of the factors' point sets.
    /// Elements are ordered row-major: `(a_i, b_j)` has index `i * |B| + j`.
    /// Generator names gain the suffix `_k` for factor `k`.
    pub fn direct_product(factors: &[GroupModel]) -> Result<GroupModel> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("empty direct product".into()));
        }
        let order = factors.iter().try_fold(1usize, |acc, g| acc.checked_mul(g.order()));
        let cap = Caps::global().group_order;
        match order {
            Some(o) if o <= cap => {}
            _ => return Err(Error::CapExceeded { what: "group order", cap }),
        }
        let offsets: Vec<usize> = factors
            .iter()
            .scan(0, |acc, g| {
                let o = *acc;
                *acc += g.degree;
                Some(o)
            })
            .collect();
        let degree: usize = factors.iter().map(|g| g.degree).sum();
        let embed = |parts: &[&Perm]| -> Perm {
            let mut images = Vec::with_capacity(degree);
            for (p, &off) in parts.iter().zip(&offsets) {
                images.extend(p.images().map(|x| (x + off) as u32));
            }
            Perm::from_images_unchecked(images)
        };
        let total = order.unwrap_or(0);
        let elements: Vec<Perm> = (0..total)
            .map(|mut idx| {
                let mut parts: Vec<&Perm> = Vec::with_capacity(factors.len());
                for g in factors.iter().rev() {
                    parts.push(&g.elements[idx % g.order()]);
                    idx /= g.order();
                }
                parts.reverse();
                embed(&parts)
            })
            .collect();
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut gens = vec![];
        let mut names = vec![];
        for (k, g) in factors.iter().enumerate() {
            for (&gi, name) in g.generators.iter().zip(&g.names) {
                let parts: Vec<&Perm> = factors
                    .iter()
                    .enumerate()
                    .map(|(j, h)| if j == k { &g.elements[gi] } else { &h.elements[0] })
                    .collect();
                gens.push(embed(&parts));
                names.push(format!("{name}_{k}"));
            }
        }
        let spec = format!(
            "product {}",
            factors.iter().map(|g| wrap_spec(&g.spec)).collect::<Vec<_>>().join(" ; ")
        );
        Ok(GroupModel::finish(degree, elements, index, &gens, names, spec))
    }

    /// `Z_s^{m-1} ⋊ <χ>` with χ acting by negation. Elements are pairs `(u, ε)`
    /// with `u ∈ Z_s^m` of coordinate sum zero; generators `t_j = (e_j - e_0, χ)`
    /// for `0 ≤ j < m`, named `t0, ..., t{m-1}`. Realized by its right-regular
    /// representation.
    pub fn semidirect_zs_inversion(s: usize, m: usize) -> Result<GroupModel> {
        if s < 2 || m < 1 {
            return Err(Error::InvalidParameter(format!("semidirect-inv needs s >= 2 and m >= 1, got {s} {m}")));
        }
        let half = (m - 1) as u32;
        let half_order = s
            .checked_pow(half)
            .filter(|&h| h.saturating_mul(2) <= Caps::global().group_order)
            .ok_or(Error::CapExceeded { what: "group order", cap: Caps::global().group_order })?;
        let order = 2 * half_order;
        // Element index = eps * s^(m-1) + mixed-radix(u_1..u_{m-1}); u_0 is implied.
        let decode = |idx: usize| -> (Vec<usize>, bool) {
            let mut rest = idx % half_order;
            let mut u = vec![0; m];
            for c in u.iter_mut().skip(1) {
                *c = rest % s;
                rest /= s;
            }
            (u, idx >= half_order)
        };
        let encode = |u: &[usize], eps: bool| -> usize {
            let mut idx = 0;
            for &c in u.iter().skip(1).rev() {
                idx = idx * s + c;
            }
            idx + if eps { half_order } else { 0 }
        };
        let gens = (0..m)
            .map(|j| {
                let images = (0..order)
                    .map(|x| {
                        let (u, eps) = decode(x);
                        // (u, eps)(a_j, χ) = (u + eps·a_j, !eps)
                        let mut w = u;
                        if j > 0 {
                            let sign_plus = !eps;
                            w[j] = if sign_plus { (w[j] + 1) % s } else { (w[j] + s - 1) % s };
                        }
                        encode(&w, !eps)
                    })
                    .collect();
                Perm::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        let names = (0..m).map(|j| format!("t{j}")).collect();
        GroupModel::from_named_permutations(gens, names, format!("semidirect-inv {s} {m}"))
    }

    pub fn trivial() -> GroupModel {
        GroupModel::from_permutations(vec![]).expect("trivial group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn element(&self, g: usize) -> &Perm {
        &self.elements[g]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Element indices of the generators, in declaration order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    /// `ab`: apply `a`, then `b`.
    #[inline]
    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].then(&self.elements[b])]
    }

    pub fn invert(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    /// Least `k ≥ 1` with `g^k = 1`.
    pub fn element_order(&self, g: usize) -> u64 {
        self.elements[g].order()
    }

    /// The permutation `x ↦ g x` of element indices (left multiplication).
    pub fn left_mult_table(&self, g: usize) -> Vec<u32> {
        (0..self.order()).map(|x| self.compose(g, x) as u32).collect()
    }

    /// Full Cayley table, `table[a * order + b] = ab`.
    pub fn cayley_table(&self) -> Vec<u32> {
        let n = self.order();
        let mut t = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                t.push(self.compose(a, b) as u32);
            }
        }
        t
    }

    /// Shortest word in the generators, e.g. `x*y*x`; the identity renders as `1`.
    pub fn render(&self, g: usize) -> String {
        let mut letters = vec![];
        let mut e = g;
        while let Some((prev, k)) = self.parent[e] {
            letters.push(self.names[k].as_str());
            e = prev;
        }
        if letters.is_empty() {
            return "1".into();
        }
        letters.reverse();
        letters.join("*")
    }

    /// Parses a word such as `x*y^2*x^-1`, `1` or `id`.
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        if text.is_empty() || text == "1" || text == "id" {
            return Ok(0);
        }
        let mut acc = 0;
        for token in text.split('*').map(str::trim) {
            let (name, power) = match token.split_once('^') {
                Some((n, p)) => {
                    let p: i64 = p.trim().parse().map_err(|_| Error::UnknownElement(token.into()))?;
                    (n.trim(), p)
                }
                None => (token, 1),
            };
            let base = if name == "1" || name == "id" {
                0
            } else {
                let k = self
                    .names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| Error::UnknownElement(name.into()))?;
                self.generators[k]
            };
            let base = if power < 0 { self.invert(base) } else { base };
            for _ in 0..power.unsigned_abs() {
                acc = self.compose(acc, base);
            }
        }
        Ok(acc)
    }

    /// Extends `generator k ↦ images[k]` to a map `self → target` and checks
    /// it is a homomorphism on every (element, generator) pair.
    pub fn homomorphism_to(&self, target: &GroupModel, images: &[usize]) -> Result<Vec<usize>> {
        if images.len() != self.generators.len() {
            return Err(Error::NotHomomorphism(format!(
                "{} generator images for {} generators",
                images.len(),
                self.generators.len()
            )));
        }
        if images.iter().any(|&h| h >= target.order()) {
            return Err(Error::NotHomomorphism("generator image outside the target".into()));
        }
        let mut hom = vec![usize::MAX; self.order()];
        hom[0] = 0;
        // The shortest-word tree reaches every element from the identity.
        let mut order: Vec<usize> = (1..self.order()).collect();
        order.sort_by_key(|&e| self.word_length(e));
        for e in order {
            let (prev, k) = self.parent[e].expect("every element has a word");
            hom[e] = target.compose(hom[prev], images[k]);
        }
        for e in 0..self.order() {
            for (k, &s) in self.generators.iter().enumerate() {
                if hom[self.compose(e, s)] != target.compose(hom[e], images[k]) {
                    return Err(Error::NotHomomorphism(format!(
                        "relation broken at {} * {}",
                        self.render(e),
                        self.names[k]
                    )));
                }
            }
        }
        Ok(hom)
    }

    pub fn word_length(&self, g: usize) -> usize {
        let mut len = 0;
        let mut e = g;
        while let Some((prev, _)) = self.parent[e] {
            len += 1;
            e = prev;
        }
        len
    }

    /// Sorted element indices of the subgroup generated by `gens`.
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

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let members: HashSet<usize> = set.iter().copied().collect();
        members.contains(&0)
            && set.iter().all(|&a| {
                members.contains(&self.invert(a)) && set.iter().all(|&b| members.contains(&self.compose(a, b)))
            })
    }

    /// Every subgroup, each as a sorted element list, ordered by size and then
    /// lexicographically. Refuses groups larger than the oracle cap.
    pub fn all_subgroups(&self) -> Result<Vec<Vec<usize>>> {
        let cap = Caps::global().subgroup_oracle;
        if self.order() > cap {
            return Err(Error::CapExceeded { what: "subgroup enumeration group order", cap });
        }
        let n = self.order();
        let table = self.cayley_table();
        let close = |seed: &[bool]| -> Vec<bool> {
            let mut mem = seed.to_vec();
            let mut list: Vec<usize> = (0..n).filter(|&x| mem[x]).collect();
            let mut head = 0;
            while head < list.len() {
                let a = list[head];
                for k in 0..list.len() {
                    for (x, y) in [(a, list[k]), (list[k], a)] {
                        let c = table[x * n + y] as usize;
                        if !mem[c] {
                            mem[c] = true;
                            list.push(c);
                        }
                    }
                }
                head += 1;
            }
            mem
        };
        let mut trivial = vec![false; n];
        trivial[0] = true;
        let mut found: HashSet<Vec<bool>> = HashSet::from([trivial.clone()]);
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for g in 0..n {
                if h[g] {
                    continue;
                }
                let mut seed = h.clone();
                seed[g] = true;
                let joined = close(&seed);
                if found.insert(joined.clone()) {
                    frontier.push(joined);
                }
            }
        }
        let mut out: Vec<Vec<usize>> =
            found.into_iter().map(|m| (0..n).filter(|&x| m[x]).collect()).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }
}

fn perm_spec(gens: &[Perm]) -> String {
    let cycles: Vec<String> = gens
        .iter()
        .map(|g| {
            let c: String = g
                .cycles()
                .into_iter()
                .filter(|c| c.len() > 1)
                .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
                .collect();
            if c.is_empty() {
                format!("({})", g.len().saturating_sub(1))
            } else {
                c
            }
        })
        .collect();
    format!("perm {}", cycles.join(", "))
}

fn wrap_spec(spec: &str) -> String {
    if spec.starts_with("product") {
        format!("({spec})")
    } else {
        spec.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_orders() {
        let s3 = GroupModel::from_permutations(vec![
            Perm::from_cycles("(0 1)", 3).unwrap(),
            Perm::from_cycles("(1 2)", 3).unwrap(),
        ])
        .unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(GroupModel::from_permutations(vec![]).unwrap().order(), 1);
        let c4 = GroupModel::from_permutations(vec![Perm::from_cycles("(0 1 2 3)", 4).unwrap()]).unwrap();
        assert_eq!(c4.order(), 4);
    }

    #[test]
    fn closure_respects_cap() {
        let gens = vec![Perm::from_cycles("(0 1)", 5).unwrap(), Perm::from_cycles("(0 1 2 3 4)", 5).unwrap()];
        let err = GroupModel::closure(gens, vec!["a".into(), "b".into()], "s5".into(), 50).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn named_orders() {
        assert_eq!(GroupModel::dihedral(5).unwrap().order(), 10);
        assert_eq!(GroupModel::dihedral(1).unwrap().order(), 2);
        assert_eq!(GroupModel::semidirect_zs_inversion(3, 4).unwrap().order(), 54);
        assert_eq!(GroupModel::semidirect_zs_inversion(2, 1).unwrap().order(), 2);
        assert_eq!(GroupModel::elem_abelian_2(6).unwrap().order(), 64);
        let p = GroupModel::direct_product(&[GroupModel::cyclic(3).unwrap(), GroupModel::cyclic(2).unwrap()]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.generator_names(), &["c_0".to_string(), "c_1".to_string()]);
        assert!(GroupModel::cyclic(0).is_err());
        assert!(GroupModel::semidirect_zs_inversion(1, 3).is_err());
    }

    #[test]
    fn product_is_row_major() {
        let a = GroupModel::cyclic(3).unwrap();
        let b = GroupModel::cyclic(4).unwrap();
        let p = GroupModel::direct_product(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(p.order(), 12);
        for i in 0..3 {
            for j in 0..4 {
                let e = p.element(i * 4 + j);
                let left: Vec<usize> = e.images().take(3).collect();
                let right: Vec<usize> = e.images().skip(3).map(|x| x - 3).collect();
                assert_eq!(left, a.element(i).to_vec());
                assert_eq!(right, b.element(j).to_vec());
            }
        }
    }

    #[test]
    fn dihedral_relations() {
        let d = GroupModel::dihedral(6).unwrap();
        let x = d.parse_element("x").unwrap();
        let y = d.parse_element("y").unwrap();
        assert_eq!(d.element_order(0), 1);
        assert_eq!(d.element_order(x), 2);
        assert_eq!(d.element_order(y), 2);
        assert_eq!(d.element_order(d.compose(x, y)), 6);
    }

    #[test]
    fn semidirect_generators_are_involutions() {
        let g = GroupModel::semidirect_zs_inversion(4, 4).unwrap();
        assert_eq!(g.order(), 128);
        let gens = g.generators().to_vec();
        for &t in &gens {
            assert_eq!(g.element_order(t), 2);
        }
        for &a in &gens {
            for &b in &gens {
                if a != b {
                    assert_eq!(g.element_order(g.compose(a, b)), 4);
                }
            }
        }
        assert_eq!(g.subgroup_generated(&gens).len(), 128);
    }

    #[test]
    fn render_and_parse_round_trip() {
        let g = GroupModel::direct_product(&[GroupModel::dihedral(4).unwrap(), GroupModel::cyclic(3).unwrap()]).unwrap();
        for e in 0..g.order() {
            assert_eq!(g.parse_element(&g.render(e)).unwrap(), e);
        }
        assert_eq!(g.render(0), "1");
        assert_eq!(g.parse_element("c_1^-1").unwrap(), g.parse_element("c_1^2").unwrap());
        assert!(matches!(g.parse_element("z"), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(GroupModel::cyclic(4).unwrap().all_subgroups().unwrap().len(), 3);
        assert_eq!(GroupModel::trivial().all_subgroups().unwrap().len(), 1);
        let d4 = GroupModel::dihedral(4).unwrap();
        let subs = d4.all_subgroups().unwrap();
        assert_eq!(subs.len(), 10);
        assert!(subs.iter().all(|h| d4.is_subgroup(h)));
        let big = GroupModel::elem_abelian_2(6).unwrap();
        assert!(matches!(big.all_subgroups(), Err(Error::CapExceeded { .. })));
    }

    /// Independent count for D4: brute force over all subsets of the 8 elements.
    #[test]
    fn dihedral_four_subgroups_by_subset_scan() {
        let d4 = GroupModel::dihedral(4).unwrap();
        let count = (0u32..256)
            .filter(|mask| {
                let set: Vec<usize> = (0..8).filter(|i| mask & (1 << i) != 0).collect();
                !set.is_empty() && d4.is_subgroup(&set)
            })
            .count();
        assert_eq!(count, 10);
    }
}
