use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::maniplex::Premaniplex;

/// The `k`-gon: flags `0..2k` around the boundary.
pub fn polygon(k: usize) -> Result<Premaniplex> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("polygon needs k >= 2, got {k}")));
    }
    let m = 2 * k;
    let r0 = (0..m).map(|f| f ^ 1).collect();
    let r1 = (0..m).map(|f| if f % 2 == 1 { (f + 1) % m } else { (f + m - 1) % m }).collect();
    Premaniplex::new(2, vec![r0, r1])
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = vec![];
    rec(&mut vec![], &mut vec![false; n], &mut out);
    out
}

/// A cube flag: entry `j` is `(coordinate, sign)`; the `i`-face fixes the
/// coordinates of entries `i..n` to their signs (0-indexed entries).
pub(crate) type CubeFlag = Vec<(usize, bool)>;

/// Flags of the `n`-cube in index order: coordinate permutations in
/// lexicographic order, then sign patterns with entry 0 least significant.
pub(crate) fn cube_flags(n: usize) -> Vec<CubeFlag> {
    let mut out = vec![];
    for p in permutations(n) {
        for bits in 0..1usize << n {
            out.push(p.iter().enumerate().map(|(j, &c)| (c, bits >> j & 1 == 1)).collect());
        }
    }
    out
}

/// The `n`-cube `[-1, 1]^n`, with `2^n n!` flags.
pub fn cube(n: usize) -> Result<Premaniplex> {
    if n < 1 {
        return Err(Error::InvalidParameter("cube needs n >= 1".into()));
    }
    let flags = cube_flags(n);
    let index: HashMap<&CubeFlag, usize> = flags.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let adjacency = (0..n)
        .map(|i| {
            flags
                .iter()
                .map(|f| {
                    let mut g = f.clone();
                    if i == 0 {
                        g[0].1 = !g[0].1;
                    } else {
                        g.swap(i - 1, i);
                    }
                    index[&g]
                })
                .collect()
        })
        .collect();
    Premaniplex::new(n, adjacency)
}

/// The `n`-simplex: flags are orderings of its `n + 1` vertices.
pub fn simplex(n: usize) -> Result<Premaniplex> {
    if n < 1 {
        return Err(Error::InvalidParameter("simplex needs n >= 1".into()));
    }
    let flags = permutations(n + 1);
    let index: HashMap<&Vec<usize>, usize> = flags.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let adjacency = (0..n)
        .map(|i| {
            flags
                .iter()
                .map(|f| {
                    let mut g = f.clone();
                    g.swap(i, i + 1);
                    index[&g]
                })
                .collect()
        })
        .collect();
    Premaniplex::new(n, adjacency)
}

/// A map given by its faces as cyclic vertex lists. Every edge must lie on
/// exactly two faces. Flag `2 * (offset(f) + j) + s` is the corner `j` of face
/// `f`: for `s = 0` it is vertex `v_j` on edge `v_j v_{j+1}`, for `s = 1`
/// vertex `v_{j+1}` on the same edge.
pub fn map_from_faces(faces: &[Vec<usize>]) -> Result<Premaniplex> {
    let mut offsets = vec![];
    let mut total = 0;
    for face in faces {
        if face.len() < 2 {
            return Err(Error::InvalidParameter("face with fewer than 2 vertices".into()));
        }
        offsets.push(total);
        total += face.len();
    }
    let m = 2 * total;
    let flag = |f: usize, j: usize, s: usize| 2 * (offsets[f] + j % faces[f].len()) + s;
    let vertex_edge = |f: usize, j: usize, s: usize| {
        let k = faces[f].len();
        let (a, b) = (faces[f][j], faces[f][(j + 1) % k]);
        let v = if s == 0 { a } else { b };
        (v, a.min(b), a.max(b))
    };
    let mut by_vertex_edge: HashMap<(usize, usize, usize), Vec<usize>> = HashMap::new();
    for (f, face) in faces.iter().enumerate() {
        for j in 0..face.len() {
            for s in 0..2 {
                by_vertex_edge.entry(vertex_edge(f, j, s)).or_default().push(flag(f, j, s));
            }
        }
    }
    let mut r0 = vec![0; m];
    let mut r1 = vec![0; m];
    let mut r2 = vec![0; m];
    for (f, face) in faces.iter().enumerate() {
        let k = face.len();
        for j in 0..k {
            for s in 0..2 {
                let x = flag(f, j, s);
                r0[x] = flag(f, j, 1 - s);
                r1[x] = if s == 0 { flag(f, j + k - 1, 1) } else { flag(f, j + 1, 0) };
                let twins = &by_vertex_edge[&vertex_edge(f, j, s)];
                if twins.len() != 2 {
                    return Err(Error::InvalidParameter(format!(
                        "edge of face {f} at corner {j} lies on {} faces",
                        twins.len()
                    )));
                }
                r2[x] = if twins[0] == x { twins[1] } else { twins[0] };
            }
        }
    }
    Premaniplex::new(3, vec![r0, r1, r2])
}

/// Square pyramid: a square base and four triangles, 32 flags.
pub fn square_pyramid() -> Premaniplex {
    map_from_faces(&[vec![0, 1, 2, 3], vec![0, 1, 4], vec![1, 2, 4], vec![2, 3, 4], vec![3, 0, 4]])
        .expect("square pyramid")
}

/// Cuboctahedron: 6 squares and 8 triangles, 96 flags, two flag orbits.
pub fn cuboctahedron() -> Premaniplex {
    // Vertices are the 12 edges of the 3-cube {0,1}^3, keyed by endpoints.
    let mut edges = vec![];
    for a in 0..8usize {
        for bit in 0..3 {
            let b = a ^ (1 << bit);
            if a < b {
                edges.push((a, b));
            }
        }
    }
    let edge_id = |a: usize, b: usize| edges.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    let mut faces = vec![];
    for axis in 0..3 {
        for side in 0..2 {
            // Corners of the cube face x_axis = side, in cyclic order.
            let (u, v) = ((axis + 1) % 3, (axis + 2) % 3);
            let base = side << axis;
            let cyc = [base, base | 1 << u, base | 1 << u | 1 << v, base | 1 << v];
            faces.push((0..4).map(|k| edge_id(cyc[k], cyc[(k + 1) % 4])).collect());
        }
    }
    for c in 0..8usize {
        faces.push((0..3).map(|bit| edge_id(c, c ^ (1 << bit))).collect());
    }
    map_from_faces(&faces).expect("cuboctahedron")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_counts() {
        assert_eq!(polygon(4).unwrap().num_flags(), 8);
        assert_eq!(cube(3).unwrap().num_flags(), 48);
        assert_eq!(cube(4).unwrap().num_flags(), 384);
        assert_eq!(simplex(3).unwrap().num_flags(), 24);
        assert_eq!(square_pyramid().num_flags(), 32);
        assert_eq!(cuboctahedron().num_flags(), 96);
        assert!(polygon(1).is_err());
        assert!(cube(0).is_err());
    }

    #[test]
    fn seeds_are_maniplexes() {
        for p in [polygon(2).unwrap(), polygon(6).unwrap(), cube(2).unwrap(), cube(3).unwrap(), simplex(3).unwrap()] {
            assert!(p.is_maniplex(), "{p:?}");
        }
        assert!(square_pyramid().is_maniplex());
        assert!(cuboctahedron().is_maniplex());
    }

    #[test]
    fn face_counts() {
        let c = cube(3).unwrap();
        assert_eq!(c.vertices().num_blocks(), 8);
        assert_eq!(c.faces(1).unwrap().num_blocks(), 12);
        let s = simplex(3).unwrap();
        assert_eq!(s.facets().num_blocks(), 4);
        let pyr = square_pyramid();
        assert_eq!(pyr.vertices().num_blocks(), 5);
        assert_eq!(pyr.faces(1).unwrap().num_blocks(), 8);
        assert_eq!(pyr.facets().num_blocks(), 5);
        let co = cuboctahedron();
        assert_eq!(co.vertices().num_blocks(), 12);
        assert_eq!(co.faces(1).unwrap().num_blocks(), 24);
        assert_eq!(co.facets().num_blocks(), 14);
    }
}
