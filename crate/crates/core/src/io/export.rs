//! DOT and JSON exports.

use serde_json::{json, Value};

use crate::automorphisms::SymmetryTypeGraph;
use crate::maniplex::Premaniplex;

/// One node per flag and one record per edge `a -- b` with `a < b`.
/// Semiedges are drawn as a double periphery on the node and listed in its
/// label instead of as loops.
pub fn export_dot(p: &Premaniplex) -> String {
    dot_with_labels(p, "flags", |f| f.to_string())
}

/// DOT for a symmetry type graph; nodes are orbits labeled by size.
pub fn export_stg_dot(stg: &SymmetryTypeGraph) -> String {
    dot_with_labels(&stg.graph, "stg", |b| format!("{b} ({})", stg.orbits.block(b).len()))
}

fn dot_with_labels(p: &Premaniplex, name: &str, label: impl Fn(usize) -> String) -> String {
    let mut out = format!("graph {name} {{\n");
    for f in 0..p.num_flags() {
        let semi: Vec<String> = (0..p.rank()).filter(|&c| p.adj(c, f) == f).map(|c| c.to_string()).collect();
        if semi.is_empty() {
            out.push_str(&format!("  {f} [label=\"{}\"];\n", label(f)));
        } else {
            out.push_str(&format!(
                "  {f} [label=\"{}\", peripheries=2, semiedges=\"{}\"];\n",
                label(f),
                semi.join(",")
            ));
        }
    }
    for c in 0..p.rank() {
        for f in 0..p.num_flags() {
            let g = p.adj(c, f);
            if f < g {
                out.push_str(&format!("  {f} -- {g} [label=\"color={c}\"];\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn premaniplex_json(p: &Premaniplex) -> Value {
    let adjacency: Vec<&[u32]> = (0..p.rank()).map(|c| p.adjacency(c)).collect();
    json!({
        "rank": p.rank(),
        "flags": p.num_flags(),
        "adjacency": adjacency,
    })
}

/// The quotient graph plus the flag-to-orbit map.
pub fn stg_json(stg: &SymmetryTypeGraph) -> Value {
    json!({
        "nodes": stg.num_nodes(),
        "orbit_sizes": stg.orbits.blocks().iter().map(Vec::len).collect::<Vec<_>>(),
        "orbit_of_flag": stg.orbits.labels(),
        "graph": premaniplex_json(&stg.graph),
    })
}
