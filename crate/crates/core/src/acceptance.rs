//! The acceptance suite: eleven checks over the catalog, each reporting
//! pass/fail together with the values it measured.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::amalgamation::{flat_amalgamate, is_flat, AmalgamationSpec};
use crate::automorphisms::{is_isomorphic, is_regular, num_orbits, AutomorphismGroup};
use crate::constructions::{
    catalog, cube, flat_extension, polygon, simplex, square_pyramid, toroid_44, two_hat, two_hat_s_minus1,
};
use crate::error::{Error, Result};
use crate::extender::{face_lattice_oracle, is_polytopal, quotient_extension, CayleyExtender, Coextender, PreExtender};
use crate::friendly::{
    facet_isomorphisms, facet_map_extends, friendly_group, has_unique_universal_extension, heart_oracle,
    is_friendly_set, pyramid_triangle_pairing, stg_consistency, FriendlyGroup,
};
use crate::groups::{parse_group_spec, GroupModel, ReducedWord};
use crate::io::{parse_mpx, ExtenderFile, RunReport};
use crate::maniplex::Premaniplex;
use crate::perm::Perm;
use crate::universal::{ball_local_checks, rn_order_actual, rn_order_canonical_formula, rn_order_predicted, UniversalBall};

const HEXAGON_MPX: &str = include_str!("../tests/data/hexagon.mpx");
const NON_POLYTOPAL_EXT: &str = include_str!("../tests/data/nonpolytopal-hexagon.ext");

/// Outcome of one criterion. `measured` holds the values compared.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub measured: Value,
    pub elapsed_ms: u64,
}

impl CriterionResult {
    /// One line: `[PASS] 3 two-hat of the cube (1234 ms)`.
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms
        )
    }
}

type Check = fn() -> Result<(bool, Value)>;

/// `(id, name, check)` for every criterion, in report order.
pub fn criteria() -> Vec<(usize, &'static str, Check)> {
    vec![
        (1, "square extension flag counts and two-hat/toroid isomorphism", square_table as Check),
        (2, "{4,4} toroids", toroids),
        (3, "two-hat of the cube", two_hat_cube),
        (4, "order of r_{n-1} r_n", order_law),
        (5, "polytopality cross-validation", polytopality),
        (6, "friendly group against the subgroup oracle", friendly_groups),
        (7, "symmetry type graphs of catalog extensions", stg_check),
        (8, "uniqueness of universal extensions", uniqueness),
        (9, "universal ball census", ball_census),
        (10, "flat amalgamation", amalgamation),
        (11, "property suites", property_suites),
    ]
}

pub fn run_criterion(id: usize) -> Option<CriterionResult> {
    criteria().into_iter().find(|c| c.0 == id).map(|(id, name, check)| run_one(id, name, check))
}

fn run_one(id: usize, name: &'static str, check: Check) -> CriterionResult {
    let start = Instant::now();
    let (passed, measured) = match check() {
        Ok(r) => r,
        Err(e) => (false, json!({ "error": e.to_string() })),
    };
    CriterionResult { id, name, passed, measured, elapsed_ms: start.elapsed().as_millis() as u64 }
}

/// Runs every criterion, in parallel, and returns them in id order.
pub fn acceptance_suite() -> Vec<CriterionResult> {
    let mut out: Vec<CriterionResult> =
        criteria().into_par_iter().map(|(id, name, check)| run_one(id, name, check)).collect();
    out.sort_by_key(|r| r.id);
    out
}

pub fn acceptance_report() -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new("accept", json!({}));
    report.add_input_bytes("tests/data/hexagon.mpx", HEXAGON_MPX.as_bytes());
    report.add_input_bytes("tests/data/nonpolytopal-hexagon.ext", NON_POLYTOPAL_EXT.as_bytes());
    let results = acceptance_suite();
    let all = results.iter().all(|r| r.passed);
    let results = json!({ "all_passed": all, "criteria": results });
    report.finish(results, start)
}

/// The frozen non-polytopal extension of the hexagon.
pub fn non_polytopal_witness() -> Result<CayleyExtender> {
    let hexagon = parse_mpx(HEXAGON_MPX)?;
    ExtenderFile::parse(NON_POLYTOPAL_EXT)?.extender(&hexagon)
}

fn square() -> Premaniplex {
    polygon(4).expect("square")
}

/// Flag counts of the square's extensions plus the two-hat/toroid
/// isomorphism, using `toroid` to build `{4,4}_(4,0),(0,4)`.
pub fn square_table_with(toroid: impl Fn(usize, usize) -> Result<CayleyExtender>) -> Result<(bool, Value)> {
    let start = Instant::now();
    let sq = square();
    let hat = two_hat(&sq)?;
    let hat_flags = hat.derive().num_flags();
    let mut ok = hat_flags == 128;
    let mut hat_s = vec![];
    for s in 2..=4 {
        let f = two_hat_s_minus1(&sq, s)?.derive().num_flags();
        ok &= f == 16 * s * s * s;
        hat_s.push(json!({ "s": s, "flags": f, "expected": 16 * s * s * s }));
    }
    let mut flat = vec![];
    for s in 2..=5 {
        let f = flat_extension(&sq, 2 * s)?.derive().num_flags();
        ok &= f == 16 * s;
        flat.push(json!({ "s": s, "flags": f, "expected": 16 * s }));
    }
    let iso = is_isomorphic(&hat.derive().graph, &toroid(4, 4)?.derive().graph).is_some();
    ok &= iso;
    let ms = start.elapsed().as_millis() as u64;
    ok &= ms < 10_000;
    Ok((ok, json!({ "two_hat_flags": hat_flags, "two_hat_s": hat_s, "flat": flat, "two_hat_iso_toroid_4_4": iso, "ms": ms })))
}

fn square_table() -> Result<(bool, Value)> {
    square_table_with(toroid_44)
}

fn toroids() -> Result<(bool, Value)> {
    let mut ok = true;
    let mut rows = vec![];
    for (a, b) in [(3, 2), (4, 4), (5, 3)] {
        let d = toroid_44(a, b)?.derive();
        let g = &d.graph;
        let faces: Vec<usize> = (0..3).map(|i| g.faces(i).map(|p| p.num_blocks())).collect::<Result<_>>()?;
        let euler = faces[0] as i64 - faces[1] as i64 + faces[2] as i64;
        let polytopal = is_polytopal(g).is_none();
        let row_ok = g.num_flags() == 8 * a * b
            && d.is_maniplex()
            && polytopal
            && faces == [a * b, 2 * a * b, a * b]
            && euler == 0;
        ok &= row_ok;
        rows.push(json!({ "a": a, "b": b, "flags": g.num_flags(), "maniplex": d.is_maniplex(), "polytopal": polytopal, "faces": faces, "euler": euler }));
    }
    let orbits = num_orbits(&toroid_44(4, 4)?.derive().graph)?;
    ok &= orbits == 1;
    Ok((ok, json!({ "toroids": rows, "orbits_4_4": orbits })))
}

fn two_hat_cube() -> Result<(bool, Value)> {
    let start = Instant::now();
    let ext = two_hat(&cube(3)?)?;
    let d = ext.derive();
    let polytopal = is_polytopal(&d.graph).is_none();
    let aut = AutomorphismGroup::of(&d.graph)?.order();
    let regular = is_regular(&d.graph)?;
    let actual = rn_order_actual(&d.graph);
    let predicted = rn_order_predicted(&ext);
    let ms = start.elapsed().as_millis() as u64;
    let ok = d.num_flags() == 3072
        && polytopal
        && regular
        && aut == 64 * 48
        && actual == 4
        && predicted == 4
        && ms < 60_000;
    Ok((ok, json!({ "flags": d.num_flags(), "polytopal": polytopal, "regular": regular, "aut_order": aut, "rn_order_actual": actual, "rn_order_predicted": predicted, "ms": ms })))
}

fn order_law() -> Result<(bool, Value)> {
    let rows: Vec<(bool, Value)> = catalog()
        .par_iter()
        .map(|e| -> Result<(bool, Value)> {
            let ext = e.build()?;
            let actual = rn_order_actual(&ext.derive().graph);
            let predicted = rn_order_predicted(&ext);
            let formula = rn_order_canonical_formula(&ext);
            let ok = actual == predicted && formula.is_none_or(|f| f == actual);
            Ok((ok, json!({ "name": e.name, "actual": actual, "predicted": predicted, "canonical_formula": formula })))
        })
        .collect::<Result<_>>()?;
    Ok((rows.iter().all(|r| r.0), Value::Array(rows.into_iter().map(|r| r.1).collect())))
}

fn polytopality() -> Result<(bool, Value)> {
    let mut instances: Vec<(String, Premaniplex, bool)> = vec![];
    for e in catalog() {
        instances.push((e.name.clone(), e.build()?.derive().graph, e.polytopal));
    }
    instances.push(("non-polytopal-hexagon".into(), non_polytopal_witness()?.derive().graph, false));
    let rows: Vec<(bool, bool, Value)> = instances
        .par_iter()
        .map(|(name, g, expected)| -> Result<(bool, bool, Value)> {
            let witness = is_polytopal(g);
            let oracle = face_lattice_oracle(g)?;
            let agree = witness.is_none() == oracle;
            // A witness must re-validate: the two flags share the upper and
            // lower components but not the middle one.
            let revalidated = witness.is_none_or(|w| {
                let n = g.rank();
                let upper = g.components_by(|c| w.k <= c && c < n);
                let lower = g.components_by(|c| c <= w.m);
                let middle = g.components_by(|c| w.k <= c && c <= w.m);
                let (a, b) = w.flags;
                upper.same_block(a, b) && lower.same_block(a, b) && (w.k > w.m || !middle.same_block(a, b))
            });
            let ok = agree && revalidated && oracle == *expected;
            Ok((ok, !oracle, json!({ "name": name, "flags": g.num_flags(), "is_polytopal": witness.is_none(), "oracle": oracle, "witness": witness })))
        })
        .collect::<Result<_>>()?;
    let non_polytopal = rows.iter().filter(|r| r.1).count();
    let ok = rows.len() >= 16 && non_polytopal >= 1 && rows.iter().all(|r| r.0);
    Ok((ok, json!({ "instances": rows.len(), "non_polytopal": non_polytopal, "rows": rows.into_iter().map(|r| r.2).collect::<Vec<_>>() })))
}

fn friendly_instances() -> Result<Vec<(&'static str, PreExtender, Option<usize>)>> {
    Ok(vec![
        ("square, Id", PreExtender::canonical(square()), Some(8)),
        ("square, toroidal rn", toroid_44(3, 3)?.pre().clone(), None),
        ("cube3, Id", PreExtender::canonical(cube(3)?), Some(48)),
        ("pyramid, Id", PreExtender::canonical(square_pyramid()), Some(8)),
        ("pyramid, triangle pairing", pyramid_triangle_pairing(), None),
    ])
}

fn as_set(g: &FriendlyGroup) -> BTreeSet<Vec<usize>> {
    g.elements.iter().map(Perm::to_vec).collect()
}

fn friendly_groups() -> Result<(bool, Value)> {
    let mut ok = true;
    let mut rows = vec![];
    for (name, pre, full) in friendly_instances()? {
        let computed = friendly_group(&pre)?;
        let oracle = heart_oracle(&pre)?;
        let aut = AutomorphismGroup::of(pre.base())?.order();
        let equal = as_set(&computed) == as_set(&oracle);
        let full_ok = full.is_none_or(|o| computed.order() == o && aut == o);
        ok &= equal && full_ok;
        rows.push(json!({ "instance": name, "order": computed.order(), "oracle_order": oracle.order(), "aut_order": aut, "equal": equal, "iterations": computed.history.len() }));
    }
    Ok((ok, Value::Array(rows)))
}

fn stg_check() -> Result<(bool, Value)> {
    let rows: Vec<(bool, Value)> = catalog()
        .par_iter()
        .map(|e| -> Result<(bool, Value)> {
            let c = stg_consistency(&e.build()?)?;
            let ok = c.equal && c.h_is_group && c.h_is_base_facet_stabilizer && c.h_in_heart;
            Ok((ok, json!({ "name": e.name, "nodes": c.derived_nodes, "h_order": c.h_order, "equal": c.equal, "h_is_group": c.h_is_group })))
        })
        .collect::<Result<_>>()?;
    Ok((rows.iter().all(|r| r.0), Value::Array(rows.into_iter().map(|r| r.1).collect())))
}

fn uniqueness() -> Result<(bool, Value)> {
    let mut ok = true;
    let mut rows = vec![];
    for (name, k) in [("square", square()), ("cube3", cube(3)?), ("simplex3", simplex(3)?)] {
        let r = has_unique_universal_extension(&k)?;
        ok &= r.unique && r.witness.is_none();
        rows.push(json!({ "base": name, "unique": r.unique, "maps_checked": r.maps_checked }));
    }
    let pyr = square_pyramid();
    let report = has_unique_universal_extension(&pyr)?;
    let aut = AutomorphismGroup::of(&pyr)?;
    let witness_ok = report.witness.as_ref().is_some_and(|w| {
        let back = facet_isomorphisms(&pyr, w.from_facet, w.to_facet);
        back.contains(w) && !facet_map_extends(&aut, w)
    });
    // Every ordered pair of distinct triangles.
    let facets = pyr.facets();
    let triangles: Vec<usize> = (0..facets.num_blocks()).filter(|&f| facets.block(f).len() == 6).collect();
    let mut per_pair = BTreeSet::new();
    for &a in &triangles {
        for &b in &triangles {
            if a != b {
                let maps = facet_isomorphisms(&pyr, a, b);
                let extending = maps.iter().filter(|m| facet_map_extends(&aut, m)).count();
                per_pair.insert((maps.len(), extending));
            }
        }
    }
    let counts_ok = per_pair.len() == 1 && per_pair.contains(&(6, 2));
    ok &= !report.unique && witness_ok && counts_ok && triangles.len() == 4;
    rows.push(json!({ "base": "pyramid", "unique": report.unique, "witness_revalidated": witness_ok, "triangle_maps": per_pair.iter().map(|&(t, e)| json!({ "total": t, "extending": e })).collect::<Vec<_>>() }));
    Ok((ok, Value::Array(rows)))
}

fn ball_census() -> Result<(bool, Value)> {
    let pre = PreExtender::canonical(square());
    let ball = UniversalBall::new(&pre, 3)?;
    let census = ball.census();
    let cumulative = ball.cumulative_census();
    let mut flags = vec![];
    for r in 0..=3 {
        flags.push(UniversalBall::new(&pre, r)?.num_flags());
    }
    let report = ball_local_checks(&ball);
    let ok = census == [1, 4, 12, 36]
        && cumulative == [1, 5, 17, 53]
        && flags == [8, 40, 136, 424]
        && report.passes()
        && report.interior_flags > 0;
    Ok((ok, json!({ "census": census, "cumulative": cumulative, "flags": flags, "interior_flags": report.interior_flags, "local_checks": report.passes() })))
}

/// A vertex pairing of the `{4,4}` toroid base swapping two vertices flag by
/// flag that does not commute with the toroidal `rn`.
fn non_commuting_vertex_swap(ext: &CayleyExtender) -> Option<Perm> {
    let k = ext.base();
    let verts = k.vertices();
    let rn = ext.pre().rn();
    let swap = |a: usize, b: usize| {
        let mut images: Vec<usize> = (0..k.num_flags()).collect();
        let (x, y) = (verts.block(a)[0], verts.block(b)[0]);
        for (p, q) in [(x, y), (k.adj(1, x), k.adj(1, y))] {
            images[p] = q;
            images[q] = p;
        }
        Perm::from_images(images).ok()
    };
    let nv = verts.num_blocks();
    (0..nv)
        .flat_map(|a| (a + 1..nv).map(move |b| (a, b)))
        .filter_map(|(a, b)| swap(a, b))
        .find(|t| (0..k.num_flags()).any(|f| rn.apply(t.apply(rn.apply(t.apply(f)))) != f))
}

fn amalgamation() -> Result<(bool, Value)> {
    let sq = square();
    let z2 = Arc::new(GroupModel::cyclic(2)?);
    let c = z2.generators()[0];
    let co = Coextender::canonical(sq.clone(), z2.clone(), vec![c; sq.vertices().num_blocks()])?;
    let spec = AmalgamationSpec::new(co, crate::constructions::ditope(&sq)?)?;
    let m = flat_amalgamate(&spec)?;
    let flat = is_flat(&m.graph);
    let polytopal = is_polytopal(&m.graph).is_none();
    let mut ok = m.num_flags() == 32 && m.graph.rank() == 4 && m.is_maniplex() && flat && polytopal;

    let tor = toroid_44(3, 3)?;
    let r_minus1 = non_commuting_vertex_swap(&tor).ok_or_else(|| Error::Precondition("no vertex swap".into()))?;
    let nv = tor.base().vertices().num_blocks();
    let bad = Coextender::new(tor.base().clone(), r_minus1.clone(), z2, vec![c; nv])?;
    let rejection = match AmalgamationSpec::new(bad, tor.clone()) {
        Err(Error::NotCommuting { i: 0, j: 3, flag }) => {
            let rn = tor.pre().rn();
            let step = |f: usize| rn.apply(r_minus1.apply(f));
            Some(flag).filter(|&f| step(step(f)) != f)
        }
        _ => None,
    };
    ok &= rejection.is_some();
    Ok((ok, json!({ "flags": m.num_flags(), "rank": m.graph.rank(), "flat": flat, "polytopal": polytopal, "rejected_at_flag": rejection })))
}

/// Maps `(Φ, γ) ↦ (Φ, hom γ)` and checks every color on every flag.
fn covering_commutes(upper: &CayleyExtender, lower: &CayleyExtender, hom: &[usize]) -> bool {
    let (a, b) = (upper.derive(), lower.derive());
    let project = |x: usize| {
        let (phi, gamma) = a.provenance(x);
        b.flag(phi, hom[gamma])
    };
    (0..a.graph.rank()).all(|c| (0..a.num_flags()).all(|x| project(a.graph.adj(c, x)) == b.graph.adj(c, project(x))))
}

fn word_normal_forms(pairs: usize, seed: u64) -> Result<bool> {
    let mut rng = StdRng::seed_from_u64(seed);
    let pre = toroid_44(3, 3)?.pre().clone();
    let pairing = pre.pairing().clone();
    let pyr = pyramid_triangle_pairing().pairing().clone();
    let mut ok = true;
    for i in 0..pairs {
        let p = if i % 2 == 0 { &pairing } else { &pyr };
        let nf = p.num_facets();
        let word = |rng: &mut StdRng| -> Vec<usize> {
            let len = rng.random_range(0..12);
            (0..len).map(|_| rng.random_range(0..nf)).collect()
        };
        let (u, v, w) = (word(&mut rng), word(&mut rng), word(&mut rng));
        let ru = ReducedWord::from_letters(p.clone(), &u)?;
        let rv = ReducedWord::from_letters(p.clone(), &v)?;
        let rw = ReducedWord::from_letters(p.clone(), &w)?;
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        let whole = ReducedWord::from_letters(p.clone(), &uv)?;
        let letters: Vec<usize> = whole.letters().collect();
        let reduced = letters.windows(2).all(|x| p.pair(x[0]) != x[1]);
        let product = ru.multiply(&rv)?;
        let assoc = product.multiply(&rw)? == ru.multiply(&rv.multiply(&rw)?)?;
        let inverse = product.multiply(&product.invert())?.is_empty();
        // The normal form is a fixed point of reduction.
        let stable = ReducedWord::from_letters(p.clone(), &letters)? == whole;
        ok &= reduced && product == whole && assoc && inverse && stable;
    }
    Ok(ok)
}

fn property_suites() -> Result<(bool, Value)> {
    // Free action: |Aut| times the number of orbits equals the flag count.
    let mut objects: Vec<(String, Premaniplex)> = vec![];
    for e in catalog() {
        objects.push((e.name.clone(), e.build()?.derive().graph));
    }
    for (name, k) in [
        ("square", square()),
        ("cube3", cube(3)?),
        ("simplex3", simplex(3)?),
        ("pyramid", square_pyramid()),
        ("cuboctahedron", crate::constructions::cuboctahedron()),
    ] {
        objects.push((name.into(), k));
    }
    let free: Vec<(bool, Value)> = objects
        .par_iter()
        .map(|(name, g)| -> Result<(bool, Value)> {
            let aut = AutomorphismGroup::of(g)?.order();
            let orbits = num_orbits(g)?;
            Ok((aut * orbits == g.num_flags(), json!({ "name": name, "aut": aut, "orbits": orbits, "flags": g.num_flags() })))
        })
        .collect::<Result<_>>()?;
    let free_ok = free.iter().all(|r| r.0);

    // Coverings from group quotients.
    let mut coverings = vec![];
    let z2sq = Arc::new(parse_group_spec("product cyclic 2 ; cyclic 2")?);
    let tor = toroid_44(4, 4)?;
    let q = quotient_extension(&tor, z2sq.clone(), z2sq.generators())?;
    coverings.push(("toroid44-4x4 -> 2x2", q.covering_verified && covering_commutes(&tor, &q.extender, &q.hom)));
    let z2 = Arc::new(GroupModel::cyclic(2)?);
    let hat = two_hat(&square())?;
    let q = quotient_extension(&hat, z2.clone(), &vec![z2.generators()[0]; hat.group().generators().len()])?;
    coverings.push(("two-hat-square -> ditope", q.covering_verified && covering_commutes(&hat, &q.extender, &q.hom)));
    let same = quotient_extension(&tor, tor.group().clone(), tor.group().generators())?;
    coverings.push(("identity", same.covering_verified && same.extender == tor));
    let cover_ok = coverings.iter().all(|c| c.1);

    let words_ok = word_normal_forms(10_000, 0x5eed)?;

    // Closure of every computed friendly group.
    let mut pres: Vec<PreExtender> = friendly_instances()?.into_iter().map(|i| i.1).collect();
    for e in catalog().iter().filter(|e| e.expected_flags <= 500) {
        pres.push(e.build()?.pre().clone());
    }
    let closure: Vec<bool> = pres
        .par_iter()
        .map(|pre| -> Result<bool> {
            let g = friendly_group(pre)?;
            let set: HashSet<&Perm> = g.elements.iter().collect();
            let inverses = g.elements.iter().all(|t| set.contains(&t.inverse()));
            let friendly = is_friendly_set(pre.base(), pre.rn(), pre.rn(), &g.elements)?.friendly;
            Ok(g.is_closed() && inverses && friendly)
        })
        .collect::<Result<_>>()?;
    let closure_ok = closure.iter().all(|&b| b);

    let ok = free_ok && cover_ok && words_ok && closure_ok;
    Ok((ok, json!({
        "free_action": free.into_iter().map(|r| r.1).collect::<Vec<_>>(),
        "coverings": coverings.iter().map(|(n, b)| json!({ "map": n, "commutes": b })).collect::<Vec<_>>(),
        "word_pairs": 10_000,
        "word_normal_forms": words_ok,
        "friendly_groups_closed": closure.len(),
        "closure": closure_ok,
    })))
}
