//! Squared cycles of every length from a dense core and a connector set.
//!
//! Squaring a core cycle on `2m` vertices gives `C²_{3m}`. The other residues
//! need parity correction:
//!
//! * `ℓ = 3m + 1`: take a triangle `abc` and a core path `a … c` on `2m`
//!   vertices avoiding `b`. Square `b, a, …, c, b′` where `b′` is a clone of
//!   `b`, drop the first connector and the clone. The result is the cycle
//!   `b, a, q2, p2, p3, q3, …, q_{m+1}, c`.
//! * `ℓ = 3m + 2`, `m ≥ 2`: take triangles `abc`, `xyz` joined by the edge
//!   `cx` and a core path `a … z` on `2m − 2` vertices avoiding `b, c, x, y`.
//!   Square `b, a, …, z, y` and `(b, c, x, y)` and splice: the cycle is
//!   `b, a, q2, …, q_m, z, y, x, q′, c`.
//!
//! `C²_5` is `K5` and is never produced this way.

use super::nice::{exact_path, nice_path_cycle, nice_preconditions, PathSearch};
use super::squaring::assign_connectors;
use super::{validate_witness, EmbedError, EmbeddingWitness};
use crate::bitset::VertexSet;
use crate::graph::Graph;

const PATH_BUDGET: usize = 200_000;
/// Core paths tried per length before giving up.
const MAX_ATTEMPTS: usize = 64;

/// A path `from … to` on `len` vertices of `allowed`, through the nice-path
/// construction when its degree conditions hold and by bounded search
/// otherwise.
fn core_path(g: &Graph, allowed: VertexSet, from: usize, to: usize, len: usize) -> Option<Vec<usize>> {
    if len == 2 {
        return g.has_edge(from, to).then(|| vec![from, to]);
    }
    if len >= 5 {
        let (sub, map) = g.induced(&allowed);
        let idx = |v: usize| map.iter().position(|&m| m == v).unwrap();
        let ends = Some((idx(from), idx(to)));
        if nice_preconditions(&sub, &VertexSet::new(), len, ends).is_ok() {
            if let Ok(p) = nice_path_cycle(&sub, &VertexSet::new(), len, ends) {
                return Some(p.into_iter().map(|v| map[v]).collect());
            }
        }
    }
    match exact_path(g, allowed, from, to, len, PATH_BUDGET) {
        PathSearch::Found(p) => Some(p),
        _ => None,
    }
}

/// Connectors for `quads` in increasing order of availability.
fn connectors_for(g: &Graph, quads: &[Vec<usize>], w: &VertexSet) -> Option<Vec<usize>> {
    let mut sigma: Vec<usize> = (0..quads.len()).collect();
    sigma.sort_by_key(|&i| ((g.common_of(&quads[i]) & *w).len(), i));
    assign_connectors(g, quads, w, &sigma).ok()
}

fn triangles_in(g: &Graph, core: &VertexSet) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in core.iter() {
        let na = g.neighbours(a) & *core;
        for b in na.iter().filter(|&b| b > a) {
            for c in (na & g.neighbours(b)).iter().filter(|&c| c > b) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn zero_mod_three(g: &Graph, core: VertexSet, w: &VertexSet, m: usize) -> Result<Option<Vec<usize>>, EmbedError> {
    if m == 1 {
        // C²_3 is a triangle: a core edge plus a common connector.
        let found = g.edges().into_iter().filter(|&(a, b)| core.contains(a) && core.contains(b)).find_map(|(a, b)| {
            (g.common_of(&[a, b]) & *w).first().map(|q| vec![q, a, b])
        });
        return Ok(found);
    }
    let len = 2 * m;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let (sub, map) = g.induced(&core);
    if nice_preconditions(&sub, &VertexSet::new(), len, None).is_ok() {
        if let Ok(c) = nice_path_cycle(&sub, &VertexSet::new(), len, None) {
            cycles.push(c.into_iter().map(|v| map[v]).collect());
        }
    }
    let edges = g.edges().into_iter().filter(|&(a, b)| core.contains(a) && core.contains(b));
    let candidates = cycles.into_iter().map(Some).chain(edges.map(|(x, y)| core_path(g, core, y, x, len)));
    for t in candidates.take(MAX_ATTEMPTS).flatten() {
        let quads = super::squaring::quadruples(&t, true);
        if let Some(q) = connectors_for(g, &quads, w) {
            let mut seq = Vec::with_capacity(3 * m);
            for i in 0..m {
                seq.extend([q[i], t[2 * i], t[2 * i + 1]]);
            }
            return Ok(Some(seq));
        }
    }
    Ok(None)
}

fn orientations([p, q, r]: [usize; 3]) -> [[usize; 3]; 6] {
    [[p, q, r], [q, p, r], [r, p, q], [p, r, q], [q, r, p], [r, q, p]]
}

fn one_mod_three(g: &Graph, core: VertexSet, w: &VertexSet, m: usize) -> Option<Vec<usize>> {
    let attempts = triangles_in(g, &core).into_iter().flat_map(orientations).take(MAX_ATTEMPTS);
    for [a, b, c] in attempts {
        let Some(path) = core_path(g, core - VertexSet::singleton(b), a, c, 2 * m) else { continue };
        // T = b, path, b′ with b′ read as b.
        let mut t = vec![b];
        t.extend(&path);
        t.push(b);
        let quads: Vec<Vec<usize>> = (1..=m).map(|i| t[2 * i - 2..2 * i + 2].to_vec()).collect();
        if let Some(qs) = connectors_for(g, &quads, w) {
            let mut seq = vec![b, a];
            for i in 0..m {
                seq.push(qs[i]);
                seq.extend(&t[2 * i + 2..2 * i + 4]);
            }
            seq.pop();
            return Some(seq);
        }
    }
    None
}

fn two_mod_three(g: &Graph, core: VertexSet, w: &VertexSet, m: usize) -> Option<Vec<usize>> {
    let tris = triangles_in(g, &core);
    let pairs = tris.iter().flat_map(|&t1| orientations(t1)).flat_map(|[a, b, c]| {
        tris.iter().flat_map(|&t2| orientations(t2)).filter_map(move |[x, y, z]| {
            let six: VertexSet = [a, b, c, x, y, z].into_iter().collect();
            (six.len() == 6 && g.has_edge(c, x)).then_some((a, b, c, x, y, z))
        })
    });
    for (a, b, c, x, y, z) in pairs.take(MAX_ATTEMPTS) {
        let avoid: VertexSet = [b, c, x, y].into_iter().collect();
        let Some(path) = core_path(g, core - avoid, a, z, 2 * m - 2) else { continue };
        let mut t = vec![b];
        t.extend(&path);
        t.push(y);
        let mut quads: Vec<Vec<usize>> = (2..=m).map(|i| t[2 * i - 4..2 * i].to_vec()).collect();
        quads.push(vec![b, c, x, y]);
        if let Some(qs) = connectors_for(g, &quads, w) {
            let mut seq = vec![b, a];
            for i in 0..m - 1 {
                seq.push(qs[i]);
                seq.extend(&t[2 * i + 2..2 * i + 4]);
            }
            seq.extend([x, qs[m - 1], c]);
            return Some(seq);
        }
    }
    None
}

/// A squared cycle on `ell` vertices whose base lies in `core` and whose
/// connectors come from `connectors`.
pub fn squared_cycle_via_parity_correction(
    g: &Graph,
    core: &VertexSet,
    connectors: &VertexSet,
    ell: usize,
) -> Result<EmbeddingWitness, EmbedError> {
    if ell == 5 {
        return Err(EmbedError::Five);
    }
    if ell < 3 {
        return Err(EmbedError::InvalidLength(ell));
    }
    if !core.is_disjoint(connectors) {
        return Err(EmbedError::Overlap);
    }
    let m = ell / 3;
    let needs_triangle = !ell.is_multiple_of(3);
    if needs_triangle && triangles_in(g, core).is_empty() {
        return Err(EmbedError::NoTriangle);
    }
    let seq = match ell % 3 {
        0 => zero_mod_three(g, *core, connectors, m)?,
        1 => one_mod_three(g, *core, connectors, m),
        _ => two_mod_three(g, *core, connectors, m),
    }
    .ok_or(EmbedError::LengthUnreachable(ell))?;
    let w = EmbeddingWitness::cycle(seq);
    if w.len() != ell || !validate_witness(g, &w) {
        return Err(EmbedError::ConstructionStuck(format!("parity correction produced an invalid C²_{ell}")));
    }
    Ok(w)
}
