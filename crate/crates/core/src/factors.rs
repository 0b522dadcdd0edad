//! Connected triangle factors: vertex-disjoint triangles whose edges all lie
//! in one triangle component.
//!
//! `CTF(G)` is the largest number of vertices such a factor covers. It is
//! computed exactly by branch and bound for small graphs and bounded from
//! below by matching-based constructions otherwise.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::matching::{max_bipartite_assignment, max_matching_mindeg, Matching};
use crate::triangles::{decompose, norm, Edge, TriangleDecomposition};
use rayon::prelude::*;
use thiserror::Error;

/// Largest order `ctf_exact` accepts unless told otherwise.
pub const DEFAULT_EXACT_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("matching edges {0:?} and {1:?} are not triangle connected")]
    NotTriangleConnected(Edge, Edge),
    #[error("apex pool meets the matching in {0:?}")]
    Overlap(Vec<usize>),
    #[error("graph has {n} vertices, over the exact-search cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid factor: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConnectedTriangleFactor {
    /// Sorted triples, in increasing order.
    pub triangles: Vec<[usize; 3]>,
    /// `None` only for the empty factor.
    pub component_id: Option<usize>,
}

impl ConnectedTriangleFactor {
    fn new(mut triangles: Vec<[usize; 3]>, component_id: Option<usize>) -> Self {
        for t in &mut triangles {
            t.sort_unstable();
        }
        triangles.sort_unstable();
        let component_id = if triangles.is_empty() { None } else { component_id };
        ConnectedTriangleFactor { triangles, component_id }
    }

    pub fn size(&self) -> usize {
        3 * self.triangles.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.triangles.iter().flatten().copied().collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "component_id": self.component_id,
            "size": self.size(),
            "triangles": self.triangles,
        })
    }
}

/// Checks disjointness, that every triple is a triangle and that all edges
/// share one component, recomputing the decomposition.
pub fn validate_factor(g: &Graph, f: &ConnectedTriangleFactor) -> Result<(), FactorError> {
    let d = decompose(g);
    let mut seen = VertexSet::new();
    let mut comp = None;
    for &[a, b, c] in &f.triangles {
        if a >= g.n() || b >= g.n() || c >= g.n() || !g.is_triangle(a, b, c) {
            return Err(FactorError::Invalid(format!("{a}{b}{c} is not a triangle")));
        }
        for v in [a, b, c] {
            if seen.contains(v) {
                return Err(FactorError::Invalid(format!("vertex {v} is covered twice")));
            }
            seen.insert(v);
        }
        for (u, v) in [(a, b), (a, c), (b, c)] {
            let cid = d.component_of(u, v);
            if comp.is_none() {
                comp = cid;
            }
            if cid != comp {
                return Err(FactorError::Invalid(format!("edge {u}{v} leaves component {comp:?}")));
            }
        }
    }
    if comp != f.component_id {
        return Err(FactorError::Invalid(format!("recorded component {:?}, found {comp:?}", f.component_id)));
    }
    Ok(())
}

/// The subgraph formed by the edges of component `c`. Its triangles are
/// exactly the triangles of `g` lying in `c`.
fn component_graph(g: &Graph, d: &TriangleDecomposition, c: usize) -> Graph {
    let vs = d.vertices_of[c];
    Graph::from_fn(g.n(), |u, v| vs.contains(u) && vs.contains(v) && d.component_of(u, v) == Some(c))
}

/// Greedily extends the edges of `m`, in order, by the least common
/// neighbour outside `m` and the apexes already taken. Edges left without
/// an apex are dropped.
fn greedy_apexes(g: &Graph, edges: &[Edge], forbidden: VertexSet) -> Vec<[usize; 3]> {
    let mut used = forbidden;
    let mut out = Vec::new();
    for &(u, v) in edges {
        if let Some(w) = ((g.neighbours(u) & g.neighbours(v)) - used).first() {
            used.insert(w);
            out.push([u, v, w]);
        }
    }
    out
}

/// A connected triangle factor grown from a matching inside `u1`.
///
/// The matching is trimmed to `min(⌊|U1|/2⌋, δ1, ⌊(2δ − n + |U2|)/3⌋)` edges.
/// Every `x, y ∈ U1` then have at least `2δ − n + |U2|` common neighbours,
/// more than the vertices already spent, so each edge gets an apex.
pub fn greedy_connected_factor(
    g: &Graph,
    u1: &VertexSet,
    u2: &VertexSet,
    delta1: usize,
) -> Result<ConnectedTriangleFactor, FactorError> {
    let n = g.n();
    let delta = g.min_degree().map_err(|e| FactorError::PreconditionViolated(e.to_string()))?;
    if !u1.is_disjoint(u2) {
        return Err(FactorError::PreconditionViolated(format!("U1 and U2 share {:?}", (*u1 & *u2).to_vec())));
    }
    if let Some(x) = u1.iter().find(|&x| !(g.neighbours(x) & *u2).is_empty()) {
        let y = (g.neighbours(x) & *u2).first().unwrap();
        return Err(FactorError::PreconditionViolated(format!("edge {x}{y} joins U1 and U2")));
    }
    if let Some(x) = u1.iter().find(|&x| (g.neighbours(x) & *u1).len() < delta1) {
        return Err(FactorError::PreconditionViolated(format!(
            "vertex {x} has {} neighbours in U1, fewer than {delta1}",
            (g.neighbours(x) & *u1).len()
        )));
    }
    let d = decompose(g);
    let inner: Vec<Edge> = g.edges().into_iter().filter(|&(a, b)| u1.contains(a) && u1.contains(b)).collect();
    let mut comp = None;
    for &(a, b) in &inner {
        match (d.component_of(a, b), comp) {
            (None, _) => return Err(FactorError::PreconditionViolated(format!("edge {a}{b} lies in no triangle"))),
            (Some(c), None) => comp = Some((c, (a, b))),
            (Some(c), Some((c0, e0))) if c != c0 => {
                return Err(FactorError::PreconditionViolated(format!(
                    "edges {e0:?} and {:?} of U1 are not triangle connected",
                    (a, b)
                )))
            }
            _ => {}
        }
    }
    let slack = (2 * delta + u2.len()).saturating_sub(n) / 3;
    let keep = (u1.len() / 2).min(delta1).min(slack);
    let mut m = max_matching_mindeg(g, u1);
    m.edges.truncate(keep);
    let tris = greedy_apexes(g, &m.edges, m.covered());
    debug_assert_eq!(tris.len(), m.len(), "every trimmed edge has a spare common neighbour");
    Ok(ConnectedTriangleFactor::new(tris, comp.map(|c| c.0)))
}

/// Extends `m` to triangles through a maximum matching of the auxiliary
/// bipartite graph joining each edge `uv` of `m` to the apexes `w` with
/// `uvw` a triangle.
pub fn hall_extension_factor(
    g: &Graph,
    m: &Matching,
    apex_pool: &VertexSet,
) -> Result<ConnectedTriangleFactor, FactorError> {
    let overlap = m.covered() & *apex_pool;
    if !overlap.is_empty() {
        return Err(FactorError::Overlap(overlap.to_vec()));
    }
    if m.is_empty() {
        return Ok(ConnectedTriangleFactor::default());
    }
    let d = decompose(g);
    let first = m.edges[0];
    let comp = d.component_of(first.0, first.1);
    for &e in &m.edges {
        let c = d.component_of(e.0, e.1);
        if c.is_none() || c != comp {
            return Err(FactorError::NotTriangleConnected(norm(first), norm(e)));
        }
    }
    let apexes = apex_pool.to_vec();
    let partner = max_bipartite_assignment(m.len(), apexes.len(), |i, j| {
        let (u, v) = m.edges[i];
        g.has_edge(u, apexes[j]) && g.has_edge(v, apexes[j])
    });
    let tris = partner.iter().zip(&m.edges).filter_map(|(p, &(u, v))| p.map(|j| [u, v, apexes[j]])).collect();
    Ok(ConnectedTriangleFactor::new(tris, comp))
}

fn has_live_triangle(h: &Graph, v: usize, live: VertexSet) -> bool {
    let nv = h.neighbours(v) & live;
    nv.iter().any(|u| !(nv & h.neighbours(u)).is_empty())
}

/// An independent set of `h[live]`, least degree first.
fn greedy_independent(h: &Graph, live: VertexSet) -> VertexSet {
    let mut rest = live;
    let mut out = VertexSet::new();
    while let Some(v) = rest.iter().min_by_key(|&v| ((h.neighbours(v) & rest).len(), v)) {
        out.insert(v);
        rest = rest - h.neighbours(v) - VertexSet::singleton(v);
    }
    out
}

/// A triangle meets an independent set at most once, so at most
/// `⌊|live \ I|/2⌋` disjoint triangles fit.
fn packing_bound(h: &Graph, live: VertexSet) -> usize {
    (live.len() / 3).min((live - greedy_independent(h, live)).len() / 2)
}

struct Packer<'a> {
    h: &'a Graph,
    best: Vec<[usize; 3]>,
    cur: Vec<[usize; 3]>,
    target: usize,
}

impl Packer<'_> {
    fn search(&mut self, mut live: VertexSet) {
        if self.cur.len() > self.best.len() {
            self.best = self.cur.clone();
        }
        if self.best.len() >= self.target {
            return;
        }
        loop {
            let dead: VertexSet = live.iter().filter(|&v| !has_live_triangle(self.h, v, live)).collect();
            if dead.is_empty() {
                break;
            }
            live -= dead;
        }
        if self.cur.len() + packing_bound(self.h, live) <= self.best.len() {
            return;
        }
        let Some(v) = live.first() else { return };
        let nv = self.h.neighbours(v) & live;
        for u in nv.iter() {
            for w in (nv & self.h.neighbours(u)).iter().filter(|&w| w > u) {
                self.cur.push([v, u, w]);
                let rest = live - [v, u, w].into_iter().collect::<VertexSet>();
                self.search(rest);
                self.cur.pop();
                if self.best.len() >= self.target {
                    return;
                }
            }
        }
        self.search(live - VertexSet::singleton(v));
    }
}

fn pack_exact(h: &Graph, vs: VertexSet) -> Vec<[usize; 3]> {
    let mut p = Packer { h, best: Vec::new(), cur: Vec::new(), target: packing_bound(h, vs) };
    p.search(vs);
    p.best
}

fn best_of(candidates: impl Iterator<Item = ConnectedTriangleFactor>) -> ConnectedTriangleFactor {
    // Largest factor, ties to the lowest component id.
    candidates.fold(ConnectedTriangleFactor::default(), |best, f| {
        let better = f.triangles.len() > best.triangles.len()
            || (f.triangles.len() == best.triangles.len()
                && !f.triangles.is_empty()
                && f.component_id < best.component_id);
        if better {
            f
        } else {
            best
        }
    })
}

/// A maximum connected triangle factor, refusing graphs over `cap` vertices.
pub fn ctf_exact_with_cap(g: &Graph, cap: usize) -> Result<ConnectedTriangleFactor, FactorError> {
    if g.n() > cap {
        return Err(FactorError::TooLarge { n: g.n(), cap });
    }
    let d = decompose(g);
    let found: Vec<ConnectedTriangleFactor> = (0..d.num_components())
        .into_par_iter()
        .map(|c| {
            let h = component_graph(g, &d, c);
            ConnectedTriangleFactor::new(pack_exact(&h, d.vertices_of[c]), Some(c))
        })
        .collect();
    Ok(best_of(found.into_iter()))
}

pub fn ctf_exact(g: &Graph) -> Result<ConnectedTriangleFactor, FactorError> {
    ctf_exact_with_cap(g, DEFAULT_EXACT_CAP)
}

/// Triangles picked one at a time at the least live vertex.
fn greedy_packing(h: &Graph, vs: VertexSet) -> Vec<[usize; 3]> {
    let mut live = vs;
    let mut out = Vec::new();
    while let Some(v) = live.first() {
        live.remove(v);
        let nv = h.neighbours(v) & live;
        // Prefer the pair with the fewest live neighbours to keep dense
        // regions for later.
        let pick = nv
            .iter()
            .flat_map(|u| (nv & h.neighbours(u)).iter().filter(move |&w| w > u).map(move |w| (u, w)))
            .min_by_key(|&(u, w)| ((h.neighbours(u) & live).len() + (h.neighbours(w) & live).len(), u, w));
        if let Some((u, w)) = pick {
            live.remove(u);
            live.remove(w);
            out.push([v, u, w]);
        }
    }
    out
}

/// The best connected triangle factor found by a portfolio of polynomial
/// constructions, per component: a matching in the exterior extended by
/// greedy apexes, the same matching (trimmed to a third of the component)
/// extended by bipartite matching onto the remaining vertices, and a plain
/// greedy packing.
pub fn ctf_lower_bound(g: &Graph) -> ConnectedTriangleFactor {
    let d = decompose(g);
    let found: Vec<ConnectedTriangleFactor> = (0..d.num_components())
        .into_par_iter()
        .map(|c| {
            let h = component_graph(g, &d, c);
            let vs = d.vertices_of[c];
            let core = if d.exterior_of[c].len() >= 2 { d.exterior_of[c] } else { vs };
            let m = max_matching_mindeg(&h, &core);
            let mut cands = vec![greedy_apexes(&h, &m.edges, m.covered()), greedy_packing(&h, vs)];
            for keep in [m.len(), m.len().min(vs.len() / 3)] {
                let mut trimmed = m.clone();
                trimmed.edges.truncate(keep);
                let pool = vs - trimmed.covered();
                if let Ok(f) = hall_extension_factor(g, &trimmed, &pool) {
                    cands.push(f.triangles);
                }
            }
            best_of(cands.into_iter().map(|t| ConnectedTriangleFactor::new(t, Some(c))))
        })
        .collect();
    best_of(found.into_iter())
}
