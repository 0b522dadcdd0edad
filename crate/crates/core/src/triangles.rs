//! Triangle components, interiors and triangle walks.
//!
//! Two edges are triangle connected when a sequence of edges joins them in
//! which consecutive edges lie in a common triangle. The classes of this
//! relation on edges that lie in at least one triangle are the triangle
//! components. A vertex in two or more components is interior; the other
//! vertices of a component form its exterior.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::collections::VecDeque;
use std::fmt::Write as _;
use thiserror::Error;

pub type Edge = (usize, usize);
pub type Triple = (usize, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("edge {0:?} does not lie in a triangle")]
    NotInTriangle(Edge),
    #[error("edges {0:?} and {1:?} lie in different triangle components")]
    NotConnected(Edge, Edge),
    #[error("lemma hypothesis 2*delta > n fails (n = {n}, delta = {delta})")]
    HypothesisUnmet { n: usize, delta: usize },
    #[error("no triangle component with id {0}")]
    NoSuchComponent(usize),
}

#[inline]
pub fn norm(e: Edge) -> Edge {
    if e.0 <= e.1 {
        e
    } else {
        (e.1, e.0)
    }
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}

/// Edge-to-component labelling plus the interior/exterior split.
///
/// Component ids are assigned in order of each component's lexicographically
/// smallest edge.
#[derive(Debug, Clone)]
pub struct TriangleDecomposition {
    n: usize,
    edges: Vec<Edge>,
    edge_ids: Vec<u32>,
    component_of: Vec<Option<usize>>,
    pub components: Vec<Vec<Edge>>,
    pub vertices_of: Vec<VertexSet>,
    pub interior: VertexSet,
    pub exterior_of: Vec<VertexSet>,
}

const NO_EDGE: u32 = u32::MAX;

impl TriangleDecomposition {
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let id = self.edge_ids[u * self.n + v];
        (id != NO_EDGE).then_some(id as usize)
    }

    /// Component of edge `uv`, or `None` when `uv` is not an edge or lies in
    /// no triangle.
    pub fn component_of(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_id(u, v).and_then(|id| self.component_of[id])
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Triangles whose edges lie in component `c`, as sorted triples in
    /// lexicographic order.
    pub fn triangles_in(&self, g: &Graph, c: usize) -> Vec<Triple> {
        let mut out = Vec::new();
        for &(u, v) in &self.components[c] {
            let common = g.neighbours(u) & g.neighbours(v);
            let mut w = v;
            while let Some(x) = common.next_after(w) {
                out.push((u, v, x));
                w = x;
            }
        }
        out.sort_unstable();
        out
    }
}

pub fn decompose(g: &Graph) -> TriangleDecomposition {
    let n = g.n();
    let edges = g.edges();
    let mut edge_ids = vec![NO_EDGE; n * n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        edge_ids[u * n + v] = i as u32;
        edge_ids[v * n + u] = i as u32;
    }
    let mut uf = UnionFind::new(edges.len());
    let mut in_triangle = vec![false; edges.len()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        let common = g.neighbours(u) & g.neighbours(v);
        let mut w = v;
        while let Some(x) = common.next_after(w) {
            let a = edge_ids[u * n + x] as usize;
            let b = edge_ids[v * n + x] as usize;
            uf.union(i, a);
            uf.union(i, b);
            in_triangle[i] = true;
            in_triangle[a] = true;
            in_triangle[b] = true;
            w = x;
        }
    }
    let mut root_to_comp = vec![usize::MAX; edges.len()];
    let mut component_of = vec![None; edges.len()];
    let mut components: Vec<Vec<Edge>> = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        if !in_triangle[i] {
            continue;
        }
        let r = uf.find(i);
        if root_to_comp[r] == usize::MAX {
            root_to_comp[r] = components.len();
            components.push(Vec::new());
        }
        let c = root_to_comp[r];
        component_of[i] = Some(c);
        components[c].push(e);
    }
    let vertices_of: Vec<VertexSet> =
        components.iter().map(|es| es.iter().flat_map(|&(u, v)| [u, v]).collect()).collect();
    let mut seen = VertexSet::new();
    let mut interior = VertexSet::new();
    for vs in &vertices_of {
        interior |= seen & *vs;
        seen |= *vs;
    }
    let exterior_of = vertices_of.iter().map(|vs| *vs - interior).collect();
    TriangleDecomposition { n, edges, edge_ids, component_of, components, vertices_of, interior, exterior_of }
}

/// Consecutive edges share the triangle recorded between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleWalk {
    pub edges: Vec<Edge>,
    pub shared_triangles: Vec<Triple>,
}

impl TriangleWalk {
    /// Builds a walk from its edges, deriving the shared triangles. `None`
    /// if two consecutive edges are equal, disjoint, or not in a triangle.
    pub fn from_edges(g: &Graph, edges: &[Edge]) -> Option<TriangleWalk> {
        if edges.is_empty() {
            return None;
        }
        let mut shared = Vec::with_capacity(edges.len() - 1);
        for w in edges.windows(2) {
            let t = shared_triangle(g, w[0], w[1])?;
            shared.push(t);
        }
        if !edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            return None;
        }
        Some(TriangleWalk { edges: edges.iter().map(|&e| norm(e)).collect(), shared_triangles: shared })
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        !self.edges.is_empty()
            && self.shared_triangles.len() + 1 == self.edges.len()
            && self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
            && self.edges.windows(2).zip(&self.shared_triangles).all(|(w, &(a, b, c))| {
                let t = [a, b, c];
                g.is_triangle(a, b, c)
                    && [w[0].0, w[0].1, w[1].0, w[1].1].iter().all(|x| t.contains(x))
                    && norm(w[0]) != norm(w[1])
            })
    }
}

/// The triangle spanned by two distinct edges sharing a vertex, if any.
pub fn shared_triangle(g: &Graph, e: Edge, f: Edge) -> Option<Triple> {
    let (e, f) = (norm(e), norm(f));
    if e == f {
        return None;
    }
    let mut vs: Vec<usize> = vec![e.0, e.1, f.0, f.1];
    vs.sort_unstable();
    vs.dedup();
    if vs.len() != 3 || !g.is_triangle(vs[0], vs[1], vs[2]) {
        return None;
    }
    Some((vs[0], vs[1], vs[2]))
}

/// Shortest triangle walk from `e1` to `e2`, breadth first with neighbours
/// visited in lexicographic order.
pub fn walk_between(
    g: &Graph,
    d: &TriangleDecomposition,
    e1: Edge,
    e2: Edge,
) -> Result<TriangleWalk, TriangleError> {
    let (e1, e2) = (norm(e1), norm(e2));
    let c1 = d.component_of(e1.0, e1.1).ok_or(TriangleError::NotInTriangle(e1))?;
    let c2 = d.component_of(e2.0, e2.1).ok_or(TriangleError::NotInTriangle(e2))?;
    if c1 != c2 {
        return Err(TriangleError::NotConnected(e1, e2));
    }
    let start = d.edge_id(e1.0, e1.1).unwrap();
    let goal = d.edge_id(e2.0, e2.1).unwrap();
    let mut parent = vec![usize::MAX; d.edges.len()];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            break;
        }
        let (u, v) = d.edges[cur];
        let mut next: Vec<usize> = Vec::new();
        for w in (g.neighbours(u) & g.neighbours(v)).iter() {
            next.push(d.edge_id(u, w).unwrap());
            next.push(d.edge_id(v, w).unwrap());
        }
        next.sort_unstable();
        for id in next {
            if parent[id] == usize::MAX {
                parent[id] = cur;
                queue.push_back(id);
            }
        }
    }
    let mut ids = vec![goal];
    while *ids.last().unwrap() != start {
        ids.push(parent[*ids.last().unwrap()]);
    }
    ids.reverse();
    let edges: Vec<Edge> = ids.iter().map(|&i| d.edges[i]).collect();
    Ok(TriangleWalk::from_edges(g, &edges).expect("breadth-first walk is a triangle walk"))
}

/// Lexicographically least `K4` whose edges lie in component `cid`.
pub fn component_contains_k4(
    g: &Graph,
    d: &TriangleDecomposition,
    cid: usize,
) -> Result<Option<[usize; 4]>, TriangleError> {
    let vs = *d.vertices_of.get(cid).ok_or(TriangleError::NoSuchComponent(cid))?;
    for a in vs.iter() {
        let na = g.neighbours(a) & vs;
        for b in na.iter().filter(|&b| b > a) {
            if d.component_of(a, b) != Some(cid) {
                continue;
            }
            let nab = na & g.neighbours(b);
            for c in nab.iter().filter(|&c| c > b) {
                if let Some(x) = (nab & g.neighbours(c)).next_after(c) {
                    return Ok(Some([a, b, c, x]));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaViolation {
    /// Part (a): a component with at most `δ` vertices.
    SmallComponent { component: usize, size: usize },
    /// Part (c): an edge joining exteriors of distinct components.
    ExteriorEdge { u: usize, v: usize },
    /// Part (d): `U = {v : uv ∈ C}` induces minimum degree below `2δ − n`.
    LowInducedDegree { component: usize, vertex: usize, min_degree: usize },
    /// Part (d): `|U| < 2δ − n + 1`.
    SmallNeighbourhood { component: usize, vertex: usize, size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLemmaReport {
    pub n: usize,
    pub delta: usize,
    pub components: usize,
    pub violations: Vec<LemmaViolation>,
}

impl ComponentLemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for a graph with `2δ > n`, that every triangle component has more
/// than `δ` vertices, that no edge joins the exteriors of two components, and
/// that for each vertex `u` of a component `C` the set `U = {v : uv ∈ C}`
/// has at least `2δ − n + 1` vertices and induces minimum degree at least
/// `2δ − n`.
pub fn check_component_lemma(g: &Graph) -> Result<ComponentLemmaReport, TriangleError> {
    let n = g.n();
    let delta = g.min_degree().unwrap_or(0);
    if n == 0 || 2 * delta <= n {
        return Err(TriangleError::HypothesisUnmet { n, delta });
    }
    let d = decompose(g);
    let slack = 2 * delta - n;
    let mut violations = Vec::new();
    for (c, vs) in d.vertices_of.iter().enumerate() {
        if vs.len() <= delta {
            violations.push(LemmaViolation::SmallComponent { component: c, size: vs.len() });
        }
    }
    for (c, ext) in d.exterior_of.iter().enumerate() {
        for ext2 in d.exterior_of.iter().skip(c + 1) {
            for u in ext.iter() {
                if let Some(v) = (g.neighbours(u) & *ext2).first() {
                    violations.push(LemmaViolation::ExteriorEdge { u: u.min(v), v: u.max(v) });
                }
            }
        }
    }
    for (c, vs) in d.vertices_of.iter().enumerate() {
        for u in vs.iter() {
            let big_u: VertexSet =
                (g.neighbours(u) & *vs).iter().filter(|&v| d.component_of(u, v) == Some(c)).collect();
            if big_u.is_empty() {
                continue;
            }
            if big_u.len() < slack + 1 {
                violations.push(LemmaViolation::SmallNeighbourhood { component: c, vertex: u, size: big_u.len() });
            }
            let md = g.min_degree_within(&big_u).unwrap_or(0);
            if md < slack {
                violations.push(LemmaViolation::LowInducedDegree { component: c, vertex: u, min_degree: md });
            }
        }
    }
    Ok(ComponentLemmaReport { n, delta, components: d.num_components(), violations })
}

/// Tab-separated per-component summary with a header row.
pub fn component_table(g: &Graph, d: &TriangleDecomposition) -> String {
    let mut out = String::from("component\tvertices\tedges\tinterior\texterior\tk4\n");
    for c in 0..d.num_components() {
        let k4 = component_contains_k4(g, d, c).ok().flatten().is_some();
        let _ = writeln!(
            out,
            "{c}\t{}\t{}\t{}\t{}\t{}",
            d.vertices_of[c].len(),
            d.components[c].len(),
            (d.vertices_of[c] & d.interior).len(),
            d.exterior_of[c].len(),
            if k4 { "yes" } else { "no" }
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use proptest::prelude::*;

    fn bowtie() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
    }

    // Components by repeated flooding over shared triangles, no union-find.
    fn flood_components(g: &Graph) -> Vec<Vec<Edge>> {
        let edges = g.edges();
        let mut label = vec![usize::MAX; edges.len()];
        let mut comps = Vec::new();
        for i in 0..edges.len() {
            let (u, v) = edges[i];
            if label[i] != usize::MAX || (g.neighbours(u) & g.neighbours(v)).is_empty() {
                continue;
            }
            let c = comps.len();
            label[i] = c;
            let mut stack = vec![i];
            let mut members = vec![];
            while let Some(j) = stack.pop() {
                members.push(edges[j]);
                for k in 0..edges.len() {
                    if label[k] == usize::MAX && shared_triangle(g, edges[j], edges[k]).is_some() {
                        label[k] = c;
                        stack.push(k);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
    }

    #[test]
    fn small_examples() {
        let d = decompose(&Graph::complete(4));
        assert_eq!(d.num_components(), 1);
        assert_eq!(d.components[0].len(), 6);
        assert!(d.interior.is_empty());

        let d = decompose(&bowtie());
        assert_eq!(d.num_components(), 2);
        assert_eq!(d.interior.to_vec(), vec![0]);
        assert_eq!(d.component_of(3, 4), Some(1));

        let path = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let d = decompose(&path);
        assert_eq!(d.num_components(), 0);
        assert_eq!(d.component_of(0, 1), None);
    }

    #[test]
    fn gp_interior_is_the_independent_part() {
        let c = generators::make_gp(15, 9).unwrap();
        let d = decompose(&c.graph);
        assert_eq!(d.num_components(), 2);
        let y: VertexSet = (0..6).collect();
        assert_eq!(d.interior, y);
        assert_eq!(d.exterior_of[0].len() + d.exterior_of[1].len(), 9);
        assert_eq!(c.part(&"Y".to_string()), y);
    }

    #[test]
    fn walks() {
        let k4 = Graph::complete(4);
        let d = decompose(&k4);
        let w = walk_between(&k4, &d, (0, 1), (2, 3)).unwrap();
        assert!(w.edges.len() <= 3 && w.is_valid(&k4));
        assert_eq!(w.edges.first(), Some(&(0, 1)));
        assert_eq!(w.edges.last(), Some(&(2, 3)));
        let same = walk_between(&k4, &d, (1, 0), (0, 1)).unwrap();
        assert_eq!(same.edges, vec![(0, 1)]);
        assert!(same.shared_triangles.is_empty());

        let b = bowtie();
        let d = decompose(&b);
        assert_eq!(walk_between(&b, &d, (1, 2), (3, 4)), Err(TriangleError::NotConnected((1, 2), (3, 4))));
        let p = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let d = decompose(&p);
        assert_eq!(walk_between(&p, &d, (0, 1), (2, 3)), Err(TriangleError::NotInTriangle((2, 3))));
    }

    #[test]
    fn k4_detection() {
        let k4 = Graph::complete(4);
        assert_eq!(component_contains_k4(&k4, &decompose(&k4), 0), Ok(Some([0, 1, 2, 3])));
        let t = generators::make_tripartite_extremal(10, 6).unwrap().graph;
        let d = decompose(&t);
        assert_eq!(d.num_components(), 1);
        assert_eq!(component_contains_k4(&t, &d, 0), Ok(None));
        let gp = generators::make_gp(15, 9).unwrap().graph;
        let d = decompose(&gp);
        // Component 1 is Y = {0..5} with the 5-clique {10..14}.
        assert_eq!(component_contains_k4(&gp, &d, 1), Ok(Some([0, 10, 11, 12])));
        assert_eq!(component_contains_k4(&gp, &d, 5), Err(TriangleError::NoSuchComponent(5)));
    }

    #[test]
    fn component_lemma_examples() {
        let gp = generators::make_gp(15, 9).unwrap().graph;
        assert!(check_component_lemma(&gp).unwrap().passed());
        let gc = generators::make_gc(20, 12).unwrap().graph;
        assert!(check_component_lemma(&gc).unwrap().passed());
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(check_component_lemma(&c5), Err(TriangleError::HypothesisUnmet { n: 5, delta: 2 }));
    }

    #[test]
    fn table_has_one_row_per_component() {
        let gp = generators::make_gp(15, 9).unwrap().graph;
        let t = component_table(&gp, &decompose(&gp));
        assert_eq!(t.lines().count(), 3);
        assert_eq!(t.lines().nth(1), Some("0\t10\t30\t6\t4\tyes"));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (3usize..max_n, 0.2f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| crate::random::gnp(n, p, seed))
    }

    proptest! {
        #[test]
        fn union_find_matches_flooding(g in arb_graph(14)) {
            let d = decompose(&g);
            prop_assert_eq!(&d.components, &flood_components(&g));
            for (c, vs) in d.vertices_of.iter().enumerate() {
                let others = d.vertices_of.iter().enumerate()
                    .filter(|&(c2, _)| c2 != c)
                    .fold(VertexSet::new(), |acc, (_, s)| acc | *s);
                prop_assert_eq!(d.exterior_of[c], *vs - others);
            }
        }

        #[test]
        fn relabelling_commutes(g in arb_graph(14), seed in any::<u64>()) {
            let n = g.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm);
            let dg = decompose(&g);
            let dh = decompose(&h);
            let mut mapped: Vec<Vec<Edge>> = dg.components.iter()
                .map(|es| { let mut v: Vec<Edge> = es.iter().map(|&(u, w)| norm((perm[u], perm[w]))).collect(); v.sort_unstable(); v })
                .collect();
            mapped.sort();
            let mut direct = dh.components.clone();
            direct.sort();
            prop_assert_eq!(mapped, direct);
            let interior: VertexSet = dg.interior.iter().map(|v| perm[v]).collect();
            prop_assert_eq!(interior, dh.interior);
        }

        #[test]
        fn walks_stay_in_their_component(g in arb_graph(12), i in any::<usize>(), j in any::<usize>()) {
            let d = decompose(&g);
            prop_assume!(d.num_components() > 0);
            let c = i % d.num_components();
            let es = &d.components[c];
            let (e1, e2) = (es[i % es.len()], es[j % es.len()]);
            let w = walk_between(&g, &d, e1, e2).unwrap();
            prop_assert!(w.is_valid(&g));
            for &(u, v) in &w.edges {
                prop_assert_eq!(d.component_of(u, v), Some(c));
            }
        }

        #[test]
        fn component_lemma_on_dense_graphs(n in 8usize..17, p in 0.6f64..0.95, seed in any::<u64>()) {
            let g = crate::random::gnp(n, p, seed);
            prop_assume!(2 * g.min_degree().unwrap() > n);
            prop_assert!(check_component_lemma(&g).unwrap().passed());
        }
    }
}
