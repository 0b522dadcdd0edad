//! Immutable simple graphs over dense vertex ids with bitset adjacency.

use crate::bitset::{VertexSet, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("empty vertex query")]
    EmptyQuery,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        Graph { n, adj: vec![VertexSet::new(); n] }
    }

    pub fn complete(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        let full = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut s = full;
                s.remove(v);
                s
            })
            .collect();
        Graph { n, adj }
    }

    /// Builds a graph from a symmetric adjacency predicate on unordered pairs.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Graph {
        assert!(n <= MAX_VERTICES);
        let mut adj = vec![VertexSet::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Graph { n, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Intersection of the neighbourhoods of all members of `s`.
    pub fn common_neighbourhood(&self, s: &VertexSet) -> Result<VertexSet, GraphError> {
        let mut it = s.iter();
        let first = it.next().ok_or(GraphError::EmptyQuery)?;
        if first >= self.n {
            return Err(GraphError::OutOfRange { vertex: first, n: self.n });
        }
        let mut acc = self.adj[first];
        for v in it {
            if v >= self.n {
                return Err(GraphError::OutOfRange { vertex: v, n: self.n });
            }
            acc &= self.adj[v];
        }
        Ok(acc)
    }

    /// Common neighbourhood of an arbitrary vertex slice; empty slice yields
    /// every vertex.
    pub fn common_of(&self, vs: &[usize]) -> VertexSet {
        vs.iter().fold(self.vertices(), |acc, &v| acc & self.adj[v])
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.n).map(|v| self.degree(v)).min().ok_or(GraphError::EmptyGraph)
    }

    /// Minimum degree of the induced subgraph `G[s]`; `None` for empty `s`.
    pub fn min_degree_within(&self, s: &VertexSet) -> Option<usize> {
        s.iter().map(|v| (self.adj[v] & *s).len()).min()
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| v >= self.n || self.adj[v].is_disjoint(s))
    }

    /// Number of edges with one end in `a` and the other in `b`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| (self.adj[v] & *b).len()).sum()
    }

    /// Induced subgraph on `s`, relabelled to `0..|s|` in increasing order.
    /// The returned vector maps new ids back to old ones.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & *s).iter().map(|u| back[u]).collect())
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// Applies the vertex permutation `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::new(); self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// An isomorphism `self -> other` (as a vertex map), found by
    /// backtracking over degree-compatible images.
    pub fn isomorphism_to(&self, other: &Graph) -> Option<Vec<usize>> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return None;
        }
        let mut da: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return None;
        }
        // Map high-degree vertices first; ties by id.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut map = vec![usize::MAX; self.n];
        let mut used = VertexSet::new();
        fn extend(
            a: &Graph,
            b: &Graph,
            order: &[usize],
            i: usize,
            map: &mut [usize],
            used: &mut VertexSet,
        ) -> bool {
            let Some(&v) = order.get(i) else { return true };
            for w in (b.vertices() - *used).iter() {
                if b.degree(w) != a.degree(v) {
                    continue;
                }
                let consistent = order[..i].iter().all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
                if consistent {
                    map[v] = w;
                    used.insert(w);
                    if extend(a, b, order, i + 1, map, used) {
                        return true;
                    }
                    used.remove(w);
                }
            }
            false
        }
        extend(self, other, &order, 0, &mut map, &mut used).then_some(map)
    }

    /// Whether `u, v, w` span a triangle.
    #[inline]
    pub fn is_triangle(&self, u: usize, v: usize, w: usize) -> bool {
        self.has_edge(u, v) && self.has_edge(v, w) && self.has_edge(u, w)
    }

    /// All triangles `(u, v, w)` with `u < v < w`, lexicographically.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            let common = self.adj[u] & self.adj[v];
            let mut w = v;
            while let Some(x) = common.next_after(w) {
                out.push((u, v, x));
                w = x;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn common_neighbourhoods() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.common_neighbourhood(&set(&[0, 1])).unwrap(), set(&[2, 3]));
        assert!(cycle(5).common_neighbourhood(&set(&[0, 1])).unwrap().is_empty());
        assert_eq!(bowtie().common_neighbourhood(&set(&[1, 2])).unwrap(), set(&[0]));
        assert_eq!(k4.common_neighbourhood(&VertexSet::new()), Err(GraphError::EmptyQuery));
    }

    #[test]
    fn degrees_and_independence() {
        assert_eq!(Graph::complete(4).min_degree(), Ok(3));
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.min_degree(), Ok(1));
        assert_eq!(Graph::empty(0).min_degree(), Err(GraphError::EmptyGraph));
        assert!(!Graph::complete(4).is_independent_set(&set(&[0, 1])));
        assert!(cycle(5).is_independent_set(&set(&[0, 2])));
    }

    #[test]
    fn triangle_listing() {
        assert_eq!(bowtie().triangles(), vec![(0, 1, 2), (0, 3, 4)]);
        assert_eq!(Graph::complete(4).triangles().len(), 4);
        assert!(cycle(6).triangles().is_empty());
    }

    #[test]
    fn induced_relabels_in_order() {
        let (h, map) = bowtie().induced(&set(&[0, 3, 4]));
        assert_eq!(map, vec![0, 3, 4]);
        assert_eq!(h, Graph::complete(3));
    }

    #[test]
    fn isomorphism_search() {
        let c5 = cycle(5);
        let perm = [3, 0, 4, 1, 2];
        let h = c5.relabel(&perm);
        let map = c5.isomorphism_to(&h).unwrap();
        for (u, v) in c5.edges() {
            assert!(h.has_edge(map[u], map[v]));
        }
        let p5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(c5.isomorphism_to(&p5).is_none());
        // Same degree sequence, not isomorphic: C6 versus two triangles.
        let two_k3 = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(cycle(6).isomorphism_to(&two_k3).is_none());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..24).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn pigeonhole_on_common_neighbourhoods(g in arb_graph()) {
            let d = g.min_degree().unwrap() as i64;
            for (u, v) in g.edges() {
                let c = (g.neighbours(u) & g.neighbours(v)).len() as i64;
                prop_assert!(c >= 2 * d - g.n() as i64);
            }
        }

        #[test]
        fn adjacency_is_symmetric_and_loopless(g in arb_graph()) {
            for u in 0..g.n() {
                prop_assert!(!g.has_edge(u, u));
                for v in g.neighbours(u).iter() {
                    prop_assert!(g.has_edge(v, u));
                }
            }
        }

        #[test]
        fn edge_order_does_not_matter(g in arb_graph(), seed in any::<u64>()) {
            let mut edges = g.edges();
            let len = edges.len();
            if len > 1 {
                let k = (seed as usize) % len;
                edges.rotate_left(k);
                let (a, b) = edges[0];
                edges[0] = (b, a);
            }
            prop_assert_eq!(Graph::from_edge_list(g.n(), &edges).unwrap(), g);
        }
    }
}
