//! Maximum matchings: Edmonds' blossom algorithm on an induced subgraph and
//! augmenting paths for bipartite graphs.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::triangles::{norm, Edge};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("the two sides share vertices {0:?}")]
    Overlap(Vec<usize>),
}

/// Pairwise disjoint edges, each stored as `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Matching {
        let mut edges: Vec<Edge> = edges.into_iter().map(norm).collect();
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.covered().len() == 2 * self.len() && self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    within: VertexSet,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Breadth-first search for an augmenting path from `root`; returns its
    /// free far end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in (self.g.neighbours(v) & self.within).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// A maximum matching of `g[restrict]`.
pub fn max_matching_mindeg(g: &Graph, restrict: &VertexSet) -> Matching {
    let n = g.n();
    let within = *restrict & g.vertices();
    let mut b = Blossom {
        g,
        within,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // Greedy start, then augment from every free vertex.
    for v in within.iter() {
        if b.mate[v] == NONE {
            if let Some(u) = (g.neighbours(v) & within).iter().find(|&u| b.mate[u] == NONE) {
                b.mate[v] = u;
                b.mate[u] = v;
            }
        }
    }
    for root in within.iter() {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NONE {
                let pv = b.parent[v];
                let ppv = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = ppv;
            }
        }
    }
    Matching::from_edges(within.iter().filter(|&v| b.mate[v] != NONE && v < b.mate[v]).map(|v| (v, b.mate[v])))
}

/// Maximum matching between `0..left` and `0..right` under `adj`, as the
/// right partner of each left index.
pub fn max_bipartite_assignment(left: usize, right: usize, adj: impl Fn(usize, usize) -> bool) -> Vec<Option<usize>> {
    fn augment(
        i: usize,
        right: usize,
        adj: &dyn Fn(usize, usize) -> bool,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for j in 0..right {
            if adj(i, j) && !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|k| augment(k, right, adj, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; right];
    for i in 0..left {
        let mut seen = vec![false; right];
        augment(i, right, &adj, &mut seen, &mut owner);
    }
    let mut partner = vec![None; left];
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = *o {
            partner[i] = Some(j);
        }
    }
    partner
}

/// A maximum matching using only edges between `a` and `b`.
pub fn max_matching_bipartite(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Matching, MatchingError> {
    let common = *a & *b;
    if !common.is_empty() {
        return Err(MatchingError::Overlap(common.to_vec()));
    }
    let (av, bv) = (a.to_vec(), b.to_vec());
    let partner = max_bipartite_assignment(av.len(), bv.len(), |i, j| g.has_edge(av[i], bv[j]));
    Ok(Matching::from_edges(partner.iter().enumerate().filter_map(|(i, p)| p.map(|j| (av[i], bv[j])))))
}

/// `2·min(δ(g[x]), ⌊|x|/2⌋)`, the coverage promised for a general graph.
pub fn mindeg_coverage_bound(g: &Graph, x: &VertexSet) -> usize {
    let d = g.min_degree_within(x).unwrap_or(0);
    2 * d.min(x.len() / 2)
}

/// `2·min(a + b, |A|, |B|)` with `a`, `b` the least cross degrees.
pub fn bipartite_coverage_bound(g: &Graph, a: &VertexSet, b: &VertexSet) -> usize {
    let cross = |s: &VertexSet, t: &VertexSet| s.iter().map(|v| (g.neighbours(v) & *t).len()).min().unwrap_or(0);
    2 * (cross(a, b) + cross(b, a)).min(a.len()).min(b.len())
}
