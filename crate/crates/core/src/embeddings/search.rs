//! Exhaustive search for squared paths and cycles.
//!
//! Depth-first over ordered sequences: the next vertex must lie in the common
//! neighbourhood of the last two. A branch is cut when the unused vertices
//! reachable from the candidate set are too few to finish. Cycles are
//! rotated to start at their least vertex. The root fan-out may run on the
//! rayon pool; `find_map_first` keeps the reported witness identical to the
//! sequential one.

use super::{EmbedError, EmbeddingWitness};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use rayon::prelude::*;

pub const DEFAULT_SEARCH_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest host order accepted.
    pub cap: usize,
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { cap: DEFAULT_SEARCH_CAP, parallel: true }
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    ell: usize,
    cycle: bool,
    allowed: VertexSet,
    seq: Vec<usize>,
    used: VertexSet,
}

impl Dfs<'_> {
    fn reach_at_least(&self, from: VertexSet, need: usize) -> bool {
        let avail = self.allowed - self.used;
        let mut reach = from & avail;
        let mut frontier = reach;
        while reach.len() < need && !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next |= self.g.neighbours(v);
            }
            frontier = (next & avail) - reach;
            reach |= frontier;
        }
        reach.len() >= need
    }

    fn extend(&mut self) -> bool {
        let len = self.seq.len();
        if len == self.ell {
            return true;
        }
        let last = self.seq[len - 1];
        let mut cand = self.g.neighbours(last) & self.allowed;
        if len >= 2 {
            cand &= self.g.neighbours(self.seq[len - 2]);
        }
        cand -= self.used;
        if self.cycle {
            if len + 2 >= self.ell {
                cand &= self.g.neighbours(self.seq[0]);
            }
            if len + 1 == self.ell {
                cand &= self.g.neighbours(self.seq[1]);
            }
        }
        let remaining = self.ell - len;
        if cand.is_empty() || (remaining >= 3 && !self.reach_at_least(cand, remaining)) {
            return false;
        }
        for v in cand.iter() {
            self.seq.push(v);
            self.used.insert(v);
            if self.extend() {
                return true;
            }
            self.used.remove(v);
            self.seq.pop();
        }
        false
    }
}

fn search_from(g: &Graph, ell: usize, cycle: bool, root: usize) -> Option<Vec<usize>> {
    let allowed = if cycle {
        g.vertices() - VertexSet::full(root + 1)
    } else {
        g.vertices()
    };
    let mut dfs = Dfs { g, ell, cycle, allowed, seq: vec![root], used: VertexSet::singleton(root) };
    dfs.extend().then_some(dfs.seq)
}

fn search(g: &Graph, ell: usize, cycle: bool, opts: &SearchOptions) -> Result<Option<Vec<usize>>, EmbedError> {
    if g.n() > opts.cap {
        return Err(EmbedError::TooLarge { n: g.n(), cap: opts.cap });
    }
    if ell == 0 || (cycle && ell < 3) {
        return Err(EmbedError::InvalidLength(ell));
    }
    if ell > g.n() {
        return Ok(None);
    }
    let roots = 0..g.n();
    Ok(if opts.parallel {
        roots.into_par_iter().find_map_first(|r| search_from(g, ell, cycle, r))
    } else {
        roots.into_iter().find_map(|r| search_from(g, ell, cycle, r))
    })
}

pub fn find_squared_path_with(
    g: &Graph,
    ell: usize,
    opts: &SearchOptions,
) -> Result<Option<EmbeddingWitness>, EmbedError> {
    Ok(search(g, ell, false, opts)?.map(EmbeddingWitness::path))
}

pub fn find_squared_cycle_with(
    g: &Graph,
    ell: usize,
    opts: &SearchOptions,
) -> Result<Option<EmbeddingWitness>, EmbedError> {
    Ok(search(g, ell, true, opts)?.map(EmbeddingWitness::cycle))
}

/// Squared path on `ell` vertices, or `None` if the host has none.
pub fn find_squared_path(g: &Graph, ell: usize) -> Result<Option<EmbeddingWitness>, EmbedError> {
    find_squared_path_with(g, ell, &SearchOptions::default())
}

/// Squared cycle on `ell ≥ 3` vertices, or `None` if the host has none.
pub fn find_squared_cycle(g: &Graph, ell: usize) -> Result<Option<EmbeddingWitness>, EmbedError> {
    find_squared_cycle_with(g, ell, &SearchOptions::default())
}

/// A longest squared path; `None` only for the empty graph.
pub fn longest_squared_path(g: &Graph, opts: &SearchOptions) -> Result<Option<EmbeddingWitness>, EmbedError> {
    let mut best = None;
    for ell in 1..=g.n() {
        match find_squared_path_with(g, ell, opts)? {
            Some(w) => best = Some(w),
            None => break,
        }
    }
    if best.is_none() && g.n() > opts.cap {
        return Err(EmbedError::TooLarge { n: g.n(), cap: opts.cap });
    }
    Ok(best)
}

/// A longest squared cycle. Squared-cycle lengths are not closed downwards,
/// so every length up to the longest squared path is tried, largest first.
pub fn longest_squared_cycle(g: &Graph, opts: &SearchOptions) -> Result<Option<EmbeddingWitness>, EmbedError> {
    let path_len = longest_squared_path(g, opts)?.map_or(0, |w| w.len());
    for ell in (3..=path_len).rev() {
        if let Some(w) = find_squared_cycle_with(g, ell, opts)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::super::validate_witness;
    use super::*;
    use crate::generators;
    use proptest::prelude::*;

    fn petersen() -> Graph {
        generators::make_petersen().graph
    }

    // Plain enumeration of injective sequences, no pruning.
    fn brute(g: &Graph, ell: usize, cycle: bool) -> bool {
        fn rec(g: &Graph, ell: usize, cycle: bool, seq: &mut Vec<usize>) -> bool {
            if seq.len() == ell {
                let w = if cycle { EmbeddingWitness::cycle(seq.clone()) } else { EmbeddingWitness::path(seq.clone()) };
                return validate_witness(g, &w);
            }
            for v in 0..g.n() {
                if !seq.contains(&v) {
                    seq.push(v);
                    if rec(g, ell, cycle, seq) {
                        return true;
                    }
                    seq.pop();
                }
            }
            false
        }
        rec(g, ell, cycle, &mut Vec::new())
    }

    #[test]
    fn gp_15_9_tightness() {
        let g = generators::make_gp(15, 9).unwrap().graph;
        let w = find_squared_path(&g, 8).unwrap().unwrap();
        assert!(validate_witness(&g, &w));
        assert_eq!(find_squared_path(&g, 9).unwrap(), None);
    }

    #[test]
    fn small_hosts() {
        let k6 = Graph::complete(6);
        assert_eq!(find_squared_path(&k6, 6).unwrap().unwrap().vertices, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(find_squared_path(&petersen(), 3).unwrap(), None);
        assert!(find_squared_path(&petersen(), 2).unwrap().is_some());
        let k4 = Graph::complete(4);
        assert!(find_squared_cycle(&k4, 4).unwrap().is_some());
        assert_eq!(find_squared_cycle(&k4, 5).unwrap(), None);
        assert_eq!(find_squared_cycle(&k4, 2), Err(EmbedError::InvalidLength(2)));
        assert_eq!(find_squared_path(&k4, 0), Err(EmbedError::InvalidLength(0)));
    }

    #[test]
    fn gc_20_12_tightness() {
        let g = generators::make_gc(20, 12).unwrap().graph;
        let w = find_squared_cycle(&g, 9).unwrap().unwrap();
        assert!(validate_witness(&g, &w));
        assert_eq!(find_squared_cycle(&g, 10).unwrap(), None);
    }

    #[test]
    fn tripartite_cycles() {
        let g = generators::make_tripartite_extremal(10, 6).unwrap().graph;
        assert!(find_squared_cycle(&g, 6).unwrap().is_some());
        for ell in [4, 5, 7, 8] {
            assert_eq!(find_squared_cycle(&g, ell).unwrap(), None, "ell = {ell}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::complete(21);
        assert_eq!(find_squared_path(&g, 3), Err(EmbedError::TooLarge { n: 21, cap: 20 }));
        let opts = SearchOptions { cap: 30, parallel: false };
        assert!(find_squared_path_with(&g, 21, &opts).unwrap().is_some());
    }

    #[test]
    fn parallel_and_serial_agree() {
        let g = generators::make_gp(16, 10).unwrap().graph;
        let par = SearchOptions { cap: 20, parallel: true };
        let ser = SearchOptions { cap: 20, parallel: false };
        for ell in 1..=9 {
            assert_eq!(find_squared_path_with(&g, ell, &par), find_squared_path_with(&g, ell, &ser));
            if ell >= 3 {
                assert_eq!(find_squared_cycle_with(&g, ell, &par), find_squared_cycle_with(&g, ell, &ser));
            }
        }
    }

    #[test]
    fn longest_searches() {
        let g = generators::make_gp(15, 9).unwrap().graph;
        assert_eq!(longest_squared_path(&g, &SearchOptions::default()).unwrap().unwrap().len(), 8);
        let t = generators::make_tripartite_extremal(10, 6).unwrap().graph;
        assert_eq!(longest_squared_cycle(&t, &SearchOptions::default()).unwrap().unwrap().len(), 6);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn agrees_with_brute_force(n in 3usize..8, p in 0.3f64..0.95, seed in any::<u64>(), ell in 1usize..8) {
            let g = crate::random::gnp(n, p, seed);
            let ell = ell.min(n);
            let found = find_squared_path(&g, ell).unwrap();
            prop_assert_eq!(found.is_some(), brute(&g, ell, false));
            if let Some(w) = found { prop_assert!(validate_witness(&g, &w)); }
            if ell >= 3 {
                let found = find_squared_cycle(&g, ell).unwrap();
                prop_assert_eq!(found.is_some(), brute(&g, ell, true));
                if let Some(w) = found { prop_assert!(validate_witness(&g, &w)); }
            }
        }

        #[test]
        fn prefix_closure(n in 4usize..13, p in 0.4f64..0.95, seed in any::<u64>()) {
            let g = crate::random::gnp(n, p, seed);
            let mut present = true;
            for ell in 1..=n {
                let now = find_squared_path(&g, ell).unwrap().is_some();
                prop_assert!(present || !now, "P^2_{} present after a shorter one was absent", ell);
                present = now;
            }
        }
    }
}
