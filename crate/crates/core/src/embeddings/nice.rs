//! Paths and cycles of prescribed length that keep a few bad vertices apart.
//!
//! The host `H` has `h` vertices and a small bad set `B`. The construction
//! threads `B` onto a short path `P = (x, y, u0, w0, v0, b1, u1, w1, v1, b2,
//! …)` so that bad vertices sit four apart, extends `P` to a spanning path by
//! end rotations, closes it to a spanning cycle and then cuts out the right
//! number of vertices with a chord pair. Short cycles avoid `B` altogether
//! and are cut down from a spanning cycle of `H − B` through the edge `xy`.
//! For a path between `x` and `y` the edge `xy` is added as a dummy and
//! dropped at the end.

use super::EmbedError;
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Node budget for the fallback depth-first searches.
const DFS_BUDGET: usize = 200_000;

fn stuck(what: &str) -> EmbedError {
    EmbedError::ConstructionStuck(what.to_string())
}

fn violated(what: String) -> EmbedError {
    EmbedError::PreconditionViolated(what)
}

/// The degree, size and length conditions, checked on integers.
pub fn nice_preconditions(
    g: &Graph,
    b: &VertexSet,
    ell: usize,
    endpoints: Option<(usize, usize)>,
) -> Result<(), EmbedError> {
    let h = g.n();
    let nb = b.len();
    if !b.is_subset(&g.vertices()) {
        return Err(violated("bad set is not inside the host".into()));
    }
    if 100 * nb > h {
        return Err(violated(format!("|B| = {nb} exceeds h/100 for h = {h}")));
    }
    for v in g.vertices().iter() {
        let d = g.degree(v);
        if b.contains(v) && d < 9 * nb {
            return Err(violated(format!("bad vertex {v} has degree {d} < {}", 9 * nb)));
        }
        if !b.contains(v) && 2 * d < h + 18 * nb + 20 {
            return Err(violated(format!("vertex {v} has degree {d} < h/2 + 9|B| + 10")));
        }
    }
    match endpoints {
        None if (3..=h).contains(&ell) => Ok(()),
        None => Err(violated(format!("cycle length {ell} outside 3..={h}"))),
        Some((x, y)) => {
            if x == y || x >= h || y >= h || b.contains(x) || b.contains(y) {
                return Err(violated(format!("endpoints ({x}, {y}) must be distinct good vertices")));
            }
            if !(5..=h).contains(&ell) {
                return Err(violated(format!("path length {ell} outside 5..={h}")));
            }
            Ok(())
        }
    }
}

/// No four cyclically (or linearly) consecutive entries hold more than one
/// member of `bad`.
pub fn separation_holds(seq: &[usize], bad: &VertexSet, cyclic: bool) -> bool {
    let l = seq.len();
    if l <= 4 {
        return seq.iter().filter(|&&v| bad.contains(v)).count() <= 1;
    }
    let starts = if cyclic { l } else { l - 3 };
    (0..starts).all(|i| (i..i + 4).filter(|&j| bad.contains(seq[j % l])).count() <= 1)
}

/// An `ell`-vertex cycle (or `x`–`y` path) in `g` satisfying the separation
/// property. Cycles start at the designated edge `xy`.
pub fn nice_path_cycle(
    g: &Graph,
    b: &VertexSet,
    ell: usize,
    endpoints: Option<(usize, usize)>,
) -> Result<Vec<usize>, EmbedError> {
    nice_preconditions(g, b, ell, endpoints)?;
    let h = g.n();
    let (x, y, host) = match endpoints {
        Some((x, y)) => (x, y, Graph::from_fn(h, |u, v| g.has_edge(u, v) || (u, v) == (x.min(y), x.max(y)))),
        None => {
            let (x, y) = g
                .edges()
                .into_iter()
                .find(|&(u, v)| !b.contains(u) && !b.contains(v))
                .ok_or_else(|| stuck("H − B has no edge"))?;
            (x, y, g.clone())
        }
    };

    let cycle = if ell + b.len() + 2 >= h {
        let p = covering_path(&host, b, x, y)?;
        let t = spanning_cycle(&host, &p, host.vertices())?;
        chord_pair_shorten(&host, t, p.len(), ell)?
    } else {
        let allowed = host.vertices() - *b;
        let t = spanning_cycle(&host, &[x, y], allowed)?;
        shorten_through_edge(&host, t, allowed, ell)?
    };

    let mut bad = *b;
    let out = match endpoints {
        None => cycle,
        Some(_) => {
            bad.insert(x);
            bad.insert(y);
            let mut p = vec![x];
            p.extend(cycle[2..].iter().rev());
            p.push(y);
            p
        }
    };
    let closing = endpoints.is_none().then(|| (out[out.len() - 1], out[0]));
    let edges_ok = out.windows(2).map(|w| (w[0], w[1])).chain(closing).all(|(u, v)| g.has_edge(u, v));
    if out.len() != ell || !edges_ok {
        return Err(stuck("assembled sequence is not a path or cycle of the requested length"));
    }
    if !separation_holds(&out, &bad, endpoints.is_none()) {
        return Err(stuck("separation property lost"));
    }
    Ok(out)
}

/// The path `x, y, u0, w0, v0, b1, u1, w1, v1, b2, …, b_k, u_k, w_k, v_k`
/// (just `x, y` when `B` is empty), with least available choices.
fn covering_path(g: &Graph, b: &VertexSet, x: usize, y: usize) -> Result<Vec<usize>, EmbedError> {
    let bs = b.to_vec();
    let k = bs.len();
    if k == 0 {
        return Ok(vec![x, y]);
    }
    let mut used = *b;
    used.insert(x);
    used.insert(y);
    let mut pick = |pool: VertexSet, what: &str| -> Result<usize, EmbedError> {
        let v = (pool - used).first().ok_or_else(|| stuck(what))?;
        used.insert(v);
        Ok(v)
    };
    // u[i] follows b_i (u[0] follows y); v[i] precedes b_{i+1}.
    let mut u = vec![pick(g.neighbours(y), "no u0 next to y")?];
    let mut v = Vec::with_capacity(k);
    for i in 0..k {
        v.push(pick(g.neighbours(bs[i]), "no vertex before a bad vertex")?);
        u.push(pick(g.neighbours(bs[i]), "no vertex after a bad vertex")?);
    }
    let mut w = Vec::with_capacity(k + 1);
    for i in 0..k {
        w.push(pick(g.neighbours(u[i]) & g.neighbours(v[i]), "no common neighbour w_i")?);
    }
    w.push(pick(g.neighbours(u[k]), "no w after the last bad vertex")?);
    let last = pick(g.neighbours(w[k]), "no final path vertex")?;

    let mut p = vec![x, y];
    for i in 0..k {
        p.extend([u[i], w[i], v[i], bs[i]]);
    }
    p.extend([u[k], w[k], last]);
    Ok(p)
}

/// Extends `p` within `allowed` to a spanning path and closes it, keeping
/// `p` as the initial segment.
fn spanning_cycle(g: &Graph, p: &[usize], allowed: VertexSet) -> Result<Vec<usize>, EmbedError> {
    let keep = p.len() - 1;
    let mut path = p.to_vec();
    let mut on: VertexSet = p.iter().copied().collect();
    loop {
        let outside = allowed - on;
        if outside.is_empty() {
            break;
        }
        let t = path.len() - 1;
        if let Some(v) = (g.neighbours(path[t]) & outside).first() {
            path.push(v);
            on.insert(v);
            continue;
        }
        // Rotation: p_i ~ tail and p_{i+1} ~ v give p_0..p_i p_t..p_{i+1} v.
        let found = outside.iter().find_map(|v| {
            (keep..t).find(|&i| g.has_edge(path[i], path[t]) && g.has_edge(path[i + 1], v)).map(|i| (i, v))
        });
        let (i, v) = found.ok_or_else(|| stuck("maximal path is not spanning and admits no rotation"))?;
        path[i + 1..].reverse();
        path.push(v);
        on.insert(v);
    }
    let t = path.len() - 1;
    if path.len() < 3 {
        return Err(stuck("spanning path too short to close"));
    }
    if g.has_edge(path[0], path[t]) {
        return Ok(path);
    }
    let i = (keep..t)
        .find(|&i| g.has_edge(path[i], path[t]) && g.has_edge(path[i + 1], path[0]))
        .ok_or_else(|| stuck("spanning path admits no closing crossing edge"))?;
    path[i + 1..].reverse();
    Ok(path)
}

/// With `R = T − P = (u, v, …)`, finds `u′, v′` on `R` with `h − ℓ` vertices
/// between them and `uu′`, `vv′` edges, and drops those vertices.
fn chord_pair_shorten(g: &Graph, t: Vec<usize>, keep: usize, ell: usize) -> Result<Vec<usize>, EmbedError> {
    let h = t.len();
    if ell == h {
        return Ok(t);
    }
    let gap = h - ell;
    let (p, r) = t.split_at(keep);
    if r.len() < gap + 4 {
        return Err(stuck("remainder of the cycle too short for a chord pair"));
    }
    let (u, v) = (r[0], r[1]);
    let i = (2..r.len() - gap - 1)
        .find(|&i| g.has_edge(u, r[i]) && g.has_edge(v, r[i + gap + 1]))
        .ok_or_else(|| stuck("no chord pair at the required distance"))?;
    let mut out = p.to_vec();
    out.push(u);
    out.extend(r[1..=i].iter().rev());
    out.extend(&r[i + gap + 1..]);
    Ok(out)
}

/// Removes exactly `k` interior vertices from the path `q` by a shortcut
/// chord or a crossing chord pair; endpoints stay put.
fn shrink(g: &Graph, q: &mut Vec<usize>, k: usize, pairs: bool) -> bool {
    let l = q.len();
    if let Some(a) = (0..l.saturating_sub(k + 1)).find(|&a| g.has_edge(q[a], q[a + k + 1])) {
        q.drain(a + 1..a + k + 1);
        return true;
    }
    if !pairs {
        return false;
    }
    for a in 0..l {
        for b in a + 1..l {
            let c = b + k + 1;
            if c >= l {
                break;
            }
            if g.has_edge(q[a], q[b]) && g.has_edge(q[a + 1], q[c]) {
                q[a + 1..=b].reverse();
                q.drain(b + 1..c);
                return true;
            }
        }
    }
    false
}

/// Cuts a spanning cycle `x, y, …` of `H − B` down to `ell` vertices, keeping
/// the edge `xy`.
fn shorten_through_edge(g: &Graph, t: Vec<usize>, allowed: VertexSet, ell: usize) -> Result<Vec<usize>, EmbedError> {
    let x = t[0];
    // The cycle as a path from y to x.
    let mut q: Vec<usize> = t[1..].iter().copied().chain([x]).collect();
    while q.len() > ell {
        let k = q.len() - ell;
        if shrink(g, &mut q, k, true) || (1..k).rev().any(|k| shrink(g, &mut q, k, false)) || shrink(g, &mut q, 1, true)
        {
            continue;
        }
        match exact_path(g, allowed, q[0], x, ell, DFS_BUDGET) {
            PathSearch::Found(p) => {
                q = p;
                break;
            }
            _ => return Err(stuck("no short cycle through the designated edge")),
        }
    }
    let mut out = vec![x];
    out.extend(&q[..q.len() - 1]);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum PathSearch {
    Found(Vec<usize>),
    Absent,
    Exhausted,
}

/// Depth-first search for a path `from … to` on exactly `len` vertices of
/// `allowed`, trying candidates with the fewest onward options first.
pub(crate) fn exact_path(
    g: &Graph,
    allowed: VertexSet,
    from: usize,
    to: usize,
    len: usize,
    budget: usize,
) -> PathSearch {
    struct State<'a> {
        g: &'a Graph,
        allowed: VertexSet,
        to: usize,
        len: usize,
        seq: Vec<usize>,
        used: VertexSet,
        budget: usize,
    }

    fn go(s: &mut State) -> Option<bool> {
        if s.budget == 0 {
            return None;
        }
        s.budget -= 1;
        let last = *s.seq.last().unwrap();
        let remaining = s.len - s.seq.len();
        if remaining == 1 {
            return Some(s.g.has_edge(last, s.to));
        }
        let avail = s.allowed - s.used - VertexSet::singleton(s.to);
        let mut cand = s.g.neighbours(last) & avail;
        if remaining == 2 {
            cand &= s.g.neighbours(s.to);
        }
        let mut order: Vec<(usize, usize)> = cand.iter().map(|c| ((s.g.neighbours(c) & avail).len(), c)).collect();
        order.sort_unstable();
        for (_, c) in order {
            s.seq.push(c);
            s.used.insert(c);
            match go(s) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            s.used.remove(c);
            s.seq.pop();
        }
        Some(false)
    }

    if len < 2 || len > allowed.len() || from == to || !allowed.contains(from) || !allowed.contains(to) {
        return PathSearch::Absent;
    }
    let mut s = State {
        g,
        allowed,
        to,
        len,
        seq: vec![from],
        used: [from, to].into_iter().collect(),
        budget,
    };
    match go(&mut s) {
        Some(true) => {
            s.seq.push(to);
            PathSearch::Found(s.seq)
        }
        Some(false) => PathSearch::Absent,
        None => PathSearch::Exhausted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_subset, trial_rng};
    use rand::Rng;

    fn is_cycle(g: &Graph, c: &[usize]) -> bool {
        let distinct: VertexSet = c.iter().copied().collect();
        distinct.len() == c.len() && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
    }

    /// Dense host on `h` vertices with one low-degree bad vertex.
    fn host(seed: u64, h: usize, with_bad: bool) -> (Graph, VertexSet) {
        let mut rng = trial_rng(seed, 0);
        let mut g = crate::random::gnp_with(&mut rng, h, 0.9);
        let mut b = VertexSet::new();
        if with_bad {
            let nbrs = random_subset(&mut rng, &(g.vertices() - VertexSet::singleton(0)), 12);
            g = Graph::from_fn(h, |u, v| if u == 0 { nbrs.contains(v) } else { g.has_edge(u, v) });
            b.insert(0);
        }
        (g, b)
    }

    #[test]
    fn complete_graph_all_cycle_lengths() {
        let g = Graph::complete(40);
        for ell in 3..=40 {
            let c = nice_path_cycle(&g, &VertexSet::new(), ell, None).unwrap();
            assert_eq!(c.len(), ell);
            assert!(is_cycle(&g, &c));
        }
    }

    #[test]
    fn complete_graph_paths_between_endpoints() {
        let g = Graph::complete(30);
        for ell in 5..=30 {
            let p = nice_path_cycle(&g, &VertexSet::new(), ell, Some((7, 3))).unwrap();
            assert_eq!((p.len(), p[0], p[ell - 1]), (ell, 7, 3));
        }
    }

    #[test]
    fn preconditions_gate() {
        let g = Graph::complete(100);
        let b: VertexSet = [0, 1].into_iter().collect();
        assert!(matches!(nice_path_cycle(&g, &b, 50, None), Err(EmbedError::PreconditionViolated(_))));
        let b1 = VertexSet::singleton(0);
        assert!(matches!(nice_path_cycle(&g, &b1, 2, None), Err(EmbedError::PreconditionViolated(_))));
        assert!(matches!(nice_path_cycle(&g, &b1, 4, Some((1, 2))), Err(EmbedError::PreconditionViolated(_))));
        assert!(matches!(nice_path_cycle(&g, &b1, 10, Some((0, 2))), Err(EmbedError::PreconditionViolated(_))));
        let sparse = Graph::from_fn(30, |u, v| v - u < 10);
        assert!(matches!(nice_preconditions(&sparse, &VertexSet::new(), 10, None), Err(EmbedError::PreconditionViolated(_))));
    }

    #[test]
    fn window_check() {
        let bad: VertexSet = [0, 4].into_iter().collect();
        assert!(separation_holds(&[0, 1, 2, 3, 4, 5, 6, 7], &bad, false));
        assert!(!separation_holds(&[0, 1, 2, 3, 4, 5, 6, 7], &VertexSet::from_iter([0, 3]), false));
        assert!(!separation_holds(&[0, 1, 2, 3, 4, 5], &bad, true));
        assert!(separation_holds(&[0, 1, 2, 3, 4, 5, 6, 7], &bad, true));
    }

    #[test]
    fn bad_vertex_stays_isolated() {
        let (g, b) = host(3, 120, true);
        nice_preconditions(&g, &b, 60, None).unwrap();
        for ell in [3, 4, 60, 115, 117, 118, 119, 120] {
            let c = nice_path_cycle(&g, &b, ell, None).unwrap();
            assert_eq!(c.len(), ell);
            assert!(is_cycle(&g, &c));
            assert!(separation_holds(&c, &b, true));
        }
        for ell in [5, 6, 61, 118, 120] {
            let p = nice_path_cycle(&g, &b, ell, Some((5, 9))).unwrap();
            assert_eq!((p.len(), p[0], p[ell - 1]), (ell, 5, 9));
            assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
    }

    #[test]
    fn random_lengths_on_random_hosts() {
        for seed in 0..4 {
            let mut rng = trial_rng(seed, 9);
            let h = rng.gen_range(100..=130);
            let (g, b) = host(seed, h, seed % 2 == 0);
            for ell in (3..=h).step_by(7) {
                let c = nice_path_cycle(&g, &b, ell, None).unwrap();
                assert!(is_cycle(&g, &c) && c.len() == ell && separation_holds(&c, &b, true));
            }
        }
    }

    #[test]
    fn exact_path_search() {
        let g = Graph::from_fn(6, |u, v| v == u + 1);
        assert_eq!(exact_path(&g, g.vertices(), 0, 5, 6, 100), PathSearch::Found(vec![0, 1, 2, 3, 4, 5]));
        assert_eq!(exact_path(&g, g.vertices(), 0, 5, 5, 100), PathSearch::Absent);
        let k = Graph::complete(12);
        assert_eq!(exact_path(&k, k.vertices(), 0, 1, 12, 3), PathSearch::Exhausted);
    }
}
