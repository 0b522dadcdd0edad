//! Named graph families, each tagged with the properties it is claimed to
//! have. Claims are checked by [`verify_claims`], never assumed.
//!
//! Vertex numbering is canonical per family: interior or independent parts
//! first, then cliques in index order.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::embeddings::{self, SearchOptions};
use crate::graph::Graph;
use crate::thresholds;
use crate::triangles;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("parameters outside the family's domain: {0}")]
    DomainError(String),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("{0} is too small")]
    TooSmall(usize),
    #[error("construction would need {0} vertices")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    Order(usize),
    MinDegree(usize),
    PartIndependent(String),
    TriangleComponents(usize),
    InteriorIsPart(String),
    TriangleFree,
    /// Every even cycle has at most this many vertices.
    EvenCyclesAtMost(usize),
    PartC4Free(String),
    /// Degrees inside the part lie in the closed range.
    PartDegreesWithin(String, usize, usize),
    /// `δ(G) > n/2 + √n/5`.
    MinDegreeAboveHalfPlusRootOverFive,
    NoSquaredCycle(usize),
    /// No squared cycle whose length is not a multiple of three.
    SquaredCyclesOnlyMultiplesOfThree,
    /// No squared cycle longer than the given length.
    SquaredCyclesAtMost(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    Holds,
    Fails(String),
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct LabeledConstruction {
    pub name: String,
    pub graph: Graph,
    pub part_labels: Vec<String>,
    pub claims: Vec<Claim>,
}

impl LabeledConstruction {
    pub fn part(&self, label: &String) -> VertexSet {
        self.part_labels.iter().enumerate().filter(|(_, l)| *l == label).map(|(v, _)| v).collect()
    }

    /// Distinct labels in order of first appearance.
    pub fn labels(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for l in &self.part_labels {
            if !out.contains(l) {
                out.push(l.clone());
            }
        }
        out
    }
}

/// Incremental builder: parts are appended in order, edges added by part.
struct Builder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { labels: Vec::new(), edges: Vec::new() }
    }

    fn part(&mut self, label: impl Into<String>, size: usize) -> Vec<usize> {
        let start = self.labels.len();
        let label = label.into();
        self.labels.extend(std::iter::repeat_n(label, size));
        (start..start + size).collect()
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edges.push((u, v));
            }
        }
    }

    fn join(&mut self, a: &[usize], b: &[usize]) {
        for &u in a {
            for &v in b {
                self.edges.push((u, v));
            }
        }
    }

    fn finish(self, name: String, claims: Vec<Claim>) -> Result<LabeledConstruction, GenError> {
        let n = self.labels.len();
        if n > MAX_VERTICES {
            return Err(GenError::TooLarge(n));
        }
        let graph = Graph::from_edge_list(n, &self.edges).expect("builder edges are in range");
        Ok(LabeledConstruction { name, graph, part_labels: self.labels, claims })
    }
}

fn domain(n: usize, delta: usize) -> Result<(), GenError> {
    if 2 * delta <= n || delta >= n {
        return Err(GenError::DomainError(format!("need n/2 < delta < n, got n = {n}, delta = {delta}")));
    }
    if n > MAX_VERTICES {
        return Err(GenError::TooLarge(n));
    }
    Ok(())
}

/// Sizes `⌊total/k⌋` repeated `k − total mod k` times, then `⌈total/k⌉`.
fn balanced_sizes(total: usize, k: usize) -> Vec<usize> {
    let (q, r) = (total / k, total % k);
    let mut sizes = vec![q; k - r];
    sizes.extend(std::iter::repeat_n(q + 1, r));
    sizes
}

/// The path extremal graph: an independent set `Y` of size `n − δ` joined
/// completely to `rp(n, δ)` disjoint cliques of balanced sizes summing to `δ`.
pub fn make_gp(n: usize, delta: usize) -> Result<LabeledConstruction, GenError> {
    domain(n, delta)?;
    let r = thresholds::rp(n, delta).expect("domain checked");
    let mut b = Builder::new();
    let y = b.part("Y", n - delta);
    for (i, size) in balanced_sizes(delta, r).into_iter().enumerate() {
        let x = b.part(format!("X{}", i + 1), size);
        b.clique(&x);
        b.join(&y, &x);
    }
    let mut claims = vec![
        Claim::Order(n),
        Claim::MinDegree(delta),
        Claim::PartIndependent("Y".into()),
        Claim::TriangleComponents(r),
    ];
    // A single clique leaves one component and an empty interior.
    if r >= 2 {
        claims.push(Claim::InteriorIsPart("Y".into()));
    }
    b.finish(format!("gp({n},{delta})"), claims)
}

/// The cycle extremal graph: `r = rc(n, δ)` cliques of size `⌈δ/r⌉` joined to
/// an independent `Y` of size `n − δ`, with the least vertex of each of the
/// first `r⌈δ/r⌉ − δ + 1` cliques merged into one vertex `V` when
/// `r⌈δ/r⌉ > δ`. The merge brings the order to exactly `n`.
pub fn make_gc(n: usize, delta: usize) -> Result<LabeledConstruction, GenError> {
    domain(n, delta)?;
    let r = thresholds::rc(n, delta).expect("domain checked");
    let c = delta.div_ceil(r);
    let surplus = r * c - delta;
    let mut b = Builder::new();
    let y = b.part("Y", n - delta);
    let merged = if surplus > 0 { b.part("V", 1) } else { Vec::new() };
    for i in 0..r {
        let mut x = if surplus > 0 && i <= surplus { merged.clone() } else { Vec::new() };
        x.extend(b.part(format!("X{}", i + 1), c - x.len()));
        b.clique(&x);
        b.join(&y, &x);
    }
    b.finish(
        format!("gc({n},{delta})"),
        vec![Claim::Order(n), Claim::MinDegree(delta), Claim::PartIndependent("Y".into())],
    )
}

/// `K_{n−δ, n−δ, 2δ−n}` for `n/2 < δ ≤ 2n/3`.
pub fn make_tripartite_extremal(n: usize, delta: usize) -> Result<LabeledConstruction, GenError> {
    domain(n, delta)?;
    if 3 * delta > 2 * n {
        return Err(GenError::DomainError(format!("need delta <= 2n/3, got n = {n}, delta = {delta}")));
    }
    let mut b = Builder::new();
    let a = b.part("A", n - delta);
    let bb = b.part("B", n - delta);
    let c = b.part("C", 2 * delta - n);
    b.join(&a, &bb);
    b.join(&a, &c);
    b.join(&bb, &c);
    b.finish(
        format!("tripartite({n},{delta})"),
        vec![
            Claim::Order(n),
            Claim::MinDegree(delta),
            Claim::SquaredCyclesOnlyMultiplesOfThree,
            Claim::SquaredCyclesAtMost(3 * (2 * delta - n)),
        ],
    )
}

/// Three copies of `K_{t,t}` plus three disjoint bridge edges inside the
/// first classes, one between each pair of copies.
pub fn make_triangle_free_block(t: usize) -> Result<LabeledConstruction, GenError> {
    if t < 2 {
        return Err(GenError::DomainError(format!("need t >= 2, got {t}")));
    }
    let mut b = Builder::new();
    let mut firsts = Vec::new();
    for k in 1..=3 {
        let a = b.part(format!("K{k}A"), t);
        let bb = b.part(format!("K{k}B"), t);
        b.join(&a, &bb);
        firsts.push(a);
    }
    b.edges.push((firsts[0][0], firsts[1][0]));
    b.edges.push((firsts[0][1], firsts[2][0]));
    b.edges.push((firsts[1][1], firsts[2][1]));
    b.finish(
        format!("tfblock({t})"),
        vec![Claim::Order(6 * t), Claim::TriangleFree, Claim::EvenCyclesAtMost(2 * t)],
    )
}

/// Generalised path construction for the `k`-th power: a complete balanced
/// `(k−1)`-partite interior on `ℓ = (k−1)(n−δ)` vertices joined to
/// `⌊(n−ℓ)/(δ−ℓ+1)⌋` balanced cliques on the remaining `n − ℓ` vertices.
pub fn make_gp_k(k: usize, n: usize, delta: usize) -> Result<LabeledConstruction, GenError> {
    if k < 2 {
        return Err(GenError::DomainError(format!("need k >= 2, got {k}")));
    }
    domain(n, delta)?;
    let interior = (k - 1) * (n - delta);
    if (k - 1) * n >= k * delta || interior >= n || delta < interior {
        return Err(GenError::DomainError(format!("need (k-1)n/k < delta, got k = {k}, n = {n}, delta = {delta}")));
    }
    let cliques = (n - interior) / (delta - interior + 1);
    let mut b = Builder::new();
    let parts: Vec<Vec<usize>> = (1..k).map(|i| b.part(format!("I{i}"), n - delta)).collect();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            b.join(&parts[i], &parts[j]);
        }
    }
    let inner: Vec<usize> = parts.concat();
    for (i, size) in balanced_sizes(n - interior, cliques).into_iter().enumerate() {
        let x = b.part(format!("X{}", i + 1), size);
        b.clique(&x);
        b.join(&inner, &x);
    }
    b.finish(format!("gpk({k},{n},{delta})"), vec![Claim::Order(n), Claim::MinDegree(delta)])
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Points of the projective plane over `F_q`, each scaled so that its first
/// non-zero coordinate is 1, in lexicographic order.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for b in 0..q {
        pts.push([0, 1, b]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// The polarity graph `F` of `PG(2, q)` (points adjacent when orthogonal)
/// joined to an independent set `I` of size `m − ⌊√m/2⌋`, `m = q² + q + 1`.
pub fn make_no_c6_counterexample(q: usize) -> Result<LabeledConstruction, GenError> {
    if q < 3 {
        return Err(GenError::TooSmall(q));
    }
    if !is_prime(q) {
        return Err(GenError::NotPrime(q));
    }
    let pts = projective_points(q);
    let m = pts.len();
    let extra = m - m.isqrt() / 2;
    if m + extra > MAX_VERTICES {
        return Err(GenError::TooLarge(m + extra));
    }
    let mut b = Builder::new();
    let f = b.part("F", m);
    let i = b.part("I", extra);
    for x in 0..m {
        for y in x + 1..m {
            let dot: usize = (0..3).map(|k| pts[x][k] * pts[y][k]).sum();
            if dot.is_multiple_of(q) {
                b.edges.push((f[x], f[y]));
            }
        }
    }
    b.join(&f, &i);
    b.finish(
        format!("noc6({q})"),
        vec![
            Claim::Order(m + extra),
            Claim::PartC4Free("F".into()),
            Claim::PartDegreesWithin("F".into(), q, q + 1),
            Claim::MinDegreeAboveHalfPlusRootOverFive,
            Claim::NoSquaredCycle(6),
        ],
    )
}

fn plain(name: String, graph: Graph) -> LabeledConstruction {
    let n = graph.n();
    LabeledConstruction { name, graph, part_labels: vec!["V".into(); n], claims: vec![Claim::Order(n)] }
}

pub fn make_complete(n: usize) -> LabeledConstruction {
    plain(format!("complete({n})"), Graph::complete(n))
}

pub fn make_empty(n: usize) -> LabeledConstruction {
    plain(format!("empty({n})"), Graph::empty(n))
}

pub fn make_cycle(n: usize) -> Result<LabeledConstruction, GenError> {
    if n < 3 {
        return Err(GenError::TooSmall(n));
    }
    Ok(plain(format!("cycle({n})"), Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))))
}

pub fn make_path(n: usize) -> LabeledConstruction {
    plain(format!("path({n})"), Graph::from_fn(n, |u, v| v == u + 1))
}

pub fn make_petersen() -> LabeledConstruction {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    let mut c = plain("petersen".into(), Graph::from_edge_list(10, &edges).unwrap());
    c.claims.push(Claim::TriangleFree);
    c
}

fn has_c4_within(g: &Graph, part: &VertexSet) -> Option<(usize, usize)> {
    for u in part.iter() {
        for v in part.iter().filter(|&v| v > u) {
            if (g.neighbours(u) & g.neighbours(v) & *part).len() >= 2 {
                return Some((u, v));
            }
        }
    }
    None
}

/// Longest even cycle length, by exhaustive enumeration of cycles rooted at
/// their least vertex.
fn longest_even_cycle(g: &Graph) -> usize {
    fn rec(g: &Graph, root: usize, last: usize, used: &mut VertexSet, len: usize, best: &mut usize) {
        if len >= 3 && len.is_multiple_of(2) && g.has_edge(last, root) {
            *best = (*best).max(len);
        }
        let next = g.neighbours(last) - *used - VertexSet::full(root + 1);
        for v in next.iter() {
            used.insert(v);
            rec(g, root, v, used, len + 1, best);
            used.remove(v);
        }
    }
    let mut best = 0;
    for root in 0..g.n() {
        let mut used = VertexSet::singleton(root);
        rec(g, root, root, &mut used, 1, &mut best);
    }
    best
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> ClaimStatus {
    if ok {
        ClaimStatus::Holds
    } else {
        ClaimStatus::Fails(detail())
    }
}

/// Checks every claim of `c`. Claims needing exhaustive search are skipped
/// when the graph exceeds `search_cap` vertices.
pub fn verify_claims(c: &LabeledConstruction, search_cap: usize) -> Vec<(Claim, ClaimStatus)> {
    let g = &c.graph;
    let n = g.n();
    let opts = SearchOptions { cap: search_cap, parallel: true };
    let too_big = || ClaimStatus::Skipped(format!("{n} vertices exceeds search cap {search_cap}"));
    c.claims
        .iter()
        .map(|claim| {
            let status = match claim {
                Claim::Order(k) => verdict(n == *k, || format!("order is {n}")),
                Claim::MinDegree(d) => {
                    let md = g.min_degree().unwrap_or(0);
                    verdict(md == *d, || format!("minimum degree is {md}"))
                }
                Claim::PartIndependent(l) => verdict(g.is_independent_set(&c.part(l)), || format!("{l} spans an edge")),
                Claim::TriangleComponents(k) => {
                    let got = triangles::decompose(g).num_components();
                    verdict(got == *k, || format!("{got} triangle components"))
                }
                Claim::InteriorIsPart(l) => {
                    let got = triangles::decompose(g).interior;
                    verdict(got == c.part(l), || format!("interior is {got:?}"))
                }
                Claim::TriangleFree => verdict(g.triangles().is_empty(), || "triangle present".into()),
                Claim::EvenCyclesAtMost(k) => {
                    if n > search_cap {
                        too_big()
                    } else {
                        let got = longest_even_cycle(g);
                        verdict(got <= *k, || format!("even cycle on {got} vertices"))
                    }
                }
                Claim::PartC4Free(l) => match has_c4_within(g, &c.part(l)) {
                    None => ClaimStatus::Holds,
                    Some((u, v)) => ClaimStatus::Fails(format!("{u} and {v} have two common neighbours in {l}")),
                },
                Claim::PartDegreesWithin(l, lo, hi) => {
                    let part = c.part(l);
                    let bad = part.iter().find(|&v| !(*lo..=*hi).contains(&(g.neighbours(v) & part).len()));
                    verdict(bad.is_none(), || format!("vertex {} has degree out of range", bad.unwrap()))
                }
                Claim::MinDegreeAboveHalfPlusRootOverFive => {
                    // δ > n/2 + √n/5  ⇔  10δ − 5n > 2√n  ⇔  x > 0 and x² > 4n.
                    let md = g.min_degree().unwrap_or(0) as i64;
                    let x = 10 * md - 5 * n as i64;
                    verdict(x > 0 && x * x > 4 * n as i64, || {
                        format!("delta = {md}, n/2 + sqrt(n)/5 = {:.3}", n as f64 / 2.0 + (n as f64).sqrt() / 5.0)
                    })
                }
                Claim::NoSquaredCycle(ell) => match embeddings::find_squared_cycle_with(g, *ell, &opts) {
                    Ok(None) => ClaimStatus::Holds,
                    Ok(Some(w)) => ClaimStatus::Fails(format!("squared cycle {:?}", w.vertices)),
                    Err(_) => too_big(),
                },
                Claim::SquaredCyclesOnlyMultiplesOfThree | Claim::SquaredCyclesAtMost(_) => {
                    let bad_len = |ell: usize| match claim {
                        Claim::SquaredCyclesAtMost(k) => ell > *k,
                        _ => !ell.is_multiple_of(3),
                    };
                    let mut status = ClaimStatus::Holds;
                    for ell in (3..=n).filter(|&l| bad_len(l)) {
                        match embeddings::find_squared_cycle_with(g, ell, &opts) {
                            Ok(None) => {}
                            Ok(Some(w)) => {
                                status = ClaimStatus::Fails(format!("squared cycle {:?}", w.vertices));
                                break;
                            }
                            Err(_) => {
                                status = too_big();
                                break;
                            }
                        }
                    }
                    status
                }
            };
            (claim.clone(), status)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(c: &LabeledConstruction, prefix: &str) -> Vec<usize> {
        c.labels().iter().filter(|l| l.starts_with(prefix)).map(|l| c.part(l).len()).collect()
    }

    fn assert_claims_hold(c: &LabeledConstruction) {
        for (claim, status) in verify_claims(c, 20) {
            assert_eq!(status, ClaimStatus::Holds, "{}: {claim:?}", c.name);
        }
    }

    #[test]
    fn gp_examples() {
        let c = make_gp(15, 9).unwrap();
        assert_eq!(c.part(&"Y".into()).len(), 6);
        assert_eq!(sizes(&c, "X"), vec![4, 5]);
        assert_eq!(c.graph.min_degree(), Ok(9));
        assert_claims_hold(&c);
        assert_eq!(sizes(&make_gp(20, 12).unwrap(), "X"), vec![6, 6]);
        assert!(matches!(make_gp(10, 5), Err(GenError::DomainError(_))));
    }

    #[test]
    fn gc_examples() {
        let c = make_gc(20, 12).unwrap();
        assert_eq!(sizes(&c, "X"), vec![6, 6]);
        assert!(c.part(&"V".into()).is_empty());
        let c = make_gc(100, 57).unwrap();
        assert_eq!(c.graph.n(), 100);
        assert_eq!(c.part(&"V".into()).len(), 1);
        // The merged vertex belongs to four cliques of 15.
        let v = c.part(&"V".into()).first().unwrap();
        assert_eq!(c.graph.degree(v), 43 + 4 * 14);
        assert_eq!(sizes(&c, "X"), vec![14, 14, 14, 14]);
        assert_eq!(c.graph.min_degree(), Ok(57));
        assert!(matches!(make_gc(9, 4), Err(GenError::DomainError(_))));
    }

    #[test]
    fn gp_and_gc_claims_on_a_grid() {
        for n in 5..=40 {
            for delta in n / 2 + 1..n {
                let gp = make_gp(n, delta).unwrap();
                let gc = make_gc(n, delta).unwrap();
                for c in [&gp, &gc] {
                    for (claim, status) in verify_claims(c, 0) {
                        assert!(!matches!(status, ClaimStatus::Fails(_)), "{}: {claim:?} {status:?}", c.name);
                    }
                }
            }
        }
    }

    #[test]
    fn tripartite_examples() {
        let c = make_tripartite_extremal(10, 6).unwrap();
        assert_eq!(sizes(&c, "A"), vec![4]);
        assert_eq!(sizes(&c, "C"), vec![2]);
        assert_eq!(c.graph.min_degree(), Ok(6));
        let c = make_tripartite_extremal(12, 7).unwrap();
        assert_eq!((sizes(&c, "A"), sizes(&c, "B"), sizes(&c, "C")), (vec![5], vec![5], vec![2]));
        assert!(make_tripartite_extremal(10, 5).is_err());
        assert!(make_tripartite_extremal(10, 7).is_err());
    }

    #[test]
    fn tripartite_claims_small() {
        for n in 4..=12 {
            for delta in n / 2 + 1..=2 * n / 3 {
                assert_claims_hold(&make_tripartite_extremal(n, delta).unwrap());
            }
        }
    }

    #[test]
    fn triangle_free_blocks() {
        let c = make_triangle_free_block(2).unwrap();
        assert_eq!(c.graph.n(), 12);
        assert_eq!(c.graph.edge_count(), 3 * 4 + 3);
        assert_claims_hold(&c);
        let c = make_triangle_free_block(3).unwrap();
        assert_eq!(c.graph.n(), 18);
        assert_eq!(longest_even_cycle(&c.graph), 6);
        assert_claims_hold(&c);
        assert!(make_triangle_free_block(1).is_err());
    }

    #[test]
    fn gp_k_examples() {
        let c = make_gp_k(3, 30, 21).unwrap();
        let inner = c.part(&"I1".into()) | c.part(&"I2".into());
        assert_eq!(inner.len(), 18);
        assert!(c.graph.is_independent_set(&c.part(&"I1".into())));
        assert_eq!(sizes(&c, "X"), vec![4, 4, 4]);
        assert_eq!(c.graph.min_degree(), Ok(21));
        assert!(make_gp_k(3, 30, 19).is_err());
        let a = make_gp_k(2, 15, 9).unwrap().graph;
        let b = make_gp(15, 9).unwrap().graph;
        assert!(a.isomorphism_to(&b).is_some());
    }

    #[test]
    fn gp_k_two_matches_gp_everywhere() {
        // ⌊δ/(2δ−n+1)⌋ equals rp(n, δ), so both constructions agree.
        for n in 5..=60 {
            for delta in n / 2 + 1..n {
                let k = make_gp_k(2, n, delta).unwrap();
                let p = make_gp(n, delta).unwrap();
                assert_eq!(sizes(&k, "X"), sizes(&p, "X"), "n={n} delta={delta}");
                assert!(verify_claims(&k, 0).iter().all(|(_, s)| !matches!(s, ClaimStatus::Fails(_))));
            }
        }
        for (n, delta) in [(12, 7), (14, 9), (16, 10)] {
            let a = make_gp_k(2, n, delta).unwrap().graph;
            let b = make_gp(n, delta).unwrap().graph;
            assert!(a.isomorphism_to(&b).is_some());
        }
    }

    #[test]
    fn polarity_graphs() {
        let c = make_no_c6_counterexample(3).unwrap();
        assert_eq!(c.part(&"F".into()).len(), 13);
        assert_eq!(c.part(&"I".into()).len(), 12);
        assert_eq!(c.graph.n(), 25);
        let c = make_no_c6_counterexample(5).unwrap();
        assert_eq!((c.part(&"F".into()).len(), c.part(&"I".into()).len(), c.graph.n()), (31, 29, 60));
        assert_eq!(make_no_c6_counterexample(4).unwrap_err(), GenError::NotPrime(4));
        assert_eq!(make_no_c6_counterexample(2).unwrap_err(), GenError::TooSmall(2));
        for q in [3, 5, 7, 11, 13] {
            let c = make_no_c6_counterexample(q).unwrap();
            let statuses = verify_claims(&c, 0);
            assert_eq!(statuses[1].1, ClaimStatus::Holds, "q={q} C4");
            assert_eq!(statuses[2].1, ClaimStatus::Holds, "q={q} degrees");
        }
        assert_eq!(make_no_c6_counterexample(17).unwrap_err(), GenError::TooLarge(307 + 299));
    }

    #[test]
    fn polarity_degree_bound_is_short_of_claim() {
        // q = 3: δ = 13 while n/2 + √n/5 = 13.5.
        let c = make_no_c6_counterexample(3).unwrap();
        assert_eq!(c.graph.min_degree(), Ok(13));
        let st = verify_claims(&c, 0);
        assert!(matches!(st[3].1, ClaimStatus::Fails(_)));
    }

    #[test]
    fn simple_families() {
        assert_eq!(make_petersen().graph.edge_count(), 15);
        assert_claims_hold(&make_petersen());
        assert_eq!(make_cycle(5).unwrap().graph.edge_count(), 5);
        assert_eq!(make_path(4).graph.edge_count(), 3);
        assert_eq!(make_empty(3).graph.edge_count(), 0);
        assert_eq!(make_complete(5).graph.edge_count(), 10);
    }
}
