//! Seeded property suites and the tightness check for the extremal graphs.
//!
//! Trial `t` of a suite run with seed `s` draws everything from
//! `trial_rng(s, t)`, so trials can run in any order and replay alone.

use crate::bitset::VertexSet;
use crate::embeddings::{
    concatenation_identity, longest_squared_cycle, longest_squared_path, natural_sigma, nice_path_cycle,
    nice_preconditions, q_sequence, separation_holds, square_path_lemma, squared_cycle_via_parity_correction,
    validate_witness, EmbedError, EmbeddingWitness, SearchOptions,
};
use crate::generators::{make_gc, make_gp, GenError};
use crate::graph::Graph;
use crate::matching::{
    bipartite_coverage_bound, max_matching_bipartite, max_matching_mindeg, mindeg_coverage_bound,
};
use crate::random::{dense_gnp, gnp_with, random_subset, random_triangle_walk, trial_rng};
use crate::thresholds::{sqc, sqp};
use crate::triangles::{check_component_lemma, norm, Edge, TriangleWalk};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde_json::json;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemma3,
    Prop4,
    Parity,
    Squaring,
    NicePath,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Lemma3, Suite::Prop4, Suite::Parity, Suite::Squaring, Suite::NicePath];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma3 => "lemma3",
            Suite::Prop4 => "prop4",
            Suite::Parity => "parity",
            Suite::Squaring => "squaring",
            Suite::NicePath => "nicepath",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Suite, VerifyError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::Unknown { kind: "suite", name: s.to_string() })
    }
}

/// Aggregated outcome of a suite run. `checks` counts individual assertions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "suite": self.suite.name(),
            "seed": self.seed,
            "trials": self.trials,
            "checks": self.checks,
            "passed": self.passed(),
            "failures": self.failures,
        })
    }
}

/// Per-trial tally: assertions made and failure messages.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

pub fn run_suite(suite: Suite, trials: usize, seed: u64) -> SuiteReport {
    let tallies: Vec<Tally> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let mut tally = Tally::default();
            match suite {
                Suite::Lemma3 => lemma3_trial(&mut rng, &mut tally),
                Suite::Prop4 => prop4_trial(&mut rng, &mut tally),
                Suite::Parity => parity_trial(&mut rng, &mut tally),
                Suite::Squaring => squaring_trial(&mut rng, &mut tally),
                Suite::NicePath => nicepath_trial(&mut rng, &mut tally),
            }
            for f in &mut tally.failures {
                *f = format!("trial {t}: {f}");
            }
            tally
        })
        .collect();
    SuiteReport {
        suite,
        seed,
        trials,
        checks: tallies.iter().map(|t| t.checks).sum(),
        failures: tallies.into_iter().flat_map(|t| t.failures).collect(),
    }
}

/// `G(n, p)` conditioned on `2δ > n`, raising `p` until a sample qualifies.
fn dense_host<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut p = rng.gen_range(0.7..0.95);
    loop {
        if let Some(g) = dense_gnp(rng, n, p, 200) {
            return g;
        }
        p = (p + 0.05).min(1.0);
    }
}

fn lemma3_trial<R: Rng>(rng: &mut R, t: &mut Tally) {
    let n = rng.gen_range(8..=16);
    let g = dense_host(rng, n);
    match check_component_lemma(&g) {
        Ok(report) => t.check(report.passed(), || format!("n = {n}: {:?}", report.violations)),
        Err(e) => t.check(false, || e.to_string()),
    }
}

fn prop4_trial<R: Rng>(rng: &mut R, t: &mut Tally) {
    let n = rng.gen_range(2..=16);
    let p = rng.gen_range(0.1..0.9);
    let g = gnp_with(rng, n, p);
    let k = rng.gen_range(1..=n);
    let x = random_subset(rng, &g.vertices(), k);
    let m = max_matching_mindeg(&g, &x);
    let bound = mindeg_coverage_bound(&g, &x);
    t.check(m.is_valid(&g) && m.covered().is_subset(&x), || format!("invalid matching {:?}", m.edges));
    t.check(2 * m.len() >= bound, || format!("(a) covers {} < {bound}", 2 * m.len()));

    let (na, nb) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
    let p = rng.gen_range(0.1..0.9);
    let g0 = gnp_with(rng, na + nb, p);
    let g = Graph::from_fn(na + nb, |u, v| u < na && v >= na && g0.has_edge(u, v));
    let a: VertexSet = (0..na).collect();
    let b: VertexSet = (na..na + nb).collect();
    let m = max_matching_bipartite(&g, &a, &b).expect("sides are disjoint");
    let bound = bipartite_coverage_bound(&g, &a, &b);
    t.check(m.is_valid(&g), || format!("invalid bipartite matching {:?}", m.edges));
    t.check(2 * m.len() >= bound, || format!("(b) covers {} < {bound}", 2 * m.len()));
}

/// Triangles `T_0, …, T_{r−1}` on `{3i, 3i+1, 3i+2}` in a complete host, with
/// random triangle walks from an edge of each `T_{i−1}` to an edge of `T_i`.
pub fn planted_concatenation<R: Rng>(rng: &mut R, r: usize) -> (Graph, Vec<TriangleWalk>) {
    let g = Graph::complete(3 * r + 3);
    let tri = |i: usize| [3 * i, 3 * i + 1, 3 * i + 2];
    let mut first = norm((0, 1 + rng.gen_range(0..2)));
    let mut walks = Vec::new();
    for i in 1..r {
        let steps = rng.gen_range(0..5);
        let mut edges = random_triangle_walk(&g, rng, first, steps);
        let t = tri(i);
        let (a, b) = *edges.last().unwrap();
        if !t.contains(&a) && !t.contains(&b) {
            edges.push(norm((a, t[0])));
        }
        let (a, b) = *edges.last().unwrap();
        let inside = if t.contains(&a) { a } else { b };
        if !(t.contains(&a) && t.contains(&b)) {
            let other = *t.iter().find(|&&x| x != inside).unwrap();
            edges.push(norm((inside, other)));
        }
        let last = *edges.last().unwrap();
        walks.push(TriangleWalk::from_edges(&g, &edges).expect("steps share triangles in a complete host"));
        let options: Vec<Edge> =
            [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])].into_iter().filter(|&e| e != last).collect();
        first = *options.choose(rng).unwrap();
    }
    (g, walks)
}

fn parity_trial<R: Rng>(rng: &mut R, t: &mut Tally) {
    // Both readings of a walk of at least two edges: lengths sum to 1 mod 3.
    // Hosts are redrawn until such a walk comes out, so every trial has one.
    let (g, start, edges) = loop {
        let n = rng.gen_range(8..=14);
        let g = gnp_with(rng, n, 0.75);
        let starts: Vec<Edge> =
            g.edges().into_iter().filter(|&(u, v)| !(g.neighbours(u) & g.neighbours(v)).is_empty()).collect();
        let Some(&start) = starts.choose(rng) else { continue };
        let steps = rng.gen_range(1..12);
        let edges = random_triangle_walk(&g, rng, start, steps);
        if edges.len() >= 2 {
            break (g, start, edges);
        }
    };
    let w = TriangleWalk::from_edges(&g, &edges).expect("random steps share triangles");
    match (q_sequence(&g, &w, start), q_sequence(&g, &w, (start.1, start.0))) {
        (Ok(a), Ok(b)) => {
            t.check(a.is_valid(&g) && b.is_valid(&g), || "Q-sequence not squared".into());
            t.check((a.len() + b.len()) % 3 == 1, || format!("{} + {} on {edges:?}", a.len(), b.len()));
        }
        (a, b) => t.check(false, || format!("{:?} / {:?}", a.err(), b.err())),
    }
    let r = rng.gen_range(2..=4);
    let (g, walks) = planted_concatenation(rng, r);
    match concatenation_identity(&g, &walks) {
        Ok(c) => t.check(c.decomposes && c.holds(), || format!("{c:?}")),
        Err(e) => t.check(false, || e.to_string()),
    }
}

fn squaring_trial<R: Rng>(rng: &mut R, t: &mut Tally) {
    // Squaring a planted base path or cycle.
    let cycle = rng.gen_bool(0.5);
    let l = rng.gen_range(if cycle { 2 } else { 1 }..6);
    let base = 2 * l;
    let extra = l + 1 + rng.gen_range(0..4);
    let g0 = gnp_with(rng, base + extra, 0.85);
    let g = Graph::from_fn(base + extra, |u, v| {
        (v == u + 1 && v < base) || (cycle && u == 0 && v == base - 1) || g0.has_edge(u, v)
    });
    let tseq: Vec<usize> = (0..base).collect();
    let w: VertexSet = (base..base + extra).collect();
    let sigma = natural_sigma(&g, &tseq, &w, cycle);
    match square_path_lemma(&g, &tseq, &w, cycle, &sigma) {
        Ok(out) => {
            let want = if cycle { 3 * l } else { 3 * l + 1 };
            t.check(validate_witness(&g, &out) && out.len() == want, || format!("bad output {:?}", out.vertices));
        }
        Err(EmbedError::SigmaConditionFails { .. }) => {
            let quads = crate::embeddings::quadruples(&tseq, cycle);
            let mut counts: Vec<usize> = quads.iter().map(|q| (g.common_of(q) & w).len()).collect();
            counts.sort_unstable();
            t.check(counts.iter().enumerate().any(|(i, &c)| c < i + 1), || "sigma refused a feasible order".into());
        }
        Err(e) => t.check(false, || e.to_string()),
    }

    // Parity correction in a complete core fully joined to the connectors,
    // at a length whose base fits.
    let m = rng.gen_range(8..=14);
    let nw = m;
    let mut perm: Vec<usize> = (0..m + nw).collect();
    perm.shuffle(rng);
    let g = Graph::from_fn(m + nw, |u, v| {
        let (a, b) = (perm[u], perm[v]);
        a < m || b < m
    });
    let core: VertexSet = (0..m + nw).filter(|&v| perm[v] < m).collect();
    let conn = g.vertices() - core;
    let lengths: Vec<usize> = (3..=3 * m / 2)
        .filter(|&ell| ell != 5)
        .filter(|&ell| match ell % 3 {
            0 => 2 * (ell / 3) <= m,
            1 => 2 * (ell / 3) < m,
            _ => 2 * (ell / 3) + 2 <= m,
        })
        .collect();
    let ell = *lengths.choose(rng).unwrap();
    match squared_cycle_via_parity_correction(&g, &core, &conn, ell) {
        Ok(out) => t.check(validate_witness(&g, &out) && out.len() == ell, || format!("bad C²_{ell}")),
        Err(e) => t.check(false, || format!("K_{m} core, length {ell}: {e}")),
    }
}

/// A host on `h` vertices meeting the nice-path degree conditions, with one
/// low-degree bad vertex when `bad` is set.
pub fn nice_host<R: Rng>(rng: &mut R, h: usize, bad: bool) -> (Graph, VertexSet) {
    loop {
        let p = rng.gen_range(0.8..0.95);
        let g0 = gnp_with(rng, h, p);
        let (g, b) = if bad {
            let v = rng.gen_range(0..h);
            let k = rng.gen_range(9..=20);
            let nbrs = random_subset(rng, &(g0.vertices() - VertexSet::singleton(v)), k);
            let g = Graph::from_fn(h, |a, c| {
                if a == v || c == v {
                    nbrs.contains(a + c - v)
                } else {
                    g0.has_edge(a, c)
                }
            });
            (g, VertexSet::singleton(v))
        } else {
            (g0, VertexSet::new())
        };
        if nice_preconditions(&g, &b, 3, None).is_ok() {
            return (g, b);
        }
    }
}

fn is_cycle_in(g: &Graph, seq: &[usize]) -> bool {
    seq.len() >= 3
        && seq.iter().collect::<std::collections::BTreeSet<_>>().len() == seq.len()
        && (0..seq.len()).all(|i| g.has_edge(seq[i], seq[(i + 1) % seq.len()]))
}

fn is_path_in(g: &Graph, seq: &[usize]) -> bool {
    seq.iter().collect::<std::collections::BTreeSet<_>>().len() == seq.len()
        && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

fn nicepath_trial<R: Rng>(rng: &mut R, t: &mut Tally) {
    let h = rng.gen_range(100..=140);
    let bad = rng.gen_bool(0.5);
    let (g, b) = nice_host(rng, h, bad);
    // Connectors joined to the whole host, for squaring each output.
    let nw = h / 2 + 2;
    let ext = Graph::from_fn(h + nw, |u, v| if v < h { g.has_edge(u, v) } else { u < h });
    let w: VertexSet = (h..h + nw).collect();
    let good: Vec<usize> = (g.vertices() - b).to_vec();
    let square = |t: &mut Tally, seq: &[usize], cyclic: bool, what: &str| {
        let even = seq.len() & !1;
        let as_cycle = cyclic && even == seq.len() && even >= 4;
        let base = &seq[..even];
        let sigma = natural_sigma(&ext, base, &w, as_cycle);
        match square_path_lemma(&ext, base, &w, as_cycle, &sigma) {
            Ok(out) => t.check(validate_witness(&ext, &out), || format!("{what}: squared output invalid")),
            Err(e) => t.check(false, || format!("{what}: squaring failed: {e}")),
        }
    };
    for ell in 3..=h {
        let what = format!("h = {h}, |B| = {}, cycle {ell}", b.len());
        match nice_path_cycle(&g, &b, ell, None) {
            Ok(c) => {
                t.check(c.len() == ell && is_cycle_in(&g, &c), || format!("{what}: not an {ell}-cycle"));
                t.check(separation_holds(&c, &b, true), || format!("{what}: bad vertices too close"));
                square(t, &c, true, &what);
            }
            Err(e) => t.check(false, || format!("{what}: {e}")),
        }
    }
    for ell in 5..=h {
        let mut ends = good.choose_multiple(rng, 2);
        let (x, y) = (*ends.next().unwrap(), *ends.next().unwrap());
        let what = format!("h = {h}, |B| = {}, path {ell} from {x} to {y}", b.len());
        match nice_path_cycle(&g, &b, ell, Some((x, y))) {
            Ok(p) => {
                let ok = p.len() == ell && is_path_in(&g, &p) && p[0] == x && p[ell - 1] == y;
                t.check(ok, || format!("{what}: not an {ell}-path"));
                t.check(separation_holds(&p, &b, false), || format!("{what}: bad vertices too close"));
                square(t, &p, false, &what);
            }
            Err(e) => t.check(false, || format!("{what}: {e}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Gp,
    Gc,
}

impl FromStr for Family {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Family, VerifyError> {
        match s {
            "gp" => Ok(Family::Gp),
            "gc" => Ok(Family::Gc),
            _ => Err(VerifyError::Unknown { kind: "family", name: s.to_string() }),
        }
    }
}

/// Longest squared path in `G_p` (or squared cycle in `G_c`) against the
/// threshold value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightnessReport {
    pub family: Family,
    pub n: usize,
    pub delta: usize,
    pub expected: usize,
    pub found: usize,
    pub witness: Option<EmbeddingWitness>,
    pub witness_valid: bool,
}

impl TightnessReport {
    pub fn passed(&self) -> bool {
        self.found == self.expected && self.witness_valid
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "family": match self.family { Family::Gp => "gp", Family::Gc => "gc" },
            "n": self.n,
            "delta": self.delta,
            "expected": self.expected,
            "found": self.found,
            "passed": self.passed(),
            "witness": self.witness.as_ref().map(EmbeddingWitness::to_json),
        })
    }
}

pub fn verify_tightness(
    family: Family,
    n: usize,
    delta: usize,
    opts: &SearchOptions,
) -> Result<TightnessReport, VerifyError> {
    let (g, expected, witness) = match family {
        Family::Gp => {
            let g = make_gp(n, delta)?.graph;
            let w = longest_squared_path(&g, opts)?;
            (g, sqp(n, delta).expect("domain checked by the generator"), w)
        }
        Family::Gc => {
            let g = make_gc(n, delta)?.graph;
            let w = longest_squared_cycle(&g, opts)?;
            (g, sqc(n, delta).expect("domain checked by the generator"), w)
        }
    };
    let found = witness.as_ref().map_or(0, EmbeddingWitness::len);
    let witness_valid = witness.as_ref().is_none_or(|w| validate_witness(&g, w));
    Ok(TightnessReport { family, n, delta, expected, found, witness, witness_valid })
}
