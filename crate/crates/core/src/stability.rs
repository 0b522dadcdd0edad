//! Finite-size classification of a dense graph into the three structural
//! outcomes of the stability argument.
//!
//! * `S1`: a connected triangle factor on at least `3(2δ − n)` vertices.
//! * `S2`: one on at least `min(sqp(n, δ + ⌈ηn⌉), ⌊11n/20⌋)` vertices.
//! * `S3`: an independent set of at least `n − δ − ⌈11ηn⌉` vertices whose
//!   removal leaves components on at most `⌊19(2δ − n)/10⌋` vertices.
//!
//! The outcomes are only guaranteed for very large `n`, so failing all three
//! yields `Inconclusive` rather than an error.

use crate::bitset::VertexSet;
use crate::factors::{ctf_exact_with_cap, ctf_lower_bound, ConnectedTriangleFactor, DEFAULT_EXACT_CAP};
use crate::graph::Graph;
use crate::thresholds::{ceil_usize, format_rational, sqp};
use crate::triangles::{component_contains_k4, decompose};
use crate::Rational;
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error("hypothesis 2*delta > n fails (n = {n}, delta = {delta})")]
    HypothesisUnmet { n: usize, delta: usize },
    #[error("eta must be non-negative, got {0}")]
    NegativeEta(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    S1,
    S2,
    S3,
    Inconclusive,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::S1 => "S1",
            Outcome::S2 => "S2",
            Outcome::S3 => "S3",
            Outcome::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// The integer targets each outcome is tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilityTargets {
    pub s1_factor: usize,
    pub s2_factor: usize,
    pub s3_separator: usize,
    pub s3_component: usize,
}

impl StabilityTargets {
    pub fn new(n: usize, delta: usize, eta: Rational) -> StabilityTargets {
        let eta_n = ceil_usize(eta * Rational::from_integer(n as i128));
        let eleven_eta_n = ceil_usize(eta * Rational::from_integer(11 * n as i128));
        let boosted = (delta + eta_n).min(n - 1);
        StabilityTargets {
            s1_factor: 3 * (2 * delta - n),
            s2_factor: sqp(n, boosted).expect("n/2 < boosted < n").min(11 * n / 20),
            s3_separator: (n - delta).saturating_sub(eleven_eta_n),
            s3_component: 19 * (2 * delta - n) / 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityWitness {
    pub n: usize,
    pub delta: usize,
    pub eta: Rational,
    pub outcome: Outcome,
    pub targets: StabilityTargets,
    /// Size of the factor found and whether it is known to be maximum.
    pub ctf: usize,
    pub ctf_exact: bool,
    /// Present for `S1` and `S2`.
    pub factor: Option<ConnectedTriangleFactor>,
    /// Present for `S3`.
    pub separator: Option<VertexSet>,
    /// Component orders of `G − separator`, largest first.
    pub component_sizes: Vec<usize>,
    /// Least `K4` in each triangle component, reported for `S2` and `S3`.
    pub k4_per_component: Vec<Option<[usize; 4]>>,
}

impl StabilityWitness {
    pub fn to_json(&self) -> serde_json::Value {
        let t = &self.targets;
        json!({
            "outcome": self.outcome.name(),
            "n": self.n,
            "delta": self.delta,
            "eta": format_rational(&self.eta),
            "ctf": self.ctf,
            "ctf_exact": self.ctf_exact,
            "triangles": self.factor.as_ref().map(|f| f.triangles.clone()).unwrap_or_default(),
            "separator": self.separator.map(|s| s.to_vec()),
            "component_sizes": self.component_sizes,
            "k4_per_component": self.k4_per_component,
            "targets": {
                "s1_factor": t.s1_factor,
                "s2_factor": t.s2_factor,
                "s3_separator": t.s3_separator,
                "s3_component": t.s3_component,
            },
        })
    }
}

/// Orders of the connected components of `g[vs]`, largest first.
pub fn component_sizes(g: &Graph, vs: VertexSet) -> Vec<usize> {
    let mut left = vs;
    let mut sizes = Vec::new();
    while let Some(s) = left.first() {
        let mut comp = VertexSet::singleton(s);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next |= g.neighbours(v) & vs;
            }
            frontier = next - comp;
            comp |= frontier;
        }
        sizes.push(comp.len());
        left -= comp;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Every maximal independent set, as maximal cliques of the complement
/// (Bron–Kerbosch with pivoting).
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    fn rec(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        // In the complement, the non-neighbours of u are g.neighbours(u).
        let pivot = (p | x).iter().max_by_key(|&u| (p - g.neighbours(u) - VertexSet::singleton(u)).len());
        let pivot = pivot.expect("p or x non-empty");
        let cand = p & (g.neighbours(pivot) | VertexSet::singleton(pivot));
        for v in cand.iter() {
            let nv = g.vertices() - g.neighbours(v) - VertexSet::singleton(v);
            let mut r2 = r;
            r2.insert(v);
            rec(g, r2, p & nv, x & nv, out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    rec(g, VertexSet::new(), g.vertices(), VertexSet::new(), &mut out);
    out
}

/// Greedy maximal independent sets seeded at each vertex and at the
/// interior of the triangle decomposition.
fn heuristic_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let extend = |start: VertexSet| {
        let mut set = start;
        let mut rest = g.vertices() - start;
        for v in start.iter() {
            rest -= g.neighbours(v);
        }
        while let Some(v) = rest.iter().min_by_key(|&v| ((g.neighbours(v) & rest).len(), v)) {
            set.insert(v);
            rest = rest - g.neighbours(v) - VertexSet::singleton(v);
        }
        set
    };
    let mut out: Vec<VertexSet> = g.vertices().iter().map(|v| extend(VertexSet::singleton(v))).collect();
    let interior = decompose(g).interior;
    if g.is_independent_set(&interior) {
        out.push(extend(interior));
    }
    out
}

fn separator_search(g: &Graph, t: &StabilityTargets, exact: bool) -> Option<(VertexSet, Vec<usize>)> {
    let sets = if exact { maximal_independent_sets(g) } else { heuristic_independent_sets(g) };
    sets.into_iter()
        .filter(|i| i.len() >= t.s3_separator)
        .filter_map(|i| {
            let sizes = component_sizes(g, g.vertices() - i);
            (sizes.first().copied().unwrap_or(0) <= t.s3_component).then_some((i, sizes))
        })
        .min_by_key(|(i, _)| (std::cmp::Reverse(i.len()), i.to_vec()))
}

pub fn stability_witness(g: &Graph, eta: Rational) -> Result<StabilityWitness, StabilityError> {
    stability_witness_with_cap(g, eta, DEFAULT_EXACT_CAP)
}

/// Classifies `g`, using exact searches when `n ≤ cap`.
pub fn stability_witness_with_cap(g: &Graph, eta: Rational, cap: usize) -> Result<StabilityWitness, StabilityError> {
    let n = g.n();
    let delta = g.min_degree().unwrap_or(0);
    if n == 0 || 2 * delta <= n {
        return Err(StabilityError::HypothesisUnmet { n, delta });
    }
    if eta < Rational::from_integer(0) {
        return Err(StabilityError::NegativeEta(format_rational(&eta)));
    }
    let targets = StabilityTargets::new(n, delta, eta);
    let exact = n <= cap;
    let factor = match ctf_exact_with_cap(g, cap) {
        Ok(f) => f,
        Err(_) => ctf_lower_bound(g),
    };
    let ctf = factor.size();
    let mut w = StabilityWitness {
        n,
        delta,
        eta,
        outcome: Outcome::Inconclusive,
        targets,
        ctf,
        ctf_exact: exact,
        factor: None,
        separator: None,
        component_sizes: Vec::new(),
        k4_per_component: Vec::new(),
    };
    if ctf >= targets.s1_factor {
        w.outcome = Outcome::S1;
        w.factor = Some(factor);
        return Ok(w);
    }
    if ctf >= targets.s2_factor {
        w.outcome = Outcome::S2;
        w.factor = Some(factor);
    } else if let Some((sep, sizes)) = separator_search(g, &targets, exact) {
        w.outcome = Outcome::S3;
        w.separator = Some(sep);
        w.component_sizes = sizes;
    } else {
        return Ok(w);
    }
    let d = decompose(g);
    w.k4_per_component =
        (0..d.num_components()).map(|c| component_contains_k4(g, &d, c).expect("component id in range")).collect();
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::make_gp;
    use crate::random::{gnp_with, trial_rng};
    use proptest::prelude::*;

    fn eta(s: &str) -> Rational {
        crate::thresholds::parse_rational(s).unwrap()
    }

    #[test]
    fn gp_20_12_separates_at_y() {
        let c = make_gp(20, 12).unwrap();
        let w = stability_witness(&c.graph, eta("0.01")).unwrap();
        assert_eq!(w.outcome, Outcome::S3);
        assert_eq!(w.separator, Some(c.part(&"Y".to_string())));
        assert_eq!(w.component_sizes, vec![6, 6]);
        assert_eq!(w.targets.s3_separator, 20 - 12 - 3);
        assert_eq!(w.targets.s3_component, 7);
        assert_eq!(w.ctf, 9);
        // Each 6-clique plus Y contains a K4.
        assert!(w.k4_per_component.iter().all(Option::is_some));
    }

    #[test]
    fn k12_takes_the_capped_branch() {
        let w = stability_witness(&Graph::complete(12), eta("1/5")).unwrap();
        assert_eq!(w.targets.s1_factor, 30);
        assert_eq!(w.targets.s2_factor, 6);
        assert_eq!(w.outcome, Outcome::S2);
        assert_eq!(w.ctf, 12);
    }

    #[test]
    fn hypothesis_and_eta_checks() {
        let c5 = Graph::from_fn(5, |u, v| v == u + 1 || (u == 0 && v == 4));
        assert_eq!(stability_witness(&c5, eta("0")), Err(StabilityError::HypothesisUnmet { n: 5, delta: 2 }));
        assert!(matches!(stability_witness(&Graph::complete(5), eta("-1/2")), Err(StabilityError::NegativeEta(_))));
    }

    #[test]
    fn json_has_sorted_keys() {
        let w = stability_witness(&make_gp(20, 12).unwrap().graph, eta("1/100")).unwrap();
        let s = w.to_json().to_string();
        let keys = ["\"component_sizes\"", "\"ctf\"", "\"ctf_exact\"", "\"delta\"", "\"eta\"", "\"k4_per_component\""];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|p| p[0] < p[1]));
        assert!(s.contains("\"eta\":\"1/100\""));
        assert!(s.contains("\"outcome\":\"S3\""));
    }

    #[test]
    fn large_gp_uses_the_heuristic() {
        let c = make_gp(60, 34).unwrap();
        let w = stability_witness(&c.graph, eta("0")).unwrap();
        assert!(!w.ctf_exact);
        assert_eq!(w.outcome, Outcome::S3);
        assert_eq!(w.separator, Some(c.part(&"Y".to_string())));
    }

    /// Independent sets by subset enumeration, keeping the maximal ones.
    fn brute_maximal(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut out: Vec<VertexSet> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<VertexSet>())
            .filter(|s| g.is_independent_set(s))
            .filter(|s| (g.vertices() - *s).iter().all(|v| !(g.neighbours(v) & *s).is_empty()))
            .collect();
        out.sort_by_key(|s| s.to_vec());
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn bron_kerbosch_agrees_with_enumeration(n in 1usize..11, p in 0.1f64..0.9, seed in any::<u64>()) {
            let g = gnp_with(&mut trial_rng(seed, 0), n, p);
            let mut got = maximal_independent_sets(&g);
            got.sort_by_key(|s| s.to_vec());
            prop_assert_eq!(got, brute_maximal(&g));
        }

        #[test]
        fn outcomes_satisfy_their_conditions(n in 8usize..17, seed in any::<u64>(), k in 0i128..4) {
            let mut rng = trial_rng(seed, 1);
            let Some(g) = crate::random::dense_gnp(&mut rng, n, 0.8, 50) else { return Ok(()) };
            let w = stability_witness(&g, Rational::new(k, 100)).unwrap();
            let t = w.targets;
            match w.outcome {
                Outcome::S1 => prop_assert!(w.ctf >= t.s1_factor),
                Outcome::S2 => prop_assert!(w.ctf >= t.s2_factor),
                Outcome::S3 => {
                    let sep = w.separator.unwrap();
                    prop_assert!(g.is_independent_set(&sep));
                    prop_assert!(sep.len() >= t.s3_separator);
                    prop_assert!(w.component_sizes.iter().all(|&s| s <= t.s3_component));
                }
                Outcome::Inconclusive => prop_assert!(w.ctf < t.s2_factor),
            }
        }
    }
}
