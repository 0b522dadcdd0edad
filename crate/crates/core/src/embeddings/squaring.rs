//! Squaring a path or cycle by interleaving connector vertices.
//!
//! Cut a base path `t1 … t_{2l}` into overlapping quadruples
//! `Q1 = (t1, t2)`, `Qi = (t_{2i−3}, t_{2i−2}, t_{2i−1}, t_{2i})`,
//! `Q_{l+1} = (t_{2l−1}, t_{2l})`. If each `Qi` gets its own connector `qi`
//! adjacent to all of `Qi`, then `q1 t1 t2 q2 t3 t4 … t_{2l} q_{l+1}` is a
//! squared path on `3l + 1` vertices. For a base cycle `Q1` wraps around to
//! `(t_{2l−1}, t_{2l}, t1, t2)` and the result is a squared cycle on `3l`
//! vertices. Connectors exist whenever some ordering `σ` of the quadruples
//! gives the `i`-th one at least `i` common neighbours among the connectors.

use super::{EmbedError, EmbeddingWitness};
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// The quadruples of `t` (pairs at the ends of a path).
pub fn quadruples(t: &[usize], is_cycle: bool) -> Vec<Vec<usize>> {
    let l = t.len() / 2;
    let mut qs = Vec::with_capacity(l + 1);
    if is_cycle {
        qs.push(vec![t[2 * l - 2], t[2 * l - 1], t[0], t[1]]);
    } else {
        qs.push(t[0..2].to_vec());
    }
    for i in 1..l {
        qs.push(t[2 * i - 2..2 * i + 2].to_vec());
    }
    if !is_cycle {
        qs.push(t[2 * l - 2..2 * l].to_vec());
    }
    qs
}

fn check_base(g: &Graph, t: &[usize], is_cycle: bool) -> Result<(), EmbedError> {
    let min = if is_cycle { 4 } else { 2 };
    if t.len() < min || !t.len().is_multiple_of(2) {
        return Err(EmbedError::NotAPath(format!("{} vertices; need an even count of at least {min}", t.len())));
    }
    let mut seen = VertexSet::new();
    for &v in t {
        if v >= g.n() || seen.contains(v) {
            return Err(EmbedError::NotAPath(format!("vertex {v} repeated or out of range")));
        }
        seen.insert(v);
    }
    let closing = is_cycle.then(|| (t[t.len() - 1], t[0]));
    for (u, v) in t.windows(2).map(|w| (w[0], w[1])).chain(closing) {
        if !g.has_edge(u, v) {
            return Err(EmbedError::NotAPath(format!("{u}{v} is not an edge")));
        }
    }
    Ok(())
}

/// Picks a distinct connector for each quadruple, in `sigma` order, taking
/// the least unused common neighbour in `w`.
pub(crate) fn assign_connectors(
    g: &Graph,
    quads: &[Vec<usize>],
    w: &VertexSet,
    sigma: &[usize],
) -> Result<Vec<usize>, EmbedError> {
    let mut check = vec![false; quads.len()];
    if sigma.len() != quads.len() || sigma.iter().any(|&s| s >= quads.len() || std::mem::replace(&mut check[s], true)) {
        return Err(EmbedError::BadSigma);
    }
    let pools: Vec<VertexSet> = quads.iter().map(|q| g.common_of(q) & *w).collect();
    for (pos, &qi) in sigma.iter().enumerate() {
        if pools[qi].len() < pos + 1 {
            return Err(EmbedError::SigmaConditionFails {
                position: pos + 1,
                quadruple: qi + 1,
                available: pools[qi].len(),
            });
        }
    }
    let mut used = VertexSet::new();
    let mut chosen = vec![usize::MAX; quads.len()];
    for &qi in sigma {
        let pick = (pools[qi] - used).first().expect("sigma condition leaves a free connector");
        used.insert(pick);
        chosen[qi] = pick;
    }
    Ok(chosen)
}

/// Orders quadruples by how many common neighbours they have in `w`
/// (fewest first, ties by index). If any ordering satisfies the counting
/// condition, this one does.
pub fn natural_sigma(g: &Graph, t: &[usize], w: &VertexSet, is_cycle: bool) -> Vec<usize> {
    let quads = quadruples(t, is_cycle);
    let mut idx: Vec<usize> = (0..quads.len()).collect();
    idx.sort_by_key(|&i| ((g.common_of(&quads[i]) & *w).len(), i));
    idx
}

pub fn square_path_lemma(
    g: &Graph,
    t: &[usize],
    w: &VertexSet,
    is_cycle: bool,
    sigma: &[usize],
) -> Result<EmbeddingWitness, EmbedError> {
    check_base(g, t, is_cycle)?;
    if t.iter().any(|&v| w.contains(v)) {
        return Err(EmbedError::Overlap);
    }
    let quads = quadruples(t, is_cycle);
    let q = assign_connectors(g, &quads, w, sigma)?;
    let l = t.len() / 2;
    let mut seq = Vec::with_capacity(3 * l + 1);
    for i in 0..l {
        seq.extend([q[i], t[2 * i], t[2 * i + 1]]);
    }
    Ok(if is_cycle {
        EmbeddingWitness::cycle(seq)
    } else {
        seq.push(q[l]);
        EmbeddingWitness::path(seq)
    })
}

#[cfg(test)]
mod tests {
    use super::super::validate_witness;
    use super::*;
    use crate::random::{gnp_with, trial_rng};
    use proptest::prelude::*;
    use rand::Rng;

    #[test]
    fn k7_example() {
        let g = Graph::complete(7);
        let w: VertexSet = [4, 5, 6].into_iter().collect();
        let out = square_path_lemma(&g, &[0, 1, 2, 3], &w, false, &[0, 1, 2]).unwrap();
        assert_eq!(out.vertices, vec![4, 0, 1, 5, 2, 3, 6]);
        assert!(validate_witness(&g, &out));
    }

    #[test]
    fn k9_cycle() {
        let g = Graph::complete(9);
        let w: VertexSet = [6, 7, 8].into_iter().collect();
        let t = [0, 1, 2, 3, 4, 5];
        let out = square_path_lemma(&g, &t, &w, true, &natural_sigma(&g, &t, &w, true)).unwrap();
        assert_eq!(out.len(), 9);
        assert!(validate_witness(&g, &out));
    }

    #[test]
    fn quadruple_shapes() {
        assert_eq!(quadruples(&[0, 1, 2, 3], false), vec![vec![0, 1], vec![0, 1, 2, 3], vec![2, 3]]);
        assert_eq!(quadruples(&[0, 1], false), vec![vec![0, 1], vec![0, 1]]);
        assert_eq!(quadruples(&[0, 1, 2, 3], true), vec![vec![2, 3, 0, 1], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn failures() {
        // Vertex 6 is adjacent to everything except 3, so Q2 = (0,1,2,3) has no connector.
        let g = Graph::from_fn(7, |u, v| !(u == 3 && v == 6));
        let w = VertexSet::singleton(6);
        let t = [0, 1, 2, 3];
        assert_eq!(
            square_path_lemma(&g, &t, &w, false, &[1, 0, 2]),
            Err(EmbedError::SigmaConditionFails { position: 1, quadruple: 2, available: 0 })
        );
        assert_eq!(square_path_lemma(&g, &t, &w, false, &[0, 0, 2]), Err(EmbedError::BadSigma));
        assert_eq!(square_path_lemma(&g, &[0, 1, 2, 6], &w, false, &[0, 1, 2]), Err(EmbedError::Overlap));
        let p = Graph::from_fn(6, |u, v| v == u + 1);
        assert!(matches!(square_path_lemma(&p, &[0, 2], &w, false, &[0, 1]), Err(EmbedError::NotAPath(_))));
        assert!(matches!(square_path_lemma(&p, &[0, 1, 2], &w, false, &[0, 1]), Err(EmbedError::NotAPath(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]
        #[test]
        fn output_is_squared_and_sized(seed in any::<u64>(), l in 1usize..6, cycle in any::<bool>()) {
            let l = if cycle { l.max(2) } else { l };
            let mut rng = trial_rng(seed, 0);
            let base = 2 * l;
            let extra = l + 1 + rng.gen_range(0..4);
            // Base vertices form a path (or cycle); connectors are dense.
            let g0 = gnp_with(&mut rng, base + extra, 0.85);
            let g = Graph::from_fn(base + extra, |u, v| {
                (v == u + 1 && v < base) || (cycle && u == 0 && v == base - 1) || g0.has_edge(u, v)
            });
            let t: Vec<usize> = (0..base).collect();
            let w: VertexSet = (base..base + extra).collect();
            let sigma = natural_sigma(&g, &t, &w, cycle);
            match square_path_lemma(&g, &t, &w, cycle, &sigma) {
                Ok(out) => {
                    prop_assert!(validate_witness(&g, &out));
                    prop_assert_eq!(out.len(), if cycle { 3 * l } else { 3 * l + 1 });
                }
                Err(EmbedError::SigmaConditionFails { .. }) => {
                    // No ordering works: the sorted counts fail somewhere.
                    let quads = quadruples(&t, cycle);
                    let mut counts: Vec<usize> = quads.iter().map(|q| (g.common_of(q) & w).len()).collect();
                    counts.sort_unstable();
                    prop_assert!(counts.iter().enumerate().any(|(i, &c)| c < i + 1));
                }
                Err(e) => prop_assert!(false, "unexpected error {:?}", e),
            }
        }
    }
}
