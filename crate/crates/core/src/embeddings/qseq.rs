//! Cluster sequences that follow a triangle walk.
//!
//! Walking along `E1, E2, …` we keep an ordered sequence whose last two
//! entries are always the current edge, oriented. When the next edge shares
//! the second-to-last entry `a` with the current edge `(a, b)` and adds `w`,
//! we append `(w, a)`; when it shares `b`, we append `(w, a, b, w)`. Every
//! entry is then adjacent to the two entries before it, so the sequence
//! describes a homomorphic image of a squared path.

use super::EmbedError;
use crate::graph::Graph;
use crate::triangles::{norm, Edge, TriangleWalk};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSequence {
    pub clusters: Vec<usize>,
    pub walk: TriangleWalk,
    pub orientation: (usize, usize),
}

impl QSequence {
    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    /// Each entry is adjacent to its (up to) two predecessors.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let c = &self.clusters;
        (1..c.len()).all(|i| g.has_edge(c[i], c[i - 1]) && (i < 2 || g.has_edge(c[i], c[i - 2])))
    }
}

/// Appends the entries for the next walk edge and returns its new vertex.
/// `None` if `e` repeats the current edge or shares no vertex with it.
fn step(seq: &mut Vec<usize>, e: Edge) -> Option<usize> {
    let (a, b) = (seq[seq.len() - 2], seq[seq.len() - 1]);
    if norm(e) == norm((a, b)) {
        return None;
    }
    let other = |x: usize| if e.0 == x { Some(e.1) } else if e.1 == x { Some(e.0) } else { None };
    if let Some(w) = other(a) {
        seq.extend([w, a]);
        Some(w)
    } else {
        let w = other(b)?;
        seq.extend([w, a, b, w]);
        Some(w)
    }
}

/// Runs the recurrence along `edges` from `orientation`, returning the
/// sequence and its length after each edge.
fn run(g: &Graph, edges: &[Edge], orientation: (usize, usize)) -> Result<(Vec<usize>, Vec<usize>), EmbedError> {
    let (a, b) = orientation;
    if edges.is_empty() || norm(edges[0]) != norm((a, b)) {
        return Err(EmbedError::BadOrientation);
    }
    let mut seq = vec![a, b];
    let mut lens = vec![2];
    for (i, &e) in edges.iter().enumerate().skip(1) {
        let (p, q) = (seq[seq.len() - 2], seq[seq.len() - 1]);
        let w = step(&mut seq, e).ok_or(EmbedError::NotAWalk(i))?;
        if !g.is_triangle(p, q, w) {
            return Err(EmbedError::NotAWalk(i));
        }
        lens.push(seq.len());
    }
    Ok((seq, lens))
}

pub fn q_sequence(g: &Graph, walk: &TriangleWalk, orientation: (usize, usize)) -> Result<QSequence, EmbedError> {
    let (clusters, _) = run(g, &walk.edges, orientation)?;
    let q = QSequence { clusters, walk: walk.clone(), orientation };
    assert!(q.is_valid(g), "Q-sequence lost adjacency to its predecessors");
    Ok(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Residue {
    Zero,
    One,
    Two,
}

impl Residue {
    pub fn of(len: usize) -> Residue {
        match len % 3 {
            0 => Residue::Zero,
            1 => Residue::One,
            _ => Residue::Two,
        }
    }
}

/// Vertex patterns inside a `K4` on labels `A, B, C, D` that start and end
/// with the same pair and have length 3, 7 or 11.
pub fn k4_padding(r: Residue) -> &'static str {
    match r {
        Residue::Zero => "ABC",
        Residue::One => "ABCDABC",
        Residue::Two => "ABCDABCDABC",
    }
}

/// The padding pattern with `A, B, C, D` replaced by the given vertices.
pub fn k4_padding_sequence(k4: [usize; 4], r: Residue) -> Vec<usize> {
    k4_padding(r).bytes().map(|c| k4[usize::from(c - b'A')]).collect()
}

/// Outcome of splitting `Q(W′, V1U1)` for a concatenated walk
/// `W′ = W1 W2 … W_{r−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcatenationCheck {
    /// `|Q(W′, U1V1)|`.
    pub forward_len: usize,
    /// `|Q(W_i, V_iU_i)|` with each `V_iU_i` read off `Q(W′, V1U1)`.
    pub piece_lens: Vec<usize>,
    /// `f_1, …, f_r`.
    pub f: Vec<usize>,
    /// Whether `Q(W′, V1U1)` really is `Q(W1,·) Q̃2 Q(W2,·) … Q(W_{r−1},·)`.
    pub decomposes: bool,
    pub total: usize,
}

impl ConcatenationCheck {
    pub fn holds(&self) -> bool {
        self.decomposes && self.total.is_multiple_of(3)
    }
}

/// Checks that `|Q(W′,U1V1)| + Σ_{i<r} (|Q(W_i,V_iU_i)| + f_i) + f_r ≡ 0`
/// (mod 3). The end pieces are single triangle vertices, so `f_1 = f_r = 1`;
/// the junction pieces `Q̃_i` are recovered from `Q(W′, V1U1)` by prefix
/// matching and have length 0 or 2.
pub fn concatenation_identity(g: &Graph, walks: &[TriangleWalk]) -> Result<ConcatenationCheck, EmbedError> {
    if walks.is_empty() || walks.iter().any(|w| w.edges.is_empty()) {
        return Err(EmbedError::NotAWalk(0));
    }
    let all: Vec<Edge> = walks.iter().flat_map(|w| w.edges.iter().copied()).collect();
    let (u1, v1) = all[0];
    let (forward, _) = run(g, &all, (u1, v1))?;
    let (reverse, lens) = run(g, &all, (v1, u1))?;

    let mut piece_lens = Vec::with_capacity(walks.len());
    let mut f = vec![1];
    let mut decomposes = true;
    let mut pos = 0;
    let mut start = 0;
    for (i, w) in walks.iter().enumerate() {
        let end = lens[start];
        let orientation = (reverse[end - 2], reverse[end - 1]);
        let piece = run(g, &w.edges, orientation)?.0;
        if i > 0 {
            let gap = end - 2 - pos;
            decomposes &= gap == 0 || gap == 2;
            f.push(gap % 3);
            pos = end - 2;
        }
        decomposes &= reverse.get(pos..pos + piece.len()) == Some(&piece[..]);
        pos += piece.len();
        piece_lens.push(piece.len());
        start += w.edges.len();
    }
    decomposes &= pos == reverse.len();
    f.push(1);
    let total = forward.len() + piece_lens.iter().sum::<usize>() + f.iter().sum::<usize>();
    Ok(ConcatenationCheck { forward_len: forward.len(), piece_lens, f, decomposes, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_triangle_walk, trial_rng};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::Rng;

    fn walk(g: &Graph, edges: &[Edge]) -> TriangleWalk {
        TriangleWalk::from_edges(g, edges).unwrap()
    }

    #[test]
    fn hand_simulated_sequences() {
        let g = Graph::complete(3);
        let w = walk(&g, &[(0, 1), (1, 2)]);
        assert_eq!(q_sequence(&g, &w, (0, 1)).unwrap().clusters, vec![0, 1, 2, 0, 1, 2]);
        assert_eq!(q_sequence(&g, &w, (1, 0)).unwrap().clusters, vec![1, 0, 2, 1]);
        let single = walk(&g, &[(1, 2)]);
        assert_eq!(q_sequence(&g, &single, (2, 1)).unwrap().clusters, vec![2, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        let g = Graph::complete(4);
        let w = walk(&g, &[(0, 1), (1, 2)]);
        assert_eq!(q_sequence(&g, &w, (1, 2)), Err(EmbedError::BadOrientation));
        let broken = TriangleWalk { edges: vec![(0, 1), (2, 3)], shared_triangles: vec![] };
        assert_eq!(q_sequence(&g, &broken, (0, 1)), Err(EmbedError::NotAWalk(1)));
        let path = Graph::from_fn(3, |u, v| v == u + 1);
        let fake = TriangleWalk { edges: vec![(0, 1), (1, 2)], shared_triangles: vec![] };
        assert_eq!(q_sequence(&path, &fake, (0, 1)), Err(EmbedError::NotAWalk(1)));
    }

    #[test]
    fn padding_patterns() {
        assert_eq!(k4_padding(Residue::Zero), "ABC");
        assert_eq!(k4_padding(Residue::One), "ABCDABC");
        assert_eq!(k4_padding(Residue::Two), "ABCDABCDABC");
        let g = Graph::complete(4);
        for r in [Residue::Zero, Residue::One, Residue::Two] {
            let s = k4_padding_sequence([3, 1, 0, 2], r);
            assert_eq!(Residue::of(s.len()), r);
            assert_eq!((s[0], s[1]), (3, 1));
            assert_eq!(&s[s.len() - 3..], &[3, 1, 0]);
            assert!((2..s.len()).all(|i| g.has_edge(s[i], s[i - 1]) && g.has_edge(s[i], s[i - 2])));
        }
    }

    #[test]
    fn concatenation_over_planted_triangles() {
        // Triangles 012, 345, 678 inside a complete host; walks run from an
        // edge of T_i to an edge of T_{i+1}.
        let g = Graph::complete(10);
        let w1 = walk(&g, &[(0, 1), (1, 9), (3, 9), (3, 4)]);
        let w2 = walk(&g, &[(4, 5), (5, 7), (6, 7)]);
        let check = concatenation_identity(&g, &[w1, w2]).unwrap();
        assert!(check.decomposes);
        assert_eq!(check.f.len(), 3);
        assert!(check.holds(), "{check:?}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn reverse_lengths_sum_to_one_mod_three(seed in any::<u64>(), steps in 1usize..12) {
            let mut rng = trial_rng(seed, 0);
            let g = crate::random::gnp_with(&mut rng, 10, 0.7);
            let Some(&start) = g.edges().iter().find(|&&(u, v)| !(g.neighbours(u) & g.neighbours(v)).is_empty()) else {
                return Ok(());
            };
            let edges = random_triangle_walk(&g, &mut rng, start, steps);
            prop_assume!(edges.len() >= 2);
            let w = walk(&g, &edges);
            let a = q_sequence(&g, &w, start).unwrap();
            let b = q_sequence(&g, &w, (start.1, start.0)).unwrap();
            prop_assert!(a.is_valid(&g) && b.is_valid(&g));
            prop_assert_eq!((a.len() + b.len()) % 3, 1);
        }

        #[test]
        fn concatenations_are_zero_mod_three(seed in any::<u64>(), r in 2usize..5) {
            let mut rng = trial_rng(seed, 1);
            let g = Graph::complete(3 * r + 3);
            let tri = |i: usize| [3 * i, 3 * i + 1, 3 * i + 2];
            let mut first = norm((0, 1 + rng.gen_range(0..2)));
            let mut walks = Vec::new();
            for i in 1..r {
                let steps = rng.gen_range(0..5);
                let mut edges = random_triangle_walk(&g, &mut rng, first, steps);
                // Steer into T_i: bring in one corner, then a second.
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
                walks.push(walk(&g, &edges));
                let options: Vec<Edge> =
                    [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])].into_iter().filter(|&e| e != last).collect();
                first = *options.choose(&mut rng).unwrap();
            }
            let check = concatenation_identity(&g, &walks).unwrap();
            prop_assert!(check.decomposes, "{:?}", check);
            prop_assert!(check.holds(), "{:?}", check);
        }
    }
}
