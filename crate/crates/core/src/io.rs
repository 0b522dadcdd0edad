//! Text formats: edge lists, adjacency matrices and vertex-label sidecars.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v`. Adjacency
//! matrix: a header line `n` followed by `n` rows of `0`/`1`. In both, `#`
//! starts a comment and blank lines are ignored.

use crate::graph::{Graph, GraphError};
use std::fmt::Write as _;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse { line, msg: msg.into() }
}

fn parse_num(line: usize, tok: &str) -> Result<usize, GraphError> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, got {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hl, "header must be `n m`"));
    }
    let n = parse_num(hl, toks[0])?;
    let m = parse_num(hl, toks[1])?;
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(ln, "edge line must be `u v`"));
        }
        edges.push((parse_num(ln, toks[0])?, parse_num(ln, toks[1])?));
    }
    if edges.len() != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edge_list(n, &edges)
}

/// Canonical edge list: edges with `u < v`, sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_adjacency_matrix(text: &str) -> Result<Graph, GraphError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let n = parse_num(hl, header)?;
    let mut rows: Vec<Vec<bool>> = Vec::with_capacity(n);
    for (ln, line) in lines {
        let row: Vec<bool> = line
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(parse_err(ln, format!("unexpected character {c:?}"))),
            })
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(parse_err(ln, format!("row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_err(hl, format!("expected {n} rows, found {}", rows.len())));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        if rows[i][i] {
            return Err(GraphError::SelfLoop(i));
        }
        for j in i + 1..n {
            if rows[i][j] != rows[j][i] {
                return Err(parse_err(hl + 1 + i, format!("matrix not symmetric at ({i},{j})")));
            }
            if rows[i][j] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_adjacency_matrix(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for u in 0..g.n() {
        out.extend((0..g.n()).map(|v| if g.has_edge(u, v) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

/// Either format, chosen by the shape of the header line.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let header_tokens = content_lines(text).next().map(|(_, l)| l.split_whitespace().count());
    match header_tokens {
        Some(1) => parse_adjacency_matrix(text),
        _ => parse_edge_list(text),
    }
}

/// Sidecar with one `vertex label` line per vertex.
pub fn write_labels(labels: &[String]) -> String {
    let mut out = String::new();
    for (v, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "{v} {l}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments() {
        let g = parse_edge_list("# a triangle\n3 3\n0 1\n1 2 # last two\n\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(write_edge_list(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_edge_list("2 1\n0 5\n"), Err(GraphError::OutOfRange { .. })));
        assert!(matches!(parse_edge_list("2 1\nx 1\n"), Err(GraphError::Parse { line: 2, .. })));
    }

    #[test]
    fn matrix_checks() {
        let g = parse_adjacency_matrix("3\n011\n101\n110\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert!(matches!(parse_adjacency_matrix("2\n01\n00\n"), Err(GraphError::Parse { .. })));
        assert_eq!(parse_adjacency_matrix("2\n11\n10\n"), Err(GraphError::SelfLoop(0)));
        assert_eq!(parse_graph("3\n011\n101\n110\n").unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trips(n in 1usize..30, bits in prop::collection::vec(any::<bool>(), 435)) {
            let mut it = bits.into_iter();
            let g = Graph::from_fn(n, |_, _| it.next().unwrap());
            prop_assert_eq!(&parse_edge_list(&write_edge_list(&g)).unwrap(), &g);
            prop_assert_eq!(&parse_adjacency_matrix(&write_adjacency_matrix(&g)).unwrap(), &g);
        }
    }
}
