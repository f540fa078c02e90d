use std::collections::BTreeSet;

use super::{check_edge, content, Graph, Parsed};
use crate::error::{Error, Result};

/// Reads an OFF mesh as its vertex-adjacency graph.
///
/// Vertex coordinates are checked for shape and then discarded. Each face
/// `k i1 .. ik` contributes the boundary pairs `(i1,i2), .., (ik,i1)`; edges
/// shared between faces are stored once. The counts may follow `OFF` on the
/// same line.
pub fn parse_off_mesh(text: &str) -> Result<Parsed> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter_map(|(n, l)| content(l, '#').map(|c| (n + 1, c)));

    let (_, magic) = lines.next().ok_or(Error::MissingMagic)?;
    let mut head = magic.split_whitespace();
    if head.next() != Some("OFF") {
        return Err(Error::MissingMagic);
    }
    let rest: Vec<&str> = head.collect();
    let (count_line, counts) = if rest.is_empty() {
        let (n, l) = lines.next().ok_or_else(|| truncated("count line", "end of input"))?;
        (n, l.split_whitespace().collect::<Vec<_>>())
    } else {
        (1, rest)
    };
    let parsed: Vec<usize> = counts
        .iter()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::MalformedLine {
            line: count_line,
            reason: "counts must be nonnegative integers".into(),
        })?;
    let (n_vertices, n_faces) = match parsed[..] {
        [v, f] | [v, f, _] => (v, f),
        _ => {
            return Err(Error::MalformedLine {
                line: count_line,
                reason: "expected `nV nF nE`".into(),
            })
        }
    };
    if n_vertices == 0 {
        return Err(Error::EmptyInput);
    }

    for k in 0..n_vertices {
        let (line, l) = lines.next().ok_or_else(|| {
            truncated(&format!("{n_vertices} vertex lines"), &k.to_string())
        })?;
        let coords: Vec<&str> = l.split_whitespace().collect();
        if coords.len() < 3 || coords[..3].iter().any(|c| c.parse::<f64>().is_err()) {
            return Err(Error::MalformedLine {
                line,
                reason: "vertex line needs three numeric coordinates".into(),
            });
        }
    }

    let mut edges = BTreeSet::new();
    for k in 0..n_faces {
        let (line, l) = lines
            .next()
            .ok_or_else(|| truncated(&format!("{n_faces} face lines"), &k.to_string()))?;
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let arity: usize = tokens[0].parse().map_err(|_| Error::MalformedLine {
            line,
            reason: format!("`{}` is not a face arity", tokens[0]),
        })?;
        if arity < 3 {
            return Err(Error::FaceArityTooSmall { line, arity });
        }
        if tokens.len() < arity + 1 {
            return Err(Error::MalformedLine {
                line,
                reason: format!("face declares {arity} vertices but lists {}", tokens.len() - 1),
            });
        }
        let mut face = Vec::with_capacity(arity);
        for tok in &tokens[1..=arity] {
            let v: i64 = tok.parse().map_err(|_| Error::MalformedLine {
                line,
                reason: format!("`{tok}` is not a vertex index"),
            })?;
            if v < 0 || v as u64 >= n_vertices as u64 {
                return Err(Error::IndexOutOfRange {
                    line,
                    index: v,
                    vertex_count: n_vertices,
                });
            }
            face.push(v as usize);
        }
        for (a, &i) in face.iter().enumerate() {
            let j = face[(a + 1) % arity];
            check_edge(i, j, n_vertices, line)?;
            edges.insert((i.min(j), i.max(j)));
        }
    }

    let graph = Graph::new(n_vertices, edges)?;
    Ok(Parsed::new(graph, 0))
}

fn truncated(expected: &str, found: &str) -> Error {
    Error::TruncatedFile {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}
