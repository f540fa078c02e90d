use std::collections::BTreeSet;

use super::{content, Graph, Parsed};
use crate::error::{Error, Result};

/// Parses a whitespace-separated edge list.
///
/// Lines starting with `#` are comments. An optional first data line
/// `m <count>` fixes the vertex count; otherwise it is one past the largest
/// index seen. With `one_based`, indices in the file start at 1.
pub fn parse_edge_list(text: &str, one_based: bool) -> Result<Parsed> {
    let mut declared: Option<usize> = None;
    let mut seen_data = false;
    let mut raw: Vec<(usize, i64, i64)> = Vec::new();

    for (n, line) in text.lines().enumerate() {
        let lineno = n + 1;
        let Some(body) = content(line, '#') else {
            continue;
        };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens[0] == "m" {
            if seen_data {
                return Err(Error::MalformedLine {
                    line: lineno,
                    reason: "vertex-count header must precede the edges".into(),
                });
            }
            if tokens.len() != 2 {
                return Err(Error::MalformedLine {
                    line: lineno,
                    reason: "expected `m <count>`".into(),
                });
            }
            let m = tokens[1].parse::<usize>().map_err(|_| Error::MalformedLine {
                line: lineno,
                reason: format!("invalid vertex count `{}`", tokens[1]),
            })?;
            if m == 0 {
                return Err(Error::MalformedLine {
                    line: lineno,
                    reason: "vertex count must be positive".into(),
                });
            }
            declared = Some(m);
            seen_data = true;
            continue;
        }
        seen_data = true;
        if tokens.len() != 2 {
            return Err(Error::MalformedLine {
                line: lineno,
                reason: format!("expected 2 vertex indices, found {} tokens", tokens.len()),
            });
        }
        let mut ends = [0i64; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok.parse::<i64>().map_err(|_| Error::MalformedLine {
                line: lineno,
                reason: format!("`{tok}` is not an integer"),
            })?;
            if one_based {
                *slot -= 1;
            }
        }
        raw.push((lineno, ends[0], ends[1]));
    }

    if declared.is_none() && raw.is_empty() {
        return Err(Error::EmptyInput);
    }

    let mut edges = BTreeSet::new();
    let mut duplicates = 0;
    let mut max_index = 0usize;
    for &(line, i, j) in &raw {
        if i == j {
            return Err(Error::SelfLoop {
                line,
                vertex: i.max(0) as usize,
            });
        }
        for v in [i, j] {
            let out_of_range = v < 0 || declared.is_some_and(|m| v as u64 >= m as u64);
            if out_of_range {
                return Err(Error::IndexOutOfRange {
                    line,
                    // report the index as written in the file
                    index: if one_based { v + 1 } else { v },
                    vertex_count: declared.unwrap_or(0),
                });
            }
        }
        let (a, b) = (i.min(j) as usize, i.max(j) as usize);
        max_index = max_index.max(b);
        if !edges.insert((a, b)) {
            duplicates += 1;
        }
    }
    let m = declared.unwrap_or(max_index + 1);
    let graph = Graph::new(m, edges)?;
    Ok(Parsed::new(graph, duplicates))
}
