use std::collections::BTreeSet;

use super::{check_edge, Graph, Parsed};
use crate::error::{Error, Result};

/// Parses a Matrix Market `coordinate pattern symmetric` file as a graph.
///
/// Entries are 1-based `i j` pairs from either triangle; `(i, j)` and
/// `(j, i)` name the same edge. Diagonal entries are self-loops and rejected.
pub fn parse_matrix_market(text: &str) -> Result<Parsed> {
    let mut lines = text.lines().enumerate().map(|(n, l)| (n + 1, l));

    let (_, header) = lines.next().ok_or(Error::EmptyInput)?;
    check_header(header)?;

    let mut body = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });

    let (size_line, size) = body.next().ok_or_else(|| Error::TruncatedFile {
        expected: "size line".into(),
        found: "end of input".into(),
    })?;
    let dims: Vec<usize> = size
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::MalformedLine {
            line: size_line,
            reason: "size line must hold three nonnegative integers".into(),
        })?;
    let [rows, cols, nnz] = dims[..] else {
        return Err(Error::MalformedLine {
            line: size_line,
            reason: format!("size line has {} fields, expected 3", dims.len()),
        });
    };
    if rows != cols {
        return Err(Error::NonSquare { rows, cols });
    }
    if rows == 0 {
        return Err(Error::EmptyInput);
    }

    let mut edges = BTreeSet::new();
    let mut duplicates = 0;
    let mut count = 0;
    for (line, entry) in body {
        count += 1;
        if count > nnz {
            return Err(Error::MalformedLine {
                line,
                reason: format!("more than the declared {nnz} entries"),
            });
        }
        let tokens: Vec<&str> = entry.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::MalformedLine {
                line,
                reason: format!("pattern entry needs 2 indices, found {} tokens", tokens.len()),
            });
        }
        let mut ends = [0i64; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok.parse::<i64>().map_err(|_| Error::MalformedLine {
                line,
                reason: format!("`{tok}` is not an integer"),
            })?;
        }
        for v in ends {
            if v < 1 || v as u64 > rows as u64 {
                return Err(Error::IndexOutOfRange {
                    line,
                    index: v,
                    vertex_count: rows,
                });
            }
        }
        let (i, j) = ((ends[0] - 1) as usize, (ends[1] - 1) as usize);
        check_edge(i, j, rows, line)?;
        if !edges.insert((i.min(j), i.max(j))) {
            duplicates += 1;
        }
    }
    if count < nnz {
        return Err(Error::TruncatedFile {
            expected: format!("{nnz} entries"),
            found: format!("{count}"),
        });
    }
    let graph = Graph::new(rows, edges)?;
    Ok(Parsed::new(graph, duplicates))
}

fn check_header(line: &str) -> Result<()> {
    let tokens: Vec<String> = line.split_whitespace().map(str::to_ascii_lowercase).collect();
    let unsupported = || Error::UnsupportedHeader(line.trim().to_string());
    match tokens.as_slice() {
        [banner, object, format, field, symmetry]
            if banner == "%%matrixmarket" && object == "matrix" && format == "coordinate" =>
        {
            if field != "pattern" || symmetry != "symmetric" {
                return Err(unsupported());
            }
            Ok(())
        }
        _ => Err(unsupported()),
    }
}
