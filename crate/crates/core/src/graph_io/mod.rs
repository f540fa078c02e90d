//! Simple undirected graphs and the text formats they are read from.
//!
//! Three inputs are supported: whitespace edge lists, Matrix Market
//! `coordinate pattern symmetric` files, and OFF meshes (where the graph is
//! the vertex adjacency along face boundaries). Every parser folds repeated
//! edges into one and rejects self-loops.

mod edge_list;
mod matrix_market;
mod off;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub use edge_list::parse_edge_list;
pub use matrix_market::parse_matrix_market;
pub use off::parse_off_mesh;

/// A simple undirected graph: `vertex_count` vertices indexed from 0 and a
/// set of unordered edges stored as `(min, max)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, folding `(j, i)` onto `(i, j)` and dropping repeats.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(Error::EmptyInput);
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            check_edge(i, j, vertex_count, 0)?;
            set.insert((i.min(j), i.max(j)));
        }
        Ok(Self {
            vertex_count,
            edges: set,
        })
    }

    /// `m` vertices, no edges.
    pub fn edgeless(vertex_count: usize) -> Result<Self> {
        Self::new(vertex_count, std::iter::empty())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(min, max)` order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Number of edges incident to each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Component label per vertex, labels assigned in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(i, j) in &self.edges {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
        let mut labels = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        let mut root_label = vec![usize::MAX; self.vertex_count];
        for v in 0..self.vertex_count {
            let r = find(&mut parent, v);
            if root_label[r] == usize::MAX {
                root_label[r] = next;
                next += 1;
            }
            labels[v] = root_label[r];
        }
        labels
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Canonical edge-list text: an `m <count>` header followed by one
    /// ascending `i j` pair per line. [`parse_edge_list`] reads it back to an
    /// identical graph.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("m {}\n", self.vertex_count);
        for (i, j) in self.edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

pub(crate) fn check_edge(i: usize, j: usize, vertex_count: usize, line: usize) -> Result<()> {
    if i == j {
        return Err(Error::SelfLoop { line, vertex: i });
    }
    for v in [i, j] {
        if v >= vertex_count {
            return Err(Error::IndexOutOfRange {
                line,
                index: v as i64,
                vertex_count,
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Issue {
    pub severity: Severity,
    pub message: String,
}

/// Findings about a parsed graph. `ok` is false iff some issue is an error.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    fn new() -> Self {
        Self {
            ok: true,
            issues: Vec::new(),
        }
    }

    pub fn push(&mut self, severity: Severity, message: impl Into<String>) {
        if severity == Severity::Error {
            self.ok = false;
        }
        self.issues.push(Issue {
            severity,
            message: message.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        for issue in other.issues {
            self.push(issue.severity, issue.message);
        }
    }

    pub fn has(&self, severity: Severity) -> bool {
        self.issues.iter().any(|i| i.severity == severity)
    }
}

/// A graph together with the notices raised while parsing it.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: Graph,
    pub report: ValidationReport,
}

impl Parsed {
    pub(crate) fn new(graph: Graph, duplicates: usize) -> Self {
        let mut report = ValidationReport::new();
        if duplicates > 0 {
            report.push(
                Severity::Info,
                format!("{duplicates} duplicate edge entries merged"),
            );
        }
        Self { graph, report }
    }
}

const MAX_LISTED_ISOLATED: usize = 10;

/// Reports an empty edge set as an error, and isolated vertices and
/// disconnectedness as warnings.
pub fn validate(g: &Graph) -> ValidationReport {
    let mut report = ValidationReport::new();
    if g.edge_count() == 0 {
        report.push(Severity::Error, "empty edge set");
        return report;
    }
    let isolated: Vec<usize> = g
        .degrees()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 0)
        .map(|(v, _)| v)
        .collect();
    for &v in isolated.iter().take(MAX_LISTED_ISOLATED) {
        report.push(Severity::Warning, format!("vertex {v} isolated"));
    }
    if isolated.len() > MAX_LISTED_ISOLATED {
        report.push(
            Severity::Warning,
            format!(
                "{} further isolated vertices",
                isolated.len() - MAX_LISTED_ISOLATED
            ),
        );
    }
    let count = g.components().into_iter().max().map_or(0, |c| c + 1);
    if count > 1 {
        report.push(
            Severity::Warning,
            format!("graph is disconnected ({count} components)"),
        );
    }
    report
}

/// Splits off a leading `#` comment; returns `None` for blank or comment lines.
pub(crate) fn content(line: &str, comment: char) -> Option<&str> {
    let t = line.trim();
    if t.is_empty() || t.starts_with(comment) {
        None
    } else {
        Some(t)
    }
}
