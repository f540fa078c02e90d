//! Adjacency, degree and Laplacian matrices of a graph, and the Laplacian
//! density matrix `ρ = L / tr(D)`.

use crate::error::{Error, Result};
use crate::graph_io::Graph;
use crate::matrix::{DensityMatrix, SymmetricMatrix};

/// Vertex degrees; their sum is the graph volume `2|E|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    pub fn of(g: &Graph) -> Self {
        Self(g.degrees())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn volume(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn matrix(&self) -> SymmetricMatrix {
        let d: Vec<f64> = self.0.iter().map(|&x| x as f64).collect();
        SymmetricMatrix::diagonal(&d)
    }
}

pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    let m = g.vertex_count();
    let mut rows = vec![vec![0.0; m]; m];
    for (i, j) in g.edges() {
        rows[i][j] = 1.0;
        rows[j][i] = 1.0;
    }
    SymmetricMatrix::from_rows(&rows).expect("adjacency is symmetric by construction")
}

/// Integer Laplacian entries `D - A`, before any conversion to floating point.
fn integer_laplacian(g: &Graph) -> Vec<Vec<i64>> {
    let m = g.vertex_count();
    let mut rows = vec![vec![0i64; m]; m];
    for (i, j) in g.edges() {
        rows[i][j] = -1;
        rows[j][i] = -1;
        rows[i][i] += 1;
        rows[j][j] += 1;
    }
    rows
}

/// The combinatorial Laplacian `L = D - A`.
pub fn laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    let rows = integer_laplacian(g);
    SymmetricMatrix::from_lower_fn(g.vertex_count(), |i, j| rows[i][j] as f64)
}

/// `vol(G) = tr(D) = 2|E|`.
pub fn volume(g: &Graph) -> usize {
    2 * g.edge_count()
}

/// The Laplacian density matrix `L / tr(D)`.
///
/// Entries are formed from the exact integer Laplacian with a single
/// division each.
pub fn density_matrix(g: &Graph) -> Result<DensityMatrix> {
    let vol = volume(g);
    if vol == 0 {
        return Err(Error::EmptyGraph);
    }
    let rows = integer_laplacian(g);
    let vol = vol as f64;
    let rho = SymmetricMatrix::from_lower_fn(g.vertex_count(), |i, j| rows[i][j] as f64 / vol);
    DensityMatrix::new(rho)
}
