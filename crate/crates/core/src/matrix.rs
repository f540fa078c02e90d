//! Dense symmetric matrices and unit-trace density matrices.

use std::fmt::Write as _;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::fmt::g12;

/// Absolute tolerance on `tr(ρ) = 1`.
pub const TRACE_TOLERANCE: f64 = 1e-12;

/// A dense real symmetric `dim × dim` matrix, stored row-major in full.
///
/// Every constructor either mirrors one triangle or checks exact symmetry,
/// so `self[(i, j)] == self[(j, i)]` holds bit-for-bit.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1.0; dim])
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.data[i * m.dim + i] = v;
        }
        m
    }

    /// Builds from `f(i, j)` evaluated on the lower triangle (`j <= i`).
    pub fn from_lower_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..=i {
                let v = f(i, j);
                m.data[i * dim + j] = v;
                m.data[j * dim + i] = v;
            }
        }
        m
    }

    /// Takes ownership of explicit rows; rejects non-square or asymmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        for r in rows {
            if r.len() != dim {
                return Err(Error::NonSquare {
                    rows: dim,
                    cols: r.len(),
                });
            }
        }
        for i in 0..dim {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self {
            dim,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Largest entrywise absolute difference; panics on a dimension mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// `self += weight * other`. Entrywise, so symmetry is preserved exactly.
    pub fn add_scaled(&mut self, weight: f64, other: &Self) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += weight * b;
        }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim, "dimension mismatch");
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Kronecker product `self ⊗ other`, of dimension `m₁·m₂`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (self.dim, other.dim);
        let n = p * q;
        let mut data = vec![0.0; n * n];
        for i in 0..p {
            for j in 0..p {
                let a = self.data[i * p + j];
                for k in 0..q {
                    let row = (i * q + k) * n + j * q;
                    for l in 0..q {
                        data[row + l] = a * other.data[k * q + l];
                    }
                }
            }
        }
        Self { dim: n, data }
    }

    /// Row-major CSV dump of the full matrix, `%.12g` entries.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.dim {
            let cells: Vec<String> = self.row(i).iter().map(|&x| g12(x)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }
}

impl Index<(usize, usize)> for SymmetricMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        assert!(i < self.dim && j < self.dim, "index out of bounds");
        &self.data[i * self.dim + j]
    }
}

/// A symmetric matrix with unit trace, read as a quantum state.
///
/// Construction checks the trace; positive semidefiniteness is checked when
/// the spectrum is taken.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(SymmetricMatrix);

impl DensityMatrix {
    pub fn new(matrix: SymmetricMatrix) -> Result<Self> {
        if matrix.dim() == 0 {
            return Err(Error::DimensionMismatch("density matrix of dimension 0".into()));
        }
        let tr = matrix.trace();
        if !((tr - 1.0).abs() <= TRACE_TOLERANCE) {
            return Err(Error::TraceNotOne(tr));
        }
        Ok(Self(matrix))
    }

    /// `diag(p₁, …, pₘ)`.
    pub fn diagonal(p: &[f64]) -> Result<Self> {
        if let Some(&x) = p.iter().find(|x| !(**x >= 0.0)) {
            return Err(Error::NotPositiveSemidefinite(x));
        }
        Self::new(SymmetricMatrix::diagonal(p))
    }

    /// The pure state `diag(0, …, 1, …, 0)` with the one in slot `index`.
    pub fn degenerate(index: usize, dim: usize) -> Self {
        assert!(index < dim, "degenerate index {index} out of range for dimension {dim}");
        let mut d = vec![0.0; dim];
        d[index] = 1.0;
        Self(SymmetricMatrix::diagonal(&d))
    }

    pub(crate) fn from_trusted(matrix: SymmetricMatrix) -> Self {
        debug_assert!((matrix.trace() - 1.0).abs() <= 1e-9);
        Self(matrix)
    }

    pub fn matrix(&self) -> &SymmetricMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn into_inner(self) -> SymmetricMatrix {
        self.0
    }
}

impl AsRef<SymmetricMatrix> for DensityMatrix {
    fn as_ref(&self) -> &SymmetricMatrix {
        &self.0
    }
}
