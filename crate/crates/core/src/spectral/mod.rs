//! Eigendecomposition of symmetric matrices and the spectrum of a density
//! matrix, plus the matrix constructions the entropies need (mixtures and
//! Kronecker joint systems).

mod tridiagonal;

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::divergence::WeightVector;
use crate::error::{Error, Result};
use crate::fmt::g12;
use crate::matrix::{DensityMatrix, SymmetricMatrix};

pub use tridiagonal::MAX_SWEEPS_PER_EIGENVALUE;

/// Eigenvalues below this are a genuine loss of positive semidefiniteness,
/// not rounding.
pub const NEGATIVE_TOLERANCE: f64 = 1e-10;

/// Eigenvalues of a density matrix within this distance of zero are set to
/// exactly zero. Rounding in the solver leaves `|μ| ~ 1e-16` on null
/// directions, and `x^α` for fractional `α` would amplify that to `1e-8`.
pub const ZERO_SNAP: f64 = 1e-13;

/// Eigenvalues in ascending order with their orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    values: Vec<f64>,
    vectors: Vec<Vec<f64>>,
}

impl EigenSystem {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.values
    }

    /// Unit eigenvector for `eigenvalues()[i]`.
    pub fn eigenvector(&self, i: usize) -> &[f64] {
        &self.vectors[i]
    }

    pub fn eigenvectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// `Σ λᵢ uᵢuᵢᵀ`.
    pub fn reconstruct(&self) -> SymmetricMatrix {
        self.apply(|x| x)
    }

    /// `φ(S) = Σ φ(λᵢ) uᵢuᵢᵀ`.
    pub fn apply(&self, mut phi: impl FnMut(f64) -> f64) -> SymmetricMatrix {
        let n = self.dim();
        let weights: Vec<f64> = self.values.iter().map(|&x| phi(x)).collect();
        SymmetricMatrix::from_lower_fn(n, |i, j| {
            weights
                .iter()
                .zip(&self.vectors)
                .map(|(w, u)| w * u[i] * u[j])
                .sum()
        })
    }

    /// Orthogonal projector onto the span of eigenvectors whose eigenvalue
    /// lies in `[lo, hi]`.
    pub fn projector(&self, lo: f64, hi: f64) -> SymmetricMatrix {
        self.apply(|x| if (lo..=hi).contains(&x) { 1.0 } else { 0.0 })
    }
}

fn ascending(values: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    // stable: equal eigenvalues keep solver order
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(Ordering::Equal));
    order
}

/// Full eigendecomposition of a symmetric matrix.
///
/// Deterministic: the same matrix always yields bit-identical output.
pub fn eigendecompose(s: &SymmetricMatrix) -> Result<EigenSystem> {
    let n = s.dim();
    let dec = tridiagonal::decompose(s.as_slice(), n, true)?;
    let flat = dec.vectors.expect("vectors requested");
    let order = ascending(&dec.values);
    Ok(EigenSystem {
        values: order.iter().map(|&i| dec.values[i]).collect(),
        vectors: order.iter().map(|&i| flat[i * n..(i + 1) * n].to_vec()).collect(),
    })
}

/// Eigenvalues only, ascending. Skips eigenvector accumulation, which is
/// most of the cost for large matrices.
pub fn eigenvalues(s: &SymmetricMatrix) -> Result<Vec<f64>> {
    let dec = tridiagonal::decompose(s.as_slice(), s.dim(), false)?;
    let order = ascending(&dec.values);
    Ok(order.iter().map(|&i| dec.values[i]).collect())
}

/// Eigenvalues of a density matrix: nonnegative, ascending, summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    mu: Vec<f64>,
}

impl Spectrum {
    /// Cleans raw eigenvalues: values in `[-NEGATIVE_TOLERANCE, ZERO_SNAP]`
    /// become zero, then the vector is rescaled to sum to one.
    pub fn from_eigenvalues(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidProbability("empty spectrum".into()));
        }
        for x in values.iter_mut() {
            if !(*x >= -NEGATIVE_TOLERANCE) {
                return Err(Error::NotPositiveSemidefinite(*x));
            }
            if *x <= ZERO_SNAP {
                *x = 0.0;
            }
        }
        values.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        let total: f64 = values.iter().sum();
        if !((total - 1.0).abs() <= 1e-9) {
            return Err(Error::TraceNotOne(total));
        }
        for x in values.iter_mut() {
            *x /= total;
        }
        Ok(Self { mu: values })
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.mu
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    /// Number of nonzero eigenvalues.
    pub fn rank(&self) -> usize {
        self.mu.iter().filter(|&&x| x > 0.0).count()
    }

    /// `tr(ρ^a) = Σ μᵢ^a` with `0^a := 0` for every `a ≥ 0`, so `a = 0`
    /// counts the rank.
    pub fn power_trace(&self, a: f64) -> f64 {
        self.mu.iter().filter(|&&x| x > 0.0).map(|x| x.powf(a)).sum()
    }

    /// `index,mu` CSV, 1-based index, ascending.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,mu\n");
        for (i, &x) in self.mu.iter().enumerate() {
            let _ = writeln!(out, "{},{}", i + 1, g12(x));
        }
        out
    }
}

pub fn spectrum(rho: &DensityMatrix) -> Result<Spectrum> {
    Spectrum::from_eigenvalues(eigenvalues(rho.matrix())?)
}

/// `tr(φ(ρ)) = Σ φ(μᵢ)` over the cleaned spectrum.
pub fn trace_function(rho: &DensityMatrix, phi: impl Fn(f64) -> f64) -> Result<f64> {
    Ok(spectrum(rho)?.as_slice().iter().map(|&x| phi(x)).sum())
}

pub(crate) fn check_same_dim(rhos: &[DensityMatrix]) -> Result<usize> {
    let dim = rhos
        .first()
        .ok_or_else(|| Error::InvalidWeights("no density matrices given".into()))?
        .dim();
    if let Some((k, r)) = rhos.iter().enumerate().find(|(_, r)| r.dim() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "input 1 has dimension {dim} but input {} has dimension {}",
            k + 1,
            r.dim()
        )));
    }
    Ok(dim)
}

/// The weighted mixture `Σ ωⱼ ρⱼ`.
pub fn mixture(rhos: &[DensityMatrix], omega: &WeightVector) -> Result<DensityMatrix> {
    let dim = check_same_dim(rhos)?;
    if rhos.len() != omega.len() {
        return Err(Error::InvalidWeights(format!(
            "{} weights for {} density matrices",
            omega.len(),
            rhos.len()
        )));
    }
    let mut acc = SymmetricMatrix::zeros(dim);
    for (rho, &w) in rhos.iter().zip(omega.as_slice()) {
        if w != 0.0 {
            acc.add_scaled(w, rho.matrix());
        }
    }
    Ok(DensityMatrix::from_trusted(acc))
}

/// The state `ρ₁ ⊗ ρ₂` of two independent subsystems.
pub fn kronecker_joint(rho1: &DensityMatrix, rho2: &DensityMatrix) -> DensityMatrix {
    DensityMatrix::from_trusted(rho1.matrix().kron(rho2.matrix()))
}
