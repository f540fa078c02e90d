//! The quantum Jensen-Tsallis divergence
//!
//! ```text
//! D_α^ω(ρ₁, …, ρₙ) = H_α(Σ ωⱼ ρⱼ) − Σ ωⱼ H_α(ρⱼ)
//! ```
//!
//! with its bounds `D ≤ H_α(ω) ≤ log_α n`. The mixture entropy always comes
//! from the eigenvalues of the mixed matrix: for non-commuting inputs the
//! spectrum of a mixture is not the mixture of spectra.

use rayon::prelude::*;

use crate::entropy::{alpha_log, tsallis_entropy, tsallis_entropy_p, EntropicIndex, ProbabilityVector};
use crate::error::{Error, Result};
use crate::matrix::{DensityMatrix, SymmetricMatrix};
use crate::spectral::{check_same_dim, mixture};

/// Jensen gaps down to `-GAP_TOLERANCE` are rounding and read as zero.
pub const GAP_TOLERANCE: f64 = 1e-10;

/// Nonnegative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    /// Accepts weights whose sum is within `1e-10` of one and rescales them
    /// to sum to one.
    pub fn new(omega: Vec<f64>) -> Result<Self> {
        if omega.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if let Some(w) = omega.iter().find(|w| !(**w >= 0.0 && w.is_finite())) {
            return Err(Error::InvalidWeights(format!("weight {w} is not a nonnegative number")));
        }
        let total: f64 = omega.iter().sum();
        if !((total - 1.0).abs() <= 1e-10) {
            return Err(Error::InvalidWeights(format!("weights sum to {total}, expected 1")));
        }
        Ok(Self(omega.into_iter().map(|w| w / total).collect()))
    }

    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform weights over zero inputs");
        Self(vec![1.0 / n as f64; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn as_probability(&self) -> ProbabilityVector {
        ProbabilityVector::new(self.0.clone()).expect("weights are a distribution")
    }
}

/// The pure state `δⱼ = diag(0, …, 1, …, 0)` of dimension `dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegenerateDensity {
    pub index: usize,
    pub dim: usize,
}

impl DegenerateDensity {
    pub fn new(index: usize, dim: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::DimensionMismatch(format!(
                "slot {index} does not exist in dimension {dim}"
            )));
        }
        Ok(Self { index, dim })
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix::degenerate(self.index, self.dim)
    }

    /// `δ₀, …, δₙ₋₁` in dimension `dim`; needs `n ≤ dim`.
    pub fn family(n: usize, dim: usize) -> Result<Vec<DensityMatrix>> {
        (0..n).map(|j| Ok(Self::new(j, dim)?.density())).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivergenceResult {
    pub value: f64,
    /// `H_α(ω)`.
    pub upper_bound: f64,
    /// `log_α n`.
    pub tight_bound: f64,
    /// `value / upper_bound`, or 0 when the bound is 0.
    pub normalized: f64,
    pub alpha: EntropicIndex,
    pub n: usize,
}

/// `H_α(ω)`, the bound attained by degenerate inputs.
pub fn upper_bound(omega: &WeightVector, alpha: EntropicIndex) -> f64 {
    tsallis_entropy_p(&omega.as_probability(), alpha)
}

/// `log_α n`, the largest `H_α(ω)` over `n` weights.
pub fn tight_bound(n: usize, alpha: EntropicIndex) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidWeights("no inputs".into()));
    }
    alpha_log(n as f64, alpha)
}

fn clamp_gap(gap: f64) -> Result<f64> {
    if gap < -GAP_TOLERANCE {
        return Err(Error::NegativeDivergence(gap));
    }
    Ok(gap.max(0.0))
}

fn normalize(value: f64, bound: f64) -> f64 {
    if bound > 0.0 {
        (value / bound).min(1.0)
    } else {
        0.0
    }
}

pub fn jensen_tsallis_divergence(
    rhos: &[DensityMatrix],
    omega: &WeightVector,
    alpha: EntropicIndex,
) -> Result<DivergenceResult> {
    check_same_dim(rhos)?;
    let mixed = mixture(rhos, omega)?;

    let active: Vec<(&DensityMatrix, f64)> = rhos
        .iter()
        .zip(omega.as_slice())
        .filter(|(_, &w)| w > 0.0)
        .map(|(r, &w)| (r, w))
        .collect();
    let all_equal = active.windows(2).all(|p| p[0].0 == p[1].0);

    let value = if all_equal {
        0.0
    } else {
        let mut weighted = 0.0;
        for &(rho, w) in &active {
            weighted += w * tsallis_entropy(rho, alpha)?;
        }
        clamp_gap(tsallis_entropy(&mixed, alpha)? - weighted)?
    };
    let upper = upper_bound(omega, alpha);
    Ok(DivergenceResult {
        value,
        upper_bound: upper,
        tight_bound: tight_bound(rhos.len(), alpha)?,
        normalized: normalize(value, upper),
        alpha,
        n: rhos.len(),
    })
}

/// Normalized two-input divergences with equal weights for every pair.
///
/// Cells are evaluated in parallel; each is independent, so the result does
/// not depend on scheduling.
pub fn pairwise_matrix(rhos: &[DensityMatrix], alpha: EntropicIndex) -> Result<SymmetricMatrix> {
    check_same_dim(rhos)?;
    let n = rhos.len();
    let entropies: Vec<f64> = rhos
        .par_iter()
        .map(|r| tsallis_entropy(r, alpha))
        .collect::<Result<_>>()?;
    let half = WeightVector::uniform(2);
    let bound = upper_bound(&half, alpha);

    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let cells: Vec<f64> = pairs
        .par_iter()
        .map(|&(i, j)| {
            if rhos[i] == rhos[j] {
                return Ok(0.0);
            }
            let mixed = mixture(&[rhos[i].clone(), rhos[j].clone()], &half)?;
            let gap = tsallis_entropy(&mixed, alpha)? - 0.5 * (entropies[i] + entropies[j]);
            Ok(normalize(clamp_gap(gap)?, bound))
        })
        .collect::<Result<_>>()?;

    let mut rows = vec![vec![0.0; n]; n];
    for (&(i, j), &v) in pairs.iter().zip(&cells) {
        rows[i][j] = v;
        rows[j][i] = v;
    }
    SymmetricMatrix::from_rows(&rows)
}
