//! The α-logarithm and the Tsallis, Rényi and von Neumann entropies.
//!
//! Matrix entropies are evaluated on the spectrum; no matrix power or matrix
//! logarithm is ever formed. Logarithms are natural. Inside
//! [`SHANNON_WINDOW`] of `α = 1` every α-family quantity switches to its
//! Shannon / von Neumann limit, and away from it the closed forms go through
//! `expm1`/`ln_1p` so they stay accurate as `α` approaches 1.

use crate::error::{Error, Result};
use crate::matrix::DensityMatrix;
use crate::spectral::{kronecker_joint, spectrum, Spectrum};

/// `|α − 1|` below which the α = 1 limit is used.
pub const SHANNON_WINDOW: f64 = 1e-8;

/// Tolerance on `Σp = 1` for probability vectors.
pub const PROBABILITY_TOLERANCE: f64 = 1e-10;

/// The entropic index `α > 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntropicIndex(f64);

impl EntropicIndex {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha.is_finite() {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidAlpha(alpha))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// True when `α` is treated as exactly 1.
    pub fn is_shannon(self) -> bool {
        (self.0 - 1.0).abs() < SHANNON_WINDOW
    }
}

impl TryFrom<f64> for EntropicIndex {
    type Error = Error;

    fn try_from(alpha: f64) -> Result<Self> {
        Self::new(alpha)
    }
}

/// A finite probability distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidProbability("empty vector".into()));
        }
        if let Some(x) = p.iter().find(|x| !(**x >= 0.0 && **x <= 1.0 + PROBABILITY_TOLERANCE)) {
            return Err(Error::InvalidProbability(format!("component {x} outside [0, 1]")));
        }
        let total: f64 = p.iter().sum();
        if !((total - 1.0).abs() <= PROBABILITY_TOLERANCE) {
            return Err(Error::InvalidProbability(format!("components sum to {total}")));
        }
        Ok(Self(p))
    }

    /// `(1/n, …, 1/n)`.
    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform distribution over zero outcomes");
        Self(vec![1.0 / n as f64; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl From<&Spectrum> for ProbabilityVector {
    fn from(s: &Spectrum) -> Self {
        Self(s.as_slice().to_vec())
    }
}

impl From<Spectrum> for ProbabilityVector {
    fn from(s: Spectrum) -> Self {
        Self::from(&s)
    }
}

/// `log_α(x) = (x^{1−α} − 1) / (1 − α)`, or `ln x` at `α = 1`.
pub fn alpha_log(x: f64, alpha: EntropicIndex) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::NonPositiveArgument(x));
    }
    if alpha.is_shannon() {
        return Ok(x.ln());
    }
    let one_minus = 1.0 - alpha.value();
    Ok((one_minus * x.ln()).exp_m1() / one_minus)
}

/// `−Σ pᵢ ln pᵢ` with `0 ln 0 = 0`.
pub fn shannon_entropy(p: &ProbabilityVector) -> f64 {
    let h: f64 = p.0.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.ln()).sum();
    h + 0.0 // no negative zero
}

/// `Σ pᵢ (pᵢ^{α−1} − 1)`, which is `Σ pᵢ^α − 1` for a normalized `p`,
/// evaluated without cancellation near `α = 1`.
fn power_sum_minus_one(p: &[f64], alpha: f64) -> f64 {
    p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * ((alpha - 1.0) * x.ln()).exp_m1())
        .sum()
}

/// Tsallis entropy `(Σ pᵢ^α − 1) / (1 − α)`; Shannon entropy at `α = 1`.
pub fn tsallis_entropy_p(p: &ProbabilityVector, alpha: EntropicIndex) -> f64 {
    if alpha.is_shannon() {
        return shannon_entropy(p);
    }
    power_sum_minus_one(&p.0, alpha.value()) / (1.0 - alpha.value()) + 0.0
}

/// Rényi entropy `ln(Σ pᵢ^α) / (1 − α)`; Shannon entropy at `α = 1`.
pub fn renyi_entropy_p(p: &ProbabilityVector, alpha: EntropicIndex) -> f64 {
    if alpha.is_shannon() {
        return shannon_entropy(p);
    }
    power_sum_minus_one(&p.0, alpha.value()).ln_1p() / (1.0 - alpha.value()) + 0.0
}

/// Quantum Tsallis entropy `H_α(ρ) = (tr ρ^α − 1) / (1 − α)`.
pub fn tsallis_entropy(rho: &DensityMatrix, alpha: EntropicIndex) -> Result<f64> {
    Ok(tsallis_entropy_p(&spectrum(rho)?.into(), alpha))
}

/// Quantum Rényi entropy `R_α(ρ) = ln(tr ρ^α) / (1 − α)`.
pub fn renyi_entropy(rho: &DensityMatrix, alpha: EntropicIndex) -> Result<f64> {
    Ok(renyi_entropy_p(&spectrum(rho)?.into(), alpha))
}

/// Von Neumann entropy `−tr(ρ ln ρ) = −Σ μᵢ ln μᵢ`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    Ok(shannon_entropy(&spectrum(rho)?.into()))
}

/// `H_α(ρ₁ ⊗ ρ₂)`, the Tsallis entropy of two independent subsystems.
pub fn joint_tsallis_entropy(
    rho1: &DensityMatrix,
    rho2: &DensityMatrix,
    alpha: EntropicIndex,
) -> Result<f64> {
    tsallis_entropy(&kronecker_joint(rho1, rho2), alpha)
}

/// `h₁ + h₂ + (1 − α) h₁ h₂`: what the joint Tsallis entropy of independent
/// systems must equal.
pub fn pseudo_additive_sum(h1: f64, h2: f64, alpha: EntropicIndex) -> f64 {
    let correction = if alpha.is_shannon() { 0.0 } else { 1.0 - alpha.value() };
    h1 + h2 + correction * h1 * h2
}
