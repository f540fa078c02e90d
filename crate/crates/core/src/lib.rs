//! # jtgraph
//!
//! Information-theoretic comparison of graphs through their Laplacian
//! density matrices.
//!
//! A graph with Laplacian `L = D − A` and volume `tr(D) = 2|E|` defines the
//! unit-trace positive semidefinite matrix `ρ = L / tr(D)`. Its eigenvalues
//! form a probability vector, so the Tsallis, Rényi and von Neumann
//! entropies of `ρ` are those of its spectrum. Mixing several such matrices
//! and measuring the entropy gained gives the quantum Jensen-Tsallis
//! divergence, a symmetric, bounded dissimilarity between any number of
//! graphs on the same vertex count.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph_io`] | [`Graph`], edge-list / Matrix Market / OFF parsers, validation |
//! | [`laplacian`] | adjacency, Laplacian, volume, [`density_matrix`] |
//! | [`spectral`] | eigendecomposition, [`Spectrum`], mixtures, Kronecker joints |
//! | [`entropy`] | α-logarithm, Tsallis / Rényi / von Neumann entropies |
//! | [`divergence`] | [`jensen_tsallis_divergence`], its bounds, pairwise matrices |
//!
//! ```
//! use jtgraph::{density_matrix, jensen_tsallis_divergence, EntropicIndex, Graph, WeightVector};
//!
//! let path = density_matrix(&Graph::new(3, [(0, 1), (1, 2)])?)?;
//! let star = density_matrix(&Graph::new(3, [(0, 1), (0, 2)])?)?;
//! let alpha = EntropicIndex::new(2.0)?;
//! let d = jensen_tsallis_divergence(&[path, star], &WeightVector::uniform(2), alpha)?;
//! assert!((d.value - 0.09375).abs() < 1e-12);
//! assert!(d.value <= d.upper_bound);
//! # Ok::<(), jtgraph::Error>(())
//! ```

pub mod divergence;
pub mod entropy;
mod error;
pub mod fmt;
pub mod graph_io;
pub mod laplacian;
pub mod matrix;
pub mod spectral;

pub use divergence::{
    jensen_tsallis_divergence, pairwise_matrix, tight_bound, upper_bound, DegenerateDensity,
    DivergenceResult, WeightVector,
};
pub use entropy::{
    alpha_log, joint_tsallis_entropy, pseudo_additive_sum, renyi_entropy, renyi_entropy_p,
    shannon_entropy, tsallis_entropy, tsallis_entropy_p, von_neumann_entropy, EntropicIndex,
    ProbabilityVector,
};
pub use error::{Error, Result};
pub use graph_io::{
    parse_edge_list, parse_matrix_market, parse_off_mesh, validate, Graph, Issue, Parsed,
    Severity, ValidationReport,
};
pub use laplacian::{adjacency_matrix, density_matrix, laplacian_matrix, volume, DegreeVector};
pub use matrix::{DensityMatrix, SymmetricMatrix};
pub use spectral::{
    eigendecompose, eigenvalues, kronecker_joint, mixture, spectrum, trace_function, EigenSystem,
    Spectrum,
};
