//! Test oracles kept independent of `jtgraph-core`: a cyclic Jacobi
//! eigensolver, graph search connectivity, plain Shannon/Jensen-Shannon on
//! vectors, and seeded random instance generators.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
pub fn jacobi_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q] == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

/// Dense Laplacian `D − A` built straight from an edge list.
pub fn laplacian_rows(m: usize, edges: &[(usize, usize)]) -> Vec<Vec<f64>> {
    let mut l = vec![vec![0.0; m]; m];
    for &(i, j) in edges {
        l[i][j] -= 1.0;
        l[j][i] -= 1.0;
        l[i][i] += 1.0;
        l[j][j] += 1.0;
    }
    l
}

/// Breadth-first connectivity check.
pub fn is_connected(m: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); m];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; m];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Erdős–Rényi `G(m, p)` edges, resampled until at least one edge exists.
pub fn random_edges<R: Rng>(rng: &mut R, m: usize, p: f64) -> Vec<(usize, usize)> {
    assert!(m >= 2);
    loop {
        let edges: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .filter(|_| rng.gen::<f64>() < p)
            .collect();
        if !edges.is_empty() {
            return edges;
        }
    }
}

/// Random graph with a uniformly drawn edge probability in `[0.15, 0.9]`.
pub fn random_graph<R: Rng>(rng: &mut R, m: usize) -> Vec<(usize, usize)> {
    let p = rng.gen_range(0.15..0.9);
    random_edges(rng, m, p)
}

/// A random point on the probability simplex with `n` entries.
pub fn random_weights<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| -rng.gen_range(1e-9..1.0f64).ln()).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

/// Same graph under a random relabeling of its vertices.
pub fn permuted<R: Rng>(rng: &mut R, m: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..m).collect();
    perm.shuffle(rng);
    edges.iter().map(|&(i, j)| (perm[i], perm[j])).collect()
}

pub fn shannon(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.ln()).sum()
}

/// Jensen-Shannon divergence of probability vectors:
/// `H(Σ ωⱼ pⱼ) − Σ ωⱼ H(pⱼ)`.
pub fn jensen_shannon(dists: &[Vec<f64>], weights: &[f64]) -> f64 {
    let k = dists[0].len();
    let mix: Vec<f64> = (0..k)
        .map(|i| dists.iter().zip(weights).map(|(d, w)| w * d[i]).sum())
        .collect();
    shannon(&mix) - dists.iter().zip(weights).map(|(d, w)| w * shannon(d)).sum::<f64>()
}

/// OFF text for a triangulated torus with `rows × cols` vertices,
/// `3·rows·cols` edges and `2·rows·cols` faces.
pub fn torus_off(rows: usize, cols: usize) -> String {
    use std::f64::consts::TAU;
    assert!(rows >= 3 && cols >= 3);
    let n = rows * cols;
    let mut out = format!("OFF\n{} {} {}\n", n, 2 * n, 3 * n);
    for r in 0..rows {
        for c in 0..cols {
            let (u, v) = (TAU * r as f64 / rows as f64, TAU * c as f64 / cols as f64);
            let ring = 2.0 + v.cos();
            out.push_str(&format!("{} {} {}\n", ring * u.cos(), ring * u.sin(), v.sin()));
        }
    }
    let id = |r: usize, c: usize| (r % rows) * cols + (c % cols);
    for r in 0..rows {
        for c in 0..cols {
            let (a, b, d, e) = (id(r, c), id(r + 1, c), id(r + 1, c + 1), id(r, c + 1));
            out.push_str(&format!("3 {a} {b} {d}\n3 {a} {d} {e}\n"));
        }
    }
    out
}
