use jtgraph::{
    density_matrix, eigendecompose, eigenvalues, kronecker_joint, laplacian_matrix,
    parse_off_mesh, spectrum, volume, Graph, SymmetricMatrix,
};
use jtgraph_testkit::{is_connected, jacobi_eigenvalues, laplacian_rows, random_graph, rng, torus_off};
use rand::Rng;

fn max_abs(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn jacobi_oracle_on_hand_cases() {
    let p3 = laplacian_rows(3, &[(0, 1), (1, 2)]);
    assert!(max_abs(&jacobi_eigenvalues(&p3), &[0.0, 1.0, 3.0]) < 1e-12);
    let k3 = laplacian_rows(3, &[(0, 1), (1, 2), (0, 2)]);
    assert!(max_abs(&jacobi_eigenvalues(&k3), &[0.0, 3.0, 3.0]) < 1e-12);
}

#[test]
fn matches_jacobi_on_random_graphs() {
    let mut r = rng(11);
    for _ in 0..300 {
        let m = r.gen_range(2..=12);
        let edges = random_graph(&mut r, m);
        let g = Graph::new(m, edges.iter().copied()).unwrap();
        let main = eigenvalues(&laplacian_matrix(&g)).unwrap();
        let oracle = jacobi_eigenvalues(&laplacian_rows(m, &edges));
        assert!(max_abs(&main, &oracle) <= 1e-10, "{main:?} vs {oracle:?}");
    }
}

#[test]
fn matches_jacobi_on_dense_random_matrices() {
    let mut r = rng(12);
    for _ in 0..100 {
        let m = r.gen_range(1..=10);
        let s = SymmetricMatrix::from_lower_fn(m, |_, _| r.gen_range(-1.0..1.0));
        let main = eigendecompose(&s).unwrap();
        let oracle = jacobi_eigenvalues(&s.to_rows());
        assert!(max_abs(main.eigenvalues(), &oracle) <= 1e-12);
    }
}

fn check_eigensystem(s: &SymmetricMatrix) {
    let es = eigendecompose(s).unwrap();
    let n = s.dim();
    let scale = s.frobenius_norm().max(1.0);
    for i in 0..n {
        let u = es.eigenvector(i);
        let su = s.mul_vec(u);
        let res: f64 = su
            .iter()
            .zip(u)
            .map(|(a, b)| (a - es.eigenvalues()[i] * b).powi(2))
            .sum::<f64>()
            .sqrt();
        assert!(res <= 1e-9 * scale, "residual {res}");
        for j in 0..n {
            let dot: f64 = u.iter().zip(es.eigenvector(j)).map(|(a, b)| a * b).sum();
            let expected = if i == j { 1.0 } else { 0.0 };
            assert!((dot - expected).abs() <= 1e-9);
        }
    }
    assert!(es.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
    assert!(es.reconstruct().max_abs_diff(s) <= 1e-9);
}

#[test]
fn residual_orthonormality_and_reconstruction() {
    let mut r = rng(13);
    for _ in 0..100 {
        let m = r.gen_range(2..=12);
        let g = Graph::new(m, random_graph(&mut r, m)).unwrap();
        check_eigensystem(&laplacian_matrix(&g));
        check_eigensystem(density_matrix(&g).unwrap().matrix());
    }
}

#[test]
fn dyads_have_unit_trace() {
    let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
    let es = eigendecompose(density_matrix(&g).unwrap().matrix()).unwrap();
    for u in es.eigenvectors() {
        let dyad = SymmetricMatrix::from_lower_fn(u.len(), |i, j| u[i] * u[j]);
        assert!((dyad.trace() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn laplacian_and_density_share_eigenspaces() {
    let mut r = rng(14);
    for _ in 0..50 {
        let m = r.gen_range(3..=10);
        let g = Graph::new(m, random_graph(&mut r, m)).unwrap();
        let vol = volume(&g) as f64;
        let el = eigendecompose(&laplacian_matrix(&g)).unwrap();
        let er = eigendecompose(density_matrix(&g).unwrap().matrix()).unwrap();
        for (l, mu) in el.eigenvalues().iter().zip(er.eigenvalues()) {
            assert!((l / vol - mu).abs() < 1e-12);
        }
        // compare spectral projectors eigenvalue cluster by cluster
        let mut i = 0;
        while i < m {
            let lo = el.eigenvalues()[i];
            let mut j = i;
            while j + 1 < m && el.eigenvalues()[j + 1] - lo < 1e-8 {
                j += 1;
            }
            let hi = el.eigenvalues()[j];
            let pl = el.projector(lo - 1e-9, hi + 1e-9);
            let pr = er.projector((lo - 1e-9) / vol, (hi + 1e-9) / vol);
            assert!(pl.max_abs_diff(&pr) < 1e-9);
            i = j + 1;
        }
    }
}

#[test]
fn connected_graphs_have_constant_null_vector() {
    let mut r = rng(15);
    let mut connected_seen = 0;
    for _ in 0..200 {
        let m = r.gen_range(2..=12);
        let edges = random_graph(&mut r, m);
        let g = Graph::new(m, edges.iter().copied()).unwrap();
        let s = spectrum(&density_matrix(&g).unwrap()).unwrap();
        assert_eq!(s.as_slice()[0], 0.0);
        let connected = is_connected(m, &edges);
        assert_eq!(s.as_slice()[1] > 0.0, connected, "{edges:?}");
        if connected {
            connected_seen += 1;
            let es = eigendecompose(density_matrix(&g).unwrap().matrix()).unwrap();
            let u = es.eigenvector(0);
            let c = 1.0 / (m as f64).sqrt();
            assert!(u.iter().all(|x| (x.abs() - c).abs() < 1e-9));
        }
    }
    assert!(connected_seen > 50);
}

#[test]
fn kronecker_spectrum_is_pairwise_products() {
    let p3 = density_matrix(&Graph::new(3, [(0, 1), (1, 2)]).unwrap()).unwrap();
    let k3 = density_matrix(&Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()).unwrap();
    let joint = spectrum(&kronecker_joint(&p3, &k3)).unwrap();
    let (a, b) = (spectrum(&p3).unwrap(), spectrum(&k3).unwrap());
    let mut products: Vec<f64> = a
        .as_slice()
        .iter()
        .flat_map(|x| b.as_slice().iter().map(move |y| x * y))
        .collect();
    products.sort_by(|x, y| x.partial_cmp(y).unwrap());
    assert!(max_abs(joint.as_slice(), &products) < 1e-12);
    assert!((kronecker_joint(&p3, &k3).matrix().trace() - 1.0).abs() < 1e-12);
}

#[test]
fn deterministic_output() {
    let mut r = rng(16);
    let g = Graph::new(40, random_graph(&mut r, 40)).unwrap();
    let rho = density_matrix(&g).unwrap();
    let first = eigendecompose(rho.matrix()).unwrap();
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let rho = rho.clone();
            std::thread::spawn(move || eigendecompose(rho.matrix()).unwrap())
        })
        .collect();
    for h in handles {
        let other = h.join().unwrap();
        let bits = |e: &jtgraph::EigenSystem| -> Vec<u64> {
            e.eigenvalues()
                .iter()
                .chain(e.eigenvectors().iter().flatten())
                .map(|x| x.to_bits())
                .collect()
        };
        assert_eq!(bits(&first), bits(&other));
    }
}

#[test]
fn mesh_scale_pipeline() {
    let parsed = parse_off_mesh(&torus_off(12, 131)).unwrap();
    let g = parsed.graph;
    assert_eq!(g.vertex_count(), 1572);
    assert_eq!(g.edge_count(), 4716);
    let rho = density_matrix(&g).unwrap();
    assert!((rho.matrix().trace() - 1.0).abs() < 1e-12);
    let s = spectrum(&rho).unwrap();
    assert!((s.as_slice().iter().sum::<f64>() - 1.0).abs() < 1e-9);
    assert!(s.as_slice()[0] <= 1e-10);
    assert!(s.as_slice()[1] > 0.0);
}
