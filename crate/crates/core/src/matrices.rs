//! Vertex-indexed matrices of a graph: adjacency, degree, transition, Laplacian.

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::graph::Graph;
use crate::linalg::symmetric_eigenvalues;

/// `A`, `D`, `P = D^{-1} A`, `Δ = D - A`, and the Betti number.
#[derive(Debug, Clone)]
pub struct GraphMatrices {
    pub adjacency: DMatrix<f64>,
    pub degree: DMatrix<f64>,
    pub transition: DMatrix<f64>,
    pub laplacian: DMatrix<f64>,
    pub betti: i64,
}

pub fn matrices(g: &Graph) -> GraphMatrices {
    let n = g.n();
    let mut adjacency = DMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        adjacency[(u, v)] = 1.0;
        adjacency[(v, u)] = 1.0;
    }
    let degree = DMatrix::from_fn(n, n, |i, j| if i == j { g.degree(i) as f64 } else { 0.0 });
    let transition = DMatrix::from_fn(n, n, |i, j| adjacency[(i, j)] / g.degree(i) as f64);
    let laplacian = &degree - &adjacency;
    GraphMatrices {
        adjacency,
        degree,
        transition,
        laplacian,
        betti: g.betti(),
    }
}

/// Spectrum of `P`, ascending. Computed from the symmetric similar matrix
/// `D^{-1/2} A D^{-1/2}`.
pub fn transition_spectrum(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut sym = DMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        let w = 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt();
        sym[(u, v)] = w;
        sym[(v, u)] = w;
    }
    symmetric_eigenvalues(&sym)
}

/// Spectrum of the Laplacian `D - A`, ascending.
pub fn laplacian_spectrum(g: &Graph) -> Vec<f64> {
    symmetric_eigenvalues(&matrices(g).laplacian)
}

/// Closed-form spectrum of `P(T^d_N)`:
/// `{ (1/d) Σ_j cos(2π k_j / N) }` over all `k ∈ {0..N-1}^d`, ascending.
pub fn transition_spectrum_torus(d: usize, n: usize) -> Vec<f64> {
    let cosines: Vec<f64> = (0..n)
        .map(|k| (2.0 * PI * k as f64 / n as f64).cos())
        .collect();
    let total = n.pow(d as u32);
    let mut out = Vec::with_capacity(total);
    for idx in 0..total {
        let mut rest = idx;
        let mut s = 0.0;
        for _ in 0..d {
            s += cosines[rest % n];
            rest /= n;
        }
        out.push(s / d as f64);
    }
    out.sort_by(f64::total_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        build_complete, build_cycle, build_petersen, build_random_connected, build_torus,
    };

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn triangle_matrices() {
        let gm = matrices(&build_cycle(3).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 0.0 } else { 0.5 };
                assert_eq!(gm.transition[(i, j)], want);
            }
        }
        // direct 3x3 solve: Δ = 3I - J has eigenvalues 0, 3, 3
        assert!(close(
            &symmetric_eigenvalues(&gm.laplacian),
            &[0.0, 3.0, 3.0],
            1e-12
        ));
        assert_eq!(gm.betti, 1);
    }

    #[test]
    fn complete_graph_transition_spectrum() {
        // P(K4) = (J - I)/3 has eigenvalues 1 and -1/3 (x3)
        let s = transition_spectrum(&build_complete(4).unwrap());
        assert!(close(&s, &[-1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, 1.0], 1e-12));
    }

    #[test]
    fn row_sums_and_psd() {
        for g in [build_petersen(), build_random_connected(7, 0.4, 3).unwrap()] {
            let gm = matrices(&g);
            for i in 0..g.n() {
                let lap: f64 = gm.laplacian.row(i).sum();
                let p: f64 = gm.transition.row(i).sum();
                let a: f64 = gm.adjacency.row(i).sum();
                assert_eq!(lap, 0.0);
                assert!((p - 1.0).abs() < 1e-15);
                assert_eq!(a, g.degree(i) as f64);
            }
            assert!(gm.adjacency == gm.adjacency.transpose());
            assert!(gm.transition.iter().all(|&x| (0.0..=1.0).contains(&x)));
            assert!(laplacian_spectrum(&g)[0] >= -1e-10);
        }
    }

    #[test]
    fn torus_spectrum_small_cases() {
        assert!(close(
            &transition_spectrum_torus(1, 4),
            &[-1.0, 0.0, 0.0, 1.0],
            1e-15
        ));
        let s = transition_spectrum_torus(2, 3);
        assert_eq!(s.len(), 9);
        assert_eq!(*s.last().unwrap(), 1.0);
    }

    #[test]
    fn torus_spectrum_matches_dense_eigensolve() {
        for d in 1..=3 {
            for n in 3..=6 {
                let g = build_torus(d, n).unwrap();
                let numeric = transition_spectrum(&g);
                let closed = transition_spectrum_torus(d, n);
                assert!(close(&numeric, &closed, 1e-9), "d={d} N={n}");
            }
        }
    }
}
