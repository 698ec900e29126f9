//! Eigenvector centrality: the nonnegative left eigenvector `x^T A = l x^T`
//! of the dominant eigenvalue, normalized to unit Euclidean norm.
//!
//! Power iteration runs on `A^T + I`, which shares eigenvectors with `A^T`
//! and whose dominant eigenvalue is strictly separated even for periodic
//! graphs. Convergence is declared when the eigen-residual
//! `||A^T x - l x||_2` drops to `tol`. Graphs whose adjacency has spectral
//! radius 0 (no directed cycle: the matrix is nilpotent) are rejected as
//! degenerate up front.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn eigenvector(graph: &Graph, tol: f64, max_iter: usize) -> Result<Vec<f64>> {
    let tol_ok = tol > 0.0;
    if !tol_ok {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if max_iter == 0 {
        return Err(Error::InvalidParameter("max_iter must be positive".into()));
    }
    let n = graph.n();
    if n == 0 || graph.m() == 0 || !graph.has_directed_cycle() {
        // No cycle means a nilpotent adjacency matrix: spectral radius 0.
        return Err(Error::DegenerateSpectrum);
    }

    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut ax = vec![0.0f64; n];
    let mut residual = f64::INFINITY;
    for _ in 0..max_iter {
        // ax = A^T x
        ax.fill(0.0);
        for j in 0..n {
            let xj = x[j];
            for (i, w) in graph.walk_arcs_out(j) {
                ax[i as usize] += w as f64 * xj;
            }
        }
        let lambda: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, axi)| {
                let r = axi - lambda * xi;
                r * r
            })
            .sum::<f64>()
            .sqrt();
        if residual <= tol {
            debug_assert!(lambda > 0.5, "a cycle forces spectral radius >= 1");
            return Ok(x);
        }
        // Shifted step: x <- normalize(A^T x + x).
        let mut norm = 0.0;
        for (xi, axi) in x.iter_mut().zip(&ax) {
            *xi += axi;
            norm += *xi * *xi;
        }
        let norm = norm.sqrt();
        if norm == 0.0 {
            return Err(Error::DegenerateSpectrum);
        }
        for xi in x.iter_mut() {
            *xi /= norm;
        }
    }
    Err(Error::Convergence {
        iterations: max_iter,
        residual,
    })
}
