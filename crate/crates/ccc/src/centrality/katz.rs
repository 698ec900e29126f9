//! Katz centrality: the attenuated walk-count sum
//! `K(i) = sum_{k>=1} alpha^k sum_j (A^T)^k_{i,j}` (incoming walks, the
//! default) or the same with `A` (outgoing walks).
//!
//! Computed by iterating `K <- alpha * A^T * (K + 1)` to its fixed point.
//! The attenuation factor must keep `alpha * spectral_radius < 1`; with
//! `alpha = auto` it is set to `0.85 / spectral_radius_estimate`, and a
//! graph whose estimated spectral radius is 0 yields all-zero scores.

use crate::centrality::{KatzAlpha, WalkDirection};
use crate::error::{Error, Result};
use crate::graph::Graph;

const FIXED_POINT_TOL: f64 = 1e-12;
const MAX_ITER: usize = 100_000;

/// Power-iteration estimate of the adjacency spectral radius, run on
/// `A + I` so that periodic structures (cycles, bipartite graphs) cannot
/// stall the iteration. Acyclic adjacency (no directed cycle, hence a
/// nilpotent matrix) is detected structurally and reported as exactly 0.
pub fn spectral_radius_estimate(graph: &Graph) -> f64 {
    let n = graph.n();
    if n == 0 || graph.m() == 0 || !graph.has_directed_cycle() {
        return 0.0;
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0f64; n];
    let mut ratio = 1.0f64;
    for _ in 0..500 {
        // y = (A^T + I) x
        y.copy_from_slice(&x);
        for j in 0..n {
            let xj = x[j];
            for (i, w) in graph.walk_arcs_out(j) {
                y[i as usize] += w as f64 * xj;
            }
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let next_ratio = norm;
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        let done = (next_ratio - ratio).abs() <= 1e-13 * next_ratio.max(1.0);
        ratio = next_ratio;
        if done {
            break;
        }
    }
    (ratio - 1.0).max(0.0)
}

pub fn katz(graph: &Graph, alpha: KatzAlpha, direction: WalkDirection) -> Result<Vec<f64>> {
    let n = graph.n();
    if n == 0 {
        return Ok(Vec::new());
    }

    let rho = spectral_radius_estimate(graph);
    let alpha = match alpha {
        KatzAlpha::Auto => {
            if rho < 1e-12 {
                // No spectral radius to scale against; walk counts are
                // finite but "auto" has no defined value here.
                // TODO: pick an auto-attenuation convention for acyclic
                // graphs if a use case ever needs nonzero scores.
                return Ok(vec![0.0; n]);
            }
            0.85 / rho
        }
        KatzAlpha::Value(a) => {
            if !(a > 0.0 && a < 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "attenuation factor must lie in (0, 1), got {a}"
                )));
            }
            if a * rho >= 1.0 {
                return Err(Error::Divergence {
                    alpha: a,
                    spectral_radius: rho,
                });
            }
            a
        }
    };

    let mut current = vec![0.0f64; n];
    let mut next = vec![0.0f64; n];
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_ITER {
        next.fill(0.0);
        for j in 0..n {
            let push = alpha * (current[j] + 1.0);
            match direction {
                WalkDirection::In => {
                    for (i, w) in graph.walk_arcs_out(j) {
                        next[i as usize] += w as f64 * push;
                    }
                }
                WalkDirection::Out => {
                    for (i, w) in graph.walk_arcs_in(j) {
                        next[i as usize] += w as f64 * push;
                    }
                }
            }
        }
        if next.iter().any(|v| !v.is_finite() || *v > 1e18) {
            // The spectral-radius estimate was low; the sum is diverging.
            return Err(Error::Divergence {
                alpha,
                spectral_radius: rho,
            });
        }
        residual = current
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        std::mem::swap(&mut current, &mut next);
        if residual <= FIXED_POINT_TOL {
            return Ok(current);
        }
    }
    Err(Error::Convergence {
        iterations: MAX_ITER,
        residual,
    })
}
