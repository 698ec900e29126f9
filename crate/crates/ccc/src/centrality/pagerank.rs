//! PageRank by fixed-point iteration of the literal recursion
//! `R(i) = c * sum_j (e_{j,i} / d_j^+) * R(j) + (1 - c)`.
//!
//! Dangling vertices (`d_j^+ = 0`) contribute nothing: their term is taken
//! as 0, so their mass is dropped rather than redistributed. Undirected
//! edges act as one arc per direction. Iteration starts from `R = 1`; the
//! returned vector satisfies the recursion with max-norm residual at most
//! `tol` at every vertex.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn pagerank(graph: &Graph, damping: f64, tol: f64, max_iter: usize) -> Result<Vec<f64>> {
    let damping_ok = damping > 0.0 && damping < 1.0;
    if !damping_ok {
        return Err(Error::InvalidParameter(format!(
            "damping factor must lie in (0, 1), got {damping}"
        )));
    }
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
    if n == 0 {
        return Ok(Vec::new());
    }

    let out_weight: Vec<f64> = (0..n)
        .map(|v| graph.walk_arcs_out(v).map(|(_, w)| w as f64).sum())
        .collect();

    let mut current = vec![1.0f64; n];
    let mut next = vec![0.0f64; n];
    let mut residual = f64::INFINITY;
    for _ in 0..max_iter {
        next.fill(1.0 - damping);
        for j in 0..n {
            if out_weight[j] == 0.0 {
                continue;
            }
            let push = damping * current[j] / out_weight[j];
            for (i, w) in graph.walk_arcs_out(j) {
                next[i as usize] += push * w as f64;
            }
        }
        residual = current
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            // `current` already reproduces itself within tol; returning it
            // (rather than `next`) makes the residual bound hold verbatim.
            return Ok(current);
        }
        std::mem::swap(&mut current, &mut next);
    }
    Err(Error::Convergence {
        iterations: max_iter,
        residual,
    })
}
