//! Betweenness and load centrality by per-source BFS with dependency
//! back-propagation, optionally truncated to a distance radius.
//!
//! Both walk the simple projection and sum over ordered vertex pairs,
//! excluding pairs with an endpoint at the counted vertex and pairs with no
//! connecting path. Betweenness accumulates `sigma_{s,t}(v) / sigma_{s,t}`;
//! load accumulates the raw path counts `sigma_{s,t}(v)` and divides once
//! by the total path count over all reachable ordered pairs. With a radius
//! `k` the pair sums are restricted to `d(s, t) <= k`, realized by
//! depth-limited traversal.
//!
//! Sources are distributed over a fixed number of accumulation lanes and
//! the lane partials are folded in lane order, so results are bit-identical
//! no matter how the lanes are scheduled.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

const ACCUM_LANES: usize = 64;

pub fn betweenness(graph: &Graph, radius: Option<usize>) -> Result<Vec<f64>> {
    let radius = check_radius(radius)?;
    Ok(accumulate(graph, radius, Mode::Betweenness).scores)
}

pub fn load(graph: &Graph, radius: Option<usize>) -> Result<Vec<f64>> {
    let radius = check_radius(radius)?;
    let Accumulated { mut scores, denom } = accumulate(graph, radius, Mode::Load);
    if denom == 0.0 {
        scores.fill(0.0);
    } else {
        for s in scores.iter_mut() {
            *s /= denom;
        }
    }
    Ok(scores)
}

fn check_radius(radius: Option<usize>) -> Result<u32> {
    match radius {
        None => Ok(u32::MAX),
        Some(0) => Err(Error::InvalidParameter(
            "truncation radius k must be at least 1".into(),
        )),
        Some(k) => Ok(u32::try_from(k).unwrap_or(u32::MAX)),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Betweenness,
    Load,
}

struct Accumulated {
    scores: Vec<f64>,
    denom: f64,
}

struct SourceScratch {
    dist: Vec<u32>,
    sigma: Vec<f64>,
    weight: Vec<f64>,
    order: Vec<u32>,
}

impl SourceScratch {
    fn new(n: usize) -> Self {
        SourceScratch {
            dist: vec![u32::MAX; n],
            sigma: vec![0.0; n],
            weight: vec![0.0; n],
            order: Vec::with_capacity(n),
        }
    }
}

fn accumulate(graph: &Graph, radius: u32, mode: Mode) -> Accumulated {
    let n = graph.n();
    let lanes: Vec<(Vec<f64>, f64)> = (0..ACCUM_LANES)
        .into_par_iter()
        .map(|lane| {
            let mut acc = vec![0.0f64; n];
            let mut denom = 0.0f64;
            let mut scratch = SourceScratch::new(n);
            let mut s = lane;
            while s < n {
                contribute(graph, s, radius, mode, &mut scratch, &mut acc, &mut denom);
                s += ACCUM_LANES;
            }
            (acc, denom)
        })
        .collect();

    let mut scores = vec![0.0f64; n];
    let mut denom = 0.0f64;
    for (lane_acc, lane_denom) in lanes {
        for (total, part) in scores.iter_mut().zip(&lane_acc) {
            *total += part;
        }
        denom += lane_denom;
    }
    Accumulated { scores, denom }
}

/// One source sweep: BFS to depth `radius`, then dependency accumulation in
/// reverse visit order. Predecessor tests re-walk in-neighbors against the
/// distance array instead of storing predecessor lists.
fn contribute(
    graph: &Graph,
    source: usize,
    radius: u32,
    mode: Mode,
    scratch: &mut SourceScratch,
    acc: &mut [f64],
    denom: &mut f64,
) {
    let SourceScratch {
        dist,
        sigma,
        weight,
        order,
    } = scratch;

    order.clear();
    order.push(source as u32);
    dist[source] = 0;
    sigma[source] = 1.0;
    let mut head = 0;
    while head < order.len() {
        let u = order[head] as usize;
        head += 1;
        let du = dist[u];
        if du >= radius {
            continue;
        }
        for w in graph.simple_out(u) {
            let wi = w as usize;
            if dist[wi] == u32::MAX {
                dist[wi] = du + 1;
                order.push(w);
            }
            if dist[wi] == du + 1 {
                sigma[wi] += sigma[u];
            }
        }
    }

    match mode {
        Mode::Betweenness => {
            // weight holds the Brandes dependency delta.
            for &w in order.iter().rev() {
                let wi = w as usize;
                let dw = dist[wi];
                if dw == 0 {
                    continue;
                }
                let coeff = (1.0 + weight[wi]) / sigma[wi];
                for u in graph.simple_in(wi) {
                    let ui = u as usize;
                    if dist[ui] != u32::MAX && dist[ui] + 1 == dw {
                        weight[ui] += sigma[ui] * coeff;
                    }
                }
                acc[wi] += weight[wi];
            }
        }
        Mode::Load => {
            // weight holds phi: the number of shortest-path continuations
            // from each vertex to the in-radius targets below it, so the
            // per-source raw count through v is sigma[v] * phi[v].
            for &w in order.iter().rev() {
                let wi = w as usize;
                let dw = dist[wi];
                if dw == 0 {
                    continue;
                }
                *denom += sigma[wi];
                let continuations = 1.0 + weight[wi];
                for u in graph.simple_in(wi) {
                    let ui = u as usize;
                    if dist[ui] != u32::MAX && dist[ui] + 1 == dw {
                        weight[ui] += continuations;
                    }
                }
                acc[wi] += sigma[wi] * weight[wi];
            }
        }
    }

    for &u in order.iter() {
        let ui = u as usize;
        dist[ui] = u32::MAX;
        sigma[ui] = 0.0;
        weight[ui] = 0.0;
    }
}
