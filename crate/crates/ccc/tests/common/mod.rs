//! Brute-force oracles for the centrality kernels, independent of the
//! library's implementation paths: Floyd-Warshall distances, explicit
//! shortest-path enumeration, dense Gaussian-elimination solves, and dense
//! inverse iteration. Only usable at toy sizes; that is the point.

#![allow(dead_code)]

use ccc::graph::Graph;
use ccc::seeds::{rng_from_seed, unit_open};
use rand::{Rng, RngCore};
use rand_chacha::ChaCha8Rng;

pub const INF: u32 = u32::MAX;

/// Dense walk-expansion adjacency: `a[u][v]` is the arc weight `u -> v`
/// (multiplicity; undirected self-loops count twice), rebuilt from the
/// exported edge multiset rather than the internal adjacency.
pub fn dense_adjacency(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut a = vec![vec![0.0f64; n]; n];
    for (u, v) in g.edge_list() {
        let (u, v) = (u as usize, v as usize);
        if g.is_directed() {
            a[u][v] += 1.0;
        } else if u == v {
            a[u][v] += 2.0;
        } else {
            a[u][v] += 1.0;
            a[v][u] += 1.0;
        }
    }
    a
}

/// Simple-projection arc matrix (no multiplicities, no self-loops).
pub fn simple_arcs(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut arc = vec![vec![false; n]; n];
    for (u, v) in g.edge_list() {
        let (u, v) = (u as usize, v as usize);
        if u == v {
            continue;
        }
        arc[u][v] = true;
        if !g.is_directed() {
            arc[v][u] = true;
        }
    }
    arc
}

/// All-pairs distances on the simple projection by Floyd-Warshall.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let arc = simple_arcs(g);
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        d[i][i] = 0;
    }
    for i in 0..n {
        for j in 0..n {
            if arc[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF {
                    let via = d[i][k] + d[k][j];
                    if via < d[i][j] {
                        d[i][j] = via;
                    }
                }
            }
        }
    }
    d
}

/// Enumerates every shortest path of an ordered pair, returning
/// `(path_count, through_count)` where `through_count[v]` counts paths with
/// `v` strictly interior.
fn enumerate_pair(
    arc: &[Vec<bool>],
    d: &[Vec<u32>],
    s: usize,
    t: usize,
) -> (f64, Vec<f64>) {
    let n = arc.len();
    let mut sigma = 0.0;
    let mut through = vec![0.0f64; n];
    let mut stack: Vec<usize> = vec![s];
    fn dfs(
        arc: &[Vec<bool>],
        d: &[Vec<u32>],
        t: usize,
        stack: &mut Vec<usize>,
        sigma: &mut f64,
        through: &mut [f64],
    ) {
        let u = *stack.last().unwrap();
        if u == t {
            *sigma += 1.0;
            for &v in &stack[1..stack.len() - 1] {
                through[v] += 1.0;
            }
            return;
        }
        let s = stack[0];
        for w in 0..arc.len() {
            if arc[u][w]
                && d[s][u] != INF
                && d[w][t] != INF
                && d[s][u] + 1 + d[w][t] == d[s][t]
            {
                stack.push(w);
                dfs(arc, d, t, stack, sigma, through);
                stack.pop();
            }
        }
    }
    if d[s][t] != INF && s != t {
        dfs(arc, d, t, &mut stack, &mut sigma, &mut through);
    }
    (sigma, through)
}

/// Betweenness by explicit path enumeration over ordered pairs, optionally
/// restricted to pairs at distance at most `radius`.
pub fn betweenness_oracle(g: &Graph, radius: Option<u32>) -> Vec<f64> {
    let n = g.n();
    let arc = simple_arcs(g);
    let d = distance_matrix(g);
    let mut scores = vec![0.0f64; n];
    for s in 0..n {
        for t in 0..n {
            if s == t || d[s][t] == INF {
                continue;
            }
            if let Some(k) = radius {
                if d[s][t] > k {
                    continue;
                }
            }
            let (sigma, through) = enumerate_pair(&arc, &d, s, t);
            for v in 0..n {
                scores[v] += through[v] / sigma;
            }
        }
    }
    scores
}

/// Load by explicit path enumeration: summed through-counts over the
/// summed path counts of all reachable ordered pairs.
pub fn load_oracle(g: &Graph, radius: Option<u32>) -> Vec<f64> {
    let n = g.n();
    let arc = simple_arcs(g);
    let d = distance_matrix(g);
    let mut numerator = vec![0.0f64; n];
    let mut denominator = 0.0f64;
    for s in 0..n {
        for t in 0..n {
            if s == t || d[s][t] == INF {
                continue;
            }
            if let Some(k) = radius {
                if d[s][t] > k {
                    continue;
                }
            }
            let (sigma, through) = enumerate_pair(&arc, &d, s, t);
            denominator += sigma;
            for v in 0..n {
                numerator[v] += through[v];
            }
        }
    }
    if denominator == 0.0 {
        return vec![0.0; n];
    }
    numerator.iter().map(|x| x / denominator).collect()
}

/// Closeness from the distance matrix with Wasserman-Faust scaling,
/// distances aggregated into each vertex.
pub fn closeness_oracle(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let d = distance_matrix(g);
    (0..n)
        .map(|v| {
            let mut r = 0usize;
            let mut sum = 0u64;
            for u in 0..n {
                if d[u][v] != INF {
                    r += 1;
                    sum += d[u][v] as u64;
                }
            }
            if r < 2 {
                return 0.0;
            }
            let rm1 = (r - 1) as f64;
            (rm1 / (n - 1) as f64) * (rm1 / sum as f64)
        })
        .collect()
}

pub fn harmonic_oracle(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let d = distance_matrix(g);
    (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| u != v && d[u][v] != INF)
                .map(|u| 1.0 / d[u][v] as f64)
                .sum()
        })
        .collect()
}

/// Gaussian elimination with partial pivoting; `a` is row-major.
pub fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        let diag = a[col][col];
        assert!(diag.abs() > 1e-12, "singular system");
        for row in (col + 1)..n {
            let factor = a[row][col] / diag;
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0f64; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in (row + 1)..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    x
}

/// PageRank as the exact solution of `(I - c M^T) R = (1 - c) 1`, where
/// `M[j][i] = a[j][i] / outdeg(j)` and dangling rows are zero.
pub fn pagerank_oracle(g: &Graph, c: f64) -> Vec<f64> {
    let n = g.n();
    let a = dense_adjacency(g);
    let out: Vec<f64> = a.iter().map(|row| row.iter().sum()).collect();
    let mut system = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        system[i][i] = 1.0;
        for j in 0..n {
            if out[j] > 0.0 {
                system[i][j] -= c * a[j][i] / out[j];
            }
        }
    }
    solve_dense(system, vec![1.0 - c; n])
}

/// Katz as the exact solution of `(I - alpha B) K = alpha B 1`, with
/// `B = A^T` for incoming walks and `B = A` for outgoing ones.
pub fn katz_oracle(g: &Graph, alpha: f64, incoming: bool) -> Vec<f64> {
    let n = g.n();
    let a = dense_adjacency(g);
    let b = |i: usize, j: usize| if incoming { a[j][i] } else { a[i][j] };
    let mut system = vec![vec![0.0f64; n]; n];
    let mut rhs = vec![0.0f64; n];
    for i in 0..n {
        system[i][i] = 1.0;
        for j in 0..n {
            system[i][j] -= alpha * b(i, j);
            rhs[i] += alpha * b(i, j);
        }
    }
    solve_dense(system, rhs)
}

/// The truncated walk sum `sum_{k<=depth} alpha^k (A^T)^k 1` by dense
/// matrix-vector products.
pub fn katz_truncated_sum(g: &Graph, alpha: f64, depth: usize) -> Vec<f64> {
    let n = g.n();
    let a = dense_adjacency(g);
    let mut term = vec![1.0f64; n];
    let mut total = vec![0.0f64; n];
    for _ in 0..depth {
        let mut next = vec![0.0f64; n];
        for i in 0..n {
            for j in 0..n {
                next[i] += alpha * a[j][i] * term[j];
            }
        }
        for (t, x) in total.iter_mut().zip(&next) {
            *t += x;
        }
        term = next;
    }
    total
}

/// Whether the walk adjacency is nilpotent, decided by dense boolean
/// matrix powers (`A^n = 0`).
pub fn is_nilpotent(g: &Graph) -> bool {
    let n = g.n();
    let a = dense_adjacency(g);
    let mut reach: Vec<Vec<bool>> = a
        .iter()
        .map(|row| row.iter().map(|&x| x > 0.0).collect())
        .collect();
    for _ in 0..n {
        let mut next = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if reach[i][j] {
                    for (k, flag) in next[i].iter_mut().enumerate() {
                        *flag = *flag || (a[j][k] > 0.0);
                    }
                }
            }
        }
        reach = next;
    }
    reach.iter().all(|row| row.iter().all(|&x| !x))
}

/// Oracle view of a dominant eigenpair computation.
pub enum EigenOracle {
    /// Spectral radius 0: the kernel must report a degenerate spectrum.
    Degenerate,
    /// The dominant eigenvector, reachable by plain power iteration.
    Vector(Vec<f64>),
    /// A pathological spectrum (defective or near-tied dominant
    /// eigenvalue): dense power iteration itself stalls, so the kernel's
    /// non-convergence error is the contractual outcome. Carries the
    /// inverse-iteration vector for reference.
    Pathological(Vec<f64>),
}

/// Dominant left eigenvector by dense power iteration for the eigenvalue
/// and dense inverse iteration (shifted linear solves) for the vector,
/// both started from all-ones so multiple dominant eigendirections resolve
/// the same way as the implementation under test.
pub fn eigenvector_oracle(g: &Graph) -> EigenOracle {
    let n = g.n();
    if n == 0 || is_nilpotent(g) {
        return EigenOracle::Degenerate;
    }
    let a = dense_adjacency(g);
    // Power iteration on A^T + I for the dominant eigenvalue.
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut lambda = 0.0f64;
    let mut power_converged = false;
    for _ in 0..200_000 {
        let mut y = x.clone();
        for i in 0..n {
            for j in 0..n {
                y[i] += a[j][i] * x[j];
            }
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        let mut ax = vec![0.0f64; n];
        for i in 0..n {
            for j in 0..n {
                ax[i] += a[j][i] * x[j];
            }
        }
        let next_lambda: f64 = x.iter().zip(&ax).map(|(p, q)| p * q).sum();
        let resid: f64 = x
            .iter()
            .zip(&ax)
            .map(|(p, q)| {
                let r = q - next_lambda * p;
                r * r
            })
            .sum::<f64>()
            .sqrt();
        lambda = next_lambda;
        if resid < 1e-13 {
            power_converged = true;
            break;
        }
    }
    // Inverse iteration with a shift just above the dominant eigenvalue of
    // A^T + I. The shift is kept moderate: a tighter one makes the solves
    // so ill-conditioned that the split of the answer across a repeated
    // eigenspace drowns in rounding, while leakage from the rest of the
    // spectrum dies geometrically over the rounds anyway.
    let sigma = lambda + 1.0 + 1e-4;
    let mut v = vec![1.0f64; n];
    for _ in 0..10 {
        let mut system = vec![vec![0.0f64; n]; n];
        for i in 0..n {
            for j in 0..n {
                system[i][j] = a[j][i] - if i == j { sigma - 1.0 } else { 0.0 };
            }
        }
        let y = solve_dense(system, v.clone());
        let norm = y.iter().map(|q| q * q).sum::<f64>().sqrt();
        let sign = if y.iter().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
        v = y.iter().map(|q| sign * q / norm).collect();
    }
    // Self-certificate: the answer is only a usable oracle if it is an
    // eigenvector to well below the comparison tolerance.
    let mut av = vec![0.0f64; n];
    for i in 0..n {
        for j in 0..n {
            av[i] += a[j][i] * v[j];
        }
    }
    let self_residual: f64 = v
        .iter()
        .zip(&av)
        .map(|(p, q)| {
            let r = q - lambda * p;
            r * r
        })
        .sum::<f64>()
        .sqrt();
    if power_converged && self_residual <= 1e-10 {
        EigenOracle::Vector(v)
    } else {
        EigenOracle::Pathological(v)
    }
}

/// A seeded random multigraph with at most `n_max` vertices (duplicate
/// edges and self-loops included, directed and undirected mixed).
pub fn random_graph_up_to(n_max: usize, max_edges: usize, rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.random_range(1..=n_max);
    let directed = rng.random_range(0..2u8) == 0;
    let edges = rng.random_range(0..=max_edges);
    let pairs: Vec<(u32, u32)> = (0..edges)
        .map(|_| {
            (
                rng.random_range(0..n) as u32,
                rng.random_range(0..n) as u32,
            )
        })
        .collect();
    Graph::from_dense_edges(n, &pairs, directed)
}

/// A seeded stream of small random multigraphs with n <= 7.
pub fn random_small_graph(rng: &mut ChaCha8Rng) -> Graph {
    random_graph_up_to(7, 12, rng)
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    rng_from_seed(seed)
}

/// A uniform random permutation's ranks as scores, drawn from the crate's
/// seed discipline.
pub fn random_rank_scores(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = rng_from_seed(seed);
    let mut ranks: Vec<usize> = (0..n).collect();
    // Fisher-Yates on raw draws, stable across rand versions.
    for i in (1..n).rev() {
        let j = (unit_open(rng.next_u64()) * (i + 1) as f64) as usize;
        ranks.swap(i, j.min(i));
    }
    ranks.iter().map(|&r| r as f64).collect()
}

pub fn assert_close(actual: &[f64], expected: &[f64], tol: f64, context: &str) {
    assert_eq!(actual.len(), expected.len(), "{context}: length mismatch");
    for (i, (a, e)) in actual.iter().zip(expected).enumerate() {
        assert!(
            (a - e).abs() <= tol,
            "{context}: vertex {i} differs, got {a}, expected {e}"
        );
    }
}
