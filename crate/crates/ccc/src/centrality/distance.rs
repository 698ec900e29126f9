//! Closeness and harmonic centrality over the simple projection of the
//! graph (multiplicities and self-loops ignored).
//!
//! Both aggregate shortest-path distances at each vertex. With the default
//! `In` orientation the distance from `u` to `v` is measured along incoming
//! paths of `v` (a BFS over reversed arcs); `Out` flips the orientation.
//! Closeness on graphs that are not strongly connected uses the
//! Wasserman-Faust component scaling
//! `c(v) = ((r - 1) / (n - 1)) * ((r - 1) / sum_of_distances)`,
//! where `r` counts the vertices that can reach `v` (including `v`);
//! `r <= 1` yields 0. Harmonic centrality sums reciprocal distances with
//! `1/inf := 0`, so no scaling is needed.

use rayon::prelude::*;

use crate::centrality::Orientation;
use crate::graph::Graph;

struct BfsScratch {
    dist: Vec<u32>,
    queue: Vec<u32>,
}

impl BfsScratch {
    fn new(n: usize) -> Self {
        BfsScratch {
            dist: vec![u32::MAX; n],
            queue: Vec::with_capacity(n),
        }
    }

    /// BFS from `v` over the simple projection, walking in-arcs for
    /// `Orientation::In` and out-arcs for `Orientation::Out`. Returns
    /// `(reached_count, distance_sum, reciprocal_sum)` over reached
    /// vertices other than `v`.
    fn sweep(&mut self, graph: &Graph, v: usize, orientation: Orientation) -> (usize, u64, f64) {
        self.queue.clear();
        self.queue.push(v as u32);
        self.dist[v] = 0;
        let mut head = 0;
        let mut sum = 0u64;
        let mut recip = 0.0f64;
        while head < self.queue.len() {
            let u = self.queue[head] as usize;
            head += 1;
            let d = self.dist[u];
            if d > 0 {
                sum += d as u64;
                recip += 1.0 / d as f64;
            }
            let next = d + 1;
            match orientation {
                Orientation::In => {
                    for w in graph.simple_in(u) {
                        if self.dist[w as usize] == u32::MAX {
                            self.dist[w as usize] = next;
                            self.queue.push(w);
                        }
                    }
                }
                Orientation::Out => {
                    for w in graph.simple_out(u) {
                        if self.dist[w as usize] == u32::MAX {
                            self.dist[w as usize] = next;
                            self.queue.push(w);
                        }
                    }
                }
            }
        }
        let reached = self.queue.len() - 1;
        for &u in &self.queue {
            self.dist[u as usize] = u32::MAX;
        }
        (reached, sum, recip)
    }
}

pub fn closeness(graph: &Graph, orientation: Orientation) -> Vec<f64> {
    let n = graph.n();
    (0..n)
        .into_par_iter()
        .map_init(
            || BfsScratch::new(n),
            |scratch, v| {
                let (reached, sum, _) = scratch.sweep(graph, v, orientation);
                let r = reached + 1;
                if r < 2 {
                    return 0.0;
                }
                let rm1 = (r - 1) as f64;
                (rm1 / (n - 1) as f64) * (rm1 / sum as f64)
            },
        )
        .collect()
}

pub fn harmonic(graph: &Graph, orientation: Orientation) -> Vec<f64> {
    let n = graph.n();
    (0..n)
        .into_par_iter()
        .map_init(
            || BfsScratch::new(n),
            |scratch, v| scratch.sweep(graph, v, orientation).2,
        )
        .collect()
}
