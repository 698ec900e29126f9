//! Immutable multigraph storage in compressed adjacency form.
//!
//! Vertices are dense ids `0..n`. Parallel edges are kept as multiplicities
//! and self-loops are allowed; a directed self-loop contributes 1 to both
//! the in- and out-degree of its vertex, an undirected one contributes 2 to
//! the total degree. Walk-based kernels (degree, PageRank, Katz,
//! eigenvector) respect multiplicities; distance-based kernels walk the
//! simple projection (multiplicities and self-loops ignored).

use std::collections::HashMap;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::seeds::splitmix64;

/// Degree orientation for [`Graph::degree`] and the degree measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    In,
    Out,
    Total,
}

/// An immutable directed or undirected multigraph.
///
/// For undirected graphs the adjacency is stored symmetrically (each
/// non-loop edge appears in both endpoint lists, loops once) and no
/// separate in-adjacency is kept.
#[derive(Debug, Clone)]
pub struct Graph {
    directed: bool,
    n: usize,
    m: u64,
    out_off: Vec<usize>,
    out_nbr: Vec<u32>,
    out_mult: Vec<u32>,
    in_off: Vec<usize>,
    in_nbr: Vec<u32>,
    in_mult: Vec<u32>,
    original_ids: Vec<u64>,
    fingerprint: u64,
}

impl Graph {
    /// Builds a graph from an edge list with arbitrary nonnegative ids.
    ///
    /// Ids are remapped densely in first-appearance order; the original ids
    /// are retained for output. Duplicate pairs accumulate multiplicity.
    pub fn from_edge_list(pairs: &[(u64, u64)], directed: bool) -> Graph {
        let mut id_map: HashMap<u64, u32> = HashMap::new();
        let mut original_ids: Vec<u64> = Vec::new();
        let mut dense: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            let ui = remap(&mut id_map, &mut original_ids, u);
            let vi = remap(&mut id_map, &mut original_ids, v);
            dense.push((ui, vi));
        }
        let n = original_ids.len();
        Self::build(n, &dense, directed, original_ids)
    }

    /// Builds a graph whose ids are already dense `0..n`.
    ///
    /// Generators use this form; vertices with no incident edges are kept.
    ///
    /// # Panics
    /// Panics if any endpoint is `>= n`.
    pub fn from_dense_edges(n: usize, pairs: &[(u32, u32)], directed: bool) -> Graph {
        for &(u, v) in pairs {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) out of range for n = {n}"
            );
        }
        let original_ids = (0..n as u64).collect();
        Self::build(n, pairs, directed, original_ids)
    }

    fn build(n: usize, pairs: &[(u32, u32)], directed: bool, original_ids: Vec<u64>) -> Graph {
        let m = pairs.len() as u64;

        // Arc list of the stored adjacency: directed keeps arcs as given,
        // undirected mirrors non-loop edges.
        let mut arcs: Vec<(u32, u32)> = Vec::with_capacity(if directed {
            pairs.len()
        } else {
            2 * pairs.len()
        });
        arcs.extend_from_slice(pairs);
        if !directed {
            arcs.extend(pairs.iter().filter(|(u, v)| u != v).map(|&(u, v)| (v, u)));
        }

        let (out_off, out_nbr, out_mult) = csr_from_arcs(n, arcs.iter().copied());
        let (in_off, in_nbr, in_mult) = if directed {
            csr_from_arcs(n, arcs.iter().map(|&(u, v)| (v, u)))
        } else {
            (Vec::new(), Vec::new(), Vec::new())
        };

        let mut g = Graph {
            directed,
            n,
            m,
            out_off,
            out_nbr,
            out_mult,
            in_off,
            in_nbr,
            in_mult,
            original_ids,
            fingerprint: 0,
        };
        g.fingerprint = g.compute_fingerprint();
        g
    }

    fn compute_fingerprint(&self) -> u64 {
        let mut h = splitmix64(self.n as u64 ^ u64::from(self.directed) << 63);
        for (u, v, mult) in self.canonical_edges() {
            h = splitmix64(h ^ splitmix64((u as u64) << 32 | v as u64) ^ mult as u64);
        }
        h
    }

    /// Canonical edge stream: `(u, v, multiplicity)` per distinct edge, each
    /// edge once (for undirected graphs, `u <= v`).
    fn canonical_edges(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.out_slice(u)
                .filter(move |&(v, _)| self.directed || v >= u as u32)
                .map(move |(v, mult)| (u as u32, v, mult))
        })
    }

    fn out_slice(&self, v: usize) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj(v, false)
    }

    /// Incoming adjacency; for undirected graphs this is the (symmetric)
    /// stored adjacency.
    fn in_slice(&self, v: usize) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj(v, true)
    }

    fn adj(&self, v: usize, incoming: bool) -> impl Iterator<Item = (u32, u32)> + '_ {
        let (off, nbr, mult) = if incoming && self.directed {
            (&self.in_off, &self.in_nbr, &self.in_mult)
        } else {
            (&self.out_off, &self.out_nbr, &self.out_mult)
        };
        let lo = off[v];
        let hi = off[v + 1];
        nbr[lo..hi]
            .iter()
            .copied()
            .zip(mult[lo..hi].iter().copied())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total edge count with multiplicity (arcs for directed graphs, edges
    /// for undirected ones).
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// A 64-bit digest of `(n, directedness, edge multiset)` over the
    /// dense ids. Two graphs built from the same input always share it;
    /// relabelings of the same edge multiset generally do not.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn original_id(&self, v: usize) -> u64 {
        self.original_ids[v]
    }

    /// Multiplicity-weighted degree. For undirected graphs all three modes
    /// agree and a self-loop counts twice; for directed graphs a self-loop
    /// counts once in each direction.
    pub fn degree(&self, v: usize, mode: DegreeMode) -> Result<u64> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if !self.directed {
            let deg = self
                .out_slice(v)
                .map(|(u, mult)| {
                    let mult = mult as u64;
                    if u as usize == v {
                        2 * mult
                    } else {
                        mult
                    }
                })
                .sum();
            return Ok(deg);
        }
        let out = || self.out_slice(v).map(|(_, m)| m as u64).sum::<u64>();
        let inn = || self.in_slice(v).map(|(_, m)| m as u64).sum::<u64>();
        Ok(match mode {
            DegreeMode::Out => out(),
            DegreeMode::In => inn(),
            DegreeMode::Total => out() + inn(),
        })
    }

    /// Out-arcs of `v` in the directed expansion used by the walk kernels:
    /// directed graphs yield their arcs, undirected edges yield one arc per
    /// direction, and an undirected self-loop yields weight `2 * mult`.
    pub(crate) fn walk_arcs_out(&self, v: usize) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.out_slice(v).map(move |(u, mult)| {
            let w = if !self.directed && u as usize == v {
                2 * mult as u64
            } else {
                mult as u64
            };
            (u, w)
        })
    }

    /// In-arcs of `v` in the directed expansion (see [`Self::walk_arcs_out`]).
    pub(crate) fn walk_arcs_in(&self, v: usize) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.in_slice(v).map(move |(u, mult)| {
            let w = if !self.directed && u as usize == v {
                2 * mult as u64
            } else {
                mult as u64
            };
            (u, w)
        })
    }

    /// Distinct out-neighbors of `v` in the simple projection, self
    /// excluded. Used by every distance-based kernel.
    pub(crate) fn simple_out(&self, v: usize) -> impl Iterator<Item = u32> + '_ {
        self.out_slice(v)
            .map(|(u, _)| u)
            .filter(move |&u| u as usize != v)
    }

    /// Distinct in-neighbors of `v` in the simple projection, self excluded.
    pub(crate) fn simple_in(&self, v: usize) -> impl Iterator<Item = u32> + '_ {
        self.in_slice(v)
            .map(|(u, _)| u)
            .filter(move |&u| u as usize != v)
    }

    /// The edge multiset with original ids, one entry per multiplicity unit.
    /// Feeding the result back through [`Graph::from_edge_list`] rebuilds an
    /// identical structure (isolated vertices excepted, as an edge list
    /// cannot carry them).
    pub fn edge_list(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::with_capacity(self.m as usize);
        for (u, v, mult) in self.canonical_edges() {
            for _ in 0..mult {
                out.push((self.original_ids[u as usize], self.original_ids[v as usize]));
            }
        }
        out
    }

    /// Whether the directed expansion contains any cycle (self-loops
    /// included). Exactly characterizes a nonzero adjacency spectral
    /// radius: any cycle forces it to at least 1, and an acyclic adjacency
    /// matrix is nilpotent. Undirected edges always form 2-cycles.
    pub(crate) fn has_directed_cycle(&self) -> bool {
        if !self.directed {
            return self.m > 0;
        }
        // Kahn's algorithm; leftover vertices lie on or behind a cycle.
        let mut indegree: Vec<usize> = (0..self.n)
            .map(|v| self.in_slice(v).map(|(_, m)| m as usize).sum())
            .collect();
        let mut queue: Vec<u32> = (0..self.n)
            .filter(|&v| indegree[v] == 0)
            .map(|v| v as u32)
            .collect();
        let mut removed = 0usize;
        while let Some(v) = queue.pop() {
            removed += 1;
            for (u, mult) in self.out_slice(v as usize) {
                let ui = u as usize;
                indegree[ui] -= mult as usize;
                if indegree[ui] == 0 {
                    queue.push(u);
                }
            }
        }
        removed < self.n
    }

    /// Writes the graph as a SNAP-style plain-text edge list. Round-trips
    /// through [`parse_snap`] and [`Graph::from_edge_list`].
    pub fn write_snap<W: std::io::Write>(&self, w: &mut W) -> Result<()> {
        writeln!(
            w,
            "# {} graph: {} vertices, {} edges",
            if self.directed { "Directed" } else { "Undirected" },
            self.n,
            self.m
        )?;
        writeln!(w, "# FromNodeId\tToNodeId")?;
        for (u, v) in self.edge_list() {
            writeln!(w, "{u}\t{v}")?;
        }
        Ok(())
    }
}

fn remap(id_map: &mut HashMap<u64, u32>, original_ids: &mut Vec<u64>, id: u64) -> u32 {
    match id_map.entry(id) {
        std::collections::hash_map::Entry::Occupied(e) => *e.get(),
        std::collections::hash_map::Entry::Vacant(e) => {
            let dense = original_ids.len() as u32;
            original_ids.push(id);
            *e.insert(dense)
        }
    }
}

/// Builds a CSR with per-neighbor multiplicities from an arc stream.
fn csr_from_arcs(
    n: usize,
    arcs: impl Iterator<Item = (u32, u32)>,
) -> (Vec<usize>, Vec<u32>, Vec<u32>) {
    let mut sorted: Vec<(u32, u32)> = arcs.collect();
    sorted.sort_unstable();
    let mut off = vec![0usize; n + 1];
    let mut nbr = Vec::new();
    let mut mult = Vec::new();
    let mut idx = 0;
    for v in 0..n {
        off[v] = nbr.len();
        while idx < sorted.len() && sorted[idx].0 as usize == v {
            let target = sorted[idx].1;
            let mut count = 0u32;
            while idx < sorted.len() && sorted[idx] == (v as u32, target) {
                count += 1;
                idx += 1;
            }
            nbr.push(target);
            mult.push(count);
        }
    }
    off[n] = nbr.len();
    (off, nbr, mult)
}

/// Parses SNAP plain-text edge lists: `#`-comment lines are skipped, blank
/// lines tolerated, every other line must hold exactly two nonnegative
/// integers. The pair order of the input is preserved.
pub fn parse_snap<R: BufRead>(reader: R) -> Result<Vec<(u64, u64)>> {
    let mut pairs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two whitespace-separated integers, got {trimmed:?}"),
            });
        };
        let parse = |s: &str| {
            s.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid vertex id {s:?}"),
            })
        };
        pairs.push((parse(a)?, parse(b)?));
    }
    Ok(pairs)
}
