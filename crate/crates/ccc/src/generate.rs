//! Random-graph generators: configuration models with Pareto-floored
//! power-law degrees, and graphon-sampled dense graphs including the four
//! named kernels.
//!
//! Every generator is a deterministic function of `(spec, seed)`. Degree
//! draws use the inverse CDF `Y = (1 - U)^(-1 / (alpha - 1))`, so the
//! degree `floor(d_min + Y)` has tail exponent `alpha`. The directed
//! configuration model resamples the whole out-degree sequence until its
//! sum matches the in-degree sum, capped at 10^6 attempts. Graphon samples
//! draw one latent coordinate per vertex and one Bernoulli per ordered pair
//! direction; self-loops never occur.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{split_descriptor, Params};
use crate::seeds::{rng_from_seed, unit_open};

const DIRECTED_CM_RETRY_CAP: usize = 1_000_000;

/// Inverse-CDF Pareto degree: `floor(d_min + (1 - u)^(-1 / (alpha - 1)))`.
pub fn pareto_from_uniform(u: f64, alpha: f64, d_min: u64) -> u64 {
    let y = (1.0 - u).powf(-1.0 / (alpha - 1.0));
    (d_min as f64 + y).floor() as u64
}

fn check_cm_params(alpha: f64, d_min: u64) -> Result<()> {
    let alpha_ok = alpha > 1.0;
    if !alpha_ok {
        return Err(Error::InvalidParameter(format!(
            "power-law exponent alpha must exceed 1, got {alpha}"
        )));
    }
    if d_min < 1 {
        return Err(Error::InvalidParameter(
            "degree floor d_min must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Samples `n` Pareto-floored power-law degrees.
pub fn pareto_degree_sequence<R: RngCore>(
    n: usize,
    alpha: f64,
    d_min: u64,
    rng: &mut R,
) -> Result<Vec<u64>> {
    check_cm_params(alpha, d_min)?;
    Ok((0..n)
        .map(|_| pareto_from_uniform(unit_open(rng.next_u64()), alpha, d_min))
        .collect())
}

/// Uniform stub matching of a prescribed degree sequence; self-loops and
/// multi-edges are retained. An odd degree sum is repaired by granting one
/// extra stub to a uniformly chosen vertex.
pub fn undirected_config_model<R: Rng>(degrees: &[u64], rng: &mut R) -> Graph {
    let n = degrees.len();
    let total: u64 = degrees.iter().sum();
    let mut stubs: Vec<u32> = Vec::with_capacity(total as usize + 1);
    for (v, &d) in degrees.iter().enumerate() {
        stubs.extend(std::iter::repeat_n(v as u32, d as usize));
    }
    if stubs.len() % 2 == 1 {
        stubs.push(rng.random_range(0..n) as u32);
    }
    stubs.shuffle(rng);
    let edges: Vec<(u32, u32)> = stubs.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    Graph::from_dense_edges(n, &edges, false)
}

/// Uniform matching of out-stubs to in-stubs for explicit degree sequences
/// with equal sums.
pub fn directed_config_model_from_degrees<R: Rng>(
    in_degrees: &[u64],
    out_degrees: &[u64],
    rng: &mut R,
) -> Result<Graph> {
    if in_degrees.len() != out_degrees.len() {
        return Err(Error::LengthMismatch {
            left: in_degrees.len(),
            right: out_degrees.len(),
        });
    }
    let in_sum: u64 = in_degrees.iter().sum();
    let out_sum: u64 = out_degrees.iter().sum();
    if in_sum != out_sum {
        return Err(Error::Generation(format!(
            "degree sums differ: in {in_sum}, out {out_sum}"
        )));
    }
    let n = in_degrees.len();
    let mut in_stubs: Vec<u32> = Vec::with_capacity(in_sum as usize);
    for (v, &d) in in_degrees.iter().enumerate() {
        in_stubs.extend(std::iter::repeat_n(v as u32, d as usize));
    }
    in_stubs.shuffle(rng);
    let mut arcs: Vec<(u32, u32)> = Vec::with_capacity(in_sum as usize);
    let mut next = 0usize;
    for (v, &d) in out_degrees.iter().enumerate() {
        for _ in 0..d {
            arcs.push((v as u32, in_stubs[next]));
            next += 1;
        }
    }
    Ok(Graph::from_dense_edges(n, &arcs, true))
}

/// Directed configuration model with both tails Pareto(alpha - 1): the
/// in-degree sequence is sampled once, the out-degree sequence is resampled
/// wholesale until the sums agree.
pub fn directed_config_model<R: Rng>(
    n: usize,
    alpha: f64,
    d_min: u64,
    rng: &mut R,
) -> Result<Graph> {
    let in_degrees = pareto_degree_sequence(n, alpha, d_min, rng)?;
    let in_sum: u64 = in_degrees.iter().sum();
    let mut attempts = 0usize;
    let out_degrees = loop {
        attempts += 1;
        if attempts > DIRECTED_CM_RETRY_CAP {
            return Err(Error::Generation(format!(
                "out-degree sum never matched {in_sum} within {DIRECTED_CM_RETRY_CAP} attempts"
            )));
        }
        let candidate = pareto_degree_sequence(n, alpha, d_min, rng)?;
        if candidate.iter().sum::<u64>() == in_sum {
            break candidate;
        }
    };
    directed_config_model_from_degrees(&in_degrees, &out_degrees, rng)
}

fn check_probability(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) || !p.is_finite() {
        return Err(Error::KernelRange { value: p });
    }
    Ok(p)
}

fn latent_coordinates<R: RngCore>(n: usize, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| unit_open(rng.next_u64())).collect()
}

/// Samples the undirected `G(W, n)` model: latent coordinates in vertex
/// order, then one Bernoulli draw per pair `i < j`.
pub fn undirected_graphon_sample<R: RngCore>(
    n: usize,
    w: impl Fn(f64, f64) -> f64,
    rng: &mut R,
) -> Result<Graph> {
    let x = latent_coordinates(n, rng);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let p = check_probability(w(x[i], x[j]))?;
            if unit_open(rng.next_u64()) < p {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Ok(Graph::from_dense_edges(n, &edges, false))
}

/// Samples the directed graphon model: for each pair `i < j`, the arc
/// `i -> j` appears with probability `w01(x_i, x_j)` and the arc `j -> i`
/// with probability `w10(x_i, x_j)`, independently.
pub fn directed_graphon_sample<R: RngCore>(
    n: usize,
    w01: impl Fn(f64, f64) -> f64,
    w10: impl Fn(f64, f64) -> f64,
    rng: &mut R,
) -> Result<Graph> {
    let x = latent_coordinates(n, rng);
    let mut arcs: Vec<(u32, u32)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let p01 = check_probability(w01(x[i], x[j]))?;
            if unit_open(rng.next_u64()) < p01 {
                arcs.push((i as u32, j as u32));
            }
            let p10 = check_probability(w10(x[i], x[j]))?;
            if unit_open(rng.next_u64()) < p10 {
                arcs.push((j as u32, i as u32));
            }
        }
    }
    Ok(Graph::from_dense_edges(n, &arcs, true))
}

/// Arc orientation within a vertex pair `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcDir {
    /// The arc `i -> j`.
    Forward,
    /// The arc `j -> i`.
    Backward,
}

/// The four named graphon kernels.
///
/// `Product` and `Sum` are undirected. `DirectedOpposed` makes in- and
/// out-degrees maximally different. `Threshold` gives every arc the
/// probability `c_high` when its head's coordinate is below `p` and
/// `c_low` otherwise, so a minority of vertices attracts almost all
/// in-links; only the head rule is prescribed, the tail arc mirrors it on
/// its own head coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NamedGraphon {
    Product { c: f64 },
    Sum { c: f64 },
    DirectedOpposed { c: f64 },
    Threshold { c_high: f64, c_low: f64, p: f64 },
}

impl NamedGraphon {
    pub fn product(c: f64) -> Result<NamedGraphon> {
        if !(0.0..1.0).contains(&c) {
            return Err(Error::InvalidParameter(format!(
                "product graphon requires 0 <= c < 1, got {c}"
            )));
        }
        Ok(NamedGraphon::Product { c })
    }

    pub fn sum(c: f64) -> Result<NamedGraphon> {
        if !(0.0..0.5).contains(&c) {
            return Err(Error::InvalidParameter(format!(
                "sum graphon requires 0 <= c < 1/2, got {c}"
            )));
        }
        Ok(NamedGraphon::Sum { c })
    }

    pub fn directed_opposed(c: f64) -> Result<NamedGraphon> {
        if !(0.0..1.0).contains(&c) {
            return Err(Error::InvalidParameter(format!(
                "directed_opposed graphon requires 0 <= c < 1, got {c}"
            )));
        }
        Ok(NamedGraphon::DirectedOpposed { c })
    }

    pub fn threshold(c_high: f64, c_low: f64, p: f64) -> Result<NamedGraphon> {
        for (name, v) in [("c_high", c_high), ("c_low", c_low), ("p", p)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidParameter(format!(
                    "threshold graphon requires {name} in [0, 1], got {v}"
                )));
            }
        }
        Ok(NamedGraphon::Threshold { c_high, c_low, p })
    }

    /// The constants of the threshold kernel used throughout:
    /// `c_high = 0.9`, `c_low = 0.05`, `p = 0.15`.
    pub fn threshold_defaults() -> NamedGraphon {
        NamedGraphon::Threshold {
            c_high: 0.9,
            c_low: 0.05,
            p: 0.15,
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(
            self,
            NamedGraphon::DirectedOpposed { .. } | NamedGraphon::Threshold { .. }
        )
    }

    /// Kernel value for a pair with latent coordinates `(x_i, x_j)`,
    /// `i < j`, in the given arc direction. Undirected kernels ignore the
    /// direction.
    pub fn arc_probability(&self, x_i: f64, x_j: f64, dir: ArcDir) -> f64 {
        match *self {
            NamedGraphon::Product { c } => c * x_i * x_j,
            NamedGraphon::Sum { c } => c * (x_i + x_j),
            NamedGraphon::DirectedOpposed { c } => match dir {
                ArcDir::Forward => c * x_i * x_j,
                ArcDir::Backward => c * (1.0 - x_i) * (1.0 - x_j),
            },
            NamedGraphon::Threshold { c_high, c_low, p } => {
                let head = match dir {
                    ArcDir::Forward => x_j,
                    ArcDir::Backward => x_i,
                };
                if head < p {
                    c_high
                } else {
                    c_low
                }
            }
        }
    }

    pub fn sample<R: RngCore>(&self, n: usize, rng: &mut R) -> Result<Graph> {
        if self.is_directed() {
            directed_graphon_sample(
                n,
                |xi, xj| self.arc_probability(xi, xj, ArcDir::Forward),
                |xi, xj| self.arc_probability(xi, xj, ArcDir::Backward),
                rng,
            )
        } else {
            undirected_graphon_sample(
                n,
                |xi, xj| self.arc_probability(xi, xj, ArcDir::Forward),
                rng,
            )
        }
    }

    fn name(&self) -> &'static str {
        match self {
            NamedGraphon::Product { .. } => "product",
            NamedGraphon::Sum { .. } => "sum",
            NamedGraphon::DirectedOpposed { .. } => "directed_opposed",
            NamedGraphon::Threshold { .. } => "threshold",
        }
    }
}

/// A generative model: which family, at which size. Together with a seed
/// this fully determines a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    pub n: usize,
    pub kind: ModelKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelKind {
    UndirectedCm { alpha: f64, d_min: u64 },
    DirectedCm { alpha: f64, d_min: u64 },
    Graphon(NamedGraphon),
}

impl ModelSpec {
    pub fn undirected_cm(n: usize, alpha: f64, d_min: u64) -> Result<ModelSpec> {
        check_cm_params(alpha, d_min)?;
        Ok(ModelSpec {
            n,
            kind: ModelKind::UndirectedCm { alpha, d_min },
        })
    }

    pub fn directed_cm(n: usize, alpha: f64, d_min: u64) -> Result<ModelSpec> {
        check_cm_params(alpha, d_min)?;
        Ok(ModelSpec {
            n,
            kind: ModelKind::DirectedCm { alpha, d_min },
        })
    }

    pub fn graphon(n: usize, kernel: NamedGraphon) -> ModelSpec {
        ModelSpec {
            n,
            kind: ModelKind::Graphon(kernel),
        }
    }

    pub fn is_directed(&self) -> bool {
        match &self.kind {
            ModelKind::UndirectedCm { .. } => false,
            ModelKind::DirectedCm { .. } => true,
            ModelKind::Graphon(g) => g.is_directed(),
        }
    }

    /// Generates one graph; a pure function of `(self, seed)`.
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        let mut rng = rng_from_seed(seed);
        match &self.kind {
            ModelKind::UndirectedCm { alpha, d_min } => {
                let degrees = pareto_degree_sequence(self.n, *alpha, *d_min, &mut rng)?;
                Ok(undirected_config_model(&degrees, &mut rng))
            }
            ModelKind::DirectedCm { alpha, d_min } => {
                directed_config_model(self.n, *alpha, *d_min, &mut rng)
            }
            ModelKind::Graphon(kernel) => kernel.sample(self.n, &mut rng),
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ModelKind::UndirectedCm { alpha, d_min } => {
                write!(f, "undirected_cm:n={},alpha={alpha},dmin={d_min}", self.n)
            }
            ModelKind::DirectedCm { alpha, d_min } => {
                write!(f, "directed_cm:n={},alpha={alpha},dmin={d_min}", self.n)
            }
            ModelKind::Graphon(g) => {
                write!(f, "graphon:kind={},n={}", g.name(), self.n)?;
                match *g {
                    NamedGraphon::Product { c }
                    | NamedGraphon::Sum { c }
                    | NamedGraphon::DirectedOpposed { c } => write!(f, ",c={c}"),
                    NamedGraphon::Threshold { c_high, c_low, p } => {
                        write!(f, ",c_high={c_high},c_low={c_low},p={p}")
                    }
                }
            }
        }
    }
}

impl FromStr for ModelSpec {
    type Err = Error;

    /// Parses `undirected_cm:n=..,alpha=..[,dmin=..]`,
    /// `directed_cm:n=..,alpha=..[,dmin=..]`, or
    /// `graphon:kind=..,n=..[,constants]`.
    fn from_str(s: &str) -> Result<ModelSpec> {
        let (name, spec) = split_descriptor(s);
        let mut params = Params::parse(spec)?;
        let need_n = |p: &mut Params| {
            p.take_usize("n")?
                .ok_or_else(|| Error::InvalidParameter("model needs n=<size>".into()))
        };
        let spec = match name {
            "undirected_cm" | "directed_cm" => {
                let n = need_n(&mut params)?;
                let alpha = params
                    .take_f64("alpha")?
                    .ok_or_else(|| Error::InvalidParameter("model needs alpha=<exponent>".into()))?;
                let d_min = params.take_u64("dmin")?.unwrap_or(1);
                if name == "undirected_cm" {
                    ModelSpec::undirected_cm(n, alpha, d_min)?
                } else {
                    ModelSpec::directed_cm(n, alpha, d_min)?
                }
            }
            "graphon" => {
                let kind = params
                    .take("kind")
                    .ok_or_else(|| Error::InvalidParameter("graphon needs kind=<name>".into()))?;
                let n = need_n(&mut params)?;
                let kernel = match kind {
                    "product" => NamedGraphon::product(
                        params.take_f64("c")?.ok_or_else(|| {
                            Error::InvalidParameter("product graphon needs c=<constant>".into())
                        })?,
                    )?,
                    "sum" => NamedGraphon::sum(params.take_f64("c")?.ok_or_else(|| {
                        Error::InvalidParameter("sum graphon needs c=<constant>".into())
                    })?)?,
                    "directed_opposed" => NamedGraphon::directed_opposed(
                        params.take_f64("c")?.ok_or_else(|| {
                            Error::InvalidParameter(
                                "directed_opposed graphon needs c=<constant>".into(),
                            )
                        })?,
                    )?,
                    "threshold" => {
                        let defaults = NamedGraphon::threshold_defaults();
                        let (dh, dl, dp) = match defaults {
                            NamedGraphon::Threshold { c_high, c_low, p } => (c_high, c_low, p),
                            _ => unreachable!(),
                        };
                        NamedGraphon::threshold(
                            params.take_f64("c_high")?.unwrap_or(dh),
                            params.take_f64("c_low")?.unwrap_or(dl),
                            params.take_f64("p")?.unwrap_or(dp),
                        )?
                    }
                    other => {
                        return Err(Error::InvalidParameter(format!(
                            "unknown graphon kind {other:?}"
                        )))
                    }
                };
                ModelSpec::graphon(n, kernel)
            }
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown model kind {other:?}"
                )))
            }
        };
        params.finish(name)?;
        Ok(spec)
    }
}
