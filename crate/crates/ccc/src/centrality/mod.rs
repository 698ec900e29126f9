//! Centrality kernels, each producing a [`ScoreVector`] over one graph.
//!
//! A measure is fully described by its [`Measure`] descriptor; identical
//! `(graph, descriptor)` inputs always yield bit-identical scores. The
//! descriptor parses from and renders to the CLI form `name[:k=v,...]`.

mod brandes;
mod distance;
mod eigenvector;
mod katz;
mod pagerank;

pub use brandes::{betweenness, load};
pub use distance::{closeness, harmonic};
pub use eigenvector::eigenvector;
pub use katz::{katz, spectral_radius_estimate};
pub use pagerank::pagerank;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{DegreeMode, Graph};
use crate::params::{split_descriptor, Params};

/// Orientation of the distances feeding closeness and harmonic centrality.
/// `In` aggregates distances along incoming paths (the default), `Out`
/// along outgoing ones. Irrelevant for undirected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    In,
    Out,
}

/// Walk orientation for Katz centrality. `In` counts incoming walks (the
/// default); `Out` counts outgoing walks, the literal row-sum form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkDirection {
    In,
    Out,
}

/// Attenuation factor choice for Katz centrality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KatzAlpha {
    /// `0.85 / spectral_radius_estimate`; all-zero scores if the estimated
    /// spectral radius is 0.
    Auto,
    Value(f64),
}

/// Per-vertex nonnegative centrality scores for one measure on one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    graph_id: u64,
    measure: String,
    scores: Vec<f64>,
}

impl ScoreVector {
    /// Validates that every score is finite and nonnegative; negative zeros
    /// are canonicalized so score comparison is a total order.
    pub fn new(measure: impl Into<String>, graph_id: u64, mut scores: Vec<f64>) -> Result<Self> {
        for (index, s) in scores.iter_mut().enumerate() {
            if !s.is_finite() || *s < 0.0 {
                return Err(Error::InvalidScore { index, value: *s });
            }
            if *s == 0.0 {
                *s = 0.0;
            }
        }
        Ok(ScoreVector {
            graph_id,
            measure: measure.into(),
            scores,
        })
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn measure(&self) -> &str {
        &self.measure
    }

    pub fn graph_id(&self) -> u64 {
        self.graph_id
    }
}

/// A centrality measure descriptor: which kernel to run and with which
/// parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Measure {
    Degree(DegreeMode),
    PageRank {
        damping: f64,
        tol: f64,
        max_iter: usize,
    },
    Katz {
        alpha: KatzAlpha,
        direction: WalkDirection,
    },
    Eigenvector {
        tol: f64,
        max_iter: usize,
    },
    Closeness(Orientation),
    Harmonic(Orientation),
    Betweenness {
        radius: Option<usize>,
    },
    Load {
        radius: Option<usize>,
    },
}

impl Measure {
    pub fn pagerank(damping: f64) -> Measure {
        Measure::PageRank {
            damping,
            tol: 1e-12,
            max_iter: 100_000,
        }
    }

    /// Runs the kernel on `graph`.
    pub fn compute(&self, graph: &Graph) -> Result<ScoreVector> {
        let scores = match *self {
            Measure::Degree(mode) => (0..graph.n())
                .map(|v| graph.degree(v, mode).map(|d| d as f64))
                .collect::<Result<Vec<_>>>()?,
            Measure::PageRank {
                damping,
                tol,
                max_iter,
            } => pagerank(graph, damping, tol, max_iter)?,
            Measure::Katz { alpha, direction } => katz(graph, alpha, direction)?,
            Measure::Eigenvector { tol, max_iter } => eigenvector(graph, tol, max_iter)?,
            Measure::Closeness(orientation) => closeness(graph, orientation),
            Measure::Harmonic(orientation) => harmonic(graph, orientation),
            Measure::Betweenness { radius } => betweenness(graph, radius)?,
            Measure::Load { radius } => load(graph, radius)?,
        };
        ScoreVector::new(self.descriptor(), graph.fingerprint(), scores)
    }

    /// Canonical descriptor string; parses back via [`Measure::from_str`].
    pub fn descriptor(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Measure::Degree(DegreeMode::In) => write!(f, "indegree"),
            Measure::Degree(DegreeMode::Out) => write!(f, "outdegree"),
            Measure::Degree(DegreeMode::Total) => write!(f, "degree"),
            Measure::PageRank {
                damping,
                tol,
                max_iter,
            } => write!(f, "pagerank:c={damping},tol={tol:e},max_iter={max_iter}"),
            Measure::Katz { alpha, direction } => {
                match alpha {
                    KatzAlpha::Auto => write!(f, "katz:alpha=auto")?,
                    KatzAlpha::Value(a) => write!(f, "katz:alpha={a}")?,
                }
                match direction {
                    WalkDirection::In => write!(f, ",direction=in"),
                    WalkDirection::Out => write!(f, ",direction=out"),
                }
            }
            Measure::Eigenvector { tol, max_iter } => {
                write!(f, "eigenvector:tol={tol:e},max_iter={max_iter}")
            }
            Measure::Closeness(o) => write!(f, "closeness:direction={}", orientation_name(o)),
            Measure::Harmonic(o) => write!(f, "harmonic:direction={}", orientation_name(o)),
            Measure::Betweenness { radius: None } => write!(f, "betweenness"),
            Measure::Betweenness { radius: Some(k) } => write!(f, "betweenness:k={k}"),
            Measure::Load { radius: None } => write!(f, "load"),
            Measure::Load { radius: Some(k) } => write!(f, "load:k={k}"),
        }
    }
}

fn orientation_name(o: Orientation) -> &'static str {
    match o {
        Orientation::In => "in",
        Orientation::Out => "out",
    }
}

fn parse_orientation(value: Option<&str>) -> Result<Orientation> {
    match value {
        None | Some("in") => Ok(Orientation::In),
        Some("out") => Ok(Orientation::Out),
        Some(other) => Err(Error::InvalidParameter(format!(
            "direction must be 'in' or 'out', got {other:?}"
        ))),
    }
}

impl FromStr for Measure {
    type Err = Error;

    /// Parses the CLI form `name[:key=value,...]`. Unknown names and
    /// unknown parameters are rejected.
    fn from_str(s: &str) -> Result<Measure> {
        let (name, spec) = split_descriptor(s);
        let mut params = Params::parse(spec)?;
        let measure = match name {
            "degree" => Measure::Degree(DegreeMode::Total),
            "indegree" => Measure::Degree(DegreeMode::In),
            "outdegree" => Measure::Degree(DegreeMode::Out),
            "pagerank" => Measure::PageRank {
                damping: params.take_f64("c")?.unwrap_or(0.85),
                tol: params.take_f64("tol")?.unwrap_or(1e-12),
                max_iter: params.take_usize("max_iter")?.unwrap_or(100_000),
            },
            "katz" => {
                let alpha = match params.take("alpha") {
                    None | Some("auto") => KatzAlpha::Auto,
                    Some(v) => KatzAlpha::Value(v.parse::<f64>().map_err(|_| {
                        Error::InvalidParameter(format!("alpha={v:?} is not a number or 'auto'"))
                    })?),
                };
                let direction = match params.take("direction") {
                    None | Some("in") => WalkDirection::In,
                    Some("out") => WalkDirection::Out,
                    Some(other) => {
                        return Err(Error::InvalidParameter(format!(
                            "direction must be 'in' or 'out', got {other:?}"
                        )))
                    }
                };
                Measure::Katz { alpha, direction }
            }
            "eigenvector" => Measure::Eigenvector {
                tol: params.take_f64("tol")?.unwrap_or(1e-12),
                max_iter: params.take_usize("max_iter")?.unwrap_or(100_000),
            },
            "closeness" => Measure::Closeness(parse_orientation(params.take("direction"))?),
            "harmonic" => Measure::Harmonic(parse_orientation(params.take("direction"))?),
            "betweenness" => Measure::Betweenness {
                radius: params.take_usize("k")?,
            },
            "load" => Measure::Load {
                radius: params.take_usize("k")?,
            },
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown measure {other:?}"
                )))
            }
        };
        params.finish(name)?;
        Ok(measure)
    }
}
