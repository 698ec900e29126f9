//! Ensembles: repeated (generate, measure, compare) runs with pointwise
//! mean and standard-deviation bands.
//!
//! Replicate `r` draws its graph from the sub-seed `derive(seed, [r])` and
//! its tie-break uniforms from `derive(seed, [r, TIES])`, so replicates are
//! independent streams: they can run in any order or in parallel, and
//! enlarging the ensemble never perturbs earlier replicates. The reduction
//! is a two-pass population mean/std over the stored curves, summed in
//! replicate order.

use rayon::prelude::*;

use crate::centrality::Measure;
use crate::curve::CccCurve;
use crate::error::{Error, Result};
use crate::generate::ModelSpec;
use crate::seeds::derive_seed;

/// Tag separating a replicate's tie-break stream from its graph stream.
const TIES_STREAM: u64 = 0x7469_6573; // "ties"

/// Pointwise mean and population standard deviation of an ensemble of
/// comparison curves on the shared `k/n` grid.
#[derive(Debug, Clone)]
pub struct EnsembleSummary {
    pub n: usize,
    pub replicates: usize,
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
    pub spec: ModelSpec,
    pub measure_pair: (String, String),
    pub seed: u64,
}

impl EnsembleSummary {
    /// The grid coordinate `k/n` for `mean[k-1]`.
    pub fn x(&self, k: usize) -> f64 {
        k as f64 / self.n as f64
    }
}

/// The curve of a single replicate.
pub fn replicate_curve(
    spec: &ModelSpec,
    measure_a: &Measure,
    measure_b: &Measure,
    seed: u64,
    replicate: usize,
) -> Result<CccCurve> {
    let wrap = |e: Error| Error::Replicate {
        index: replicate,
        source: Box::new(e),
    };
    let graph = spec.generate(derive_seed(seed, &[replicate as u64])).map_err(wrap)?;
    let a = measure_a.compute(&graph).map_err(wrap)?;
    let b = measure_b.compute(&graph).map_err(wrap)?;
    crate::curve::ccc(&a, &b, derive_seed(seed, &[replicate as u64, TIES_STREAM])).map_err(wrap)
}

/// Runs `replicates` independent replicates and summarizes them pointwise.
pub fn run_ensemble(
    spec: &ModelSpec,
    measure_a: &Measure,
    measure_b: &Measure,
    replicates: usize,
    seed: u64,
) -> Result<EnsembleSummary> {
    if replicates == 0 {
        return Err(Error::InvalidParameter(
            "an ensemble needs at least one replicate".into(),
        ));
    }
    let curves: Vec<CccCurve> = (0..replicates)
        .into_par_iter()
        .map(|r| replicate_curve(spec, measure_a, measure_b, seed, r))
        .collect::<Result<_>>()?;

    let n = spec.n;
    for curve in &curves {
        if curve.n() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: curve.n(),
            });
        }
    }

    let rf = replicates as f64;
    let mut mean = vec![0.0f64; n];
    for curve in &curves {
        for (m, v) in mean.iter_mut().zip(curve.values()) {
            *m += v;
        }
    }
    for m in mean.iter_mut() {
        *m /= rf;
    }
    let mut std = vec![0.0f64; n];
    for curve in &curves {
        for ((s, v), m) in std.iter_mut().zip(curve.values()).zip(&mean) {
            let d = v - m;
            *s += d * d;
        }
    }
    for s in std.iter_mut() {
        *s = (*s / rf).sqrt();
    }

    Ok(EnsembleSummary {
        n,
        replicates,
        mean,
        std,
        spec: spec.clone(),
        measure_pair: (measure_a.descriptor(), measure_b.descriptor()),
        seed,
    })
}
