//! Induced total vertex orderings.
//!
//! A pair of measures `(R, S)` orders vertices by descending `R`, breaking
//! `R`-ties by descending `S` and any remaining ties by per-vertex uniform
//! variates shared between the two orderings of the pair. Exact duplicates
//! in all three keys (possible only through duplicated uniforms) fall back
//! to ascending vertex id, so the order is total unconditionally.
//!
//! Two degenerate alternatives are kept as diagnostics: breaking all
//! `R`-ties by uniforms alone, and breaking them by vertex id alone. Both
//! lose the key property that equal measures produce equal orderings.

use std::str::FromStr;

use rand::RngCore;

use crate::centrality::ScoreVector;
use crate::error::{Error, Result};
use crate::seeds::{rng_from_seed, unit_open};

/// Per-vertex standard uniform variates used for residual tie-breaking.
///
/// Deterministic function of `(n, seed)`: draws come from a ChaCha8 stream
/// keyed by `seed`, one per vertex in index order, mapped onto (0, 1).
#[derive(Debug, Clone, PartialEq)]
pub struct Uniforms {
    seed: u64,
    values: Vec<f64>,
}

impl Uniforms {
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Draws the shared per-vertex uniforms for one graph and seed. Both
/// orderings of a measure pair must use the same array.
pub fn shared_uniforms(n: usize, seed: u64) -> Uniforms {
    let mut rng = rng_from_seed(seed);
    let values = (0..n).map(|_| unit_open(rng.next_u64())).collect();
    Uniforms { seed, values }
}

/// Tie-breaking rule selecting how an induced ordering resolves equal
/// primary scores.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieRule {
    /// Secondary measure, then shared uniforms (the standard rule).
    Hierarchical,
    /// Uniforms alone, ignoring the secondary measure (diagnostic).
    RandomTies,
    /// Vertex id alone, ignoring secondary measure and uniforms
    /// (diagnostic).
    PrimaryOnly,
}

impl FromStr for TieRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<TieRule> {
        match s {
            "hierarchical" => Ok(TieRule::Hierarchical),
            "random_ties" | "random-ties" => Ok(TieRule::RandomTies),
            "primary_only" | "primary-only" => Ok(TieRule::PrimaryOnly),
            other => Err(Error::InvalidParameter(format!(
                "unknown tie rule {other:?}"
            ))),
        }
    }
}

/// A permutation of vertices from most central to least, with the metadata
/// identifying how it was built.
#[derive(Debug, Clone, PartialEq)]
pub struct InducedOrder {
    permutation: Vec<u32>,
    key_spec: String,
    uniforms_seed: u64,
}

impl InducedOrder {
    /// Vertex ids from most central to least.
    pub fn permutation(&self) -> &[u32] {
        &self.permutation
    }

    /// Descriptor of the primary measure.
    pub fn key_spec(&self) -> &str {
        &self.key_spec
    }

    /// Seed of the uniform array used for residual ties.
    pub fn uniforms_seed(&self) -> u64 {
        self.uniforms_seed
    }
}

/// Builds the induced ordering for primary measure `R` and secondary `S`
/// under the hierarchical tie-break rule.
pub fn induced_order(
    primary: &ScoreVector,
    secondary: &ScoreVector,
    uniforms: &Uniforms,
) -> Result<InducedOrder> {
    order_with_rule(primary, secondary, uniforms, TieRule::Hierarchical)
}

/// Builds an ordering under one of the degenerate diagnostic rules.
pub fn induced_order_degenerate(
    primary: &ScoreVector,
    secondary: &ScoreVector,
    uniforms: &Uniforms,
    rule: TieRule,
) -> Result<InducedOrder> {
    order_with_rule(primary, secondary, uniforms, rule)
}

fn order_with_rule(
    primary: &ScoreVector,
    secondary: &ScoreVector,
    uniforms: &Uniforms,
    rule: TieRule,
) -> Result<InducedOrder> {
    let n = primary.len();
    if secondary.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: secondary.len(),
        });
    }
    if uniforms.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: uniforms.len(),
        });
    }

    let r = primary.scores();
    let s = secondary.scores();
    let u = uniforms.values();

    let mut permutation: Vec<u32> = (0..n as u32).collect();
    // Scores are validated finite, so partial_cmp cannot fail. Descending
    // on the key, ascending vertex id last.
    let desc = |a: f64, b: f64| b.partial_cmp(&a).expect("finite scores");
    match rule {
        TieRule::Hierarchical => permutation.sort_unstable_by(|&a, &b| {
            let (a, b) = (a as usize, b as usize);
            desc(r[a], r[b])
                .then_with(|| desc(s[a], s[b]))
                .then_with(|| desc(u[a], u[b]))
                .then_with(|| a.cmp(&b))
        }),
        TieRule::RandomTies => permutation.sort_unstable_by(|&a, &b| {
            let (a, b) = (a as usize, b as usize);
            desc(r[a], r[b])
                .then_with(|| desc(u[a], u[b]))
                .then_with(|| a.cmp(&b))
        }),
        TieRule::PrimaryOnly => permutation.sort_unstable_by(|&a, &b| {
            let (a, b) = (a as usize, b as usize);
            desc(r[a], r[b]).then_with(|| a.cmp(&b))
        }),
    }

    Ok(InducedOrder {
        permutation,
        key_spec: primary.measure().to_string(),
        uniforms_seed: uniforms.seed(),
    })
}
