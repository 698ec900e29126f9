//! Centrality comparison curves.
//!
//! This crate compares pairs of graph centrality measures through the
//! overlap of their top-k vertex sets: for measures `R` and `S` on an
//! `n`-vertex graph, the comparison curve maps `k/n` to
//! `|Top_k(R, S) ∩ Top_k(S, R)| / n`, where the two total orderings break
//! ties hierarchically (secondary measure first, shared per-vertex
//! uniforms last). The curve equals the identity exactly when the measures
//! agree, approaches `x^2` when they are independent, and hugs
//! `max(0, 2x - 1)` when they are maximally different.
//!
//! The pieces:
//!
//! * [`graph`] — immutable multigraph storage and SNAP edge-list ingestion;
//! * [`centrality`] — degree variants, PageRank, Katz, eigenvector,
//!   closeness, harmonic, betweenness and load (with distance truncation);
//! * [`ordering`] — the induced total orders and their tie-break rules;
//! * [`curve`] — the comparison curve, the `CCCo` scalar, and the
//!   reference curves;
//! * [`generate`] — configuration models and graphon samplers;
//! * [`ensemble`] — replicated runs with mean/std bands;
//! * [`io`] / [`plot`] — CSV schemas and SVG rendering.
//!
//! Everything randomized is a deterministic function of explicit 64-bit
//! seeds (ChaCha8 streams, SplitMix64 sub-seed derivation; see [`seeds`]).

pub mod centrality;
pub mod curve;
pub mod ensemble;
mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod ordering;
mod params;
pub mod plot;
pub mod seeds;

pub use error::{Error, Result};
