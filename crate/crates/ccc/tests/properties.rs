//! Cross-module invariants that do not fit a single unit-test module.

mod common;

use ccc::centrality::{Measure, ScoreVector};
use ccc::curve::{ccc, ccc_with_rule};
use ccc::generate::ModelSpec;
use ccc::ordering::TieRule;
use ccc::seeds::derive_seed;
use common::*;

/// Hierarchical tie-breaking maximizes top-k overlap: on tie-heavy score
/// pairs its mean overlap dominates the random-ties rule at every probed
/// depth, averaged over seeds.
#[test]
fn hierarchical_rule_dominates_random_ties_in_expected_overlap() {
    let n = 120usize;
    // Heavy ties: scores live on a 4-value grid.
    let r: Vec<f64> = (0..n).map(|i| ((i * 7) % 4) as f64).collect();
    let s: Vec<f64> = (0..n).map(|i| ((i * 13) % 4) as f64).collect();
    let rv = ScoreVector::new("r", 0, r).unwrap();
    let sv = ScoreVector::new("s", 0, s).unwrap();

    let seeds = 40u64;
    for k in [6usize, 12, 30, 60, 90] {
        let mut hier_sum = 0.0;
        let mut random_sum = 0.0;
        for seed in 0..seeds {
            let hier = ccc(&rv, &sv, derive_seed(1, &[seed])).unwrap();
            let random = ccc_with_rule(&rv, &sv, derive_seed(1, &[seed]), TieRule::RandomTies)
                .unwrap();
            hier_sum += hier.values()[k - 1];
            random_sum += random.values()[k - 1];
        }
        assert!(
            hier_sum >= random_sum,
            "k = {k}: mean overlap under the hierarchical rule {} fell below random ties {}",
            hier_sum / seeds as f64,
            random_sum / seeds as f64
        );
    }
}

/// Every kernel is deterministic down to the bit pattern, including the
/// lane-accumulated parallel traversals.
#[test]
fn kernels_are_bit_deterministic() {
    let spec: ModelSpec = "directed_cm:n=600,alpha=3,dmin=1".parse().unwrap();
    let g = spec.generate(424242).unwrap();
    for name in [
        "degree",
        "indegree",
        "outdegree",
        "pagerank:c=0.85",
        "katz",
        "eigenvector",
        "closeness",
        "harmonic",
        "betweenness",
        "load",
        "betweenness:k=4",
        "load:k=4",
    ] {
        let m: Measure = name.parse().unwrap();
        let a = m.compute(&g).unwrap();
        let b = m.compute(&g).unwrap();
        assert!(
            a.scores()
                .iter()
                .zip(b.scores())
                .all(|(x, y)| x.to_bits() == y.to_bits()),
            "measure {name} is not bit-deterministic"
        );
    }
}

/// A truncation radius at or beyond the diameter reproduces the
/// untruncated measure exactly.
#[test]
fn radius_beyond_diameter_matches_untruncated() {
    let mut rng = seeded_rng(0xD1AE);
    for case in 0..30 {
        let g = random_graph_up_to(12, 24, &mut rng);
        let d = distance_matrix(&g);
        let diameter = d
            .iter()
            .flatten()
            .filter(|&&x| x != INF)
            .copied()
            .max()
            .unwrap_or(0) as usize;
        let full_b: Measure = "betweenness".parse().unwrap();
        let full_l: Measure = "load".parse().unwrap();
        let b = full_b.compute(&g).unwrap();
        let l = full_l.compute(&g).unwrap();
        for k in [diameter.max(1), diameter + 3] {
            let bt: Measure = format!("betweenness:k={k}").parse().unwrap();
            let lt: Measure = format!("load:k={k}").parse().unwrap();
            assert_eq!(
                bt.compute(&g).unwrap().scores(),
                b.scores(),
                "case {case}, betweenness k = {k}"
            );
            assert_eq!(
                lt.compute(&g).unwrap().scores(),
                l.scores(),
                "case {case}, load k = {k}"
            );
        }
    }
}

/// Closeness and harmonic reduce to the plain distance-sum formulas on
/// strongly connected graphs (no component scaling active).
#[test]
fn closeness_reduces_to_plain_formula_when_fully_reachable() {
    let mut rng = seeded_rng(0xD1AF);
    let mut checked = 0;
    while checked < 15 {
        let g = random_graph_up_to(8, 30, &mut rng);
        let n = g.n();
        let d = distance_matrix(&g);
        let fully_reachable =
            (0..n).all(|v| (0..n).all(|u| d[u][v] != INF));
        if n < 2 || !fully_reachable {
            continue;
        }
        let c: Measure = "closeness".parse().unwrap();
        let got = c.compute(&g).unwrap();
        for v in 0..n {
            let sum: u64 = (0..n).map(|u| d[u][v] as u64).sum();
            let plain = (n as f64 - 1.0) / sum as f64;
            assert!(
                (got.scores()[v] - plain).abs() < 1e-12,
                "vertex {v}: scaled {} vs plain {plain}",
                got.scores()[v]
            );
        }
        checked += 1;
    }
}
