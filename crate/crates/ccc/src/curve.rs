//! The centrality comparison curve and its derived quantities.
//!
//! For measures `R` and `S` on an `n`-vertex graph, the curve value at
//! `k/n` is the size of the intersection of the top-`k` vertex sets of the
//! two induced orderings, divided by `n`. Computed at every `k` from one
//! pass over the two permutations after sorting.
//!
//! Three reference curves put a computed curve in context: the identity
//! (perfect agreement), `x^2` (independent rankings, in the large-graph
//! limit), and `max(0, 2x - 1)` (maximally different rankings).

use crate::centrality::ScoreVector;
use crate::error::{Error, Result};
use crate::ordering::{induced_order_degenerate, shared_uniforms, InducedOrder, TieRule};
use crate::seeds::derive_seed;

/// A full-resolution comparison curve: `values[k-1]` is the curve at `k/n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CccCurve {
    n: usize,
    values: Vec<f64>,
    measure_pair: (String, String),
    seed: u64,
}

/// The named reference curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reference {
    Identity,
    Square,
    Opposed,
}

impl Reference {
    pub fn value(self, k: usize, n: usize) -> f64 {
        let x = k as f64 / n as f64;
        match self {
            Reference::Identity => x,
            Reference::Square => x * x,
            Reference::Opposed => {
                let opposed = (2 * k) as f64 - n as f64;
                (opposed / n as f64).max(0.0)
            }
        }
    }
}

impl std::str::FromStr for Reference {
    type Err = Error;

    fn from_str(s: &str) -> Result<Reference> {
        match s {
            "identity" => Ok(Reference::Identity),
            "square" => Ok(Reference::Square),
            "opposed" => Ok(Reference::Opposed),
            other => Err(Error::InvalidParameter(format!(
                "unknown reference curve {other:?}"
            ))),
        }
    }
}

/// The three reference curves sampled on the `k/n` grid.
#[derive(Debug, Clone)]
pub struct ReferenceCurves {
    pub identity: Vec<f64>,
    pub square: Vec<f64>,
    pub opposed: Vec<f64>,
}

pub fn reference_curves(n: usize) -> ReferenceCurves {
    let sample = |r: Reference| (1..=n).map(|k| r.value(k, n)).collect();
    ReferenceCurves {
        identity: sample(Reference::Identity),
        square: sample(Reference::Square),
        opposed: sample(Reference::Opposed),
    }
}

/// Computes the comparison curve for `(R, S)` under the hierarchical
/// tie-break rule, with the shared uniforms drawn from `seed`.
pub fn ccc(r: &ScoreVector, s: &ScoreVector, seed: u64) -> Result<CccCurve> {
    ccc_with_rule(r, s, seed, TieRule::Hierarchical)
}

/// Computes the comparison curve under a chosen tie-break rule.
///
/// The hierarchical rule shares one uniform array between the two
/// orderings; the diagnostic `RandomTies` rule draws an independent array
/// per ordering (sub-seeded from `seed`), reproducing the inflation of
/// apparent disagreement that motivates the hierarchical rule.
pub fn ccc_with_rule(
    r: &ScoreVector,
    s: &ScoreVector,
    seed: u64,
    rule: TieRule,
) -> Result<CccCurve> {
    let n = r.len();
    if s.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: s.len(),
        });
    }

    let (order_rs, order_sr) = match rule {
        TieRule::Hierarchical | TieRule::PrimaryOnly => {
            let uniforms = shared_uniforms(n, seed);
            (
                induced_order_degenerate(r, s, &uniforms, rule)?,
                induced_order_degenerate(s, r, &uniforms, rule)?,
            )
        }
        TieRule::RandomTies => {
            let ua = shared_uniforms(n, derive_seed(seed, &[0]));
            let ub = shared_uniforms(n, derive_seed(seed, &[1]));
            (
                induced_order_degenerate(r, s, &ua, rule)?,
                induced_order_degenerate(s, r, &ub, rule)?,
            )
        }
    };

    Ok(CccCurve {
        n,
        values: intersection_sweep(n, &order_rs, &order_sr),
        measure_pair: (r.measure().to_string(), s.measure().to_string()),
        seed,
    })
}

/// Sweeps `k = 1..n`, maintaining membership bitmaps for both top-`k` sets
/// and a running intersection count.
fn intersection_sweep(n: usize, a: &InducedOrder, b: &InducedOrder) -> Vec<f64> {
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    let mut count = 0usize;
    let mut values = Vec::with_capacity(n);
    let nf = n as f64;
    for k in 0..n {
        let va = a.permutation()[k] as usize;
        in_a[va] = true;
        if in_b[va] {
            count += 1;
        }
        let vb = b.permutation()[k] as usize;
        in_b[vb] = true;
        if in_a[vb] {
            count += 1;
        }
        values.push(count as f64 / nf);
    }
    values
}

impl CccCurve {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `values[k-1]` is the curve at `k/n`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn measure_pair(&self) -> (&str, &str) {
        (&self.measure_pair.0, &self.measure_pair.1)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The grid coordinate `k/n` for `values[k-1]`.
    pub fn x(&self, k: usize) -> f64 {
        k as f64 / self.n as f64
    }

    /// The top-share agreement scalar `CCC(p) / p` for `p` in (0, 1].
    ///
    /// Queries map to the grid via `k = ceil(p * n)`, guarded against the
    /// float representation of exact multiples of `1/n` landing a hair
    /// above the true product.
    pub fn ccco(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "p must lie in (0, 1], got {p}"
            )));
        }
        if self.n == 0 {
            return Err(Error::InvalidParameter("empty curve".into()));
        }
        let k = ((p * self.n as f64) - 1e-9).ceil().max(1.0) as usize;
        let k = k.min(self.n);
        Ok(self.values[k - 1] * self.n as f64 / k as f64)
    }

    /// Sup-norm distance to a reference curve on the shared grid.
    pub fn sup_distance_to(&self, reference: Reference) -> f64 {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| (v - reference.value(i + 1, self.n)).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::ScoreVector;

    fn sv(scores: &[f64]) -> ScoreVector {
        ScoreVector::new("test", 0, scores.to_vec()).unwrap()
    }

    #[test]
    fn equal_tie_free_measures_give_the_identity_curve() {
        let scores: Vec<f64> = (0..20).map(|i| (i * 13 % 20) as f64).collect();
        let r = sv(&scores);
        let curve = ccc(&r, &r, 5).unwrap();
        for (i, v) in curve.values().iter().enumerate() {
            let k = i + 1;
            assert_eq!(*v, k as f64 / 20.0);
        }
    }

    #[test]
    fn opposed_measures_give_the_lower_bound_curve() {
        let n = 12;
        let r: Vec<f64> = (0..n).map(|i| i as f64).collect();
        let s: Vec<f64> = (0..n).map(|i| (n - i) as f64).collect();
        let curve = ccc(&sv(&r), &sv(&s), 3).unwrap();
        for (i, v) in curve.values().iter().enumerate() {
            let k = i + 1;
            let expected = ((2 * k) as f64 - n as f64).max(0.0) / n as f64;
            assert_eq!(*v, expected, "k = {k}");
        }
    }

    #[test]
    fn average_over_all_secondary_permutations_matches_hypergeometric_mean() {
        // n = 3, R tie-free; S ranges over all 6 rank permutations. The
        // brute-force average of the curve is k^2/9 for k = 1, 2 and 1 at
        // k = 3.
        let r = sv(&[3.0, 2.0, 1.0]);
        let perms: [[f64; 3]; 6] = [
            [1.0, 2.0, 3.0],
            [1.0, 3.0, 2.0],
            [2.0, 1.0, 3.0],
            [2.0, 3.0, 1.0],
            [3.0, 1.0, 2.0],
            [3.0, 2.0, 1.0],
        ];
        let mut mean = [0.0f64; 3];
        for p in perms {
            let curve = ccc(&r, &sv(&p), 1).unwrap();
            for (m, v) in mean.iter_mut().zip(curve.values()) {
                *m += v / 6.0;
            }
        }
        assert!((mean[0] - 1.0 / 9.0).abs() < 1e-12);
        assert!((mean[1] - 4.0 / 9.0).abs() < 1e-12);
        assert!((mean[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn symmetry_is_bit_exact() {
        let r = sv(&[0.4, 0.1, 0.9, 0.1, 0.5]);
        let s = sv(&[1.0, 1.0, 0.0, 2.0, 2.0]);
        let ab = ccc(&r, &s, 77).unwrap();
        let ba = ccc(&s, &r, 77).unwrap();
        assert_eq!(ab.values(), ba.values());
    }

    #[test]
    fn identity_holds_under_arbitrary_ties() {
        let r = sv(&[1.0, 1.0, 1.0, 2.0, 2.0, 0.0, 1.0]);
        for seed in 0..25u64 {
            let curve = ccc(&r, &r, seed).unwrap();
            for (i, v) in curve.values().iter().enumerate() {
                assert_eq!(*v, (i + 1) as f64 / 7.0, "seed {seed}");
            }
        }
    }

    #[test]
    fn random_ties_rule_breaks_the_identity_under_ties() {
        let r = sv(&vec![1.0; 128]);
        let curve = ccc_with_rule(&r, &r, 3, TieRule::RandomTies).unwrap();
        assert!(curve.sup_distance_to(Reference::Identity) > 0.0);
    }

    #[test]
    fn ccco_of_identity_curve_is_one() {
        let scores: Vec<f64> = (0..40).map(|i| i as f64).collect();
        let r = sv(&scores);
        let curve = ccc(&r, &r, 0).unwrap();
        for p in [0.025, 0.1, 0.5, 1.0] {
            assert_eq!(curve.ccco(p).unwrap(), 1.0, "p = {p}");
        }
    }

    #[test]
    fn ccco_is_the_stated_ratio() {
        // CCC(0.05) = 0.02 => CCCo(0.05) = 0.4, on an n = 100 grid.
        let n = 100;
        let mut values: Vec<f64> = (1..=n).map(|k| k as f64 / n as f64).collect();
        values[4] = 0.02;
        let curve = CccCurve {
            n,
            values,
            measure_pair: ("a".into(), "b".into()),
            seed: 0,
        };
        assert!((curve.ccco(0.05).unwrap() - 0.4).abs() < 1e-12);
    }

    #[test]
    fn ccco_of_opposed_curve_at_quarter_is_zero() {
        let n = 16;
        let r: Vec<f64> = (0..n).map(|i| i as f64).collect();
        let s: Vec<f64> = (0..n).map(|i| (n - i) as f64).collect();
        let curve = ccc(&sv(&r), &sv(&s), 0).unwrap();
        assert_eq!(curve.ccco(0.25).unwrap(), 0.0);
    }

    #[test]
    fn ccco_rejects_out_of_range_p() {
        let r = sv(&[1.0, 2.0]);
        let curve = ccc(&r, &r, 0).unwrap();
        assert!(curve.ccco(0.0).is_err());
        assert!(curve.ccco(-0.1).is_err());
        assert!(curve.ccco(1.1).is_err());
    }

    #[test]
    fn reference_curves_small_cases() {
        let r = reference_curves(2);
        assert_eq!(r.identity, vec![0.5, 1.0]);
        assert_eq!(r.square, vec![0.25, 1.0]);
        assert_eq!(r.opposed, vec![0.0, 1.0]);
        let r4 = reference_curves(4);
        assert_eq!(r4.opposed[2], 0.5);
        for n in [1usize, 3, 9] {
            let r = reference_curves(n);
            assert_eq!(r.identity[n - 1], 1.0);
            assert_eq!(r.square[n - 1], 1.0);
            assert_eq!(r.opposed[n - 1], 1.0);
        }
    }

    #[test]
    fn sup_distance_examples() {
        let n = 10;
        let r: Vec<f64> = (0..n).map(|i| i as f64).collect();
        let s: Vec<f64> = (0..n).map(|i| (n - i) as f64).collect();
        let identity = ccc(&sv(&r), &sv(&r), 0).unwrap();
        assert_eq!(identity.sup_distance_to(Reference::Identity), 0.0);
        let opposed = ccc(&sv(&r), &sv(&s), 0).unwrap();
        assert_eq!(opposed.sup_distance_to(Reference::Identity), 0.5);
    }

    #[test]
    fn square_vs_identity_approaches_one_quarter() {
        let n = 2000;
        let refs = reference_curves(n);
        let max_gap = refs
            .identity
            .iter()
            .zip(&refs.square)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!((max_gap - 0.25).abs() < 1e-3);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn curve_invariants_hold_for_random_score_pairs(
                n in 1usize..60,
                seed in 0u64..1000,
                raw_r in proptest::collection::vec(0u8..8, 1..60),
                raw_s in proptest::collection::vec(0u8..8, 1..60),
            ) {
                let r: Vec<f64> = (0..n).map(|i| raw_r[i % raw_r.len()] as f64).collect();
                let s: Vec<f64> = (0..n).map(|i| raw_s[i % raw_s.len()] as f64).collect();
                let curve = ccc(&sv(&r), &sv(&s), seed).unwrap();
                let values = curve.values();
                prop_assert_eq!(values.len(), n);
                let mut prev = 0.0;
                for (i, v) in values.iter().enumerate() {
                    let k = i + 1;
                    let upper = k as f64 / n as f64;
                    let lower = ((2 * k) as f64 - n as f64).max(0.0) / n as f64;
                    prop_assert!(*v <= upper + 1e-15);
                    prop_assert!(*v >= lower - 1e-15);
                    prop_assert!(*v >= prev);
                    // Integer multiple of 1/n.
                    let scaled = v * n as f64;
                    prop_assert!((scaled - scaled.round()).abs() < 1e-9);
                    prev = *v;
                }
                prop_assert_eq!(values[n - 1], 1.0);
            }

            #[test]
            fn symmetry_and_monotone_invariance(
                n in 1usize..40,
                seed in 0u64..500,
                raw_r in proptest::collection::vec(0u16..50, 1..40),
                raw_s in proptest::collection::vec(0u16..50, 1..40),
            ) {
                let r: Vec<f64> = (0..n).map(|i| raw_r[i % raw_r.len()] as f64).collect();
                let s: Vec<f64> = (0..n).map(|i| raw_s[i % raw_s.len()] as f64).collect();
                let base = ccc(&sv(&r), &sv(&s), seed).unwrap();
                let swapped = ccc(&sv(&s), &sv(&r), seed).unwrap();
                prop_assert_eq!(base.values(), swapped.values());

                let fr: Vec<f64> = r.iter().map(|x| 3.0 * x + 2.0).collect();
                let gs: Vec<f64> = s.iter().map(|x| x * x).collect();
                let mapped = ccc(&sv(&fr), &sv(&gs), seed).unwrap();
                prop_assert_eq!(base.values(), mapped.values());
            }
        }
    }
}
