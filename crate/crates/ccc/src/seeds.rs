//! Seed discipline shared by everything randomized in this crate.
//!
//! All randomness flows from explicit 64-bit seeds through ChaCha8 streams.
//! Sub-streams (ensemble replicates, tie-break uniforms) are derived with
//! the SplitMix64 finalizer, so adding or reordering replicates never
//! perturbs the streams of the others.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a sub-seed from a root seed and a path of indices.
///
/// `derive_seed(s, &[r])` and `derive_seed(s, &[r, tag])` give the
/// replicate stream and its tie-break stream respectively.
pub fn derive_seed(root: u64, parts: &[u64]) -> u64 {
    let mut state = splitmix64(root.wrapping_add(GOLDEN_GAMMA));
    for &part in parts {
        state = splitmix64(state ^ splitmix64(part.wrapping_add(GOLDEN_GAMMA)));
    }
    state
}

/// The crate-wide PRNG: ChaCha8 keyed by a 64-bit seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Maps a raw 64-bit draw onto the open interval (0, 1).
///
/// Uses the top 52 bits offset by half a step: `(bits >> 12 + 0.5) / 2^52`.
/// Both the offset and the quotient are exact in f64, so 0.0 and 1.0 are
/// unreachable and the mapping is independent of any library's float
/// distribution details.
#[inline]
pub fn unit_open(bits: u64) -> f64 {
    ((bits >> 12) as f64 + 0.5) * (1.0 / 4_503_599_627_370_496.0)
}
