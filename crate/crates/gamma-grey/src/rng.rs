//! Deterministic seed handling.
//!
//! All randomness in the crate flows from one explicit 64-bit seed through
//! ChaCha8 stream splitting: component i of an ensemble draws from the ChaCha8
//! generator seeded with the user seed and set to stream i. Streams never
//! overlap, so ensembles are reproducible and shardable.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Name of the splitting scheme, recorded in output sidecars.
pub const SEED_SCHEME: &str = "chacha8-seed64-stream-split-v1";

/// Generator for `stream` under the crate's splitting scheme.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Provenance record attached to sampled data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedRecord {
    pub seed: u64,
    pub stream: u64,
    pub scheme: String,
}

impl SeedRecord {
    pub fn new(seed: u64, stream: u64) -> Self {
        Self {
            seed,
            stream,
            scheme: SEED_SCHEME.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn streams_are_distinct_and_reproducible() {
        let a: u64 = rng_for(42, 0).gen();
        let b: u64 = rng_for(42, 1).gen();
        let a2: u64 = rng_for(42, 0).gen();
        assert_ne!(a, b);
        assert_eq!(a, a2);
    }
}
