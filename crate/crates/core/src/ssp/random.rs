//! Seeded random instance generation for tests and benchmarks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use super::instance::SspInstance;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("infeasible parameters: need 2 <= min <= max <= u (got min={min}, max={max}, u={u})")]
pub struct GenError {
    pub u: u32,
    pub min: u32,
    pub max: u32,
}

/// Draws `s` subsets of `{1, ..., u}`, each of a uniform size within
/// `size_range` and with distinct uniformly chosen elements. Deterministic
/// for a fixed seed.
pub fn generate_random_instance(
    u: u32,
    s: u32,
    size_range: (u32, u32),
    seed: u64,
) -> Result<SspInstance, GenError> {
    let (min, max) = size_range;
    if min < 2 || min > max || max > u {
        return Err(GenError { u, min, max });
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut subsets = Vec::with_capacity(s as usize);
    for _ in 0..s {
        let size = rng.gen_range(min..=max) as usize;
        let mut picks: Vec<u32> = rand::seq::index::sample(&mut rng, u as usize, size)
            .into_iter()
            .map(|i| i as u32 + 1)
            .collect();
        picks.sort_unstable();
        subsets.push(picks);
    }
    Ok(SspInstance::new(u, subsets).expect("sampled subsets are valid"))
}
