//! Seeded Erdős–Rényi generation.
//!
//! The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64`,
//! which is defined bit-for-bit by `rand_core` and does not depend on the
//! platform. Each candidate pair `(u, v)`, `u < v`, visited in lexicographic
//! order, consumes exactly one `next_u64` draw; the top 53 bits become a
//! uniform `f64` in `[0, 1)` and the pair is kept when that value is below `p`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{CliqueError, Result};
use crate::graph::{EdgeRef, Graph, MAX_VERTICES};

pub const RNG_ALGORITHM: &str = "chacha8/seed_from_u64";

/// Seed plus the (fixed) generator family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RngSpec {
    pub seed: u64,
}

impl RngSpec {
    pub fn new(seed: u64) -> Self {
        RngSpec { seed }
    }

    pub fn algorithm(&self) -> &'static str {
        RNG_ALGORITHM
    }

    pub fn stream(&self) -> GraphRng {
        GraphRng(ChaCha8Rng::seed_from_u64(self.seed))
    }
}

/// Stateful stream of uniform draws.
pub struct GraphRng(ChaCha8Rng);

impl GraphRng {
    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.0.next_u64() % span) as usize
    }

    /// `G(n, p)` drawn from this stream.
    pub fn gnp(&mut self, n: usize, p: f64) -> Result<Graph> {
        if !(0.0..=1.0).contains(&p) {
            return Err(CliqueError::InvalidProbability(p));
        }
        if n > MAX_VERTICES {
            return Err(CliqueError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if self.next_f64() < p {
                    g.insert(EdgeRef::new(u, v)?);
                }
            }
        }
        Ok(g)
    }
}

/// `G(n, p)` from a fresh stream seeded by `rng`.
pub fn random_gnp(n: usize, p: f64, rng: RngSpec) -> Result<Graph> {
    rng.stream().gnp(n, p)
}
