//! Seeded random streams.
//!
//! Every randomized routine takes a [`RandomSource`]. Sub-computations (recursive
//! children, amplification rounds, advice levels) get their own stream through
//! [`RandomSource::derive`], which depends only on the parent's `(seed, stream)`
//! and a tag, never on how much of the parent stream has been consumed. That keeps
//! results identical whether the children run sequentially or on a thread pool.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};

#[derive(Clone, Debug)]
pub struct RandomSource {
    seed: u64,
    stream: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { seed, stream, rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Independent child stream identified by `tag`.
    pub fn derive(&self, tag: u64) -> RandomSource {
        let id = splitmix64(self.stream ^ splitmix64(tag.wrapping_add(0x5851_f42d_4c95_7f2d)));
        Self::with_stream(self.seed, id)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

impl RngCore for RandomSource {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}

/// Keeps each of `0..n` independently with probability `p`: draws
/// `X ~ Bin(n, p)`, then `X` distinct ids without replacement. Returned ascending.
pub fn bernoulli_subset(n: usize, p: f64, rng: &mut RandomSource) -> Vec<usize> {
    if n == 0 || p <= 0.0 {
        return Vec::new();
    }
    if p >= 1.0 {
        return (0..n).collect();
    }
    let count = Binomial::new(n as u64, p).expect("p in (0, 1)").sample(rng) as usize;
    let mut picked = rand::seq::index::sample(rng, n, count).into_vec();
    picked.sort_unstable();
    picked
}
