//! SplitMix64 in counter form.
//!
//! Draw `k` (1-based) is `mix(seed + k·γ)` with `γ = 0x9E3779B97F4A7C15`,
//! which is exactly the SplitMix64 output sequence started from `seed`.
//! Because each draw depends only on `(seed, k)`, streams can be
//! reproduced, skipped ahead and split without shared state.

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
/// Odd constant separating sub-stream seeds from the main sequence.
const STREAM_KEY: u64 = 0xD1B5_4A32_D192_ED03;

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomStream {
    seed: u64,
    counter: u64,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self { seed, counter: 0 }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of draws consumed so far.
    pub fn position(&self) -> u64 {
        self.counter
    }

    /// Draw number `k` without advancing.
    #[inline]
    pub fn u64_at(&self, k: u64) -> u64 {
        mix(self.seed.wrapping_add(k.wrapping_mul(GAMMA)))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        self.u64_at(self.counter)
    }

    /// Uniform on `[0, 1)` with 53 bits of resolution.
    #[inline]
    pub fn next_uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Independent stream for worker `index`, derived from this stream's seed.
    pub fn substream(&self, index: u64) -> RandomStream {
        RandomStream::new(mix(self.seed ^ mix(index.wrapping_add(1).wrapping_mul(STREAM_KEY))))
    }
}
