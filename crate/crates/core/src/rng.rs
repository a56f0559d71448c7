//! Tiny deterministic RNG (SplitMix64).
//!
//! Seeded verification runs must be byte-identical across platforms and
//! dependency upgrades, so the generator is pinned here rather than pulled
//! from an external crate.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        // Modulo bias is irrelevant for test sampling; determinism is what matters.
        self.next_u64() % bound
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// A small nonzero integer in `[-bound, bound] \ {0}`.
    pub fn small_nonzero(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.range_i64(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }
}
