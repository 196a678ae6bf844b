//! Deterministic pseudo-random stream used by every sampler.
//!
//! The generator is the 64-bit linear congruential generator of Knuth's
//! MMIX:
//!
//! ```text
//! state_{k+1} = 6364136223846793005 * state_k + 1442695040888963407  (mod 2^64)
//! ```
//!
//! seeded with `state_0 = seed`. Each call to [`Lcg64::next_u64`] advances
//! the state once and returns the new state. Bounded draws use only the
//! high 32 bits (`state >> 32`), since the low bits of a power-of-two LCG
//! have short periods:
//!
//! * `below(n)` for `1 <= n <= 2^32`: draw `x = next_u64() >> 32`, reject
//!   while `x >= 2^32 - (2^32 mod n)`, return `x mod n`.
//! * `range(lo, hi)` (inclusive): `lo + below(hi - lo + 1)`.
//!
//! The first outputs for seed 0 are frozen in
//! `tests/fixtures/lcg_seed0.json` so other implementations can check
//! conformance.

pub const LCG_MULTIPLIER: u64 = 6364136223846793005;
pub const LCG_INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(LCG_MULTIPLIER).wrapping_add(LCG_INCREMENT);
        self.state
    }

    pub fn next_u32(&mut self) -> u32 {
        (self.next_u64() >> 32) as u32
    }

    /// Uniform integer in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!((1..=1 << 32).contains(&n), "below() bound out of range: {n}");
        let span = 1u64 << 32;
        let limit = span - span % n;
        loop {
            let x = self.next_u32() as u64;
            if x < limit {
                return x % n;
            }
        }
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// Uniform nonzero integer in `-bound..=bound`.
    pub fn nonzero(&mut self, bound: i64) -> i64 {
        let v = self.range(1, bound);
        if self.below(2) == 0 {
            v
        } else {
            -v
        }
    }
}
