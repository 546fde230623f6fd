//! Fixed-seed splitmix64 for the sampling modes of the audits.
//! Deterministic so identical invocations give identical output.

pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> SplitMix {
        SplitMix { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0); bias is negligible for the
    /// small bounds used here and irrelevant for correctness.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}
