//! SplitMix64 (Steele, Lea and Flood), reimplemented here so sweeps are
//! reproducible bit-for-bit on every platform. State is passed by value:
//! every draw returns the advanced state.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngState(u64);

impl RngState {
    const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

    pub const fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub const fn raw(self) -> u64 {
        self.0
    }

    pub fn next_u64(self) -> (u64, Self) {
        let state = self.0.wrapping_add(Self::GOLDEN_GAMMA);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        (z ^ (z >> 31), Self(state))
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(self) -> (f64, Self) {
        let (bits, next) = self.next_u64();
        ((bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64), next)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(self, lo: f64, hi: f64) -> (f64, Self) {
        let (t, next) = self.next_f64();
        (lo + (hi - lo) * t, next)
    }
}
