//! SplitMix64, the generator behind seeded sampling.
//!
//! The algorithm is fixed so a seed reproduces the same tuples in any
//! implementation:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15            (mod 2^64)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (mod 2^64)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (mod 2^64)
//! output z ^ (z >> 31)
//! ```
//!
//! Integers in `[lo, hi]` are drawn by rejection: with `span = hi − lo + 1`
//! and `limit = floor(2^64 / span) · span`, outputs `x >= limit` are
//! discarded and the result is `lo + x mod span`. Power-of-two spans never
//! reject.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in the inclusive range `[lo, hi]`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range [{lo}, {hi}]");
        let span = hi.abs_diff(lo).wrapping_add(1);
        if span == 0 {
            // full 64-bit range
            return self.next_u64() as i64;
        }
        let limit = if span.is_power_of_two() { 0 } else { (u64::MAX / span) * span };
        loop {
            let x = self.next_u64();
            if limit == 0 || x < limit {
                return lo.wrapping_add((x % span) as i64);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_outputs() {
        let mut g = SplitMix64::new(1_234_567);
        let got: Vec<u64> = (0..5).map(|_| g.next_u64()).collect();
        assert_eq!(
            got,
            [
                6457827717110365317,
                3203168211198807973,
                9817491932198370423,
                4593380528125082431,
                16408922859458223821,
            ]
        );
        let mut g = SplitMix64::new(0);
        assert_eq!(g.next_u64(), 16294208416658607535);
    }

    #[test]
    fn ranges_stay_in_bounds_and_cover() {
        let mut g = SplitMix64::new(7);
        let mut seen = [false; 7];
        for _ in 0..2000 {
            let v = g.range_inclusive(-3, 3);
            assert!((-3..=3).contains(&v));
            seen[(v + 3) as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(g.range_inclusive(5, 5), 5);
        let _ = g.range_inclusive(i64::MIN, i64::MAX);
    }
}
