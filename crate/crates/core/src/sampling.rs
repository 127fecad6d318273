//! Seeded random coefficient tuples and the batch roundtrip harness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dihedral::{roundtrip_verify, DihedralError, RoundtripStatus};
use crate::exact::Rational;

/// Bounds for random tuples `(a_1, …, a_s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleBounds {
    pub min_s: usize,
    pub max_s: usize,
    /// `|numerator| ≤ height`, `1 ≤ denominator ≤ height`.
    pub height: i64,
}

impl Default for SampleBounds {
    fn default() -> Self {
        SampleBounds {
            min_s: 2,
            max_s: 8,
            height: 50,
        }
    }
}

/// Deterministic stream of random tuples for a given seed.
pub struct TupleSampler {
    rng: ChaCha8Rng,
    bounds: SampleBounds,
}

impl TupleSampler {
    pub fn new(seed: u64, bounds: SampleBounds) -> Self {
        TupleSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bounds,
        }
    }

    pub fn next_rational(&mut self) -> Rational {
        let h = self.bounds.height;
        let n = self.rng.gen_range(-h..=h);
        let d = self.rng.gen_range(1..=h);
        Rational::new(n, d).expect("positive denominator")
    }

    pub fn next_tuple(&mut self) -> Vec<Rational> {
        let s = self.rng.gen_range(self.bounds.min_s..=self.bounds.max_s);
        (0..s).map(|_| self.next_rational()).collect()
    }
}

impl Iterator for TupleSampler {
    type Item = Vec<Rational>;
    fn next(&mut self) -> Option<Vec<Rational>> {
        Some(self.next_tuple())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RoundtripSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped_degenerate: usize,
    /// Failing tuples with the reason, in sampling order.
    pub failures: Vec<(Vec<Rational>, String)>,
}

/// Runs [`roundtrip_verify`] on `count` sampled tuples.
pub fn random_roundtrip(
    count: usize,
    seed: u64,
    bounds: SampleBounds,
    n: u64,
    delta: usize,
) -> Result<RoundtripSummary, DihedralError> {
    let mut summary = RoundtripSummary {
        total: count,
        ..Default::default()
    };
    for a in TupleSampler::new(seed, bounds).take(count) {
        match roundtrip_verify(&a, n, delta)?.status {
            RoundtripStatus::Pass => summary.passed += 1,
            RoundtripStatus::SkippedDegenerate => summary.skipped_degenerate += 1,
            RoundtripStatus::Fail(why) => {
                summary.failed += 1;
                summary.failures.push((a, why));
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_is_reproducible_and_bounded() {
        let a: Vec<_> = TupleSampler::new(7, SampleBounds::default())
            .take(50)
            .collect();
        let b: Vec<_> = TupleSampler::new(7, SampleBounds::default())
            .take(50)
            .collect();
        assert_eq!(a, b);
        for t in &a {
            assert!((2..=8).contains(&t.len()));
            for x in t {
                assert!(x.numer().magnitude() <= &50u32.into());
                assert!(x.denom() <= &50.into());
            }
        }
        let c: Vec<_> = TupleSampler::new(8, SampleBounds::default())
            .take(50)
            .collect();
        assert_ne!(a, c);
    }

    #[test]
    fn small_batch() {
        let summary = random_roundtrip(100, 7, SampleBounds::default(), 2, 1).unwrap();
        assert_eq!(summary.passed + summary.skipped_degenerate, 100);
        assert_eq!(summary.failed, 0);
    }
}
