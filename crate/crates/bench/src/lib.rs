//! Fixtures shared by the criterion benches.

use superelliptic_core::Rational;

/// Deterministic tuple `a_i = (i^2 + 1) / (i + 2)` with alternating sign.
pub fn fixture_tuple(s: usize) -> Vec<Rational> {
    (1..=s as i64)
        .map(|i| {
            let v = Rational::new(i * i + 1, i + 2).expect("nonzero denominator");
            if i % 2 == 0 {
                -v
            } else {
                v
            }
        })
        .collect()
}
