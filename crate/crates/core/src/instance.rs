//! Seeded random point configurations in general position.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::is_general_position;
use crate::point::{PointConfig, RatVector};
use crate::rat::Rat;
use crate::rng::SplitMix64;

/// Numerators are drawn from `[-NUMERATOR_BOUND, NUMERATOR_BOUND]`.
pub const NUMERATOR_BOUND: i64 = 1 << 16;

/// Whole configurations are redrawn at most this many times.
pub const MAX_REJECTIONS: usize = 1000;

/// Draws `count` points in `Q^dim` with numerators in `[-2^16, 2^16]` and
/// denominators in `[1, denom_bound]`, redrawing until the configuration
/// is in general position. Identical arguments give identical output.
pub fn generate_instance(seed: u64, count: usize, dim: usize, denom_bound: u64) -> Result<PointConfig> {
    if count == 0 || dim == 0 || denom_bound == 0 {
        return Err(Error::input("count, dim and denom_bound must be positive"));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..MAX_REJECTIONS {
        let points: Vec<RatVector> = (0..count)
            .map(|_| {
                RatVector::new(
                    (0..dim)
                        .map(|_| {
                            let num = rng.range_i64(-NUMERATOR_BOUND, NUMERATOR_BOUND);
                            let den = 1 + rng.below(denom_bound) as i64;
                            Rat::new(num, den)
                        })
                        .collect(),
                )
            })
            .collect();
        let config = PointConfig::new(dim, points)?;
        if is_general_position(&config) {
            return Ok(config);
        }
    }
    Err(Error::Generation(format!(
        "no general-position configuration within {MAX_REJECTIONS} draws"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_general() {
        let a = generate_instance(1, 7, 2, 100).unwrap();
        let b = generate_instance(1, 7, 2, 100).unwrap();
        assert_eq!(a, b);
        assert!(is_general_position(&a));
        assert_ne!(a, generate_instance(2, 7, 2, 100).unwrap());
        for p in a.points() {
            for c in p.iter() {
                assert!(c.abs() <= Rat::from_integer(NUMERATOR_BOUND));
                assert!(*c.denom() <= num_bigint::BigInt::from(100));
            }
        }
    }

    #[test]
    fn invalid_arguments() {
        assert!(matches!(generate_instance(0, 0, 2, 1), Err(Error::Input(_))));
        assert!(matches!(generate_instance(0, 3, 0, 1), Err(Error::Input(_))));
        assert!(matches!(generate_instance(0, 3, 2, 0), Err(Error::Input(_))));
    }
}
