//! Heights of the four mast points above the chosen hull vertex.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::point::PointConfig;
use crate::rat::Rat;

/// Smallest integer `r` with `r² >= q`.
fn ceil_sqrt(q: &Rat) -> BigInt {
    let c = q.ceil_int();
    let mut r = c.sqrt();
    if &r * &r < c {
        r += BigInt::one();
    }
    r
}

/// Smallest power of two `>= q`, for `q >= 1`.
fn next_pow2(q: &Rat) -> Rat {
    let mut p = Rat::one();
    while p < *q {
        p *= Rat::from_integer(2);
    }
    p
}

/// `m_1 = 1`, then `m_j` is the next power of two at or above
/// `m_{j-1} (1 + R / δ) + 1`, where `R` is an integer bound on the
/// Euclidean distance from vertex `apex` to every base point. A point
/// of the hull of everything placed so far sits at height at most
/// `H = m_{j-1}` and within `R` of the mast line, so its central
/// projection from `M_j` moves it by at most `R H / (m_j - H) < δ`.
pub fn compute_mast_heights(base: &PointConfig, apex: usize, delta: &Rat) -> Result<[Rat; 4]> {
    if !delta.is_positive() {
        return Err(Error::precondition("delta must be positive"));
    }
    base.check_indices(&[apex])?;
    let a = base.point(apex);
    let r_inf = base
        .points()
        .iter()
        .map(|p| p.sub(a).linf_norm())
        .max()
        .unwrap_or_else(Rat::zero);
    let r = Rat::from_bigint(ceil_sqrt(&(&(&r_inf * &r_inf) * Rat::from_integer(base.dim() as i64))));
    let mut heights = [Rat::one(), Rat::zero(), Rat::zero(), Rat::zero()];
    for j in 1..4 {
        let h = heights[j - 1].clone();
        let need = &h * &(Rat::one() + &r / delta) + Rat::one();
        heights[j] = next_pow2(&need);
    }
    Ok(heights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        // farthest point at max-norm 10 in the plane: R = ceil(sqrt(200)) = 15
        let c = PointConfig::from_ints(2, &[&[0, 0], &[10, 10], &[3, -1]]).unwrap();
        let m = compute_mast_heights(&c, 0, &Rat::new(1, 2)).unwrap();
        assert_eq!(m[0], Rat::one());
        assert_eq!(m[1], Rat::from_integer(32));
        assert!(m.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn displacement_bound_holds() {
        let c = PointConfig::from_ints(2, &[&[0, 0], &[7, -3], &[-2, 5]]).unwrap();
        let delta = Rat::new(1, 7);
        let m = compute_mast_heights(&c, 0, &delta).unwrap();
        for j in 1..4 {
            let h = &m[j - 1];
            let bound = Rat::from_integer(8) * h / (&m[j] - h);
            assert!(bound < delta);
        }
        assert!(compute_mast_heights(&c, 0, &Rat::zero()).is_err());
    }
}
