//! Projections from the lifted space onto the base hyperplane.

use crate::error::{Error, Result};
use crate::point::RatVector;
use crate::rat::Rat;

/// Replaces the last coordinate by zero.
pub fn orthogonal_project(p: &RatVector) -> RatVector {
    assert!(p.dim() >= 1, "cannot project a zero-dimensional point");
    p.truncated().extended(Rat::zero())
}

/// Where the line through `k` and `p` meets the hyperplane `x_last = 0`.
pub fn central_project(k: &RatVector, p: &RatVector) -> Result<RatVector> {
    if k.dim() != p.dim() || k.dim() == 0 {
        return Err(Error::input("central projection needs points of equal positive dimension"));
    }
    let hk = k.last();
    let hp = p.last();
    if hk.is_zero() {
        return Err(Error::precondition("projection center lies in the base hyperplane"));
    }
    if hk == hp {
        return Err(Error::ProjectionUndefined);
    }
    let t = hk / &(hk - hp);
    let mut q = k.add(&p.sub(k).scale(&t)).into_coords();
    *q.last_mut().unwrap() = Rat::zero();
    Ok(RatVector::new(q))
}
