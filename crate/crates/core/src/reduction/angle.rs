//! Certified lower bounds on `sin(α/2)` for the angle between two affine
//! hulls meeting in a single point, and the constant δ built from them.

use alloc::vec;
use alloc::vec::Vec;

use crate::convexity::pair_intersection;
use crate::enumerate::Combinations;
use crate::error::{Error, Result};
use crate::linalg::{inverse, mat_mul, rank, transpose};
use crate::point::{PointConfig, RatVector};
use crate::rat::Rat;

use super::epsilon::{simplices, MeetTest};

/// Relative precision demanded of every bound: `lo >= (1 - 2^-10) * hi`.
pub const PRECISION_BITS: i32 = 10;

/// Coefficients `c_0..=c_n` of `det(x I - m)`, by Faddeev–LeVerrier.
pub fn char_poly(m: &[Vec<Rat>]) -> Vec<Rat> {
    let n = m.len();
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    let mut mk = vec![vec![Rat::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        let prod = mat_mul(m, &next);
        let trace: Rat = (0..n).map(|i| prod[i][i].clone()).sum();
        c[n - k] = -trace / Rat::from_integer(k as i64);
        mk = next;
    }
    c
}

/// Coefficients of `p(x + t)` as a polynomial in `t`.
fn taylor_shift(p: &[Rat], x: &Rat) -> Vec<Rat> {
    let mut q = p.to_vec();
    let n = q.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let d = x * &q[j + 1];
            q[j] += d;
        }
    }
    q
}

/// Number of roots greater than `x`, exact when every root is real.
pub fn roots_above(p: &[Rat], x: &Rat) -> usize {
    let q = taylor_shift(p, x);
    let signs: Vec<i8> = q.iter().map(Rat::signum).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Basis of the direction space of an affinely independent set.
fn directions(config: &PointConfig, set: &[usize]) -> Vec<Vec<Rat>> {
    let p0 = config.point(set[0]);
    set[1..]
        .iter()
        .map(|&i| config.point(i).sub(p0).into_coords())
        .collect()
}

fn gram(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    a.iter()
        .map(|u| b.iter().map(|v| u.iter().zip(v).map(|(x, y)| x * y).sum()).collect())
        .collect()
}

/// Interval `(lo, hi]` of width at most `2^-bits` containing the largest
/// root of `p`, which must be real-rooted with all roots in `[0, 1]`.
/// Returns `(0, 0)` when the largest root is zero.
fn largest_root(p: &[Rat], lo: Rat, hi: Rat, bits: u32) -> (Rat, Rat) {
    let (mut lo, mut hi) = (lo, hi);
    if roots_above(p, &Rat::zero()) == 0 {
        return (Rat::zero(), Rat::zero());
    }
    let width = Rat::pow2(-(bits as i32));
    while &hi - &lo > width {
        let mid = (&lo + &hi) / Rat::from_integer(2);
        if roots_above(p, &mid) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Bounds `(lo, hi)` on `cos²` of the smallest angle between the
/// direction spaces of two affinely independent sets whose direction
/// spaces meet only in zero.
pub fn cos_sq_bounds(config: &PointConfig, p1: &[usize], p2: &[usize], bits: u32) -> (Rat, Rat) {
    let u = directions(config, p1);
    let v = directions(config, p2);
    let guu = inverse(&gram(&u, &u)).expect("independent directions");
    let gvv = inverse(&gram(&v, &v)).expect("independent directions");
    let guv = gram(&u, &v);
    let gvu = transpose(&guv);
    let m = mat_mul(&mat_mul(&guu, &guv), &mat_mul(&gvv, &gvu));
    largest_root(&char_poly(&m), Rat::zero(), Rat::one(), bits)
}

/// Rational `r` with `(1 - 2^-10) sin(α/2) <= r <= sin(α/2)` where α is
/// the smallest angle between the direction spaces of `p1` and `p2`.
pub fn sin_half_angle_lower(config: &PointConfig, p1: &[usize], p2: &[usize]) -> Rat {
    let factor = Rat::one() - Rat::pow2(-PRECISION_BITS);
    let two = Rat::from_integer(2);
    let mut bits = 24u32;
    loop {
        let (c_lo, c_hi) = cos_sq_bounds(config, p1, p2, bits);
        let s_lo = if c_lo.is_zero() { Rat::zero() } else { c_lo.sqrt_bounds(bits).0 };
        let s_hi = c_hi.sqrt_bounds(bits).1;
        // sin²(α/2) = (1 - cos α) / 2
        let l_lo = (Rat::one() - &s_hi) / &two;
        let l_hi = (Rat::one() - &s_lo) / &two;
        if l_lo.is_positive() {
            let r_lo = l_lo.sqrt_bounds(bits).0;
            let r_hi = l_hi.sqrt_bounds(bits).1;
            if r_lo.is_positive() && r_lo >= &factor * &r_hi {
                return r_lo;
            }
        }
        bits *= 2;
    }
}

/// A pair of base subsets whose hulls meet in exactly one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QualifyingPair {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub point: RatVector,
}

/// Pairs of affinely independent subsets, neither a single point, whose
/// direction spaces meet only in zero and whose hulls intersect; these
/// are exactly the pairs whose hulls share a single point and span a
/// proper angle there.
pub fn qualifying_pairs(base: &PointConfig) -> Result<Vec<QualifyingPair>> {
    let all: Vec<usize> = (0..base.len()).collect();
    let simp: Vec<Vec<usize>> = simplices(base, &all).into_iter().filter(|s| s.len() >= 2).collect();
    let meet = MeetTest::new(base);
    let mut out = Vec::new();
    for (a, p1) in simp.iter().enumerate() {
        for p2 in &simp[a + 1..] {
            if p1.len() + p2.len() > base.dim() + 2 {
                continue;
            }
            let shared = p1.iter().filter(|i| p2.contains(i)).count();
            if shared > 1 {
                continue;
            }
            let mut dirs = directions(base, p1);
            dirs.extend(directions(base, p2));
            if rank(&dirs) != p1.len() + p2.len() - 2 {
                continue;
            }
            if shared == 0 && !meet.disjoint_meet(base, p1, p2)? {
                continue;
            }
            if let Some((point, _, _)) = pair_intersection(base, p1, p2)? {
                out.push(QualifyingPair {
                    first: p1.clone(),
                    second: p2.clone(),
                    point,
                });
            }
        }
    }
    Ok(out)
}

/// In general position, pairs that contain every qualifying pair up to
/// inclusion. The smallest principal angle only shrinks as the direction
/// spaces grow, so these pairs realize the minimum angle. Disjoint
/// qualifying pairs are Radon partitions of `dim + 2` points; pairs sharing
/// a vertex `v` extend (by any unused point) until `|P1| + |P2| = dim + 2`
/// or the points run out, and meet exactly at `v`.
fn dominating_pairs(base: &PointConfig) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
    let MeetTest::Radon(radon) = MeetTest::new(base) else {
        return None;
    };
    let members = |m: u64| (0..64).filter(|i| m >> i & 1 == 1).collect::<Vec<usize>>();
    let mut out: Vec<(Vec<usize>, Vec<usize>)> = radon
        .iter()
        .map(|&(a, b)| (members(a), members(b)))
        .filter(|(p, q)| p.len() >= 2 && q.len() >= 2)
        .collect();
    let n = base.len();
    let m = base.dim().min(n.saturating_sub(1));
    if m < 2 {
        return Some(out);
    }
    for v in 0..n {
        let others: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        for pick in Combinations::new(others.len(), m) {
            let sub: Vec<usize> = pick.iter().map(|&t| others[t]).collect();
            // sub[0] always goes to the first side, so each split appears once
            for mask in 0..(1u32 << (m - 1)) {
                let mut p = vec![v, sub[0]];
                let mut q = vec![v];
                for (t, &i) in sub[1..].iter().enumerate() {
                    if mask >> t & 1 == 1 {
                        p.push(i);
                    } else {
                        q.push(i);
                    }
                }
                if q.len() < 2 {
                    continue;
                }
                p.sort_unstable();
                q.sort_unstable();
                out.push((p, q));
            }
        }
    }
    Some(out)
}

/// Rational δ in `(0, ε)` bounded by `ε sin(α/2)` for the smallest angle
/// α over all qualifying pairs, within a factor `1 - 2^-10`; `ε / 2` when
/// no pair qualifies.
pub fn compute_delta_bound(base: &PointConfig, epsilon: &Rat) -> Result<Rat> {
    if !epsilon.is_positive() {
        return Err(Error::precondition("epsilon must be positive"));
    }
    let pairs = match dominating_pairs(base) {
        Some(p) => p,
        None => qualifying_pairs(base)?.into_iter().map(|q| (q.first, q.second)).collect(),
    };
    let mut best: Option<Rat> = None;
    for (p1, p2) in &pairs {
        let r = sin_half_angle_lower(base, p1, p2);
        if best.as_ref().is_none_or(|b| r < *b) {
            best = Some(r);
        }
    }
    Ok(match best {
        Some(r) => epsilon * r,
        None => epsilon / Rat::from_integer(2),
    })
}
