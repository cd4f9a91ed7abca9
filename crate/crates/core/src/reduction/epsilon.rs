//! The separation constant ε of a base configuration.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::convexity::{bounding_boxes_overlap, linf_distance_lower, pair_intersection};
use crate::enumerate::{subsets_preorder, Combinations};
use crate::error::{Error, Result};
use crate::linalg::{is_affinely_independent, is_general_position, kernel_vector};
use crate::point::PointConfig;
use crate::rat::Rat;

/// Affinely independent subsets of `elements`, lexicographic.
pub(crate) fn simplices(config: &PointConfig, elements: &[usize]) -> Vec<Vec<usize>> {
    subsets_preorder(elements, config.dim() + 1, |s| {
        is_affinely_independent(&config.select(s))
    })
}

/// Decides whether the hulls of two disjoint index sets meet.
///
/// In general position the answer is combinatorial. A common point of the
/// two hulls is a basic solution of the pair LP, supported on at most
/// `dim + 2` points, and any `dim + 1` points are affinely independent, so
/// the support has exactly `dim + 2` points and splits along the sign
/// pattern of their unique affine dependence (their Radon partition).
/// The hulls therefore meet iff they contain both sides of some Radon
/// partition. Other configurations fall back to an LP per query.
pub(crate) enum MeetTest {
    Radon(Vec<(u64, u64)>),
    Lp,
}

impl MeetTest {
    pub(crate) fn new(base: &PointConfig) -> Self {
        if base.len() > 64 || !is_general_position(base) {
            return MeetTest::Lp;
        }
        let size = base.dim() + 2;
        let mut parts = Vec::new();
        for subset in Combinations::new(base.len(), size) {
            let lifted: Vec<Vec<Rat>> = subset
                .iter()
                .map(|&i| {
                    let mut v = base.point(i).coords().to_vec();
                    v.push(Rat::one());
                    v
                })
                .collect();
            let mu = kernel_vector(&lifted).expect("dim + 2 points are affinely dependent");
            let mask = |positive: bool| {
                subset
                    .iter()
                    .zip(&mu)
                    .filter(|(_, m)| m.is_positive() == positive && !m.is_zero())
                    .fold(0u64, |acc, (&i, _)| acc | (1u64 << i))
            };
            parts.push((mask(true), mask(false)));
        }
        MeetTest::Radon(parts)
    }

    pub(crate) fn disjoint_meet(&self, base: &PointConfig, p: &[usize], q: &[usize]) -> Result<bool> {
        match self {
            MeetTest::Radon(parts) => {
                let bits = |s: &[usize]| s.iter().fold(0u64, |acc, &i| acc | (1u64 << i));
                let (pm, qm) = (bits(p), bits(q));
                let inside = |a: u64, m: u64| a & !m == 0;
                Ok(parts
                    .iter()
                    .any(|&(a, b)| (inside(a, pm) && inside(b, qm)) || (inside(a, qm) && inside(b, pm))))
            }
            MeetTest::Lp => {
                if !bounding_boxes_overlap(base, &[p, q]) {
                    return Ok(false);
                }
                Ok(pair_intersection(base, p, q)?.is_some())
            }
        }
    }
}

/// Smallest positive `eval(S)` over nonempty subsets `S` of `set`, for an
/// `eval` that can only grow as `S` shrinks. A subset with a positive
/// value lies below a chain of removals from `set` whose first positive
/// member is no larger, so only subsets of zero-valued sets are visited.
fn min_positive_below<F>(set: Vec<usize>, mut eval: F) -> Result<Option<Rat>>
where
    F: FnMut(&[usize]) -> Result<Rat>,
{
    let mut best: Option<Rat> = None;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack = alloc::vec![set];
    while let Some(s) = stack.pop() {
        if s.is_empty() || !seen.insert(s.clone()) {
            continue;
        }
        let d = eval(&s)?;
        if d.is_positive() {
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        } else {
            for drop in 0..s.len() {
                let mut t = s.clone();
                t.remove(drop);
                stack.push(t);
            }
        }
    }
    Ok(best)
}

/// One sixteenth of the smallest positive value among
/// (a) the L∞ distance from a point to the hull of some other points, and
/// (b) the L∞ distance from `<P1>` to `<P2> ∩ <P3>` over pairwise disjoint
///     `P1, P2, P3` with `<P2>` and `<P3>` meeting.
///
/// Every hull is the union of the simplices on its points, so each
/// positive value is already attained by simplices. `P2` and `P3` range
/// over simplices; `P1` is searched downward from all remaining points.
pub fn compute_epsilon(base: &PointConfig) -> Result<Rat> {
    if base.is_empty() {
        return Err(Error::input("empty base configuration"));
    }
    let all: Vec<usize> = (0..base.len()).collect();
    let mut best: Option<Rat> = None;
    let mut offer = |d: Option<Rat>| {
        if let Some(d) = d {
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
    };

    for i in 0..base.len() {
        let others: Vec<usize> = all.iter().copied().filter(|&j| j != i).collect();
        offer(min_positive_below(others, |s| linf_distance_lower(base, &[i], s, s))?);
    }

    let meet = MeetTest::new(base);
    let simp = simplices(base, &all);
    for (a, p2) in simp.iter().enumerate() {
        for p3 in &simp[a + 1..] {
            if p2.iter().any(|i| p3.contains(i)) {
                continue;
            }
            if !meet.disjoint_meet(base, p2, p3)? {
                continue;
            }
            let rest: Vec<usize> = all
                .iter()
                .copied()
                .filter(|i| !p2.contains(i) && !p3.contains(i))
                .collect();
            offer(min_positive_below(rest, |p1| linf_distance_lower(base, p1, p2, p3))?);
        }
    }

    best.map(|b| b / Rat::from_integer(16))
        .ok_or_else(|| Error::Degenerate("every considered distance is zero".into()))
}
