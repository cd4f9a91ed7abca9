//! Convex-hull predicates decided by exact LP: membership, triple
//! intersection with certificates, last-coordinate minimization,
//! Carathéodory reduction, carrier faces, vertex tests and L∞ distances.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{self, is_affinely_independent};
use crate::lp::{self, LinearProgram, LpOutcome, LpStatus};
use crate::point::{combine, PointConfig, RatVector};
use crate::rat::Rat;

/// Exact proof that three hulls share `common_point`: one convex
/// combination per part reproducing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionCertificate {
    pub common_point: RatVector,
    pub coefficients: [Vec<(usize, Rat)>; 3],
}

impl IntersectionCertificate {
    /// Checks weights are nonnegative, sum to one per part, reference
    /// distinct valid indices, and reproduce the common point exactly.
    pub fn verify(&self, config: &PointConfig) -> bool {
        if self.common_point.dim() != config.dim() {
            return false;
        }
        self.coefficients.iter().all(|part| {
            !part.is_empty()
                && part.iter().all(|(i, w)| *i < config.len() && !w.is_negative())
                && part
                    .iter()
                    .enumerate()
                    .all(|(k, (i, _))| part[..k].iter().all(|(j, _)| j != i))
                && part.iter().map(|(_, w)| w).sum::<Rat>().is_one()
                && combine(config, part) == self.common_point
        })
    }

    /// [`verify`](Self::verify) plus: the weights of part `i` only
    /// reference members of `parts[i]`.
    pub fn verify_for(&self, config: &PointConfig, parts: &[Vec<usize>; 3]) -> bool {
        self.verify(config)
            && self
                .coefficients
                .iter()
                .zip(parts)
                .all(|(coef, part)| coef.iter().all(|(i, _)| part.contains(i)))
    }
}

/// Three pairwise disjoint, nonempty index sets (each sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CandidateTriple {
    parts: [Vec<usize>; 3],
}

impl CandidateTriple {
    pub fn new(parts: [Vec<usize>; 3]) -> Result<Self> {
        let mut parts = parts;
        for p in &mut parts {
            if p.is_empty() {
                return Err(Error::input("empty part"));
            }
            p.sort_unstable();
            if p.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input("repeated index within a part"));
            }
        }
        for a in 0..3 {
            for b in a + 1..3 {
                if parts[a].iter().any(|i| parts[b].contains(i)) {
                    return Err(Error::input(format!("parts {a} and {b} overlap")));
                }
            }
        }
        Ok(CandidateTriple { parts })
    }

    /// Validates index ranges against `config` as well.
    pub fn for_config(parts: [Vec<usize>; 3], config: &PointConfig) -> Result<Self> {
        let t = Self::new(parts)?;
        for p in &t.parts {
            config.check_indices(p)?;
        }
        Ok(t)
    }

    pub fn parts(&self) -> &[Vec<usize>; 3] {
        &self.parts
    }

    pub fn into_parts(self) -> [Vec<usize>; 3] {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Cheap necessary condition for the hulls of `parts` to meet: their
/// axis-aligned bounding boxes overlap in every coordinate.
pub fn bounding_boxes_overlap(config: &PointConfig, parts: &[&[usize]]) -> bool {
    (0..config.dim()).all(|k| {
        let mut lo: Option<&Rat> = None;
        let mut hi: Option<&Rat> = None;
        for part in parts {
            let coords = part.iter().map(|&i| &config.point(i)[k]);
            let pmin = coords.clone().min();
            let pmax = coords.max();
            if let (Some(a), Some(b)) = (pmin, pmax) {
                lo = Some(lo.map_or(a, |l| if a > l { a } else { l }));
                hi = Some(hi.map_or(b, |h| if b < h { b } else { h }));
            }
        }
        match (lo, hi) {
            (Some(l), Some(h)) => l <= h,
            _ => true,
        }
    })
}

/// Solves and re-verifies; a certificate that fails substitution is a bug.
pub(crate) fn solve_verified(lp: &LinearProgram) -> Result<LpOutcome> {
    let out = lp::solve(lp)?;
    if !lp::verify_outcome(lp, &out) {
        return Err(Error::internal("LP certificate failed re-verification"));
    }
    Ok(out)
}

fn check_dim(q: &RatVector, config: &PointConfig) -> Result<()> {
    if q.dim() != config.dim() {
        return Err(Error::input(format!(
            "point has dimension {}, configuration has {}",
            q.dim(),
            config.dim()
        )));
    }
    Ok(())
}

fn membership_lp(q: &RatVector, config: &PointConfig, subset: &[usize]) -> LinearProgram {
    let mut lp = LinearProgram::new(subset.len());
    for k in 0..config.dim() {
        let row = subset.iter().map(|&i| config.point(i)[k].clone()).collect();
        lp.add_eq(row, q[k].clone());
    }
    lp.add_eq(vec![Rat::one(); subset.len()], Rat::one());
    lp
}

fn weights_from(subset: &[usize], x: &RatVector) -> Vec<(usize, Rat)> {
    subset.iter().copied().zip(x.iter().cloned()).collect()
}

/// Convex coefficients expressing `q` over `subset`, or `None` when `q`
/// lies outside the hull.
pub fn hull_membership(
    q: &RatVector,
    config: &PointConfig,
    subset: &[usize],
) -> Result<Option<Vec<(usize, Rat)>>> {
    check_dim(q, config)?;
    config.check_indices(subset)?;
    if subset.is_empty() {
        return Ok(None);
    }
    let out = solve_verified(&membership_lp(q, config, subset))?;
    Ok(match out.status {
        LpStatus::Optimal => Some(weights_from(subset, out.solution.as_ref().unwrap())),
        _ => None,
    })
}

/// Joint LP over the three coefficient vectors: each sums to one and all
/// three combinations agree coordinate-wise.
fn triple_lp(config: &PointConfig, parts: &[Vec<usize>; 3]) -> LinearProgram {
    let sizes = [parts[0].len(), parts[1].len(), parts[2].len()];
    let n = sizes.iter().sum();
    let offsets = [0, sizes[0], sizes[0] + sizes[1]];
    let mut lp = LinearProgram::new(n);
    for (p, &off) in offsets.iter().enumerate() {
        let mut row = vec![Rat::zero(); n];
        for v in &mut row[off..off + sizes[p]] {
            *v = Rat::one();
        }
        lp.add_eq(row, Rat::one());
    }
    for other in 1..3 {
        for k in 0..config.dim() {
            let mut row = vec![Rat::zero(); n];
            for (t, &i) in parts[0].iter().enumerate() {
                row[t] = config.point(i)[k].clone();
            }
            for (t, &i) in parts[other].iter().enumerate() {
                row[offsets[other] + t] = -config.point(i)[k].clone();
            }
            lp.add_eq(row, Rat::zero());
        }
    }
    lp
}

fn certificate_from(
    config: &PointConfig,
    parts: &[Vec<usize>; 3],
    x: &RatVector,
) -> IntersectionCertificate {
    let mut off = 0;
    let coefficients = [0, 1, 2].map(|p| {
        let part = &parts[p];
        let w = part
            .iter()
            .enumerate()
            .map(|(t, &i)| (i, x[off + t].clone()))
            .collect::<Vec<_>>();
        off += part.len();
        w
    });
    let common_point = combine(config, &coefficients[0]);
    IntersectionCertificate {
        common_point,
        coefficients,
    }
}

/// Certificate that the hulls of the three parts meet, or `None`.
pub fn triple_intersection(
    config: &PointConfig,
    t: &CandidateTriple,
) -> Result<Option<IntersectionCertificate>> {
    for p in t.parts() {
        config.check_indices(p)?;
    }
    let out = solve_verified(&triple_lp(config, t.parts()))?;
    Ok(match out.status {
        LpStatus::Optimal => Some(certificate_from(
            config,
            t.parts(),
            out.solution.as_ref().unwrap(),
        )),
        _ => None,
    })
}

/// Exact minimum of the last coordinate over the triple intersection,
/// with a certificate attaining it; `None` when the hulls do not meet.
/// The attaining point is a basic solution, so within the supports of its
/// coefficients it is the only common point.
pub fn min_last_coordinate(
    config: &PointConfig,
    t: &CandidateTriple,
) -> Result<Option<(Rat, IntersectionCertificate)>> {
    for p in t.parts() {
        config.check_indices(p)?;
    }
    let mut lp = triple_lp(config, t.parts());
    let last = config.dim() - 1;
    for (slot, &i) in t.parts()[0].iter().enumerate() {
        lp.objective[slot] = config.point(i)[last].clone();
    }
    let out = solve_verified(&lp)?;
    match out.status {
        LpStatus::Optimal => {
            let cert = certificate_from(config, t.parts(), out.solution.as_ref().unwrap());
            let value = out.value.unwrap();
            debug_assert_eq!(cert.common_point[last], value);
            Ok(Some((value, cert)))
        }
        LpStatus::Infeasible => Ok(None),
        LpStatus::Unbounded => Err(Error::internal("unbounded LP over a compact hull intersection")),
    }
}

/// Shrinks a convex representation of `q` over `subset` to one supported
/// on an affinely independent subset, returned as `(index, weight)` pairs
/// with strictly positive weights, sorted by index.
///
/// The starting representation minimizes `sum rank(i) * w_i`, which favors
/// low indices; each dependent-combination step then zeroes the smallest
/// index attaining the step length.
pub fn caratheodory_reduce(
    q: &RatVector,
    config: &PointConfig,
    subset: &[usize],
) -> Result<Vec<(usize, Rat)>> {
    check_dim(q, config)?;
    config.check_indices(subset)?;
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() {
        return Err(Error::precondition("point is not in the hull of an empty set"));
    }
    let mut lp = membership_lp(q, config, &sorted);
    for (rank, c) in lp.objective.iter_mut().enumerate() {
        *c = Rat::from_integer(rank as i64);
    }
    let out = solve_verified(&lp)?;
    if out.status != LpStatus::Optimal {
        return Err(Error::precondition("point is not in the hull of the subset"));
    }
    let weights = weights_from(&sorted, out.solution.as_ref().unwrap());
    Ok(reduce_support(config, weights))
}

/// Classical Carathéodory steps starting from the given convex weights.
pub fn reduce_support(config: &PointConfig, weights: Vec<(usize, Rat)>) -> Vec<(usize, Rat)> {
    let mut w: Vec<(usize, Rat)> = weights.into_iter().filter(|(_, x)| x.is_positive()).collect();
    w.sort_by_key(|(i, _)| *i);
    loop {
        let pts: Vec<&RatVector> = w.iter().map(|(i, _)| config.point(*i)).collect();
        if is_affinely_independent(&pts) {
            return w;
        }
        let lifted: Vec<Vec<Rat>> = pts
            .iter()
            .map(|p| {
                let mut v = p.coords().to_vec();
                v.push(Rat::one());
                v
            })
            .collect();
        let mut mu = linalg::kernel_vector(&lifted).expect("dependent points have a kernel");
        if !mu.iter().any(Rat::is_positive) {
            mu = mu.into_iter().map(|m| -m).collect();
        }
        let mut step: Option<(usize, Rat)> = None;
        for (k, m) in mu.iter().enumerate() {
            if m.is_positive() {
                let ratio = &w[k].1 / m;
                if step.as_ref().map_or(true, |(_, s)| ratio < *s) {
                    step = Some((k, ratio));
                }
            }
        }
        let (drop, t) = step.unwrap();
        for (k, m) in mu.iter().enumerate() {
            let d = &t * m;
            w[k].1 -= d;
        }
        w[drop].1 = Rat::zero();
        w.retain(|(_, x)| x.is_positive());
    }
}

/// Vertices of an affinely independent `simplex` whose barycentric
/// coordinate for `q` is strictly positive, with those coordinates.
pub fn carrier_face_weights(
    q: &RatVector,
    config: &PointConfig,
    simplex: &[usize],
) -> Result<Vec<(usize, Rat)>> {
    check_dim(q, config)?;
    config.check_indices(simplex)?;
    let pts = config.select(simplex);
    if simplex.is_empty() || !is_affinely_independent(&pts) {
        return Err(Error::precondition("carrier face needs a nonempty affinely independent set"));
    }
    let bary = linalg::barycentric(q, &pts)
        .ok_or_else(|| Error::precondition("point is outside the affine hull of the simplex"))?;
    if bary.iter().any(Rat::is_negative) {
        return Err(Error::precondition("point is outside the simplex"));
    }
    let mut face: Vec<(usize, Rat)> = simplex
        .iter()
        .copied()
        .zip(bary)
        .filter(|(_, b)| b.is_positive())
        .collect();
    face.sort_by_key(|(i, _)| *i);
    Ok(face)
}

/// The minimal face of `simplex` containing `q`.
pub fn carrier_face(q: &RatVector, config: &PointConfig, simplex: &[usize]) -> Result<Vec<usize>> {
    Ok(carrier_face_weights(q, config, simplex)?
        .into_iter()
        .map(|(i, _)| i)
        .collect())
}

/// A common point of the hulls of `p` and `q` with its two convex
/// representations, or `None` when the hulls are disjoint. The sets may
/// share indices.
pub fn pair_intersection(
    config: &PointConfig,
    p: &[usize],
    q: &[usize],
) -> Result<Option<(RatVector, Vec<(usize, Rat)>, Vec<(usize, Rat)>)>> {
    config.check_indices(p)?;
    config.check_indices(q)?;
    if p.is_empty() || q.is_empty() {
        return Ok(None);
    }
    let (a, b) = (p.len(), q.len());
    let mut lp = LinearProgram::new(a + b);
    let mut row = vec![Rat::zero(); a + b];
    for v in &mut row[..a] {
        *v = Rat::one();
    }
    lp.add_eq(row, Rat::one());
    let mut row = vec![Rat::zero(); a + b];
    for v in &mut row[a..] {
        *v = Rat::one();
    }
    lp.add_eq(row, Rat::one());
    for k in 0..config.dim() {
        let mut row = vec![Rat::zero(); a + b];
        for (s, &i) in p.iter().enumerate() {
            row[s] = config.point(i)[k].clone();
        }
        for (s, &i) in q.iter().enumerate() {
            row[a + s] = -config.point(i)[k].clone();
        }
        lp.add_eq(row, Rat::zero());
    }
    let out = solve_verified(&lp)?;
    if out.status != LpStatus::Optimal {
        return Ok(None);
    }
    let x = out.solution.unwrap();
    let wp: Vec<(usize, Rat)> = p.iter().copied().zip(x[..a].iter().cloned()).collect();
    let wq: Vec<(usize, Rat)> = q.iter().copied().zip(x[a..].iter().cloned()).collect();
    Ok(Some((combine(config, &wp), wp, wq)))
}

/// Whether point `i` lies outside the hull of all other points.
pub fn is_vertex(config: &PointConfig, i: usize) -> Result<bool> {
    config.check_indices(&[i])?;
    let others: Vec<usize> = (0..config.len()).filter(|&j| j != i).collect();
    Ok(hull_membership(config.point(i), config, &others)?.is_none())
}

/// Exact minimum L∞ distance between `<p>` and `<q1> ∩ <q2>`. Since the
/// Euclidean norm dominates the max-norm, this is a lower bound on the
/// Euclidean distance.
pub fn linf_distance_lower(
    config: &PointConfig,
    p: &[usize],
    q1: &[usize],
    q2: &[usize],
) -> Result<Rat> {
    for s in [p, q1, q2] {
        config.check_indices(s)?;
        if s.is_empty() {
            return Err(Error::input("distance between hulls of empty sets"));
        }
    }
    let (a, b, c) = (p.len(), q1.len(), q2.len());
    let n = a + b + c + 1;
    let t = n - 1;
    let mut lp = LinearProgram::new(n);
    lp.objective[t] = Rat::one();
    for (off, len) in [(0, a), (a, b), (a + b, c)] {
        let mut row = vec![Rat::zero(); n];
        for v in &mut row[off..off + len] {
            *v = Rat::one();
        }
        lp.add_eq(row, Rat::one());
    }
    for k in 0..config.dim() {
        let mut row = vec![Rat::zero(); n];
        for (s, &i) in q1.iter().enumerate() {
            row[a + s] = config.point(i)[k].clone();
        }
        for (s, &i) in q2.iter().enumerate() {
            row[a + b + s] = -config.point(i)[k].clone();
        }
        lp.add_eq(row, Rat::zero());
    }
    for k in 0..config.dim() {
        // diff = sum lambda p - sum mu1 q1;  diff - t <= 0, -diff - t <= 0
        let mut diff = vec![Rat::zero(); n];
        for (s, &i) in p.iter().enumerate() {
            diff[s] = config.point(i)[k].clone();
        }
        for (s, &i) in q1.iter().enumerate() {
            diff[a + s] = -config.point(i)[k].clone();
        }
        let mut up = diff.clone();
        up[t] = -Rat::one();
        let mut down: Vec<Rat> = diff.into_iter().map(|x| -x).collect();
        down[t] = -Rat::one();
        lp.add_le(up, Rat::zero());
        lp.add_le(down, Rat::zero());
    }
    let out = solve_verified(&lp)?;
    match out.status {
        LpStatus::Optimal => Ok(out.value.unwrap()),
        LpStatus::Infeasible => Err(Error::precondition("the two hulls Q1 and Q2 do not intersect")),
        LpStatus::Unbounded => Err(Error::internal("unbounded distance LP")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(rows: &[&[i64]]) -> PointConfig {
        PointConfig::from_ints(rows[0].len(), rows).unwrap()
    }

    fn triple(a: &[usize], b: &[usize], c: &[usize]) -> CandidateTriple {
        CandidateTriple::new([a.to_vec(), b.to_vec(), c.to_vec()]).unwrap()
    }

    fn square() -> PointConfig {
        cfg(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]])
    }

    #[test]
    fn membership_in_unit_square() {
        let sq = square();
        let q = RatVector::new(vec![Rat::new(1, 2), Rat::new(1, 2)]);
        let w = hull_membership(&q, &sq, &[0, 1, 2, 3]).unwrap().unwrap();
        assert_eq!(combine(&sq, &w), q);
        let out = RatVector::from_ints(&[2, 0]);
        assert!(hull_membership(&out, &sq, &[0, 1, 2, 3]).unwrap().is_none());
        let bad = RatVector::from_ints(&[0, 0, 0]);
        assert!(matches!(hull_membership(&bad, &sq, &[0]), Err(Error::Input(_))));
    }

    #[test]
    fn three_segments_through_origin() {
        let c = cfg(&[&[0, -1], &[0, 1], &[-1, 0], &[1, 0], &[-1, -1], &[1, 1]]);
        let cert = triple_intersection(&c, &triple(&[0, 1], &[2, 3], &[4, 5]))
            .unwrap()
            .unwrap();
        assert_eq!(cert.common_point, RatVector::from_ints(&[0, 0]));
        assert!(cert.verify(&c));
    }

    #[test]
    fn disjoint_singletons_do_not_meet() {
        let c = cfg(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(triple_intersection(&c, &triple(&[0], &[1], &[2])).unwrap().is_none());
    }

    #[test]
    fn square_and_axis_forced_origin() {
        let c = cfg(&[&[1, 1], &[-1, -1], &[-1, 1], &[1, -1], &[0, 0], &[2, 0], &[-2, 0]]);
        let cert = triple_intersection(&c, &triple(&[0, 1], &[2, 3], &[4, 5, 6]))
            .unwrap()
            .unwrap();
        assert_eq!(cert.common_point, RatVector::from_ints(&[0, 0]));
    }

    #[test]
    fn min_last_coordinate_examples() {
        let c = cfg(&[&[0, -1], &[0, 1], &[-1, 0], &[1, 0], &[-1, -1], &[1, -1], &[0, 1]]);
        // last point duplicates (0,1); hulls are still well defined
        let (v, cert) = min_last_coordinate(&c, &triple(&[0, 1], &[2, 3], &[4, 5, 6]))
            .unwrap()
            .unwrap();
        assert_eq!(v, Rat::zero());
        assert_eq!(cert.common_point, RatVector::from_ints(&[0, 0]));

        let c = cfg(&[&[0, 0], &[0, 2], &[-1, 1], &[1, 1], &[-1, 0], &[1, 0], &[0, 3]]);
        let (v, cert) = min_last_coordinate(&c, &triple(&[0, 1], &[2, 3], &[4, 5, 6]))
            .unwrap()
            .unwrap();
        assert_eq!(v, Rat::one());
        assert_eq!(cert.common_point, RatVector::from_ints(&[0, 1]));
        assert!(cert.verify(&c));
    }

    #[test]
    fn caratheodory_examples() {
        let c = cfg(&[&[-1, 0], &[1, 0], &[0, -1], &[0, 1]]);
        let q = RatVector::from_ints(&[0, 0]);
        let r = caratheodory_reduce(&q, &c, &[0, 1, 2, 3]).unwrap();
        assert_eq!(r, vec![(0, Rat::new(1, 2)), (1, Rat::new(1, 2))]);
        let v = RatVector::from_ints(&[0, 1]);
        let r = caratheodory_reduce(&v, &c, &[0, 1, 2, 3]).unwrap();
        assert_eq!(r, vec![(3, Rat::one())]);
        let out = RatVector::from_ints(&[5, 5]);
        assert!(matches!(
            caratheodory_reduce(&out, &c, &[0, 1, 2, 3]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn reduce_support_from_uniform_weights() {
        let c = cfg(&[&[-1, 0], &[1, 0], &[0, -1], &[0, 1]]);
        let quarter = Rat::new(1, 4);
        let w: Vec<_> = (0..4).map(|i| (i, quarter.clone())).collect();
        let r = reduce_support(&c, w);
        assert!(is_affinely_independent(&r.iter().map(|(i, _)| c.point(*i)).collect::<Vec<_>>()));
        assert_eq!(combine(&c, &r), RatVector::from_ints(&[0, 0]));
        assert_eq!(r.iter().map(|(_, w)| w).sum::<Rat>(), Rat::one());
    }

    #[test]
    fn carrier_face_examples() {
        let c = cfg(&[&[0, 0], &[3, 0], &[0, 3]]);
        let mid = RatVector::new(vec![Rat::new(3, 2), Rat::zero()]);
        assert_eq!(carrier_face(&mid, &c, &[0, 1, 2]).unwrap(), vec![0, 1]);
        assert_eq!(carrier_face(c.point(2), &c, &[0, 1, 2]).unwrap(), vec![2]);
        let center = RatVector::from_ints(&[1, 1]);
        assert_eq!(carrier_face(&center, &c, &[0, 1, 2]).unwrap(), vec![0, 1, 2]);
        let outside = RatVector::from_ints(&[3, 3]);
        assert!(carrier_face(&outside, &c, &[0, 1, 2]).is_err());
        let line = cfg(&[&[0, 0], &[1, 0], &[2, 0]]);
        assert!(carrier_face(line.point(1), &line, &[0, 1, 2]).is_err());
    }

    #[test]
    fn pair_intersection_examples() {
        let sq = square();
        let (x, wp, wq) = pair_intersection(&sq, &[0, 2], &[1, 3]).unwrap().unwrap();
        assert_eq!(x, RatVector::new(vec![Rat::new(1, 2), Rat::new(1, 2)]));
        assert_eq!(combine(&sq, &wp), combine(&sq, &wq));
        assert!(pair_intersection(&sq, &[0, 1], &[2, 3]).unwrap().is_none());
        let (x, _, _) = pair_intersection(&sq, &[0, 1], &[1, 2]).unwrap().unwrap();
        assert_eq!(x, RatVector::from_ints(&[1, 0]));
    }

    #[test]
    fn vertex_examples() {
        let sq = square();
        for i in 0..4 {
            assert!(is_vertex(&sq, i).unwrap());
        }
        let with_center = cfg(&[&[0, 0], &[2, 0], &[2, 2], &[0, 2], &[1, 1]]);
        assert!(!is_vertex(&with_center, 4).unwrap());
        assert!(is_vertex(&with_center, 0).unwrap());
    }

    #[test]
    fn linf_distance_examples() {
        let c = cfg(&[&[0, 0], &[8, 0]]);
        assert_eq!(linf_distance_lower(&c, &[0], &[1], &[1]).unwrap(), Rat::from_integer(8));
        let c = cfg(&[&[0, 3], &[2, 3], &[-1, 0], &[1, 0], &[0, -1], &[0, 1]]);
        assert_eq!(
            linf_distance_lower(&c, &[0, 1], &[2, 3], &[4, 5]).unwrap(),
            Rat::from_integer(3)
        );
        let c = cfg(&[&[0, 0], &[5, 5], &[6, 6]]);
        assert!(matches!(
            linf_distance_lower(&c, &[0], &[1], &[2]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn certificate_tampering_detected() {
        let c = cfg(&[&[0, -1], &[0, 1], &[-1, 0], &[1, 0], &[-1, -1], &[1, 1]]);
        let parts = [vec![0, 1], vec![2, 3], vec![4, 5]];
        let cert = triple_intersection(&c, &CandidateTriple::new(parts.clone()).unwrap())
            .unwrap()
            .unwrap();
        assert!(cert.verify_for(&c, &parts));
        let mut bad = cert.clone();
        bad.coefficients[1][0].1 = -bad.coefficients[1][0].1.clone();
        assert!(!bad.verify(&c));
        let other = [vec![0, 1], vec![2], vec![3, 4, 5]];
        assert!(!cert.verify_for(&c, &other));
    }

    #[test]
    fn triple_validation() {
        assert!(CandidateTriple::new([vec![0], vec![0], vec![1]]).is_err());
        assert!(CandidateTriple::new([vec![], vec![1], vec![2]]).is_err());
        let c = square();
        assert!(CandidateTriple::for_config([vec![0], vec![1], vec![9]], &c).is_err());
    }
}
