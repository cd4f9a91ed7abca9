//! Lift, descend and project: turns a van Kampen–Flores triple over a
//! lifted configuration into a verified Tverberg partition of the base.
//!
//! A base of `6k + 1` points in general position in `Q^(3k-1)` is
//! reordered so that its lexicographically smallest point, a hull vertex
//! called the apex, comes first. The base is embedded at height zero in
//! `Q^(3k)` and four masts `M1..M4` are placed above the apex. The first
//! van Kampen–Flores triple of the lifted points whose common part avoids
//! `M2` seeds the descent, whose
//! result is projected back to the base and certified there. Whenever a
//! step cannot certify its output the masts are made taller (and, after
//! three failures, the apex is nudged) and the attempt is repeated.

mod angle;
mod cases;
mod descent;
mod epsilon;
mod masts;
mod projection;

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::convexity::{hull_membership, is_vertex, triple_intersection, CandidateTriple, IntersectionCertificate};
use crate::error::{Error, Result};
use crate::linalg::is_general_position;
use crate::point::{PointConfig, RatVector};
use crate::rat::Rat;
use crate::rng::SplitMix64;
use crate::tverberg::{complete_partition, verify_witness, TverbergWitness};
use crate::vkf::{find_vkf3_with, ScanMode, VkfWitness};

pub use angle::{
    char_poly, compute_delta_bound, cos_sq_bounds, qualifying_pairs, roots_above,
    sin_half_angle_lower, QualifyingPair, PRECISION_BITS,
};
pub use cases::{case_split, CaseOutcome};
pub use descent::{check_conclusions, minimal_descent, DescentResult, MAX_DESCENT_CANDIDATES};
pub use epsilon::compute_epsilon;
pub use masts::compute_mast_heights;
pub use projection::{central_project, orthogonal_project};

/// Default number of restarts after the first attempt.
pub const DEFAULT_RETRIES: usize = 8;

/// Attempts after which the apex is perturbed as well.
const PERTURB_AFTER: usize = 3;

/// Base plus masts, with the constants they were built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedInstance {
    pub k: usize,
    /// `6k + 1` points in `Q^(3k-1)`; index 0 is the apex.
    pub base: PointConfig,
    /// The base at height zero, then `M1..M4` above the apex.
    pub lifted: PointConfig,
    pub mast_heights: [Rat; 4],
    pub epsilon: Rat,
    pub delta: Rat,
}

impl LiftedInstance {
    pub fn new(k: usize, base: PointConfig, mast_heights: [Rat; 4], epsilon: Rat, delta: Rat) -> Result<Self> {
        check_base(&base, k)?;
        if !mast_heights[0].is_positive() || mast_heights.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::precondition("mast heights must be positive and increasing"));
        }
        if !delta.is_positive() || delta >= epsilon {
            return Err(Error::precondition("need 0 < delta < epsilon"));
        }
        if !is_vertex(&base, 0)? {
            return Err(Error::precondition("point 0 is not a vertex of the base hull"));
        }
        let apex = base.point(0).clone();
        let mut points: Vec<RatVector> = base.points().iter().map(|p| p.extended(Rat::zero())).collect();
        points.extend(mast_heights.iter().map(|h| apex.extended(h.clone())));
        let mut labels: Vec<String> = base.labels().to_vec();
        labels.extend((1..=4).map(|j| format!("M{j}")));
        let lifted = PointConfig::with_labels(base.dim() + 1, points.clone(), labels)
            .or_else(|_| PointConfig::new(base.dim() + 1, points))?;
        Ok(LiftedInstance {
            k,
            base,
            lifted,
            mast_heights,
            epsilon,
            delta,
        })
    }

    pub fn base_len(&self) -> usize {
        self.base.len()
    }

    /// Lifted index of the apex `A1`.
    pub fn apex(&self) -> usize {
        0
    }

    /// Lifted index of mast `M(j+1)`, for `j` in `0..4`.
    pub fn mast(&self, j: usize) -> usize {
        assert!(j < 4);
        self.base.len() + j
    }

    /// `A1, M1, M2, M3, M4` as lifted indices.
    pub fn specials(&self) -> Vec<usize> {
        let mut s = alloc::vec![self.apex()];
        s.extend((0..4).map(|j| self.mast(j)));
        s
    }

    pub fn is_special(&self, i: usize) -> bool {
        i == self.apex() || i >= self.base.len()
    }
}

fn check_base(base: &PointConfig, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    if base.dim() != 3 * k - 1 {
        return Err(Error::precondition(format!(
            "base dimension {} differs from 3k - 1 = {}",
            base.dim(),
            3 * k - 1
        )));
    }
    if base.len() != 6 * k + 1 {
        return Err(Error::precondition(format!(
            "base has {} points, expected 6k + 1 = {}",
            base.len(),
            6 * k + 1
        )));
    }
    if !is_general_position(base) {
        return Err(Error::precondition("base is not in general position"));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct ReductionOptions {
    pub retries: usize,
    pub scan: ScanMode,
    /// Mast heights used verbatim on every attempt, bypassing the
    /// computed heights and their doubling.
    pub fixed_heights: Option<[Rat; 4]>,
    pub perturbation_seed: u64,
    /// Only accept seed triples that leave the apex unused, which steers
    /// the descent above the base hyperplane.
    pub avoid_apex: bool,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions {
            retries: DEFAULT_RETRIES,
            scan: ScanMode::Canonical,
            fixed_heights: None,
            perturbation_seed: 0,
            avoid_apex: false,
        }
    }
}

/// What one attempt did; failed attempts carry the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttemptRecord {
    pub instance: Option<LiftedInstance>,
    pub seed: Option<VkfWitness>,
    pub descent: Option<DescentResult>,
    pub case_tag: Option<u8>,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailedReduction {
    pub attempts: Vec<AttemptRecord>,
    pub last_error: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    /// Working index `i` is original base index `order[i]`.
    pub order: Vec<usize>,
    /// Instance of the successful attempt (working indices).
    pub instance: LiftedInstance,
    pub vkf_witness: VkfWitness,
    pub descent: DescentResult,
    pub case_tag: u8,
    pub highest_vertices: Option<[usize; 3]>,
    /// Case output in working base indices.
    pub projected_parts: [Vec<usize>; 3],
    pub retries: usize,
    pub attempts: Vec<AttemptRecord>,
    /// Partition of the original base, original indices.
    pub final_witness: TverbergWitness,
}

/// Index of the lexicographically smallest point, then all others.
fn apex_first_order(base: &PointConfig) -> Vec<usize> {
    let apex = (0..base.len())
        .min_by(|&a, &b| base.point(a).coords().cmp(base.point(b).coords()))
        .unwrap();
    let mut order = alloc::vec![apex];
    order.extend((0..base.len()).filter(|&i| i != apex));
    order
}

/// A copy of `base` with point 0 moved by less than `bound` in every
/// coordinate, still in general position with point 0 a vertex.
fn perturb_apex(base: &PointConfig, bound: &Rat, rng: &mut SplitMix64) -> Result<Option<PointConfig>> {
    const GRID: i64 = 1 << 20;
    for _ in 0..16 {
        let offset: Vec<Rat> = (0..base.dim())
            .map(|_| bound * Rat::new(rng.range_i64(-(GRID - 1), GRID - 1), GRID))
            .collect();
        let mut points = base.points().to_vec();
        points[0] = points[0].add(&RatVector::new(offset));
        let moved = PointConfig::with_labels(base.dim(), points, base.labels().to_vec())?;
        if is_general_position(&moved) && is_vertex(&moved, 0)? {
            return Ok(Some(moved));
        }
    }
    Ok(None)
}

enum Step {
    Done(Box<ReductionTrace>),
    Retry(String),
}

struct Attempt<'a> {
    base: &'a PointConfig,
    order: &'a [usize],
    working: &'a PointConfig,
    k: usize,
    scan: ScanMode,
    avoid_apex: bool,
}

impl Attempt<'_> {
    fn run(&self, inst: &LiftedInstance, record: &mut AttemptRecord) -> Result<Step> {
        let m2 = inst.lifted.point(inst.mast(1)).clone();
        let vkf = match find_vkf3_with(&inst.lifted, self.k, self.scan, |w| {
            if self.avoid_apex && w.parts.iter().any(|p| p.contains(&inst.apex())) {
                return Ok(false);
            }
            for p in &w.parts {
                if hull_membership(&m2, &inst.lifted, p)?.is_none() {
                    return Ok(true);
                }
            }
            Ok(false)
        }) {
            Ok(w) => w,
            Err(e @ Error::Exhausted(_)) => return Ok(Step::Retry(e.to_string())),
            Err(e) => return Err(e),
        };
        record.seed = Some(vkf.clone());
        let seed = CandidateTriple::new(vkf.parts.clone())?;
        let descent = match minimal_descent(inst, &seed) {
            Ok(d) => d,
            Err(e @ (Error::Precondition(_) | Error::GuaranteeViolated(_))) => {
                return Ok(Step::Retry(e.to_string()))
            }
            Err(e) => return Err(e),
        };
        record.descent = Some(descent.clone());
        let case = case_split(inst, &descent)?;
        record.case_tag = Some(case.case_tag);
        let Some(cert) = case.cert.clone() else {
            return Ok(Step::Retry(format!(
                "case {} projection has no common point",
                case.case_tag
            )));
        };
        let t = CandidateTriple::new(case.parts.clone())?;
        // the instance base may carry a moved apex; certify on the real one
        let cert = if inst.base == *self.working {
            cert
        } else {
            match triple_intersection(self.working, &t)? {
                Some(c) => c,
                None => {
                    return Ok(Step::Retry(
                        "partition found for the moved apex fails on the original base".into(),
                    ))
                }
            }
        };
        let full = complete_partition(self.working, &t, &cert)?;
        let final_witness = to_original(&full, self.order);
        if !verify_witness(self.base, &final_witness) {
            return Err(Error::internal("final witness failed re-verification"));
        }
        Ok(Step::Done(Box::new(ReductionTrace {
            order: self.order.to_vec(),
            instance: inst.clone(),
            vkf_witness: vkf,
            descent,
            case_tag: case.case_tag,
            highest_vertices: case.highest_vertices,
            projected_parts: case.parts,
            retries: 0,
            attempts: Vec::new(),
            final_witness,
        })))
    }
}

/// Renames working indices to original ones and restores canonical order.
fn to_original(w: &TverbergWitness, order: &[usize]) -> TverbergWitness {
    let mut blocks: Vec<(Vec<usize>, Vec<(usize, Rat)>)> = w
        .parts
        .iter()
        .zip(&w.cert.coefficients)
        .map(|(p, c)| {
            let mut p: Vec<usize> = p.iter().map(|&i| order[i]).collect();
            p.sort_unstable();
            let mut c: Vec<(usize, Rat)> = c.iter().map(|(i, x)| (order[*i], x.clone())).collect();
            c.sort_by_key(|(i, _)| *i);
            (p, c)
        })
        .collect();
    blocks.sort_by(|a, b| a.0.cmp(&b.0));
    let mut it = blocks.into_iter();
    let (p0, c0) = it.next().unwrap();
    let (p1, c1) = it.next().unwrap();
    let (p2, c2) = it.next().unwrap();
    TverbergWitness {
        parts: [p0, p1, p2],
        cert: IntersectionCertificate {
            common_point: w.cert.common_point.clone(),
            coefficients: [c0, c1, c2],
        },
    }
}

/// Runs the whole construction on `6k + 1` points of `Q^(3k-1)` in
/// general position and returns a certified Tverberg 3-partition together
/// with every intermediate object.
pub fn run_reduction(base: &PointConfig, k: usize, options: &ReductionOptions) -> Result<ReductionTrace> {
    check_base(base, k)?;
    let order = apex_first_order(base);
    let working = base.permuted(&order)?;
    let epsilon = compute_epsilon(&working)?;
    let delta = compute_delta_bound(&working, &epsilon)?;
    let mut rng = SplitMix64::new(options.perturbation_seed);
    let attempt = Attempt {
        base,
        order: &order,
        working: &working,
        k,
        scan: options.scan,
        avoid_apex: options.avoid_apex,
    };

    let mut attempts: Vec<AttemptRecord> = Vec::new();
    let mut last_error = String::new();
    for n in 0..=options.retries {
        let mut record = AttemptRecord {
            instance: None,
            seed: None,
            descent: None,
            case_tag: None,
            failure: None,
        };
        let inst_base = if n >= PERTURB_AFTER {
            let bound = &epsilon / Rat::from_integer(4) * Rat::pow2(-((n - PERTURB_AFTER) as i32));
            match perturb_apex(&working, &bound, &mut rng)? {
                Some(b) => b,
                None => {
                    last_error = "no admissible perturbation of the apex".into();
                    record.failure = Some(last_error.clone());
                    attempts.push(record);
                    continue;
                }
            }
        } else {
            working.clone()
        };
        let heights = match &options.fixed_heights {
            Some(h) => h.clone(),
            None => {
                let scale = Rat::pow2(n as i32);
                compute_mast_heights(&inst_base, 0, &delta)?.map(|h| h * &scale)
            }
        };
        let inst = LiftedInstance::new(k, inst_base, heights, epsilon.clone(), delta.clone())?;
        record.instance = Some(inst.clone());
        match attempt.run(&inst, &mut record)? {
            Step::Done(mut trace) => {
                attempts.push(record);
                trace.retries = n;
                trace.attempts = attempts;
                return Ok(*trace);
            }
            Step::Retry(reason) => {
                last_error = reason.clone();
                record.failure = Some(reason);
                attempts.push(record);
            }
        }
    }
    Err(Error::ReductionFailed(Box::new(FailedReduction {
        attempts,
        last_error,
    })))
}
