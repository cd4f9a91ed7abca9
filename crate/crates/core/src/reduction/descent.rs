//! Last-coordinate descent over triples of disjoint subsets of the lifted
//! configuration.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::convexity::{
    bounding_boxes_overlap, caratheodory_reduce, carrier_face_weights, hull_membership,
    min_last_coordinate, triple_intersection, CandidateTriple, IntersectionCertificate,
};
use crate::enumerate::{canonicalize, cmp_triples, tripartitions};
use crate::error::{Error, Result};
use crate::point::RatVector;
use crate::rat::Rat;

use super::LiftedInstance;

/// Largest number of candidate partitions the descent will scan.
pub const MAX_DESCENT_CANDIDATES: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentResult {
    /// Indices into the lifted configuration.
    pub parts: [Vec<usize>; 3],
    pub z_prime: RatVector,
    pub cert: IntersectionCertificate,
    /// Members of `{A1, M1, .., M4}` used by no part, as lifted indices.
    pub unused_special: Vec<usize>,
}

/// Special points (the apex and masts) used by a triple.
fn special_usage(inst: &LiftedInstance, parts: &[Vec<usize>; 3]) -> Vec<usize> {
    let mut used: Vec<usize> = parts.iter().flatten().copied().filter(|&i| inst.is_special(i)).collect();
    used.sort_unstable();
    used
}

/// Checks the three conclusions of the descent for `parts` and `cert`
/// relative to the seed's special usage; returns the unused specials.
pub fn check_conclusions(
    inst: &LiftedInstance,
    seed_usage: &[usize],
    parts: &[Vec<usize>; 3],
    cert: &IntersectionCertificate,
) -> core::result::Result<Vec<usize>, String> {
    if !cert.verify_for(&inst.lifted, parts) {
        return Err("intersection certificate does not verify".into());
    }
    let used = special_usage(inst, parts);
    let unused: Vec<usize> = inst.specials().into_iter().filter(|i| !used.contains(i)).collect();
    if unused.len() < 2 {
        return Err(format!("only {} special points unused", unused.len()));
    }
    if !used.iter().all(|i| seed_usage.contains(i)) {
        return Err("uses a special point absent from the seed triple".into());
    }
    Ok(unused)
}

/// Partitions of `elements` into three blocks, each meeting `required`,
/// in canonical order (blocks as index tuples).
fn partitions_meeting(elements: &[usize], required: &[usize]) -> Vec<[Vec<usize>; 3]> {
    let mut out: Vec<[Vec<usize>; 3]> = tripartitions(elements.len())
        .into_iter()
        .map(|p| p.map(|block| block.into_iter().map(|i| elements[i]).collect::<Vec<_>>()))
        .filter(|p| p.iter().all(|b| b.iter().any(|i| required.contains(i))))
        .map(canonicalize)
        .collect();
    out.sort_by(cmp_triples);
    out
}

fn stirling3(n: usize) -> u64 {
    // S(n, 3) = (3^n - 3 * 2^n + 3) / 6
    if n < 3 {
        return 0;
    }
    let p3 = 3u64.checked_pow(n as u32).unwrap_or(u64::MAX);
    if p3 == u64::MAX {
        return u64::MAX;
    }
    (p3 - 3 * (1u64 << n) + 3) / 6
}

fn positive_support(w: &[(usize, Rat)]) -> Vec<usize> {
    w.iter().filter(|(_, x)| x.is_positive()).map(|(i, _)| *i).collect()
}

/// Shrinks each part to the carrier face of `z` within a Carathéodory
/// simplex of its support.
fn reduce_parts(
    inst: &LiftedInstance,
    z: &RatVector,
    cert: &IntersectionCertificate,
) -> Result<([Vec<usize>; 3], IntersectionCertificate)> {
    let mut parts: [Vec<usize>; 3] = Default::default();
    let mut coefficients: [Vec<(usize, Rat)>; 3] = Default::default();
    for p in 0..3 {
        let support = positive_support(&cert.coefficients[p]);
        let simplex: Vec<usize> = caratheodory_reduce(z, &inst.lifted, &support)?
            .into_iter()
            .map(|(i, _)| i)
            .collect();
        let face = carrier_face_weights(z, &inst.lifted, &simplex)?;
        parts[p] = face.iter().map(|(i, _)| *i).collect();
        coefficients[p] = face;
    }
    Ok((
        parts,
        IntersectionCertificate {
            common_point: z.clone(),
            coefficients,
        },
    ))
}

/// Minimizes the height of a common point over all triples of pairwise
/// disjoint subsets whose special points are among the seed's.
///
/// Enlarging a part only enlarges its hull, so the minimum over triples
/// equals the minimum over partitions of the available points. Height
/// zero is decided first on the points of the base hyperplane. Above it,
/// every part of a feasible triple needs a mast (a part inside the
/// hyperplane would pull the common point down to height zero), which
/// restricts the partitions scanned. The optimum of each partition LP is
/// a basic solution, so its supports are affinely independent and meet
/// only at the optimum; Carathéodory reduction and carrier faces then
/// recover exactly those supports.
pub fn minimal_descent(inst: &LiftedInstance, seed: &CandidateTriple) -> Result<DescentResult> {
    let lifted = &inst.lifted;
    for p in seed.parts() {
        lifted.check_indices(p)?;
    }
    if triple_intersection(lifted, seed)?.is_none() {
        return Err(Error::precondition("seed triple hulls do not intersect"));
    }
    let m2 = inst.mast(1);
    let m2_point = lifted.point(m2).clone();
    let mut m2_common = true;
    for p in seed.parts() {
        if hull_membership(&m2_point, lifted, p)?.is_none() {
            m2_common = false;
            break;
        }
    }
    if m2_common {
        return Err(Error::precondition("M2 lies in the seed triple intersection"));
    }

    let seed_usage = special_usage(inst, seed.parts());
    let mut available: Vec<usize> = (1..inst.base_len()).collect();
    available.extend(seed_usage.iter().copied());
    available.sort_unstable();
    let in_plane: Vec<usize> = available.iter().copied().filter(|&i| i < inst.base_len()).collect();
    let masts: Vec<usize> = available.iter().copied().filter(|&i| i >= inst.base_len()).collect();

    // height zero
    if in_plane.len() >= 3 {
        for parts in tripartitions(in_plane.len()) {
            let parts = parts.map(|b| b.into_iter().map(|i| in_plane[i]).collect::<Vec<_>>());
            let refs = [&parts[0][..], &parts[1][..], &parts[2][..]];
            if !bounding_boxes_overlap(lifted, &refs) {
                continue;
            }
            let t = CandidateTriple::new(parts)?;
            if let Some((z, cert)) = min_last_coordinate(lifted, &t)?.map(|(_, c)| (c.common_point.clone(), c)) {
                let (parts, cert) = reduce_parts(inst, &z, &cert)?;
                let unused = check_conclusions(inst, &seed_usage, &parts, &cert)
                    .map_err(|e| Error::InvariantViolation(format!("base-plane triple: {e}")))?;
                return Ok(DescentResult {
                    parts,
                    z_prime: z,
                    cert,
                    unused_special: unused,
                });
            }
        }
    }

    if stirling3(available.len()) > MAX_DESCENT_CANDIDATES {
        return Err(Error::Exhausted(format!(
            "descent over {} points exceeds the candidate budget",
            available.len()
        )));
    }
    let last = lifted.dim() - 1;
    let mut best: Option<Rat> = None;
    let mut minimizers: Vec<IntersectionCertificate> = Vec::new();
    for parts in partitions_meeting(&available, &masts) {
        let lb = parts
            .iter()
            .map(|b| b.iter().map(|&i| &lifted.point(i)[last]).min().unwrap())
            .max()
            .unwrap();
        if best.as_ref().is_some_and(|b| lb > b) {
            continue;
        }
        let refs = [&parts[0][..], &parts[1][..], &parts[2][..]];
        if !bounding_boxes_overlap(lifted, &refs) {
            continue;
        }
        let t = CandidateTriple::new(parts)?;
        let Some((v, cert)) = min_last_coordinate(lifted, &t)? else {
            continue;
        };
        match best.as_ref().map(|b| v.cmp(b)) {
            Some(core::cmp::Ordering::Greater) => {}
            Some(core::cmp::Ordering::Equal) => minimizers.push(cert),
            _ => {
                best = Some(v);
                minimizers.clear();
                minimizers.push(cert);
            }
        }
    }
    let Some(best) = best else {
        return Err(Error::internal("no triple reproduces the seed intersection"));
    };
    if best >= *lifted.point(m2).last() {
        return Err(Error::GuaranteeViolated(format!(
            "descent minimum {best} is not below M2"
        )));
    }

    let mut last_failure = String::new();
    for cert in &minimizers {
        let z = cert.common_point.clone();
        let (parts, cert) = reduce_parts(inst, &z, cert)?;
        match check_conclusions(inst, &seed_usage, &parts, &cert) {
            Ok(unused) => {
                return Ok(DescentResult {
                    parts,
                    z_prime: z,
                    cert,
                    unused_special: unused,
                })
            }
            Err(e) => last_failure = e,
        }
    }
    Err(Error::GuaranteeViolated(format!(
        "no minimizing triple satisfies the descent conclusions: {last_failure}"
    )))
}
