//! Turning a descent result into a candidate partition of the base.

use alloc::format;
use alloc::vec::Vec;

use crate::convexity::{triple_intersection, CandidateTriple, IntersectionCertificate};
use crate::error::{Error, Result};

use super::descent::DescentResult;
use super::projection::central_project;
use super::LiftedInstance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseOutcome {
    /// 1 when some part lies in the base hyperplane, otherwise 2.
    pub case_tag: u8,
    /// Projected parts, as base indices.
    pub parts: [Vec<usize>; 3],
    /// Highest vertices `W1, W2, W3` (lifted indices) in case 2.
    pub highest_vertices: Option<[usize; 3]>,
    /// `None` requests a retry with taller masts.
    pub cert: Option<IntersectionCertificate>,
}

pub fn case_split(inst: &LiftedInstance, d: &DescentResult) -> Result<CaseOutcome> {
    let n = inst.base_len();
    if !d.cert.verify_for(&inst.lifted, &d.parts) {
        return Err(Error::precondition("descent certificate does not verify"));
    }

    if d.parts.iter().any(|p| p.iter().all(|&i| i < n)) {
        let parts = d.parts.clone().map(|p| p.into_iter().filter(|&i| i < n).collect::<Vec<_>>());
        let t = CandidateTriple::new(parts)
            .map_err(|e| Error::InvariantViolation(format!("case 1 restriction: {e}")))?;
        let cert = triple_intersection(&inst.base, &t)?.ok_or_else(|| {
            Error::InvariantViolation("case 1 restriction to the base has no common point".into())
        })?;
        return Ok(CaseOutcome {
            case_tag: 1,
            parts: t.into_parts(),
            highest_vertices: None,
            cert: Some(cert),
        });
    }

    let mut tops = Vec::with_capacity(3);
    for p in &d.parts {
        let masts: Vec<usize> = p.iter().copied().filter(|&i| i >= n).collect();
        if masts.len() != 1 || p.contains(&inst.apex()) {
            return Err(Error::InvariantViolation(format!(
                "case 2 part {p:?} must hold exactly one mast and not the apex"
            )));
        }
        tops.push(masts[0]);
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| {
        inst.lifted.point(tops[a]).last().cmp(inst.lifted.point(tops[b]).last())
    });
    let w = order.map(|o| tops[o]);
    if w[0] == w[1] || w[1] == w[2] {
        return Err(Error::InvariantViolation("case 2 parts share a mast".into()));
    }
    let ordered = order.map(|o| d.parts[o].clone());

    let mut projected: [Vec<usize>; 3] = Default::default();
    projected[0] = ordered[0].iter().copied().filter(|&i| i < n).collect();
    projected[0].push(inst.apex());
    projected[0].sort_unstable();
    for r in 1..3 {
        let apex = inst.lifted.point(w[r]);
        for &i in ordered[r].iter().filter(|&&i| i != w[r]) {
            let image = central_project(apex, inst.lifted.point(i))?;
            if image != *inst.lifted.point(i) {
                return Err(Error::InvariantViolation(format!(
                    "central projection moved base point {i}"
                )));
            }
            projected[r].push(i);
        }
    }
    if projected.iter().any(Vec::is_empty) {
        return Ok(CaseOutcome {
            case_tag: 2,
            parts: projected,
            highest_vertices: Some(w),
            cert: None,
        });
    }
    let t = CandidateTriple::new(projected)
        .map_err(|e| Error::InvariantViolation(format!("case 2 projection: {e}")))?;
    let cert = triple_intersection(&inst.base, &t)?;
    Ok(CaseOutcome {
        case_tag: 2,
        parts: t.into_parts(),
        highest_vertices: Some(w),
        cert,
    })
}
