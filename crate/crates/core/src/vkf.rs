//! Certified search for van Kampen–Flores triples: three pairwise disjoint
//! `(2k+1)`-subsets of `6k + 5` points in `Q^(3k)` with a common hull point.

use alloc::format;
use alloc::vec::Vec;

use crate::convexity::{bounding_boxes_overlap, triple_intersection, CandidateTriple, IntersectionCertificate};
use crate::enumerate::{Combinations, DisjointTriples, Part};
use crate::error::{Error, Result};
use crate::point::PointConfig;
use crate::scan;

/// Canonical-first (deterministic) or any witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanMode {
    #[default]
    Canonical,
    /// Returns whichever witness the scan reaches first; only differs from
    /// `Canonical` when candidates are processed in parallel.
    Fast,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VkfWitness {
    pub k: usize,
    pub parts: [Vec<usize>; 3],
    pub cert: IntersectionCertificate,
}

/// Candidate parts of size `2k + 1` over `0..n`, in lexicographic order.
pub fn vkf_parts(n: usize, k: usize) -> Vec<Part> {
    Combinations::new(n, 2 * k + 1).map(Part::new).collect()
}

pub fn find_vkf3(config: &PointConfig, k: usize, mode: ScanMode) -> Result<VkfWitness> {
    find_vkf3_with(config, k, mode, |_| Ok(true))
}

/// Like [`find_vkf3`], but skips witnesses rejected by `accept`.
pub fn find_vkf3_with<F>(config: &PointConfig, k: usize, mode: ScanMode, accept: F) -> Result<VkfWitness>
where
    F: Fn(&VkfWitness) -> Result<bool> + Sync + Send,
{
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    if config.dim() != 3 * k {
        return Err(Error::input(format!(
            "configuration dimension {} differs from 3k = {}",
            config.dim(),
            3 * k
        )));
    }
    if config.len() < 6 * k + 5 {
        return Err(Error::input(format!(
            "need at least 6k + 5 = {} points, got {}",
            6 * k + 5,
            config.len()
        )));
    }
    if config.len() > 64 {
        return Err(Error::input("at most 64 points are supported"));
    }
    let parts = vkf_parts(config.len(), k);
    let test = |&(a, b, c): &(usize, usize, usize)| -> Result<Option<VkfWitness>> {
        let members = [&parts[a].members[..], &parts[b].members[..], &parts[c].members[..]];
        if !bounding_boxes_overlap(config, &members) {
            return Ok(None);
        }
        let triple = [members[0].to_vec(), members[1].to_vec(), members[2].to_vec()];
        let t = CandidateTriple::new(triple)?;
        let Some(cert) = triple_intersection(config, &t)? else {
            return Ok(None);
        };
        let w = VkfWitness {
            k,
            parts: t.into_parts(),
            cert,
        };
        Ok(if accept(&w)? { Some(w) } else { None })
    };
    let triples = DisjointTriples::new(&parts);
    let hit = match mode {
        ScanMode::Canonical => scan::first_some(triples, test)?.map(|(_, w)| w),
        ScanMode::Fast => scan::any_some(triples, test)?,
    };
    hit.ok_or_else(|| {
        Error::Exhausted(format!(
            "no acceptable van Kampen-Flores triple among {} points in dimension {}",
            config.len(),
            config.dim()
        ))
    })
}

/// Re-checks every witness invariant exactly.
pub fn verify_vkf(config: &PointConfig, w: &VkfWitness) -> bool {
    if w.k == 0 || config.dim() != 3 * w.k {
        return false;
    }
    if w.parts.iter().any(|p| p.len() != 2 * w.k + 1) {
        return false;
    }
    if CandidateTriple::for_config(w.parts.clone(), config).is_err() {
        return false;
    }
    w.cert.verify_for(config, &w.parts)
}
