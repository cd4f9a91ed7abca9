//! Certified search for Tverberg 3-partitions and the brute-force oracle.

use alloc::format;
use alloc::vec::Vec;

use crate::convexity::{bounding_boxes_overlap, triple_intersection, CandidateTriple, IntersectionCertificate};
use crate::enumerate::tripartitions;
use crate::error::{Error, Result};
use crate::point::PointConfig;
use crate::scan;

/// Largest configuration accepted by [`brute_force_all`].
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// A partition of all indices into three nonempty blocks whose hulls meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TverbergWitness {
    pub parts: [Vec<usize>; 3],
    pub cert: IntersectionCertificate,
}

fn certify(config: &PointConfig, parts: &[Vec<usize>; 3]) -> Result<Option<IntersectionCertificate>> {
    let refs = [&parts[0][..], &parts[1][..], &parts[2][..]];
    if !bounding_boxes_overlap(config, &refs) {
        return Ok(None);
    }
    triple_intersection(config, &CandidateTriple::new(parts.clone())?)
}

/// First partition, in canonical order, whose three hulls share a point.
pub fn find_tverberg3(config: &PointConfig) -> Result<TverbergWitness> {
    if config.len() < 3 {
        return Err(Error::input("a 3-partition needs at least 3 points"));
    }
    let candidates = tripartitions(config.len());
    let hit = scan::first_some(candidates.into_iter(), |parts| {
        Ok(certify(config, parts)?.map(|cert| (parts.clone(), cert)))
    })?;
    match hit {
        Some((_, (parts, cert))) => Ok(TverbergWitness { parts, cert }),
        None => Err(Error::Exhausted(format!(
            "no Tverberg 3-partition of {} points in dimension {}",
            config.len(),
            config.dim()
        ))),
    }
}

/// Every 3-block partition with intersecting hulls, in canonical order.
pub fn brute_force_all(config: &PointConfig) -> Result<Vec<([Vec<usize>; 3], IntersectionCertificate)>> {
    if config.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::input(format!(
            "brute force is limited to {BRUTE_FORCE_LIMIT} points, got {}",
            config.len()
        )));
    }
    let candidates = tripartitions(config.len());
    let certs = scan::map_all(&candidates, |parts| certify(config, parts))?;
    Ok(candidates
        .into_iter()
        .zip(certs)
        .filter_map(|(p, c)| c.map(|c| (p, c)))
        .collect())
}

/// Extends an intersecting triple to a partition of every index by
/// appending the unused indices to the first part. The first hull only
/// grows, so the certificate stays valid unchanged.
pub fn complete_partition(
    config: &PointConfig,
    t: &CandidateTriple,
    cert: &IntersectionCertificate,
) -> Result<TverbergWitness> {
    if !cert.verify_for(config, t.parts()) {
        return Err(Error::precondition("certificate does not verify for the triple"));
    }
    let mut parts = t.parts().clone();
    let used: Vec<usize> = parts.iter().flatten().copied().collect();
    parts[0].extend((0..config.len()).filter(|i| !used.contains(i)));
    parts[0].sort_unstable();
    Ok(TverbergWitness {
        parts,
        cert: cert.clone(),
    })
}

/// Re-derives every witness invariant by exact substitution.
pub fn verify_witness(config: &PointConfig, w: &TverbergWitness) -> bool {
    let mut seen = alloc::vec![false; config.len()];
    for part in &w.parts {
        if part.is_empty() {
            return false;
        }
        for &i in part {
            if i >= config.len() || seen[i] {
                return false;
            }
            seen[i] = true;
        }
    }
    seen.iter().all(|&s| s) && w.cert.verify_for(config, &w.parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;
    use alloc::vec;

    fn square_and_axis() -> PointConfig {
        PointConfig::from_ints(2, &[&[1, 1], &[-1, -1], &[-1, 1], &[1, -1], &[0, 0], &[2, 0], &[-2, 0]])
            .unwrap()
    }

    #[test]
    fn square_and_axis_witness_is_in_oracle_set() {
        let c = square_and_axis();
        let w = find_tverberg3(&c).unwrap();
        assert!(verify_witness(&c, &w));
        let all = brute_force_all(&c).unwrap();
        assert!(all.iter().any(|(p, _)| *p == w.parts));
        // the symmetric partition is valid and listed
        assert!(all.iter().any(|(p, _)| *p == [vec![0, 1], vec![2, 3], vec![4, 5, 6]]));
        // canonical-first: nothing earlier in the oracle list
        assert_eq!(all[0].0, w.parts);
    }

    #[test]
    fn triangle_has_no_partition() {
        let c = PointConfig::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        assert!(brute_force_all(&c).unwrap().is_empty());
        assert!(matches!(find_tverberg3(&c), Err(Error::Exhausted(_))));
    }

    #[test]
    fn degenerate_collinear_input_is_searched() {
        let rows: Vec<Vec<i64>> = (0..7).map(|i| vec![i, 2 * i]).collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
        let c = PointConfig::from_ints(2, &refs).unwrap();
        let all = brute_force_all(&c).unwrap();
        assert!(!all.is_empty());
        for (p, cert) in &all {
            assert!(cert.verify_for(&c, p));
        }
    }

    #[test]
    fn size_guard() {
        let rows: Vec<Vec<i64>> = (0..13).map(|i| vec![i, i * i]).collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
        let c = PointConfig::from_ints(2, &refs).unwrap();
        assert!(matches!(brute_force_all(&c), Err(Error::Input(_))));
        let two = PointConfig::from_ints(2, &[&[0, 0], &[1, 1]]).unwrap();
        assert!(find_tverberg3(&two).is_err());
    }

    #[test]
    fn completion_and_verification() {
        let c = square_and_axis();
        let t = CandidateTriple::new([vec![0, 1], vec![2, 3], vec![4, 5, 6]]).unwrap();
        let cert = triple_intersection(&c, &t).unwrap().unwrap();
        let full = complete_partition(&c, &t, &cert).unwrap();
        assert_eq!(full.parts, *t.parts());
        assert!(verify_witness(&c, &full));

        let t = CandidateTriple::new([vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let cert = triple_intersection(&c, &t).unwrap().unwrap();
        let full = complete_partition(&c, &t, &cert).unwrap();
        assert_eq!(full.parts[0], vec![0, 1, 6]);
        assert_eq!(full.cert.common_point, cert.common_point);
        assert!(verify_witness(&c, &full));

        let mut bad = full.clone();
        bad.cert.coefficients[0][0].1 = -bad.cert.coefficients[0][0].1.clone();
        assert!(!verify_witness(&c, &bad));
        let mut short = full.clone();
        short.parts[0].pop();
        assert!(!verify_witness(&c, &short));
        let mut wrong = cert.clone();
        wrong.coefficients[2][0].1 += Rat::one();
        assert!(complete_partition(&c, &t, &wrong).is_err());
    }
}
