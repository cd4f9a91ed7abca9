//! Oracles that avoid the simplex code entirely: basic-solution
//! enumeration and barycentric coordinates over affinely independent
//! subsets.
#![allow(dead_code)]

use tverberg_core::enumerate::Combinations;
use tverberg_core::linalg::{barycentric, is_affinely_independent, rank, solve};
use tverberg_core::lp::LinearProgram;
use tverberg_core::rng::SplitMix64;
use tverberg_core::{PointConfig, Rat, RatVector};

pub fn r(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Small integer coordinates so that degenerate configurations show up.
pub fn small_config(rng: &mut SplitMix64, count: usize, dim: usize, spread: i64) -> PointConfig {
    let pts = (0..count)
        .map(|_| RatVector::new((0..dim).map(|_| r(rng.range_i64(-spread, spread))).collect()))
        .collect();
    PointConfig::new(dim, pts).unwrap()
}

/// Nonnegative solutions of `a x = b` with linearly independent support
/// columns. The system is feasible iff this list is nonempty.
pub fn basic_solutions(a: &[Vec<Rat>], b: &[Rat]) -> Vec<Vec<Rat>> {
    let n = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    if b.iter().all(Rat::is_zero) {
        out.push(vec![Rat::zero(); n]);
    }
    let max = rank(a).min(n);
    for size in 1..=max {
        for support in Combinations::new(n, size) {
            let cols: Vec<Vec<Rat>> = a
                .iter()
                .map(|row| support.iter().map(|&j| row[j].clone()).collect())
                .collect();
            if rank(&cols) != size {
                continue;
            }
            let Some(xs) = solve(&cols, b) else { continue };
            if xs.iter().any(Rat::is_negative) {
                continue;
            }
            let mut x = vec![Rat::zero(); n];
            for (&j, v) in support.iter().zip(xs) {
                x[j] = v;
            }
            out.push(x);
        }
    }
    out
}

/// Optimum of an all-nonnegative LP with a bounded feasible region, or
/// `None` when infeasible. Inequalities get explicit slack columns.
pub fn lp_oracle(lp: &LinearProgram) -> Option<Rat> {
    assert!(lp.nonneg.iter().all(|&b| b));
    let m_le = lp.a_le.len();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (row, rhs) in lp.a_eq.iter().zip(&lp.b_eq) {
        let mut full = row.clone();
        full.extend(std::iter::repeat_n(Rat::zero(), m_le));
        a.push(full);
        b.push(rhs.clone());
    }
    for (k, (row, rhs)) in lp.a_le.iter().zip(&lp.b_le).enumerate() {
        let mut full = row.clone();
        full.extend((0..m_le).map(|s| if s == k { Rat::one() } else { Rat::zero() }));
        a.push(full);
        b.push(rhs.clone());
    }
    basic_solutions(&a, &b)
        .into_iter()
        .map(|x| lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum::<Rat>())
        .min()
}

/// `q` lies in the hull of `subset` iff it has nonnegative barycentric
/// coordinates over some affinely independent subset of it.
pub fn hull_oracle(q: &RatVector, config: &PointConfig, subset: &[usize]) -> bool {
    for size in 1..=subset.len().min(config.dim() + 1) {
        for pick in Combinations::new(subset.len(), size) {
            let idx: Vec<usize> = pick.iter().map(|&t| subset[t]).collect();
            let pts = config.select(&idx);
            if !is_affinely_independent(&pts) {
                continue;
            }
            if let Some(w) = barycentric(q, &pts) {
                if w.iter().all(|x| !x.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Decides whether the three hulls meet from the system
/// `sum_i a_i p_i = sum_j b_j q_j = sum_l c_l s_l` with unit weight sums.
pub fn triple_oracle(config: &PointConfig, parts: &[Vec<usize>; 3]) -> bool {
    let cols: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(p, part)| part.iter().map(move |&i| (p, i)))
        .collect();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for p in 0..3 {
        a.push(cols.iter().map(|&(q, _)| if q == p { r(1) } else { r(0) }).collect());
        b.push(r(1));
    }
    for other in 1..3 {
        for k in 0..config.dim() {
            a.push(
                cols.iter()
                    .map(|&(q, i)| {
                        let c = config.point(i)[k].clone();
                        if q == 0 {
                            c
                        } else if q == other {
                            -c
                        } else {
                            r(0)
                        }
                    })
                    .collect(),
            );
            b.push(r(0));
        }
    }
    !basic_solutions(&a, &b).is_empty()
}

/// Random split of `0..n` into three disjoint nonempty parts, possibly
/// leaving some indices out.
pub fn random_triple(rng: &mut SplitMix64, n: usize) -> [Vec<usize>; 3] {
    loop {
        let mut parts = [Vec::new(), Vec::new(), Vec::new()];
        for i in 0..n {
            let slot = rng.below(4) as usize;
            if slot < 3 {
                parts[slot].push(i);
            }
        }
        if parts.iter().all(|p| !p.is_empty()) {
            return parts;
        }
    }
}
