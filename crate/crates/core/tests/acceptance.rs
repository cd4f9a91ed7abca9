//! Acceptance suite. Each test checks one criterion and writes a single
//! `PASS` / `FAIL` line to stderr, bypassing output capture.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use common::{hull_oracle, random_triple, small_config, triple_oracle};
use tverberg_core::convexity::{hull_membership, linf_distance_lower, triple_intersection};
use tverberg_core::instance::generate_instance;
use tverberg_core::point::combine;
use tverberg_core::reduction::{
    check_conclusions, compute_delta_bound, compute_epsilon, qualifying_pairs, run_reduction,
    sin_half_angle_lower, ReductionOptions, DEFAULT_RETRIES,
};
use tverberg_core::rng::SplitMix64;
use tverberg_core::tverberg::{brute_force_all, complete_partition, find_tverberg3, verify_witness};
use tverberg_core::vkf::{find_vkf3, verify_vkf, ScanMode};
use tverberg_core::{CandidateTriple, Error, PointConfig, Rat, RatVector};

const TVERBERG_RUNS: u64 = 200;
const TVERBERG_LIMIT: Duration = Duration::from_secs(1);
const VKF_RUNS: u64 = 50;
const VKF_LIMIT: Duration = Duration::from_secs(30);
const REDUCTION_RUNS: u64 = 50;
const REDUCTION_LIMIT: Duration = Duration::from_secs(120);
const SAMPLING_CONFIGS: u64 = 20;
const SAMPLES_PER_CONFIG: usize = 1000;
const ORACLE_INSTANCES: u64 = 500;
const SABOTAGE_SEEDS: u64 = 20;
const STRESS_LIMIT: Duration = Duration::from_secs(30 * 60);

fn report(criterion: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "acceptance {criterion}: {verdict} {detail}");
}

#[test]
fn criterion_1_seven_points_in_the_plane() {
    let mut good = 0;
    let mut slowest = Duration::ZERO;
    for seed in 0..TVERBERG_RUNS {
        let c = generate_instance(seed, 7, 2, 100).unwrap();
        let start = Instant::now();
        let w = find_tverberg3(&c);
        let took = start.elapsed();
        slowest = slowest.max(took);
        if matches!(&w, Ok(w) if verify_witness(&c, w)) && took < TVERBERG_LIMIT {
            good += 1;
        }
    }
    let ok = good == TVERBERG_RUNS;
    report(1, ok, &format!("{good}/{TVERBERG_RUNS} verified witnesses, slowest {slowest:?}"));
    assert!(ok);
}

#[test]
fn criterion_2_eleven_points_in_space() {
    let mut good = 0;
    let mut slowest = Duration::ZERO;
    for seed in 0..VKF_RUNS {
        let c = generate_instance(seed, 11, 3, 100).unwrap();
        let start = Instant::now();
        let w = find_vkf3(&c, 1, ScanMode::Canonical);
        let took = start.elapsed();
        slowest = slowest.max(took);
        let fine = match &w {
            Ok(w) => verify_vkf(&c, w) && w.parts.iter().all(|p| p.len() == 3),
            Err(_) => false,
        };
        if fine && took < VKF_LIMIT {
            good += 1;
        }
    }
    let ok = good == VKF_RUNS;
    report(2, ok, &format!("{good}/{VKF_RUNS} verified triples of 3-sets, slowest {slowest:?}"));
    assert!(ok);
}

/// Criteria 3 and 4 share the same 50 runs.
fn reduction_runs() -> &'static (u64, Duration, usize, String, usize, usize, Vec<String>) {
    use std::sync::OnceLock;
    static RUNS: OnceLock<(u64, Duration, usize, String, usize, usize, Vec<String>)> = OnceLock::new();
    RUNS.get_or_init(|| {
        let mut good = 0;
        let mut slowest = Duration::ZERO;
        let mut max_retries = 0;
        let mut retries = Vec::new();
        let (mut descents, mut violations) = (0, 0);
        let mut problems = Vec::new();
        for seed in 0..REDUCTION_RUNS {
            let base = generate_instance(seed, 7, 2, 100).unwrap();
            let start = Instant::now();
            let trace = run_reduction(&base, 1, &ReductionOptions::default());
            let took = start.elapsed();
            slowest = slowest.max(took);
            let t = match trace {
                Ok(t) => t,
                Err(e) => {
                    problems.push(format!("seed {seed}: {e}"));
                    retries.push("x".to_string());
                    continue;
                }
            };
            retries.push(t.retries.to_string());
            max_retries = max_retries.max(t.retries);
            let all: Vec<_> = brute_force_all(&base).unwrap().into_iter().map(|(p, _)| p).collect();
            let contained = all.contains(&t.final_witness.parts);
            if verify_witness(&base, &t.final_witness) && contained && took < REDUCTION_LIMIT && t.retries <= DEFAULT_RETRIES {
                good += 1;
            } else {
                problems.push(format!("seed {seed}: contained {contained}, {took:?}"));
            }
            for a in &t.attempts {
                let (Some(inst), Some(vkf), Some(d)) = (&a.instance, &a.seed, &a.descent) else { continue };
                descents += 1;
                let usage: Vec<usize> = vkf.parts.iter().flatten().copied().filter(|&i| inst.is_special(i)).collect();
                let fine = match check_conclusions(inst, &usage, &d.parts, &d.cert) {
                    Ok(unused) => unused == d.unused_special && d.z_prime.last() < &inst.mast_heights[1],
                    Err(_) => false,
                };
                if !fine {
                    violations += 1;
                }
            }
        }
        (good, slowest, max_retries, retries.join(","), descents, violations, problems)
    })
}

#[test]
fn criterion_3_reduction_end_to_end() {
    let (good, slowest, max_retries, retries, _, _, problems) = reduction_runs();
    let ok = *good == REDUCTION_RUNS;
    report(
        3,
        ok,
        &format!(
            "{good}/{REDUCTION_RUNS} oracle-contained witnesses, slowest {slowest:?}, max retries {max_retries} (budget {DEFAULT_RETRIES}), retries [{retries}] {problems:?}"
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_4_descent_conclusions() {
    let (_, _, _, _, descents, violations, _) = reduction_runs();
    let ok = *violations == 0 && *descents >= REDUCTION_RUNS as usize;
    report(4, ok, &format!("{violations} violations over {descents} descents"));
    assert!(ok);
}

fn with_point(base: &PointConfig, z: &RatVector) -> PointConfig {
    let mut pts = base.points().to_vec();
    pts.push(z.clone());
    PointConfig::new(base.dim(), pts).unwrap()
}

#[test]
fn criterion_5_near_both_hulls_means_near_the_crossing() {
    const GRID: i64 = 1 << 12;
    let mut rng = SplitMix64::new(5);
    let (mut accepted, mut violations, mut configs_with_pairs) = (0usize, 0usize, 0usize);
    let mut short = Vec::new();
    let mut widest = Rat::zero();
    for seed in 0..SAMPLING_CONFIGS {
        let base = generate_instance(seed, 7, 2, 100).unwrap();
        let eps = compute_epsilon(&base).unwrap();
        let delta = compute_delta_bound(&base, &eps).unwrap();
        let pairs = qualifying_pairs(&base).unwrap();
        if pairs.is_empty() {
            continue;
        }
        configs_with_pairs += 1;
        let sines: Vec<Rat> = pairs.iter().map(|p| sin_half_angle_lower(&base, &p.first, &p.second)).collect();
        let eps_sq = &eps * &eps;
        let mut here = 0;
        let mut tries = 0;
        while here < SAMPLES_PER_CONFIG && tries < 50 * SAMPLES_PER_CONFIG {
            tries += 1;
            let which = rng.below(pairs.len() as u64) as usize;
            let pair = &pairs[which];
            let (along, other) = if rng.below(2) == 0 {
                (&pair.first, &pair.second)
            } else {
                (&pair.second, &pair.first)
            };
            // walk from the crossing toward a vertex of one hull, then jitter by at most δ
            let x = &pair.point;
            let a = base.point(along[rng.below(along.len() as u64) as usize]);
            let reach = a.sub(x).linf_norm();
            let s = &sines[which];
            let mut t_max = Rat::one();
            if reach.is_positive() {
                t_max = Rat::from_integer(2) * &delta / (s * &reach);
                if t_max > Rat::one() {
                    t_max = Rat::one();
                }
            }
            let t = &t_max * Rat::new(rng.below(GRID as u64 + 1) as i64, GRID);
            let on_hull = x.add(&a.sub(x).scale(&t));
            let jitter = RatVector::new(
                (0..base.dim()).map(|_| &delta * Rat::new(rng.range_i64(-GRID, GRID), GRID)).collect(),
            );
            let z = on_hull.add(&jitter);
            let aug = with_point(&base, &z);
            let zi = base.len();
            let d_along = linf_distance_lower(&aug, &[zi], along, along).unwrap();
            let d_other = linf_distance_lower(&aug, &[zi], other, other).unwrap();
            if d_along > delta || d_other > delta {
                continue;
            }
            here += 1;
            let ratio = z.sub(x).norm_sq() / &eps_sq;
            if ratio > Rat::one() {
                violations += 1;
            }
            if ratio > widest {
                widest = ratio;
            }
        }
        if here < SAMPLES_PER_CONFIG {
            short.push(seed);
        }
        accepted += here;
    }
    let ok = violations == 0 && short.is_empty() && configs_with_pairs > 0;
    report(
        5,
        ok,
        &format!(
            "{violations} violations over {accepted} certified samples from {configs_with_pairs} configs with crossing pairs, under-sampled configs {short:?}, largest squared distance {:.3} eps^2", widest.to_f64()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_6_lp_layer_matches_oracles() {
    let mut rng = SplitMix64::new(6);
    let (mut agree, mut total, mut bad_certs) = (0, 0, 0);
    for _ in 0..ORACLE_INSTANCES {
        let dim = 1 + rng.below(3) as usize;
        let n = 3 + rng.below(6) as usize;
        let c = small_config(&mut rng, n, dim, 3);

        let subset: Vec<usize> = (1..n).filter(|_| rng.below(3) > 0).collect();
        let q = c.point(0);
        total += 1;
        let got = hull_membership(q, &c, &subset).unwrap();
        if got.is_some() == hull_oracle(q, &c, &subset) {
            agree += 1;
        }
        if let Some(w) = got {
            let fine = w.iter().all(|(i, x)| subset.contains(i) && !x.is_negative())
                && w.iter().map(|(_, x)| x).sum::<Rat>().is_one()
                && combine(&c, &w) == *q;
            if !fine {
                bad_certs += 1;
            }
        }

        let parts = random_triple(&mut rng, n);
        let t = CandidateTriple::new(parts.clone()).unwrap();
        total += 1;
        let got = triple_intersection(&c, &t).unwrap();
        if got.is_some() == triple_oracle(&c, &parts) {
            agree += 1;
        }
        if let Some(cert) = got {
            let w = complete_partition(&c, &t, &cert).unwrap();
            if !verify_witness(&c, &w) {
                bad_certs += 1;
            }
        }
    }
    let ok = agree == total && bad_certs == 0;
    report(6, ok, &format!("{agree}/{total} oracle agreements, {bad_certs} rejected certificates"));
    assert!(ok);
}

#[test]
fn criterion_7_short_masts_are_sound() {
    let fixed = [1, 2, 3, 4].map(Rat::from_integer);
    let (mut witnesses, mut failures, mut false_certs) = (0, 0, 0);
    let mut other = Vec::new();
    for seed in 0..SABOTAGE_SEEDS {
        let base = generate_instance(seed, 7, 2, 100).unwrap();
        let opts = ReductionOptions { fixed_heights: Some(fixed.clone()), ..Default::default() };
        match run_reduction(&base, 1, &opts) {
            Ok(t) => {
                if verify_witness(&base, &t.final_witness) {
                    witnesses += 1;
                } else {
                    false_certs += 1;
                }
            }
            Err(Error::ReductionFailed(f)) if !f.attempts.is_empty() => failures += 1,
            Err(e) => other.push(format!("seed {seed}: {e}")),
        }
    }
    let ok = false_certs == 0 && other.is_empty();
    report(
        7,
        ok,
        &format!("{false_certs} false certificates; {witnesses} verified witnesses, {failures} traced failures {other:?}"),
    );
    assert!(ok);
}

#[test]
#[ignore = "stress benchmark, run with --ignored"]
fn criterion_8_thirteen_points_in_five_dimensions() {
    let base = generate_instance(0, 13, 5, 100).unwrap();
    let opts = ReductionOptions { scan: ScanMode::Fast, ..Default::default() };
    let start = Instant::now();
    let result = run_reduction(&base, 2, &opts);
    let took = start.elapsed();
    let ok = matches!(&result, Ok(t) if verify_witness(&base, &t.final_witness)) && took <= STRESS_LIMIT;
    let detail = match &result {
        Ok(t) => format!("case {} after {} retries in {took:?}", t.case_tag, t.retries),
        Err(e) => format!("{e} after {took:?}"),
    };
    report(8, ok, &format!("(benchmark, non-gating) {detail}"));
}
