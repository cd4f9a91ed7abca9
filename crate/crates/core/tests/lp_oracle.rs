mod common;

use common::{lp_oracle, r};
use tverberg_core::lp::{solve, verify_outcome, LinearProgram, LpStatus};
use tverberg_core::rng::SplitMix64;
use tverberg_core::Rat;

fn random_row(rng: &mut SplitMix64, n: usize) -> Vec<Rat> {
    (0..n).map(|_| r(rng.range_i64(-3, 3))).collect()
}

fn bounded_lp(rng: &mut SplitMix64) -> LinearProgram {
    let n = 2 + rng.below(3) as usize;
    let mut lp = LinearProgram::new(n);
    lp.objective = random_row(rng, n);
    for _ in 0..rng.below(3) {
        lp.add_eq(random_row(rng, n), r(rng.range_i64(-4, 4)));
    }
    for _ in 0..1 + rng.below(3) {
        lp.add_le(random_row(rng, n), r(rng.range_i64(-4, 4)));
    }
    lp.add_le(vec![r(1); n], r(5));
    lp
}

#[test]
fn simplex_matches_basic_solution_enumeration() {
    let mut rng = SplitMix64::new(7);
    let (mut feasible, mut infeasible) = (0, 0);
    for case in 0..400 {
        let lp = bounded_lp(&mut rng);
        let out = solve(&lp).unwrap();
        assert!(verify_outcome(&lp, &out), "case {case}: certificate rejected");
        match lp_oracle(&lp) {
            Some(best) => {
                feasible += 1;
                assert_eq!(out.status, LpStatus::Optimal, "case {case}");
                assert_eq!(out.value.as_ref(), Some(&best), "case {case}");
            }
            None => {
                infeasible += 1;
                assert_eq!(out.status, LpStatus::Infeasible, "case {case}");
            }
        }
    }
    assert!(feasible > 50 && infeasible > 50, "{feasible} / {infeasible}");
}

#[test]
fn unbounded_and_free_variables() {
    // minimize -x0 with x0 - x1 <= 1: unbounded along (1, 1)
    let mut lp = LinearProgram::new(2);
    lp.objective = vec![r(-1), r(0)];
    lp.add_le(vec![r(1), r(-1)], r(1));
    let out = solve(&lp).unwrap();
    assert_eq!(out.status, LpStatus::Unbounded);
    assert!(verify_outcome(&lp, &out));

    // free x: minimize x subject to x >= -7/2
    let mut lp = LinearProgram::new(1);
    lp.nonneg = vec![false];
    lp.objective = vec![r(1)];
    lp.add_ge(vec![r(1)], Rat::new(-7, 2));
    let out = solve(&lp).unwrap();
    assert_eq!(out.value, Some(Rat::new(-7, 2)));
    assert!(verify_outcome(&lp, &out));

    // free x with x = 1 and x = 2
    let mut lp = LinearProgram::new(1);
    lp.nonneg = vec![false];
    lp.add_eq(vec![r(1)], r(1));
    lp.add_eq(vec![r(1)], r(2));
    let out = solve(&lp).unwrap();
    assert_eq!(out.status, LpStatus::Infeasible);
    assert!(verify_outcome(&lp, &out));
}

#[test]
fn tampered_outcomes_are_rejected() {
    let mut rng = SplitMix64::new(11);
    let mut checked = 0;
    while checked < 40 {
        let lp = bounded_lp(&mut rng);
        let mut out = solve(&lp).unwrap();
        match out.status {
            LpStatus::Optimal => {
                let v = out.value.take().unwrap();
                out.value = Some(v + r(1));
            }
            LpStatus::Infeasible => {
                let y = out.infeasibility_certificate.take().unwrap();
                out.infeasibility_certificate = Some(y.scale(&r(-1)));
            }
            LpStatus::Unbounded => continue,
        }
        assert!(!verify_outcome(&lp, &out));
        checked += 1;
    }
}

#[test]
fn malformed_programs_are_input_errors() {
    let mut lp = LinearProgram::new(2);
    lp.add_eq(vec![r(1)], r(1));
    assert!(matches!(solve(&lp), Err(tverberg_core::Error::Input(_))));
}
