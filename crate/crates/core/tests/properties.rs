use proptest::prelude::*;
use tverberg_core::convexity::triple_intersection;
use tverberg_core::linalg::{affine_dim, is_general_position, rank};
use tverberg_core::tverberg::{complete_partition, verify_witness};
use tverberg_core::{CandidateTriple, PointConfig, Rat, RatVector};

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rat::new(n, d))
}

fn config(max_n: usize) -> impl Strategy<Value = PointConfig> {
    (1usize..=3).prop_flat_map(move |dim| {
        prop::collection::vec(prop::collection::vec(-4i64..=4, dim), 3..=max_n).prop_map(move |rows| {
            let pts = rows
                .iter()
                .map(|r| RatVector::new(r.iter().map(|&x| Rat::from_integer(x)).collect()))
                .collect();
            PointConfig::new(dim, pts).unwrap()
        })
    })
}

/// A config plus an assignment of each index to part 0, 1, 2 or none.
fn config_and_slots() -> impl Strategy<Value = (PointConfig, Vec<usize>)> {
    config(8).prop_flat_map(|c| {
        let n = c.len();
        (Just(c), prop::collection::vec(0usize..4, n))
    })
}

fn parts_from(slots: &[usize]) -> Option<[Vec<usize>; 3]> {
    let mut parts = [Vec::new(), Vec::new(), Vec::new()];
    for (i, &s) in slots.iter().enumerate() {
        if s < 3 {
            parts[s].push(i);
        }
    }
    parts.iter().all(|p| !p.is_empty()).then_some(parts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_ignores_row_order_and_scaling(
        rows in prop::collection::vec(prop::collection::vec(rat(), 3), 1..5),
        s in rat().prop_filter("nonzero", |s| !s.is_zero()),
    ) {
        let before = rank(&rows);
        let mut other: Vec<Vec<Rat>> = rows.iter().rev().cloned().collect();
        other[0] = other[0].iter().map(|x| x * &s).collect();
        prop_assert_eq!(rank(&other), before);
        prop_assert!(before <= rows.len().min(3));
    }

    #[test]
    fn affine_dim_is_translation_invariant(c in config(6), shift in prop::collection::vec(rat(), 3)) {
        let t = RatVector::new(shift[..c.dim()].to_vec());
        let moved: Vec<RatVector> = c.points().iter().map(|p| p.add(&t)).collect();
        let before = affine_dim(&c.select(&(0..c.len()).collect::<Vec<_>>()));
        prop_assert_eq!(affine_dim(&moved.iter().collect::<Vec<_>>()), before);
    }

    #[test]
    fn general_position_survives_relabeling(c in config(6)) {
        let order: Vec<usize> = (0..c.len()).rev().collect();
        prop_assert_eq!(is_general_position(&c.permuted(&order).unwrap()), is_general_position(&c));
    }

    #[test]
    fn triple_intersection_ignores_part_order((c, slots) in config_and_slots()) {
        let Some(parts) = parts_from(&slots) else { return Ok(()) };
        let a = triple_intersection(&c, &CandidateTriple::new(parts.clone()).unwrap()).unwrap();
        let [p, q, r] = parts;
        let b = triple_intersection(&c, &CandidateTriple::new([r, p, q]).unwrap()).unwrap();
        prop_assert_eq!(a.is_some(), b.is_some());
    }

    #[test]
    fn growing_a_part_keeps_an_intersection((c, slots) in config_and_slots()) {
        let Some(parts) = parts_from(&slots) else { return Ok(()) };
        let t = CandidateTriple::new(parts.clone()).unwrap();
        let Some(cert) = triple_intersection(&c, &t).unwrap() else { return Ok(()) };
        let unused: Vec<usize> = (0..c.len()).filter(|i| slots[*i] == 3).collect();
        let mut grown = parts.clone();
        grown[1].extend(&unused);
        prop_assert!(triple_intersection(&c, &CandidateTriple::new(grown).unwrap()).unwrap().is_some());

        let w = complete_partition(&c, &t, &cert).unwrap();
        prop_assert!(verify_witness(&c, &w));
        prop_assert_eq!(w.parts.iter().map(Vec::len).sum::<usize>(), c.len());
    }

    #[test]
    fn rationals_round_trip_through_text(x in rat()) {
        let text = x.to_string();
        prop_assert_eq!(text.parse::<Rat>().unwrap(), x);
    }
}
