mod common;

use locarray::decoder::{locate, simulate_outcomes, Diagnosis, Outcomes};
use locarray::direct::{build_pdimoa_star_t_plus_1, full_factorial};
use locarray::search::cost;
use locarray::verifier::{
    enumerate_interactions, is_detecting, is_locating, is_mca, is_pdimoa, Verifier,
};
use locarray::{canonicalize, parse_array, serialize_array, Array, LevelProfile};
use proptest::prelude::*;

fn arb_array(max_rows: usize) -> impl Strategy<Value = Array> {
    (2usize..=4)
        .prop_flat_map(|k| (prop::collection::vec(2u32..=4, k), 1..k))
        .prop_flat_map(move |(levels, t)| {
            let row = levels.iter().map(|&v| 0..v).collect::<Vec<_>>();
            (
                Just(levels),
                Just(t),
                prop::collection::vec(row, 1..=max_rows),
            )
        })
        .prop_map(|(levels, t, rows)| Array::new(LevelProfile::new(levels, t).unwrap(), rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn serialization_round_trip(a in arb_array(16)) {
        prop_assert_eq!(parse_array(&serialize_array(&a)).unwrap(), a);
    }

    #[test]
    fn canonical_form_is_idempotent(a in arb_array(10)) {
        let (once, map) = canonicalize(&a);
        prop_assert!(once.profile().is_sorted());
        let (twice, again) = canonicalize(&once);
        prop_assert_eq!(&twice, &once);
        prop_assert!(again.is_identity());
        prop_assert_eq!(map.restore(&once).unwrap(), a.clone());
        prop_assert_eq!(map.inverse().apply(&once).unwrap(), a);
    }

    #[test]
    fn verdicts_survive_canonicalization(a in arb_array(14)) {
        let (c, _) = canonicalize(&a);
        let t = a.strength();
        let verdicts = |x: &Array| {
            [
                is_mca(x, t, 1).unwrap().verdict,
                is_locating(x, t, 1, true).unwrap().verdict,
                is_locating(x, t, 1, false).unwrap().verdict,
                is_detecting(x, t, 1).unwrap().verdict,
                Verifier::default().is_moa(x, t).unwrap().verdict,
            ]
        };
        prop_assert_eq!(verdicts(&a), verdicts(&c));
    }

    #[test]
    fn verifier_agrees_with_oracles(a in arb_array(14)) {
        let t = a.strength();
        prop_assert_eq!(is_mca(&a, t, 1).unwrap().verdict, common::mca(&a, t, 1));
        prop_assert_eq!(is_mca(&a, t, 2).unwrap().verdict, common::mca(&a, t, 2));
        prop_assert_eq!(is_locating(&a, t, 1, true).unwrap().verdict, common::bar_la1(&a, t));
        prop_assert_eq!(is_locating(&a, t, 1, false).unwrap().verdict, common::unbarred_la1(&a, t));
        prop_assert_eq!(is_detecting(&a, t, 1).unwrap().verdict, common::da1(&a, t));
    }

    #[test]
    fn barred_locating_splits_into_covering_and_locating(a in arb_array(20)) {
        let t = a.strength();
        let v = Verifier::default();
        let literal = v.is_locating_exhaustive(&a, t, 1, true).unwrap().verdict;
        let split = v.is_locating(&a, t, 1, false).unwrap().verdict && v.is_mca(&a, t, 1).unwrap().verdict;
        prop_assert_eq!(literal, split);
        prop_assert_eq!(literal, v.is_locating(&a, t, 1, true).unwrap().verdict);
    }

    #[test]
    fn failure_witnesses_recheck(a in arb_array(12)) {
        let t = a.strength();
        let v = Verifier::default();
        let reports = [
            v.is_mca(&a, t, 1).unwrap(),
            v.is_mca(&a, t, 2).unwrap(),
            v.is_locating(&a, t, 1, true).unwrap(),
            v.is_locating(&a, t, 1, false).unwrap(),
            v.is_locating_exhaustive(&a, t, 1, true).unwrap(),
            v.is_detecting(&a, t, 1).unwrap(),
        ];
        for r in reports {
            prop_assert_eq!(r.verdict, r.witness.is_none());
            if let Some(w) = r.witness {
                prop_assert!(w.recheck(&a), "{}", w);
            }
        }
    }

    #[test]
    fn search_cost_matches_oracle(a in arb_array(16)) {
        let t = a.strength();
        let c = cost(&a, t).unwrap();
        prop_assert_eq!((c.uncovered, c.collisions), common::cost(&a, t));
        prop_assert_eq!(c.total() == 0, common::bar_la1(&a, t));
    }

    #[test]
    fn decoder_round_trip_on_locating_arrays(a in arb_array(20)) {
        let t = a.strength();
        prop_assume!(is_locating(&a, t, 1, true).unwrap().verdict);
        let none = simulate_outcomes(&a, None).unwrap();
        prop_assert_eq!(locate(&a, &none, t).unwrap(), Diagnosis::NoFault);
        for fault in enumerate_interactions(a.profile(), t).unwrap() {
            let o = simulate_outcomes(&a, Some(&fault)).unwrap();
            prop_assert!(o.flags().iter().any(|&f| f));
            prop_assert_eq!(locate(&a, &o, t).unwrap(), Diagnosis::Located(fault));
        }
    }

    #[test]
    fn distinct_index_orthogonal_arrays_locate(
        base in 2u32..=3,
        mults in prop::collection::btree_set(2u32..=5, 2..=3),
    ) {
        let mut levels = vec![base];
        levels.extend(mults.iter().map(|m| base * m));
        let a = build_pdimoa_star_t_plus_1(&levels).unwrap();
        let t = levels.len() - 1;
        prop_assert!(is_pdimoa(&a, t).unwrap().verdict);
        prop_assert!(common::pdimoa_star(&a, t));
        prop_assert!(is_locating(&a, t, 1, true).unwrap().verdict);
    }

    #[test]
    fn factorials_with_distinct_indices_locate(levels in prop::collection::vec(2u32..=5, 3..=4)) {
        let a = full_factorial(&levels, 2).unwrap();
        if is_pdimoa(&a, 2).unwrap().verdict {
            prop_assert!(common::bar_la1(&a, 2));
        }
        prop_assert!(is_locating(&a, 2, 1, true).unwrap().verdict);
    }
}

#[test]
fn outcome_string_round_trip() {
    let o: Outcomes = "pfpf".parse().unwrap();
    assert_eq!(o.to_string().parse::<Outcomes>().unwrap(), o);
}
