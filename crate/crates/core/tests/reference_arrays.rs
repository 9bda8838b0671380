mod common;

use common::load;
use locarray::decoder::{locate, simulate_outcomes, Diagnosis, Outcomes};
use locarray::direct::build_la_2_3;
use locarray::recursive::{derive, expand_level, roux_one, truncate, Checks};
use locarray::search::cost;
use locarray::verifier::{
    is_detecting, is_locating, is_mca, is_mca2_star, is_pdimoa_star, moa_indices, rho, rho_set,
    Witness,
};
use locarray::{parse_array, serialize_array, Error, Interaction, RowSet};

fn t1(pairs: &[(usize, u32)]) -> Interaction {
    Interaction::from_one_based(pairs).unwrap()
}

#[test]
fn twelve_row_array_locates() {
    let a = load("ex31.la");
    assert_eq!((a.n_rows(), a.k()), (12, 5));
    assert!(is_locating(&a, 2, 1, true).unwrap().verdict);
    assert!(common::bar_la1(&a, 2));
}

#[test]
fn twelve_row_array_round_trips() {
    let a = load("ex31.la");
    assert_eq!(parse_array(&serialize_array(&a)).unwrap(), a);
}

#[test]
fn rho_of_printed_rows() {
    let a = load("ex31.la");
    let first = t1(&[(1, 0), (5, 2)]);
    assert_eq!(rho(&a, &first).unwrap().one_based(), [2, 7]);
    let second = t1(&[(1, 1), (5, 0)]);
    let expected: Vec<u32> = common::rows_of(&a, &[(0, 1), (4, 0)])
        .into_iter()
        .chain([1, 6])
        .map(|r| r as u32)
        .collect();
    assert_eq!(rho_set(&a, &[first, second]).unwrap(), RowSet::new(expected));
}

#[test]
fn dropping_a_row_matches_coverage_oracle() {
    let a = load("ex31.la");
    let without = |r: usize| {
        let keep: Vec<usize> = (0..12).filter(|&i| i != r).collect();
        a.select_rows(&keep).unwrap()
    };
    // Every pair in row 1 appears again further down; row 2 holds the only (2:0,5:2).
    let first = without(0);
    assert!(common::mca(&first, 2, 1));
    assert!(is_mca(&first, 2, 1).unwrap().verdict);
    let second = without(1);
    let report = is_mca(&second, 2, 1).unwrap();
    assert!(!common::mca(&second, 2, 1));
    assert!(!report.verdict);
    assert!(report.witness.unwrap().recheck(&second));
    for r in 0..12 {
        let b = without(r);
        assert_eq!(is_mca(&b, 2, 1).unwrap().verdict, common::mca(&b, 2, 1));
    }
}

#[test]
fn twelve_row_array_is_not_orthogonal() {
    let a = load("ex31.la");
    assert!(common::moa_indices(&a, 2).is_none());
    match moa_indices(&a, 2) {
        Err(Error::NotOrthogonal(w)) => {
            assert!(matches!(*w, Witness::NonUniform { .. }));
            assert!(w.recheck(&a));
        }
        other => panic!("expected NotOrthogonal, got {other:?}"),
    }
}

#[test]
fn twelve_row_array_detecting_matches_oracle() {
    let a = load("ex31.la");
    let report = is_detecting(&a, 2, 1).unwrap();
    assert_eq!(report.verdict, common::da1(&a, 2));
    if let Some(w) = report.witness {
        assert!(w.recheck(&a));
    }
}

#[test]
fn twelve_row_array_cost_zero() {
    assert_eq!(cost(&load("ex31.la"), 2).unwrap().total(), 0);
}

#[test]
fn truncate_fourth_column() {
    let a = load("ex31.la");
    let b = truncate(&a, 3, Checks::Verify).unwrap();
    assert_eq!(b.levels(), [2, 2, 2, 3]);
    assert!(is_locating(&b, 2, 1, true).unwrap().verdict);
}

#[test]
fn derive_last_column_symbol_two() {
    let a = load("ex31.la");
    let b = derive(&a, 4, 2, Checks::Verify).unwrap();
    let kept = common::rows_of(&a, &[(4, 2)]);
    assert_eq!(kept.iter().map(|r| r + 1).collect::<Vec<_>>(), [2, 7, 11, 12]);
    assert_eq!(b.n_rows(), 4);
    assert_eq!(b.levels(), [2, 2, 2, 2]);
    for (i, &r) in kept.iter().enumerate() {
        assert_eq!(b.row(i), &a.row(r)[..4]);
    }
    assert!(is_locating(&b, 1, 1, true).unwrap().verdict);
}

#[test]
fn doubling_third_column_gives_both_24_row_arrays() {
    let a = load("ex31.la");
    let m = load("m.la");
    let m_prime = load("m_prime.la");
    assert_eq!(expand_level(&a, 2, 4, Checks::Verify).unwrap(), m);
    assert_eq!(expand_level(&a, 2, 3, Checks::Verify).unwrap(), m_prime);
    assert!(expand_level(&a, 2, 5, Checks::Verify).is_err());
    for x in [&m, &m_prime] {
        assert!(is_locating(x, 2, 1, true).unwrap().verdict);
        assert!(common::bar_la1(x, 2));
    }
}

#[test]
fn roux_one_on_fourth_column() {
    let a = load("ex31.la");
    let b = derive(&a, 3, 0, Checks::Verify).unwrap();
    assert_eq!(b.levels(), [2, 2, 2, 3]);
    let c = roux_one(&a, &b, 3, 1, Checks::Verify).unwrap();
    assert_eq!(c.n_rows(), 12 + b.n_rows());
    assert_eq!(c.levels(), [2, 2, 2, 3, 3]);
    assert!(common::bar_la1(&c, 2));
}

#[test]
fn orthogonal_24_row_indices() {
    let a = load("ex1_pdimoa.la");
    let p = moa_indices(&a, 2).unwrap();
    assert_eq!(p.index_of(&[0, 1]), Some(3));
    assert_eq!(p.index_of(&[0, 2]), Some(2));
    assert_eq!(p.index_of(&[1, 2]), Some(1));
    assert!(is_pdimoa_star(&a, 2).unwrap().verdict);
    assert!(common::pdimoa_star(&a, 2));
    assert!(is_locating(&a, 2, 1, true).unwrap().verdict);
}

#[test]
fn forty_two_row_array_matches_builder() {
    let a = load("la42_367.la");
    assert_eq!(a, build_la_2_3(3, 6, 7).unwrap());
    assert!(common::bar_la1(&a, 2));
    assert!(is_mca2_star(&a, 2).unwrap().verdict);
}

#[test]
fn decoder_on_twelve_row_array() {
    let a = load("ex31.la");
    let fault = t1(&[(1, 0), (5, 2)]);
    let o = simulate_outcomes(&a, Some(&fault)).unwrap();
    assert_eq!(o.failing_rows().one_based(), [2, 7]);
    assert_eq!(locate(&a, &o, 2).unwrap(), Diagnosis::Located(fault));
    assert_eq!(locate(&a, &Outcomes::all_pass(12), 2).unwrap(), Diagnosis::NoFault);
}

#[test]
fn decoder_inconsistent_rows() {
    let a = load("ex31.la");
    let explained = common::row_sets(&a, 2)
        .iter()
        .any(|(_, rows)| rows == &[0, 1]);
    let o: Outcomes = "ffpppppppppp".parse().unwrap();
    let d = locate(&a, &o, 2).unwrap();
    if explained {
        assert!(matches!(d, Diagnosis::Located(_)));
    } else {
        assert_eq!(d, Diagnosis::Inconsistent(RowSet::from_one_based(&[1, 2])));
    }
}
