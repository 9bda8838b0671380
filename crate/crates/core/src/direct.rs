//! Explicit constructions: index-1 orthogonal arrays, PDIMOA* families and
//! two series of size-optimal locating arrays.
//!
//! Builders check their parameter preconditions but do not certify their
//! output; run the matching verifier predicate on the result.

use itertools::Itertools;

use crate::error::{precondition, Result};
use crate::model::{Array, LevelProfile};
use crate::recursive::{pair_rows, split_column_raw};

/// Every tuple over the given alphabets, last column varying fastest.
///
/// Unit alphabets are allowed, which gives constant columns.
pub fn full_factorial(levels: &[u32], t: usize) -> Result<Array> {
    let profile = LevelProfile::relaxed(levels.to_vec(), t)?;
    let rows = levels
        .iter()
        .map(|&v| 0..v)
        .multi_cartesian_product()
        .collect();
    Array::new(profile, rows)
}

fn oa_sum(v: u32, t: usize) -> Result<Array> {
    let profile = LevelProfile::relaxed(vec![v; t + 1], t)?;
    let rows = (0..t)
        .map(|_| 0..v)
        .multi_cartesian_product()
        .map(|mut row: Vec<u32>| {
            let sum = row.iter().map(|&x| x as u64).sum::<u64>() % v as u64;
            row.push(sum as u32);
            row
        })
        .collect();
    Array::new(profile, rows)
}

/// Index-1 OA with `v^t` rows on `t + 1` columns: all `t`-tuples over `Z_v`
/// followed by their sum mod `v`.
pub fn build_oa_sum(v: u32, t: usize) -> Result<Array> {
    if v < 2 || t < 2 {
        return precondition(format!("need v >= 2 and t >= 2, got v={v}, t={t}"));
    }
    oa_sum(v, t)
}

/// PDIMOA* on `t + 1` columns with strictly increasing levels where the first
/// level divides all others.
///
/// Built as the row-pair product of the full factorial over the quotients
/// `v_i / v_1` (with a constant column in front) and the sum OA over `Z_{v_1}`.
pub fn build_pdimoa_star_t_plus_1(levels: &[u32]) -> Result<Array> {
    if levels.len() < 2 {
        return precondition("need at least two levels");
    }
    let t = levels.len() - 1;
    let base = levels[0];
    if base < 2 {
        return precondition("smallest level must be at least 2");
    }
    if !levels.windows(2).all(|w| w[0] < w[1]) {
        return precondition(format!("levels {levels:?} are not strictly increasing"));
    }
    if let Some(&v) = levels.iter().find(|&&v| v % base != 0) {
        return precondition(format!("{base} does not divide {v}"));
    }
    let mut quotients = vec![1];
    quotients.extend(levels[1..].iter().map(|&v| v / base));
    let helper = full_factorial(&quotients, t)?;
    pair_rows(&helper, &oa_sum(base, t)?, t)
}

/// PDIMOA* on `k` columns where each of the top `t` levels is a multiple
/// (by a factor of at least 2) of the product `M` of the other `k - t`.
///
/// Builds the `t + 1` column array over `(M, v_{k-t+1}, ..., v_k)` and splits
/// the first column back into `v_1, ..., v_{k-t}` by mixed radix.
///
/// When two column subsets have the same level product the indices tie and
/// the output is an MOA but not a PDIMOA*; see the tests for `(2,3,12,18)`.
pub fn build_pdimoa_star_general(levels: &[u32], t: usize) -> Result<Array> {
    let k = levels.len();
    if t == 0 || t >= k {
        return precondition(format!("need 1 <= t < k, got t={t}, k={k}"));
    }
    if !levels.windows(2).all(|w| w[0] < w[1]) {
        return precondition(format!("levels {levels:?} are not strictly increasing"));
    }
    if levels[0] < 2 {
        return precondition("smallest level must be at least 2");
    }
    let low = &levels[..k - t];
    let m: u64 = low.iter().map(|&v| v as u64).product();
    for &v in &levels[k - t..] {
        if !(v as u64).is_multiple_of(m) || (v as u64) / m < 2 {
            return precondition(format!(
                "top level {v} is not a multiple (factor >= 2) of {m}"
            ));
        }
    }
    let mut head = vec![m as u32];
    head.extend_from_slice(&levels[k - t..]);
    let a = build_pdimoa_star_t_plus_1(&head)?;
    if low.len() == 1 {
        return Ok(a);
    }
    split_column_raw(&a, 0, low)
}

/// Size-optimal `(1̄,2)`-LA with `v2 * v3` rows on three columns.
///
/// Row `i0` (0-based) is `((i0 % v3 + i0 / v3) % v1, i0 / v3, i0 % v3)`.
pub fn build_la_2_3(v1: u32, v2: u32, v3: u32) -> Result<Array> {
    if v1 < 2 || v1 > v2 || v2 > v3 {
        return precondition(format!("need 2 <= v1 <= v2 <= v3, got ({v1},{v2},{v3})"));
    }
    if v2 < 2 * v1 {
        return precondition(format!("need v2 >= 2*v1, got v1={v1}, v2={v2}"));
    }
    let profile = LevelProfile::new(vec![v1, v2, v3], 2)?;
    let rows = (0..v2 * v3)
        .map(|i0| {
            let block = i0 / v3;
            let pos = i0 % v3;
            vec![(pos + block) % v1, block, pos]
        })
        .collect();
    Array::new(profile, rows)
}

/// Size-optimal `(1̄,1)`-LA with `v` rows over `(w, ..., w, v)` (`w + 1` columns).
///
/// Rows `0..w` are constant; rows `w..2w` are cyclic shifts tagged with
/// `w..2w` in the last column; any further rows are zero except for the last
/// column, which runs on to `v - 1`.
pub fn build_la_1_w(w: u32, v: u32) -> Result<Array> {
    if w < 2 || w >= v {
        return precondition(format!("need 2 <= w < v, got w={w}, v={v}"));
    }
    if v < 2 * w {
        return precondition(format!("need v >= 2w, got w={w}, v={v}"));
    }
    let mut levels = vec![w; w as usize];
    levels.push(v);
    let profile = LevelProfile::new(levels, 1)?;
    let mut rows = Vec::with_capacity(v as usize);
    for i in 0..w {
        rows.push(vec![i; w as usize + 1]);
    }
    for j in 0..w {
        let mut row: Vec<u32> = (0..w).map(|c| (j + c) % w).collect();
        row.push(w + j);
        rows.push(row);
    }
    for extra in 2 * w..v {
        let mut row = vec![0; w as usize];
        row.push(extra);
        rows.push(row);
    }
    Array::new(profile, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::lower_bound;
    use crate::verifier::{is_locating, is_mca2_star, is_pdimoa_star, moa_indices};

    #[test]
    fn parity_oa() {
        let a = build_oa_sum(2, 2).unwrap();
        let rows: Vec<&[u32]> = a.rows().collect();
        assert_eq!(rows, [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]);
    }

    #[test]
    fn sum_oa_has_unit_indices() {
        for (v, t) in [(3, 2), (2, 3), (4, 2), (3, 3)] {
            let a = build_oa_sum(v, t).unwrap();
            assert_eq!(a.n_rows(), (v as usize).pow(t as u32));
            let p = moa_indices(&a, t).unwrap();
            assert_eq!(p.entries.len(), t + 1);
            assert!(p.entries.iter().all(|e| e.1 == 1));
        }
        assert!(build_oa_sum(1, 2).is_err());
        assert!(build_oa_sum(3, 1).is_err());
    }

    #[test]
    fn pdimoa_246() {
        let a = build_pdimoa_star_t_plus_1(&[2, 4, 6]).unwrap();
        assert_eq!((a.n_rows(), a.k()), (24, 3));
        assert!(is_pdimoa_star(&a, 2).unwrap().verdict);
        assert!(is_locating(&a, 2, 1, true).unwrap().verdict);
    }

    #[test]
    fn pdimoa_369() {
        let a = build_pdimoa_star_t_plus_1(&[3, 6, 9]).unwrap();
        assert_eq!(a.n_rows(), 54);
        assert!(is_pdimoa_star(&a, 2).unwrap().verdict);
    }

    #[test]
    fn pdimoa_rejects_non_divisible() {
        assert!(build_pdimoa_star_t_plus_1(&[2, 4, 7]).is_err());
        assert!(build_pdimoa_star_t_plus_1(&[2, 4, 4]).is_err());
    }

    #[test]
    fn pdimoa_strength_three() {
        let a = build_pdimoa_star_t_plus_1(&[2, 4, 6, 8]).unwrap();
        assert_eq!(a.n_rows(), 4 * 6 * 8);
        assert!(is_pdimoa_star(&a, 3).unwrap().verdict);
    }

    #[test]
    fn general_reduces_to_t_plus_1() {
        assert_eq!(
            build_pdimoa_star_general(&[2, 4, 6], 2).unwrap(),
            build_pdimoa_star_t_plus_1(&[2, 4, 6]).unwrap()
        );
    }

    #[test]
    fn general_2_3_12_18_locates_but_indices_tie() {
        let a = build_pdimoa_star_general(&[2, 3, 12, 18], 2).unwrap();
        assert_eq!((a.n_rows(), a.k()), (216, 4));
        assert!(is_locating(&a, 2, 1, true).unwrap().verdict);
        assert_eq!(lower_bound(a.profile()).unwrap().value, 216);
        // 2*18 == 3*12, so columns {1,4} and {2,3} both have index 6.
        let p = moa_indices(&a, 2).unwrap();
        assert_eq!(p.index_of(&[0, 3]), Some(6));
        assert_eq!(p.index_of(&[1, 2]), Some(6));
        assert!(!is_pdimoa_star(&a, 2).unwrap().verdict);
    }

    #[test]
    fn general_with_distinct_products_is_pdimoa_star() {
        let a = build_pdimoa_star_general(&[2, 3, 12, 30], 2).unwrap();
        assert_eq!(a.n_rows(), 360);
        assert!(is_pdimoa_star(&a, 2).unwrap().verdict);
        assert!(is_locating(&a, 2, 1, true).unwrap().verdict);
    }

    #[test]
    fn general_rejects_bad_levels() {
        assert!(build_pdimoa_star_general(&[2, 3, 12, 12], 2).is_err());
        assert!(build_pdimoa_star_general(&[2, 3, 6, 18], 2).is_err());
        assert!(build_pdimoa_star_general(&[2, 3, 12, 18], 4).is_err());
    }

    #[test]
    fn la_2_3_example_367() {
        let a = build_la_2_3(3, 6, 7).unwrap();
        assert_eq!(a.n_rows(), 42);
        let col1: Vec<u32> = a.column(0).collect();
        let expected: Vec<u32> = (0..42).map(|i| i % 3).collect();
        assert_eq!(col1, expected);
        assert!(is_locating(&a, 2, 1, true).unwrap().verdict);
        assert!(is_mca2_star(&a, 2).unwrap().verdict);
        assert_eq!(lower_bound(a.profile()).unwrap().value, 42);
    }

    #[test]
    fn la_2_3_preconditions() {
        assert_eq!(build_la_2_3(2, 4, 4).unwrap().n_rows(), 16);
        assert!(build_la_2_3(2, 3, 4).is_err());
        assert!(build_la_2_3(1, 4, 4).is_err());
        assert!(build_la_2_3(2, 5, 4).is_err());
    }

    #[test]
    fn la_1_w_small() {
        let a = build_la_1_w(2, 4).unwrap();
        let rows: Vec<&[u32]> = a.rows().collect();
        assert_eq!(rows, [[0, 0, 0], [1, 1, 1], [0, 1, 2], [1, 0, 3]]);
        assert!(is_locating(&a, 1, 1, true).unwrap().verdict);
        let b = build_la_1_w(2, 5).unwrap();
        assert_eq!(b.n_rows(), 5);
        assert_eq!(b.column(2).collect::<Vec<_>>(), [0, 1, 2, 3, 4]);
        assert!(is_locating(&b, 1, 1, true).unwrap().verdict);
        assert!(build_la_1_w(3, 5).is_err());
        assert!(build_la_1_w(1, 4).is_err());
    }
}
