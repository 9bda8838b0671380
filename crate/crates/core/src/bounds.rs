//! Lower bounds on the size of `(1̄, t)`-locating arrays.
//!
//! With levels sorted `v_1 <= ... <= v_k`, the bound depends on how
//! `v_{k-t}` (the largest level outside the top `t`) compares with
//! `v_{k-t+1}` (the smallest level inside it):
//!
//! | relation                          | case  |
//! |-----------------------------------|-------|
//! | `v_{k-t+1} >= 2 v_{k-t}`          | CASE1 |
//! | `v_{k-t+1} == v_{k-t}`            | CASE2 |
//! | strictly between, `t >= 2`        | CASE3 |
//! | strictly between, `t == 1`        | CASE4 |
//!
//! Every case is folded with the covering floor (product of the `t` largest
//! levels). When the floor is strictly larger than the case formula the
//! result is tagged `MCA_FLOOR`. All arithmetic is exact integer arithmetic.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::LevelProfile;
use crate::util::{binomial, ceil_div, elementary_symmetric};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundCase {
    Case1,
    Case2,
    Case3,
    Case4,
    McaFloor,
}

impl fmt::Display for BoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundCase::Case1 => "CASE1",
            BoundCase::Case2 => "CASE2",
            BoundCase::Case3 => "CASE3",
            BoundCase::Case4 => "CASE4",
            BoundCase::McaFloor => "MCA_FLOOR",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundResult {
    pub value: u128,
    pub case: BoundCase,
    /// 1-based index `i` that maximized the case-2 formula.
    pub witness_i: Option<usize>,
}

impl BoundResult {
    pub fn render(&self) -> String {
        match self.witness_i {
            Some(i) => format!("BOUND {} case={} i={i}", self.value, self.case),
            None => format!("BOUND {} case={}", self.value, self.case),
        }
    }
}

fn sorted_levels(p: &LevelProfile) -> Result<(Vec<u32>, usize)> {
    let t = p.strength();
    if t == 0 || t >= p.k() {
        return Err(Error::InvalidStrength { t, k: p.k() });
    }
    if p.levels().iter().any(|&v| v < 2) {
        return Err(Error::InvalidProfile("alphabet sizes must be at least 2".into()));
    }
    let mut levels = p.levels().to_vec();
    levels.sort_unstable();
    Ok((levels, t))
}

/// Case-2 formula for every valid `i` (1-based), in increasing `i`.
///
/// Empty unless `v_{k-t} == v_{k-t+1}`.
pub fn case2_candidates(p: &LevelProfile) -> Result<Vec<(usize, u128)>> {
    let (levels, t) = sorted_levels(p)?;
    let k = levels.len();
    let pivot = levels[k - t];
    if levels[k - t - 1] != pivot {
        return Ok(Vec::new());
    }
    let first = levels.iter().position(|&v| v == pivot).unwrap();
    Ok((first..k - t)
        .map(|i0| {
            let numerator = 2 * elementary_symmetric(&levels[i0..], t);
            let denominator = 1 + binomial((k - i0) as u128, t as u128);
            (i0 + 1, ceil_div(numerator, denominator))
        })
        .collect())
}

/// Lower bound on the number of rows of any `(1̄, t)`-LA with these levels.
///
/// Levels may be given in any order; they are sorted first.
pub fn lower_bound(p: &LevelProfile) -> Result<BoundResult> {
    let (levels, t) = sorted_levels(p)?;
    let k = levels.len();
    let below = levels[k - t - 1] as u128;
    let above = levels[k - t] as u128;
    let top: u128 = levels[k - t..].iter().map(|&v| v as u128).product();

    let (formula, case, witness_i) = if above == below {
        let (i, value) = case2_candidates(p)?
            .into_iter()
            .fold((0, 0), |best, cand| if cand.1 > best.1 { cand } else { best });
        (value, BoundCase::Case2, Some(i))
    } else if above >= 2 * below {
        (top, BoundCase::Case1, None)
    } else if t >= 2 {
        let spread = ceil_div(
            2 * elementary_symmetric(&levels[k - t - 1..], t),
            (t + 2) as u128,
        );
        let rest: u128 = levels[k - t + 1..].iter().map(|&v| v as u128).product();
        (spread.max(top + rest), BoundCase::Case3, None)
    } else {
        let value = ceil_div(2 * levels[k - 2] as u128 + 2 * levels[k - 1] as u128, 3);
        (value, BoundCase::Case4, None)
    };

    Ok(if top > formula {
        BoundResult {
            value: top,
            case: BoundCase::McaFloor,
            witness_i: None,
        }
    } else {
        BoundResult {
            value: formula,
            case,
            witness_i,
        }
    })
}

/// The case tag [`lower_bound`] reports.
pub fn bound_case(p: &LevelProfile) -> Result<BoundCase> {
    Ok(lower_bound(p)?.case)
}
