//! Array-to-array constructions.
//!
//! Every operation takes a [`Checks`] mode. Under `Verify` and `VerifyForced`
//! the stated preconditions are confirmed with the verifier before anything is
//! built; `Unchecked` trusts the caller.

use crate::error::{precondition, Error, Result};
use crate::model::{Array, LevelProfile};
use crate::util::ceil_div;
use crate::verifier::{VerificationReport, Verifier};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Checks {
    /// Verify preconditions, honouring the verifier's size caps.
    #[default]
    Verify,
    /// Verify preconditions with the size caps lifted.
    VerifyForced,
    /// Skip precondition verification.
    Unchecked,
}

impl Checks {
    fn verifier(self) -> Option<Verifier> {
        match self {
            Checks::Verify => Some(Verifier::default()),
            Checks::VerifyForced => Some(Verifier::forced()),
            Checks::Unchecked => None,
        }
    }

    fn require(
        self,
        what: &str,
        check: impl FnOnce(&Verifier) -> Result<VerificationReport>,
    ) -> Result<()> {
        let Some(v) = self.verifier() else {
            return Ok(());
        };
        let report = check(&v)?;
        if report.verdict {
            return Ok(());
        }
        match report.witness {
            Some(w) => precondition(format!("{what}: {w}")),
            None => precondition(what.to_string()),
        }
    }
}

fn profile_for(levels: Vec<u32>, t: usize) -> Result<LevelProfile> {
    if levels.iter().all(|&v| v >= 2) && t < levels.len() {
        LevelProfile::new(levels, t)
    } else {
        LevelProfile::relaxed(levels, t)
    }
}

fn require_la(checks: Checks, what: &str, a: &Array, t: usize) -> Result<()> {
    checks.require(&format!("{what} is not a (1̄,{t})-LA"), |v| {
        v.is_locating(a, t, 1, true)
    })
}

/// All row pairs `(x, y)`, `x` from `a` outer and `y` from `b` inner, with
/// column `i` holding `x_i * s_i + y_i` where `s_i` is `b`'s level.
pub(crate) fn pair_rows(a: &Array, b: &Array, t: usize) -> Result<Array> {
    if a.k() != b.k() {
        return precondition(format!("column counts differ: {} vs {}", a.k(), b.k()));
    }
    let s = b.levels();
    let levels = a.levels().iter().zip(s).map(|(&x, &y)| x * y).collect();
    let mut cells = Vec::with_capacity(a.n_rows() * b.n_rows() * a.k());
    for x in a.rows() {
        for y in b.rows() {
            cells.extend(x.iter().zip(y).zip(s).map(|((&x, &y), &s)| x * s + y));
        }
    }
    Array::from_cells(profile_for(levels, t)?, a.n_rows() * b.n_rows(), cells)
}

/// Mixed-radix split of column `col`, last factor least significant.
pub(crate) fn split_column_raw(a: &Array, col: usize, factors: &[u32]) -> Result<Array> {
    a.check_column(col)?;
    let mut levels = a.levels()[..col].to_vec();
    levels.extend_from_slice(factors);
    levels.extend_from_slice(&a.levels()[col + 1..]);
    let width = levels.len();
    let mut cells = Vec::with_capacity(a.n_rows() * width);
    let mut digits = vec![0; factors.len()];
    for row in a.rows() {
        let mut x = row[col];
        for (d, &r) in digits.iter_mut().zip(factors).rev() {
            *d = x % r;
            x /= r;
        }
        cells.extend_from_slice(&row[..col]);
        cells.extend_from_slice(&digits);
        cells.extend_from_slice(&row[col + 1..]);
    }
    Array::from_cells(profile_for(levels, a.strength())?, a.n_rows(), cells)
}

/// Column `col` deleted. Strength is unchanged; `k - 1 == t` is allowed.
pub fn truncate(a: &Array, col: usize, checks: Checks) -> Result<Array> {
    a.check_column(col)?;
    let t = a.strength();
    if a.k() - 1 < t {
        return Err(Error::InvalidStrength { t, k: a.k() - 1 });
    }
    require_la(checks, "input", a, t)?;
    let levels = a.profile().without(col);
    let cells = a
        .rows()
        .flat_map(|row| row[..col].iter().chain(&row[col + 1..]).copied())
        .collect();
    Array::from_cells(profile_for(levels, t)?, a.n_rows(), cells)
}

/// Rows with `symbol` in column `col`, that column removed, at strength `t - 1`.
pub fn derive(a: &Array, col: usize, symbol: u32, checks: Checks) -> Result<Array> {
    a.check_column(col)?;
    let t = a.strength();
    if t < 2 {
        return precondition(format!("derivation needs strength at least 2, got {t}"));
    }
    if symbol >= a.levels()[col] {
        return precondition(format!(
            "symbol {symbol} outside alphabet of size {} in column {}",
            a.levels()[col],
            col + 1
        ));
    }
    require_la(checks, "input", a, t)?;
    let levels = a.profile().without(col);
    let mut cells = Vec::new();
    let mut n = 0;
    for row in a.rows().filter(|row| row[col] == symbol) {
        cells.extend(row[..col].iter().chain(&row[col + 1..]).copied());
        n += 1;
    }
    if n == 0 {
        return precondition(format!("symbol {symbol} never occurs in column {}", col + 1));
    }
    Array::from_cells(profile_for(levels, t - 1)?, n, cells)
}

/// Product of a locating array `a` with a covering array `b` of the same
/// shape. Column `i` of the result has `v_i * s_i` symbols.
pub fn product(a: &Array, b: &Array, checks: Checks) -> Result<Array> {
    let t = a.strength();
    if a.k() != b.k() || t != b.strength() {
        return precondition(format!(
            "shape mismatch: k={}, t={} vs k={}, t={}",
            a.k(),
            t,
            b.k(),
            b.strength()
        ));
    }
    require_la(checks, "first input", a, t)?;
    checks.require(&format!("second input is not an MCA of strength {t}"), |v| {
        v.is_mca(b, t, 1)
    })?;
    pair_rows(a, b, t)
}

/// Replace column `col` (alphabet `r_1 * ... * r_m`) by `m` columns.
pub fn split_column(a: &Array, col: usize, factors: &[u32], checks: Checks) -> Result<Array> {
    a.check_column(col)?;
    if factors.len() < 2 {
        return precondition("need at least two factors");
    }
    if factors[0] < 2 || !factors.windows(2).all(|w| w[0] < w[1]) {
        return precondition(format!("factors {factors:?} are not strictly increasing from 2"));
    }
    let b: u64 = factors.iter().map(|&r| r as u64).product();
    if b != a.levels()[col] as u64 {
        return precondition(format!(
            "factors multiply to {b}, column {} has {} symbols",
            col + 1,
            a.levels()[col]
        ));
    }
    let below_ok = col == 0 || a.levels()[col - 1] < factors[0];
    let above_ok = col + 1 == a.k() || *factors.last().unwrap() < a.levels()[col + 1];
    if !below_ok || !above_ok {
        return precondition("split profile is not strictly increasing");
    }
    let t = a.strength();
    checks.require("input is not a PDIMOA*", |v| v.is_pdimoa_star(a, t))?;
    split_column_raw(a, col, factors)
}

/// Row-pair product of two arrays of the same shape, intended for PDIMOA*
/// inputs. The result itself must be a PDIMOA*, which is what gets checked.
pub fn pdimoa_product(a: &Array, b: &Array, checks: Checks) -> Result<Array> {
    let t = a.strength();
    if a.k() != b.k() || t != b.strength() {
        return precondition(format!(
            "shape mismatch: k={}, t={} vs k={}, t={}",
            a.k(),
            t,
            b.k(),
            b.strength()
        ));
    }
    let out = pair_rows(a, b, t)?;
    checks.require("product is not a PDIMOA*", |v| v.is_pdimoa_star(&out, t))?;
    Ok(out)
}

/// `a` stacked on a copy whose column `col` has symbols
/// `0..new_size - v` moved to `v..new_size`.
pub fn expand_level(a: &Array, col: usize, new_size: u32, checks: Checks) -> Result<Array> {
    a.check_column(col)?;
    let v = a.levels()[col];
    if new_size <= v || new_size > 2 * v {
        return precondition(format!(
            "new size {new_size} outside ({v}, {}] for column {}",
            2 * v,
            col + 1
        ));
    }
    let t = a.strength();
    require_la(checks, "input", a, t)?;
    let shift = new_size - v;
    let mut levels = a.levels().to_vec();
    levels[col] = new_size;
    let mut cells = a.cells().to_vec();
    for row in a.rows() {
        cells.extend(row.iter().enumerate().map(|(c, &x)| {
            if c == col && x < shift {
                x + v
            } else {
                x
            }
        }));
    }
    Array::from_cells(profile_for(levels, t)?, 2 * a.n_rows(), cells)
}

/// Block sizes for merging `v` symbols into `target` groups, largest first.
fn fusion_blocks(v: u32, target: u32) -> Vec<u32> {
    let q = v / target;
    let r = v % target;
    (0..target).map(|i| if i < r { q + 1 } else { q }).collect()
}

/// Merge the `v` symbols of column `col` into `target_size` consecutive blocks.
///
/// Requires a uniform alphabet, a `(1,t)`-DA and a `(d̄,t)`-LA with
/// `d = ceil(v / target_size)`.
pub fn fuse(a: &Array, col: usize, target_size: u32, checks: Checks) -> Result<Array> {
    a.check_column(col)?;
    let t = a.strength();
    if t < 2 {
        return precondition(format!("fusion needs strength at least 2, got {t}"));
    }
    if !a.profile().is_uniform() {
        return precondition("fusion needs a uniform alphabet");
    }
    let v = a.levels()[col];
    if target_size < 2 || target_size >= v {
        return precondition(format!("target size {target_size} outside [2, {v})"));
    }
    checks.require(&format!("input is not a (1,{t})-DA"), |ver| {
        ver.is_detecting(a, t, 1)
    })?;
    let d = ceil_div(v as u128, target_size as u128) as usize;
    checks.require(&format!("input is not a ({d}̄,{t})-LA"), |ver| {
        ver.is_locating(a, t, d, true)
    })?;
    let mut map = Vec::with_capacity(v as usize);
    for (symbol, size) in fusion_blocks(v, target_size).into_iter().enumerate() {
        map.extend(std::iter::repeat_n(symbol as u32, size as usize));
    }
    let mut levels = a.levels().to_vec();
    levels[col] = target_size;
    let cells = a
        .rows()
        .flat_map(|row| {
            let map = &map;
            row.iter()
                .enumerate()
                .map(move |(c, &x)| if c == col { map[x as usize] } else { x })
        })
        .collect();
    Array::from_cells(profile_for(levels, t)?, a.n_rows(), cells)
}

fn require_minor(
    checks: Checks,
    what: &str,
    a: &Array,
    minor: &Array,
    omit: &[usize],
    t: usize,
) -> Result<()> {
    let mut expected = a.levels().to_vec();
    for &c in omit.iter().rev() {
        expected.remove(c);
    }
    if minor.levels() != expected {
        return precondition(format!(
            "{what} has levels {:?}, expected {expected:?}",
            minor.levels()
        ));
    }
    require_la(checks, what, minor, t)
}

/// Append `rows` of `src` with the given constants inserted at sorted columns.
fn push_with_constants(cells: &mut Vec<u32>, src: &Array, inserts: &[(usize, u32)]) {
    for row in src.rows() {
        let mut it = row.iter().copied();
        let mut next = 0;
        for &(c, value) in inserts {
            cells.extend(it.by_ref().take(c - next));
            cells.push(value);
            next = c + 1;
        }
        cells.extend(it);
    }
}

/// `a` followed by `e` copies of `b`, copy `j` carrying the constant
/// `v_col + j` in a column inserted at `col`.
///
/// `b` must be a `(1̄,t-1)`-LA on the levels of `a` without `col`.
pub fn roux_one(a: &Array, b: &Array, col: usize, e: u32, checks: Checks) -> Result<Array> {
    a.check_column(col)?;
    let t = a.strength();
    if t < 2 {
        return precondition(format!("needs strength at least 2, got {t}"));
    }
    require_minor(checks, "second input", a, b, &[col], t - 1)?;
    require_la(checks, "first input", a, t)?;
    let v = a.levels()[col];
    let mut levels = a.levels().to_vec();
    levels[col] = v + e;
    let mut cells = a.cells().to_vec();
    for j in 0..e {
        push_with_constants(&mut cells, b, &[(col, v + j)]);
    }
    let n = a.n_rows() + e as usize * b.n_rows();
    Array::from_cells(profile_for(levels, t)?, n, cells)
}

/// Two-column version of [`roux_one`]: blocks `a`; `b` with `p` new constants
/// in column `i`; `c` with `q` new constants in column `j`; `d` with all
/// `p * q` constant pairs.
///
/// `b` and `c` are `(1̄,t-1)`-LAs on the levels without `i` and `j`; `d` is a
/// `(1̄,t-2)`-LA on the levels without both. Needs `t >= 3` and `i < j`.
#[allow(clippy::too_many_arguments)]
pub fn roux_two(
    a: &Array,
    b: &Array,
    c: &Array,
    d: &Array,
    i: usize,
    j: usize,
    p: u32,
    q: u32,
    checks: Checks,
) -> Result<Array> {
    a.check_column(j)?;
    if i >= j {
        return precondition(format!("need i < j, got i={}, j={}", i + 1, j + 1));
    }
    let t = a.strength();
    if t < 3 {
        return precondition(format!("needs strength at least 3, got {t}"));
    }
    if p > 0 {
        require_minor(checks, "second input", a, b, &[i], t - 1)?;
    }
    if q > 0 {
        require_minor(checks, "third input", a, c, &[j], t - 1)?;
    }
    if p > 0 && q > 0 {
        require_minor(checks, "fourth input", a, d, &[i, j], t - 2)?;
    }
    require_la(checks, "first input", a, t)?;
    let (vi, vj) = (a.levels()[i], a.levels()[j]);
    let mut levels = a.levels().to_vec();
    levels[i] = vi + p;
    levels[j] = vj + q;
    let mut cells = a.cells().to_vec();
    let mut n = a.n_rows();
    for x in 0..p {
        push_with_constants(&mut cells, b, &[(i, vi + x)]);
        n += b.n_rows();
    }
    for y in 0..q {
        push_with_constants(&mut cells, c, &[(j, vj + y)]);
        n += c.n_rows();
    }
    for x in 0..p {
        for y in 0..q {
            push_with_constants(&mut cells, d, &[(i, vi + x), (j, vj + y)]);
            n += d.n_rows();
        }
    }
    Array::from_cells(profile_for(levels, t)?, n, cells)
}
