//! Mixed-level arrays and the objects that index into them.
//!
//! Columns and rows are 0-based throughout the library. Everything rendered
//! for people (interactions, row sets, reports) is 1-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Strength plus the alphabet size of every factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LevelProfile {
    levels: Vec<u32>,
    strength: usize,
}

impl LevelProfile {
    /// A profile with every level at least 2 and `1 <= strength < k`.
    pub fn new(levels: Vec<u32>, strength: usize) -> Result<Self> {
        if let Some(&v) = levels.iter().find(|&&v| v < 2) {
            return Err(Error::InvalidProfile(format!(
                "alphabet size {v} is below 2"
            )));
        }
        if strength == 0 || strength >= levels.len() {
            return Err(Error::InvalidStrength {
                t: strength,
                k: levels.len(),
            });
        }
        Ok(Self { levels, strength })
    }

    /// Like [`LevelProfile::new`] but admits unit alphabets and `strength == k`.
    ///
    /// Only intermediates use this: the constant helper column of the
    /// PDIMOA* construction and truncations that land exactly on `k == t`.
    pub fn relaxed(levels: Vec<u32>, strength: usize) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidProfile("no factors".into()));
        }
        if levels.contains(&0) {
            return Err(Error::InvalidProfile("alphabet size 0".into()));
        }
        if strength == 0 || strength > levels.len() {
            return Err(Error::InvalidStrength {
                t: strength,
                k: levels.len(),
            });
        }
        Ok(Self { levels, strength })
    }

    pub fn k(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn level(&self, col: usize) -> u32 {
        self.levels[col]
    }

    pub fn strength(&self) -> usize {
        self.strength
    }

    pub fn is_uniform(&self) -> bool {
        self.levels.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_sorted(&self) -> bool {
        self.levels.windows(2).all(|w| w[0] <= w[1])
    }

    /// Product of the `t` largest alphabet sizes, the universal covering floor.
    pub fn top_product(&self, t: usize) -> u128 {
        let mut sorted = self.levels.clone();
        sorted.sort_unstable();
        sorted.iter().rev().take(t).map(|&v| v as u128).product()
    }

    /// Same alphabets at a different strength, validated like the original.
    pub fn with_strength(&self, strength: usize) -> Result<Self> {
        if self.levels.iter().all(|&v| v >= 2) && strength < self.k() {
            Self::new(self.levels.clone(), strength)
        } else {
            Self::relaxed(self.levels.clone(), strength)
        }
    }

    /// Levels with column `col` removed.
    pub fn without(&self, col: usize) -> Vec<u32> {
        let mut levels = self.levels.clone();
        levels.remove(col);
        levels
    }
}

/// An `N x k` matrix of levels, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Array {
    profile: LevelProfile,
    n_rows: usize,
    cells: Vec<u32>,
}

impl Array {
    pub fn new(profile: LevelProfile, rows: Vec<Vec<u32>>) -> Result<Self> {
        let k = profile.k();
        let mut cells = Vec::with_capacity(rows.len() * k);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Parse {
                    line: r + 1,
                    msg: format!("row has {} entries, expected {k}", row.len()),
                });
            }
            cells.extend_from_slice(row);
        }
        Self::from_cells(profile, rows.len(), cells)
    }

    pub fn from_cells(profile: LevelProfile, n_rows: usize, cells: Vec<u32>) -> Result<Self> {
        let k = profile.k();
        if n_rows == 0 {
            return Err(Error::InvalidProfile("array has no rows".into()));
        }
        assert_eq!(cells.len(), n_rows * k, "cell count does not match shape");
        for (idx, &value) in cells.iter().enumerate() {
            let col = idx % k;
            if value >= profile.level(col) {
                return Err(Error::EntryOutOfRange {
                    row: idx / k + 1,
                    col: col + 1,
                    value,
                    size: profile.level(col),
                });
            }
        }
        Ok(Self {
            profile,
            n_rows,
            cells,
        })
    }

    pub fn profile(&self) -> &LevelProfile {
        &self.profile
    }

    pub fn levels(&self) -> &[u32] {
        self.profile.levels()
    }

    pub fn strength(&self) -> usize {
        self.profile.strength()
    }

    pub fn k(&self) -> usize {
        self.profile.k()
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.cells[row * self.k() + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        let k = self.k();
        &self.cells[row * k..(row + 1) * k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.cells.chunks(self.k())
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = u32> + '_ {
        self.rows().map(move |row| row[col])
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    /// The same rows tagged with a different strength.
    pub fn with_strength(&self, strength: usize) -> Result<Self> {
        Ok(Self {
            profile: self.profile.with_strength(strength)?,
            n_rows: self.n_rows,
            cells: self.cells.clone(),
        })
    }

    /// Rows selected by index, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Result<Self> {
        let mut cells = Vec::with_capacity(rows.len() * self.k());
        for &r in rows {
            cells.extend_from_slice(self.row(r));
        }
        Self::from_cells(self.profile.clone(), rows.len(), cells)
    }

    pub(crate) fn check_column(&self, col: usize) -> Result<()> {
        if col >= self.k() {
            return Err(Error::InvalidColumn { col, k: self.k() });
        }
        Ok(())
    }
}

/// A set of `(column, value)` pairs on distinct columns, sorted by column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interaction {
    pairs: Vec<(usize, u32)>,
}

impl Interaction {
    /// Builds from 0-based `(column, value)` pairs in any order.
    pub fn new(mut pairs: Vec<(usize, u32)>) -> Result<Self> {
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInteraction(
                "repeated column in interaction".into(),
            ));
        }
        Ok(Self { pairs })
    }

    /// Builds from 1-based columns, matching how interactions are written by hand.
    pub fn from_one_based(pairs: &[(usize, u32)]) -> Result<Self> {
        if pairs.iter().any(|&(c, _)| c == 0) {
            return Err(Error::InvalidInteraction("column 0 in 1-based input".into()));
        }
        Self::new(pairs.iter().map(|&(c, v)| (c - 1, v)).collect())
    }

    pub(crate) fn from_sorted(pairs: Vec<(usize, u32)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        Self { pairs }
    }

    pub fn empty() -> Self {
        Self { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|p| p.0)
    }

    pub fn value_at(&self, col: usize) -> Option<u32> {
        self.pairs.iter().find(|p| p.0 == col).map(|p| p.1)
    }

    pub fn matches(&self, row: &[u32]) -> bool {
        self.pairs.iter().all(|&(c, v)| row[c] == v)
    }

    pub fn validate(&self, profile: &LevelProfile) -> Result<()> {
        for &(c, v) in &self.pairs {
            if c >= profile.k() {
                return Err(Error::InvalidInteraction(format!(
                    "column {} outside 1..{}",
                    c + 1,
                    profile.k()
                )));
            }
            if v >= profile.level(c) {
                return Err(Error::InvalidInteraction(format!(
                    "value {v} outside alphabet of column {} (size {})",
                    c + 1,
                    profile.level(c)
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Interaction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, v)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", c + 1, v)?;
        }
        Ok(())
    }
}

impl FromStr for Interaction {
    type Err = Error;

    /// Parses `col:val,col:val` with 1-based columns.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let mut pairs = Vec::new();
        for part in s.split(',') {
            let (c, v) = part.trim().split_once(':').ok_or_else(|| {
                Error::InvalidInteraction(format!("expected col:val, got {part:?}"))
            })?;
            let c: usize = c
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInteraction(format!("bad column {c:?}")))?;
            let v: u32 = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInteraction(format!("bad value {v:?}")))?;
            pairs.push((c, v));
        }
        Self::from_one_based(&pairs)
    }
}

/// Sorted, duplicate-free 0-based row indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowSet {
    indices: Vec<u32>,
}

impl RowSet {
    pub fn new(mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self { indices }
    }

    pub(crate) fn from_sorted(indices: Vec<u32>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self { indices }
    }

    pub fn from_one_based(indices: &[u32]) -> Self {
        Self::new(indices.iter().map(|&i| i - 1).collect())
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn one_based(&self) -> Vec<u32> {
        self.indices.iter().map(|&i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, row: u32) -> bool {
        self.indices.binary_search(&row).is_ok()
    }

    pub fn is_subset(&self, other: &RowSet) -> bool {
        let mut it = other.indices.iter();
        self.indices
            .iter()
            .all(|x| it.by_ref().any(|y| y == x))
    }

    pub fn union(&self, other: &RowSet) -> RowSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.indices, &other.indices);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        RowSet { indices: out }
    }
}

impl fmt::Display for RowSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return f.write_str("-");
        }
        for (i, r) in self.indices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", r + 1)?;
        }
        Ok(())
    }
}

/// Column permutation plus per-column symbol relabelings.
///
/// Output column `j` takes original column `permutation[j]`, with each
/// original symbol `s` rewritten to `relabel[j][s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMap {
    permutation: Vec<usize>,
    relabel: Vec<Vec<u32>>,
}

impl ColumnMap {
    pub fn new(permutation: Vec<usize>, relabel: Vec<Vec<u32>>) -> Result<Self> {
        let k = permutation.len();
        let mut seen = vec![false; k];
        for &p in &permutation {
            if p >= k || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidProfile(
                    "column permutation is not a bijection".into(),
                ));
            }
        }
        if relabel.len() != k {
            return Err(Error::InvalidProfile("relabeling count mismatch".into()));
        }
        for map in &relabel {
            let mut hit = vec![false; map.len()];
            for &s in map {
                if s as usize >= map.len() || std::mem::replace(&mut hit[s as usize], true) {
                    return Err(Error::InvalidProfile(
                        "symbol relabeling is not a bijection".into(),
                    ));
                }
            }
        }
        Ok(Self {
            permutation,
            relabel,
        })
    }

    pub fn identity(profile: &LevelProfile) -> Self {
        Self {
            permutation: (0..profile.k()).collect(),
            relabel: profile
                .levels()
                .iter()
                .map(|&v| (0..v).collect())
                .collect(),
        }
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn relabeling(&self, col: usize) -> &[u32] {
        &self.relabel[col]
    }

    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| i == p)
            && self
                .relabel
                .iter()
                .all(|m| m.iter().enumerate().all(|(s, &x)| s as u32 == x))
    }

    pub fn inverse(&self) -> Self {
        let k = self.permutation.len();
        let mut permutation = vec![0; k];
        let mut relabel = vec![Vec::new(); k];
        for (j, &p) in self.permutation.iter().enumerate() {
            permutation[p] = j;
            let map = &self.relabel[j];
            let mut inv = vec![0; map.len()];
            for (s, &x) in map.iter().enumerate() {
                inv[x as usize] = s as u32;
            }
            relabel[p] = inv;
        }
        Self {
            permutation,
            relabel,
        }
    }

    pub fn apply(&self, a: &Array) -> Result<Array> {
        if self.permutation.len() != a.k() {
            return Err(Error::InvalidProfile("column map arity mismatch".into()));
        }
        for (j, &p) in self.permutation.iter().enumerate() {
            if self.relabel[j].len() != a.levels()[p] as usize {
                return Err(Error::InvalidProfile(format!(
                    "relabeling for column {} has wrong alphabet size",
                    j + 1
                )));
            }
        }
        let levels = self.permutation.iter().map(|&p| a.levels()[p]).collect();
        let profile = LevelProfile::relaxed(levels, a.strength())?;
        let mut cells = Vec::with_capacity(a.cells().len());
        for row in a.rows() {
            for (j, &p) in self.permutation.iter().enumerate() {
                cells.push(self.relabel[j][row[p] as usize]);
            }
        }
        Array::from_cells(profile, a.n_rows(), cells)
    }

    /// Undo [`ColumnMap::apply`].
    pub fn restore(&self, a: &Array) -> Result<Array> {
        self.inverse().apply(a)
    }
}

/// Sorts columns by alphabet size (stable among ties).
pub fn canonicalize(a: &Array) -> (Array, ColumnMap) {
    let mut permutation: Vec<usize> = (0..a.k()).collect();
    permutation.sort_by_key(|&c| a.levels()[c]);
    let relabel = permutation
        .iter()
        .map(|&p| (0..a.levels()[p]).collect())
        .collect();
    let map = ColumnMap {
        permutation,
        relabel,
    };
    let out = map.apply(a).expect("canonical map matches its own array");
    (out, map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(levels: &[u32], t: usize, rows: &[&[u32]]) -> Array {
        Array::new(
            LevelProfile::new(levels.to_vec(), t).unwrap(),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn profile_rejects_unit_levels_and_bad_strength() {
        assert!(LevelProfile::new(vec![1, 2], 1).is_err());
        assert!(LevelProfile::new(vec![2, 2], 2).is_err());
        assert!(LevelProfile::new(vec![2, 2], 0).is_err());
        assert!(LevelProfile::relaxed(vec![1, 2, 3], 2).is_ok());
        assert!(LevelProfile::relaxed(vec![2, 3], 2).is_ok());
    }

    #[test]
    fn entries_checked_against_alphabet() {
        let p = LevelProfile::new(vec![2, 3], 1).unwrap();
        let err = Array::new(p, vec![vec![0, 3]]).unwrap_err();
        assert!(matches!(err, Error::EntryOutOfRange { value: 3, .. }));
    }

    #[test]
    fn canonicalize_sorts_levels() {
        let a = arr(&[4, 2, 3], 2, &[&[3, 1, 2], &[0, 0, 0]]);
        let (c, map) = canonicalize(&a);
        assert_eq!(c.levels(), &[2, 3, 4]);
        let one_based: Vec<usize> = map.permutation().iter().map(|p| p + 1).collect();
        assert_eq!(one_based, vec![2, 3, 1]);
        assert_eq!(c.row(0), &[1, 2, 3]);
        assert_eq!(map.restore(&c).unwrap(), a);
    }

    #[test]
    fn canonicalize_sorted_is_identity() {
        let a = arr(&[2, 2, 3], 2, &[&[1, 0, 2]]);
        let (c, map) = canonicalize(&a);
        assert!(map.is_identity());
        assert_eq!(c, a);
    }

    #[test]
    fn column_map_with_relabeling_round_trips() {
        let a = arr(&[2, 3], 1, &[&[0, 0], &[1, 2], &[0, 1]]);
        let map = ColumnMap::new(vec![1, 0], vec![vec![2, 0, 1], vec![1, 0]]).unwrap();
        let b = map.apply(&a).unwrap();
        assert_eq!(b.row(1), &[1, 0]);
        assert_eq!(map.restore(&b).unwrap(), a);
        assert!(ColumnMap::new(vec![0, 0], vec![vec![0], vec![0]]).is_err());
    }

    #[test]
    fn interaction_parse_and_display() {
        let t: Interaction = "5:2,1:0".parse().unwrap();
        assert_eq!(t.pairs(), &[(0, 0), (4, 2)]);
        assert_eq!(t.to_string(), "1:0,5:2");
        assert!("1:0,1:1".parse::<Interaction>().is_err());
        assert!("0:1".parse::<Interaction>().is_err());
        assert!("1-0".parse::<Interaction>().is_err());
    }

    #[test]
    fn rowset_ops() {
        let a = RowSet::new(vec![4, 1, 1]);
        let b = RowSet::new(vec![1, 2, 4]);
        assert_eq!(a.indices(), &[1, 4]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.union(&RowSet::new(vec![0])).indices(), &[0, 1, 4]);
        assert_eq!(a.to_string(), "2,5");
        assert_eq!(RowSet::default().to_string(), "-");
    }
}
