//! Brute-force decision procedures for coverage, location, detection and
//! orthogonality.
//!
//! Every procedure works from a [`RhoTable`]: for each `t`-subset of columns,
//! the rows carrying each value tuple. Interactions are always visited in the
//! same lexicographic order (column subsets first, then value tuples with the
//! last column varying fastest), so the first witness found is deterministic
//! regardless of how many worker threads built the table.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::model::{canonicalize, Array, Interaction, LevelProfile, RowSet};
use crate::util::{binomial, elementary_symmetric, Bits};

/// Largest number of single interactions examined without `force`.
pub const INTERACTION_CAP: u128 = 1_000_000;
/// Largest number of interaction sets examined without `force`.
pub const SET_CAP: u128 = 10_000_000;

/// Number of `t`-way interactions for a profile.
pub fn interaction_count(profile: &LevelProfile, t: usize) -> u128 {
    elementary_symmetric(profile.levels(), t)
}

fn check_strength(k: usize, t: usize) -> Result<()> {
    if t == 0 || t > k {
        return Err(Error::InvalidStrength { t, k });
    }
    Ok(())
}

/// All `t`-way interactions in lexicographic order.
pub fn enumerate_interactions(
    profile: &LevelProfile,
    t: usize,
) -> Result<impl Iterator<Item = Interaction> + '_> {
    check_strength(profile.k(), t)?;
    Ok((0..profile.k()).combinations(t).flat_map(move |cols| {
        let radices: Vec<u32> = cols.iter().map(|&c| profile.level(c)).collect();
        let total: u64 = radices.iter().map(|&r| r as u64).product();
        (0..total).map(move |code| decode(&cols, &radices, code))
    }))
}

fn decode(cols: &[usize], radices: &[u32], mut code: u64) -> Interaction {
    let mut values = vec![0u32; cols.len()];
    for i in (0..cols.len()).rev() {
        values[i] = (code % radices[i] as u64) as u32;
        code /= radices[i] as u64;
    }
    Interaction::from_sorted(cols.iter().copied().zip(values).collect())
}

/// Rows of `a` containing every pair of `interaction`. The empty interaction
/// has the empty row set.
pub fn rho(a: &Array, interaction: &Interaction) -> Result<RowSet> {
    interaction.validate(a.profile())?;
    if interaction.is_empty() {
        return Ok(RowSet::default());
    }
    let rows = a
        .rows()
        .enumerate()
        .filter(|(_, row)| interaction.matches(row))
        .map(|(r, _)| r as u32)
        .collect();
    Ok(RowSet::from_sorted(rows))
}

/// Union of [`rho`] over a set of interactions.
pub fn rho_set(a: &Array, interactions: &[Interaction]) -> Result<RowSet> {
    interactions
        .iter()
        .try_fold(RowSet::default(), |acc, t| Ok(acc.union(&rho(a, t)?)))
}

struct SubsetTable {
    columns: Vec<usize>,
    radices: Vec<u32>,
    buckets: Vec<Vec<u32>>,
}

/// Row sets of every `t`-way interaction of an array.
pub struct RhoTable {
    n_rows: usize,
    subsets: Vec<SubsetTable>,
}

impl RhoTable {
    pub fn build(a: &Array, t: usize) -> Result<Self> {
        check_strength(a.k(), t)?;
        let subsets: Vec<Vec<usize>> = (0..a.k()).combinations(t).collect();
        let subsets = subsets
            .into_par_iter()
            .map(|columns| {
                let radices: Vec<u32> = columns.iter().map(|&c| a.levels()[c]).collect();
                let total: usize = radices.iter().map(|&r| r as usize).product();
                let mut buckets = vec![Vec::new(); total];
                for (r, row) in a.rows().enumerate() {
                    let code = columns
                        .iter()
                        .zip(&radices)
                        .fold(0usize, |acc, (&c, &rad)| acc * rad as usize + row[c] as usize);
                    buckets[code].push(r as u32);
                }
                SubsetTable {
                    columns,
                    radices,
                    buckets,
                }
            })
            .collect();
        Ok(Self {
            n_rows: a.n_rows(),
            subsets,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn len(&self) -> usize {
        self.subsets.iter().map(|s| s.buckets.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(interaction, rows)` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Interaction, &[u32])> + '_ {
        self.subsets.iter().flat_map(|s| {
            s.buckets
                .iter()
                .enumerate()
                .map(move |(code, rows)| (decode(&s.columns, &s.radices, code as u64), rows.as_slice()))
        })
    }

    fn subset_tables(&self) -> &[SubsetTable] {
        &self.subsets
    }
}

/// Which property a report speaks to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Mca { lambda: usize },
    Locating { d: usize, barred: bool },
    Detecting { d: usize },
    Moa,
    Pdimoa,
    PdimoaStar,
    Mca2Star,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Mca { .. } => f.write_str("mca"),
            Property::Locating { barred: true, .. } => f.write_str("bar-la"),
            Property::Locating { barred: false, .. } => f.write_str("la"),
            Property::Detecting { .. } => f.write_str("da"),
            Property::Moa => f.write_str("moa"),
            Property::Pdimoa => f.write_str("pdimoa"),
            Property::PdimoaStar => f.write_str("pdimoa-star"),
            Property::Mca2Star => f.write_str("mca2-star"),
        }
    }
}

/// Counterexample attached to a false verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Interaction seen in fewer than `required` rows.
    Undercovered {
        interaction: Interaction,
        rows: RowSet,
        required: usize,
    },
    /// Two different interaction sets with the same row union.
    Collision {
        first: Vec<Interaction>,
        second: Vec<Interaction>,
        rows: RowSet,
    },
    /// `inner` is not in `outer`, yet its rows lie inside the rows of `outer`.
    Containment {
        inner: Interaction,
        outer: Vec<Interaction>,
        inner_rows: RowSet,
        outer_rows: RowSet,
    },
    /// Two tuples on one column subset with different counts.
    NonUniform {
        columns: Vec<usize>,
        first: (Vec<u32>, usize),
        second: (Vec<u32>, usize),
    },
    /// Two column subsets sharing one index.
    IndexTie {
        first: Vec<usize>,
        second: Vec<usize>,
        index: u64,
    },
    /// No column subset has index 1.
    NoUnitIndex { min_index: u64 },
    /// Interaction whose multiplicity breaks the exactly-once / at-least-twice split.
    Multiplicity {
        interaction: Interaction,
        rows: RowSet,
        expected_unique: bool,
    },
}

fn render_set(set: &[Interaction]) -> String {
    if set.is_empty() {
        return "-".into();
    }
    set.iter().map(|t| t.to_string()).join(";")
}

fn render_cols(cols: &[usize]) -> String {
    cols.iter().map(|c| c + 1).join(",")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Undercovered {
                interaction,
                rows,
                required,
            } => write!(f, "WITNESS T1={interaction} rho={rows} need={required}"),
            Witness::Collision {
                first,
                second,
                rows,
            } => write!(
                f,
                "WITNESS T1={} T2={} rho={rows}",
                render_set(first),
                render_set(second)
            ),
            Witness::Containment {
                inner,
                outer,
                inner_rows,
                outer_rows,
            } => write!(
                f,
                "WITNESS T1={inner} T2={} rho={inner_rows} within={outer_rows}",
                render_set(outer)
            ),
            Witness::NonUniform {
                columns,
                first,
                second,
            } => write!(
                f,
                "WITNESS columns={} tuple={} count={} tuple={} count={}",
                render_cols(columns),
                first.0.iter().join(","),
                first.1,
                second.0.iter().join(","),
                second.1
            ),
            Witness::IndexTie {
                first,
                second,
                index,
            } => write!(
                f,
                "WITNESS columns={} columns={} index={index}",
                render_cols(first),
                render_cols(second)
            ),
            Witness::NoUnitIndex { min_index } => write!(f, "WITNESS min-index={min_index}"),
            Witness::Multiplicity {
                interaction,
                rows,
                expected_unique,
            } => write!(
                f,
                "WITNESS T1={interaction} rho={rows} expected={}",
                if *expected_unique { "1" } else { ">=2" }
            ),
        }
    }
}

fn count_matching(a: &Array, columns: &[usize], tuple: &[u32]) -> usize {
    a.rows()
        .filter(|row| columns.iter().zip(tuple).all(|(&c, &v)| row[c] == v))
        .count()
}

fn subset_index(a: &Array, columns: &[usize]) -> Option<u64> {
    let prod: u64 = columns.iter().map(|&c| a.levels()[c] as u64).product();
    (a.n_rows() as u64).is_multiple_of(prod).then(|| a.n_rows() as u64 / prod)
}

impl Witness {
    /// Re-derives the violation from scratch by scanning rows.
    pub fn recheck(&self, a: &Array) -> bool {
        match self {
            Witness::Undercovered {
                interaction,
                rows,
                required,
            } => rho(a, interaction).is_ok_and(|r| &r == rows && r.len() < *required),
            Witness::Collision {
                first,
                second,
                rows,
            } => {
                let norm = |s: &[Interaction]| s.iter().cloned().sorted().collect::<Vec<_>>();
                norm(first) != norm(second)
                    && rho_set(a, first).is_ok_and(|r| &r == rows)
                    && rho_set(a, second).is_ok_and(|r| &r == rows)
            }
            Witness::Containment {
                inner,
                outer,
                inner_rows,
                outer_rows,
            } => {
                !outer.contains(inner)
                    && rho(a, inner).is_ok_and(|r| &r == inner_rows)
                    && rho_set(a, outer).is_ok_and(|r| &r == outer_rows)
                    && inner_rows.is_subset(outer_rows)
            }
            Witness::NonUniform {
                columns,
                first,
                second,
            } => {
                first.1 != second.1
                    && count_matching(a, columns, &first.0) == first.1
                    && count_matching(a, columns, &second.0) == second.1
            }
            Witness::IndexTie {
                first,
                second,
                index,
            } => {
                first != second
                    && subset_index(a, first) == Some(*index)
                    && subset_index(a, second) == Some(*index)
            }
            Witness::NoUnitIndex { min_index } => {
                *min_index > 1
                    && (0..a.k())
                        .combinations(a.strength().min(a.k()))
                        .all(|cols| subset_index(a, &cols) != Some(1))
            }
            Witness::Multiplicity {
                interaction,
                rows,
                expected_unique,
            } => rho(a, interaction).is_ok_and(|r| {
                &r == rows && if *expected_unique { r.len() != 1 } else { r.len() < 2 }
            }),
        }
    }
}

/// Verdict plus an optional counterexample.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub property: Property,
    pub verdict: bool,
    pub witness: Option<Witness>,
    /// Interactions (or interaction sets) examined.
    pub checked: u64,
    pub note: Option<String>,
}

impl VerificationReport {
    fn pass(property: Property, checked: u64) -> Self {
        Self {
            property,
            verdict: true,
            witness: None,
            checked,
            note: None,
        }
    }

    fn fail(property: Property, witness: Witness, checked: u64) -> Self {
        Self {
            property,
            verdict: false,
            witness: Some(witness),
            checked,
            note: None,
        }
    }

    fn relabel(mut self, property: Property) -> Self {
        self.property = property;
        self
    }

    pub fn render(&self) -> String {
        let mut out = format!("VERDICT {} {}\n", self.property, self.verdict);
        if let Some(w) = &self.witness {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        if let Some(note) = &self.note {
            out.push_str("NOTE ");
            out.push_str(note);
            out.push('\n');
        }
        out
    }
}

/// Per-subset indices of a mixed orthogonal array, in lexicographic subset order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexProfile {
    pub entries: Vec<(Vec<usize>, u64)>,
}

impl IndexProfile {
    pub fn index_of(&self, columns: &[usize]) -> Option<u64> {
        self.entries
            .iter()
            .find(|(c, _)| c == columns)
            .map(|(_, l)| *l)
    }

    pub fn min_index(&self) -> u64 {
        self.entries.iter().map(|e| e.1).min().unwrap_or(0)
    }
}

/// Brute-force verifier. `force` lifts the size caps.
#[derive(Clone, Copy, Debug, Default)]
pub struct Verifier {
    pub force: bool,
}

impl Verifier {
    pub fn forced() -> Self {
        Self { force: true }
    }

    fn cap(&self, what: &'static str, count: u128, cap: u128) -> Result<()> {
        if !self.force && count > cap {
            return Err(Error::SizeCap { what, count, cap });
        }
        Ok(())
    }

    fn table(&self, a: &Array, t: usize) -> Result<RhoTable> {
        check_strength(a.k(), t)?;
        self.cap("interactions", interaction_count(a.profile(), t), INTERACTION_CAP)?;
        RhoTable::build(a, t)
    }

    pub fn is_mca(&self, a: &Array, t: usize, lambda: usize) -> Result<VerificationReport> {
        let table = self.table(a, t)?;
        Ok(mca_from_table(&table, lambda))
    }

    /// `(d, t)`-locating, or `(d̄, t)`-locating when `barred`.
    ///
    /// For `d = 1` barred, checks coverage and then distinct single row sets,
    /// which is equivalent to the set-pair definition. Use
    /// [`Verifier::is_locating_exhaustive`] for the literal definition.
    pub fn is_locating(
        &self,
        a: &Array,
        t: usize,
        d: usize,
        barred: bool,
    ) -> Result<VerificationReport> {
        if d == 0 {
            return Err(Error::Precondition("fault count d must be at least 1".into()));
        }
        let property = Property::Locating { d, barred };
        if d > 1 {
            return self.is_locating_exhaustive(a, t, d, barred);
        }
        let table = self.table(a, t)?;
        if barred {
            let cover = mca_from_table(&table, 1);
            if !cover.verdict {
                return Ok(cover.relabel(property));
            }
        }
        Ok(distinct_singles(&table).relabel(property))
    }

    /// Literal set-pair definition: every two distinct interaction sets of
    /// size `d` (or at most `d` when `barred`, empty set included) must have
    /// different row unions.
    pub fn is_locating_exhaustive(
        &self,
        a: &Array,
        t: usize,
        d: usize,
        barred: bool,
    ) -> Result<VerificationReport> {
        if d == 0 {
            return Err(Error::Precondition("fault count d must be at least 1".into()));
        }
        check_strength(a.k(), t)?;
        let n = interaction_count(a.profile(), t);
        let sizes: Vec<usize> = if barred { (0..=d).collect() } else { vec![d] };
        let sets: u128 = sizes.iter().map(|&s| binomial(n, s as u128)).sum();
        self.cap("interaction sets", sets, SET_CAP)?;
        let table = self.table(a, t)?;
        let (interactions, bits): (Vec<Interaction>, Vec<Bits>) = table
            .iter()
            .map(|(t, rows)| (t, Bits::from_rows(a.n_rows(), rows)))
            .unzip();
        let property = Property::Locating { d, barred };
        let mut seen: FxHashMap<Bits, Vec<usize>> = FxHashMap::default();
        let mut checked = 0u64;
        for size in sizes {
            for combo in (0..interactions.len()).combinations(size) {
                checked += 1;
                let mut union = Bits::zeros(a.n_rows());
                for &i in &combo {
                    union.or_assign(&bits[i]);
                }
                if let Some(prev) = seen.get(&union) {
                    let pick = |idx: &[usize]| idx.iter().map(|&i| interactions[i].clone()).collect();
                    let witness = Witness::Collision {
                        first: pick(prev),
                        second: pick(&combo),
                        rows: RowSet::from_sorted(union.to_rows()),
                    };
                    return Ok(VerificationReport::fail(property, witness, checked));
                }
                seen.insert(union, combo);
            }
        }
        Ok(VerificationReport::pass(property, checked))
    }

    /// `(d, t)`-detecting: `rho(T)` lies inside `rho(𝒯)` only when `T ∈ 𝒯`, for `|𝒯| = d`.
    pub fn is_detecting(&self, a: &Array, t: usize, d: usize) -> Result<VerificationReport> {
        if d == 0 {
            return Err(Error::Precondition("fault count d must be at least 1".into()));
        }
        check_strength(a.k(), t)?;
        let n = interaction_count(a.profile(), t);
        if d > 1 {
            self.cap(
                "interaction sets",
                n * binomial(n.saturating_sub(1), d as u128),
                SET_CAP,
            )?;
        }
        let table = self.table(a, t)?;
        let mut report = if d == 1 {
            detecting_single(&table)
        } else {
            detecting_sets(&table, d)
        };
        if !a.profile().is_uniform() {
            report.note = Some(
                "detecting semantics applied to a mixed-alphabet array (defined for uniform alphabets)"
                    .into(),
            );
        }
        Ok(report)
    }

    /// Index per column subset, or the non-uniform counts that rule it out.
    pub fn moa_indices(&self, a: &Array, t: usize) -> Result<IndexProfile> {
        let table = self.table(a, t)?;
        let mut entries = Vec::with_capacity(table.subset_tables().len());
        for s in table.subset_tables() {
            let base = s.buckets[0].len();
            if let Some((code, rows)) = s
                .buckets
                .iter()
                .enumerate()
                .find(|(_, rows)| rows.len() != base)
            {
                let tuple = |code: usize| {
                    decode(&s.columns, &s.radices, code as u64)
                        .pairs()
                        .iter()
                        .map(|p| p.1)
                        .collect::<Vec<_>>()
                };
                return Err(Error::NotOrthogonal(Box::new(Witness::NonUniform {
                    columns: s.columns.clone(),
                    first: (tuple(0), base),
                    second: (tuple(code), rows.len()),
                })));
            }
            entries.push((s.columns.clone(), base as u64));
        }
        Ok(IndexProfile { entries })
    }

    pub fn is_moa(&self, a: &Array, t: usize) -> Result<VerificationReport> {
        self.moa_report(a, t, Property::Moa, |_| None)
    }

    pub fn is_pdimoa(&self, a: &Array, t: usize) -> Result<VerificationReport> {
        self.moa_report(a, t, Property::Pdimoa, index_tie)
    }

    pub fn is_pdimoa_star(&self, a: &Array, t: usize) -> Result<VerificationReport> {
        self.moa_report(a, t, Property::PdimoaStar, |p| {
            index_tie(p).or_else(|| {
                let min_index = p.min_index();
                (min_index != 1).then_some(Witness::NoUnitIndex { min_index })
            })
        })
    }

    fn moa_report(
        &self,
        a: &Array,
        t: usize,
        property: Property,
        extra: impl Fn(&IndexProfile) -> Option<Witness>,
    ) -> Result<VerificationReport> {
        let checked = (0..a.k()).combinations(t.min(a.k())).count() as u64;
        match self.moa_indices(a, t) {
            Ok(p) => Ok(match extra(&p) {
                Some(w) => VerificationReport::fail(property, w, checked),
                None => VerificationReport::pass(property, checked),
            }),
            Err(Error::NotOrthogonal(w)) => Ok(VerificationReport::fail(property, *w, checked)),
            Err(e) => Err(e),
        }
    }

    /// Exactly-once coverage on the `t` largest columns, at least twice elsewhere.
    ///
    /// Columns are ordered by alphabet size (stable) before "last `t`" is
    /// taken; witnesses refer to the caller's column numbering. An array whose
    /// size differs from the product of the `t` largest alphabets always
    /// fails, since some tuple on the last `t` columns is then missing or
    /// repeated.
    pub fn is_mca2_star(&self, a: &Array, t: usize) -> Result<VerificationReport> {
        check_strength(a.k(), t)?;
        let (canon, map) = canonicalize(a);
        let table = self.table(&canon, t)?;
        let last: Vec<usize> = (canon.k() - t..canon.k()).collect();
        let mut checked = 0;
        for (interaction, rows) in table.iter() {
            checked += 1;
            let unique = interaction.columns().eq(last.iter().copied());
            let ok = if unique { rows.len() == 1 } else { rows.len() >= 2 };
            if !ok {
                let original = Interaction::new(
                    interaction
                        .pairs()
                        .iter()
                        .map(|&(c, v)| (map.permutation()[c], v))
                        .collect(),
                )?;
                let witness = Witness::Multiplicity {
                    interaction: original,
                    rows: RowSet::from_sorted(rows.to_vec()),
                    expected_unique: unique,
                };
                return Ok(VerificationReport::fail(Property::Mca2Star, witness, checked));
            }
        }
        Ok(VerificationReport::pass(Property::Mca2Star, checked))
    }
}

fn index_tie(p: &IndexProfile) -> Option<Witness> {
    p.entries
        .iter()
        .tuple_combinations()
        .find(|(x, y)| x.1 == y.1)
        .map(|(x, y)| Witness::IndexTie {
            first: x.0.clone(),
            second: y.0.clone(),
            index: x.1,
        })
}

fn mca_from_table(table: &RhoTable, lambda: usize) -> VerificationReport {
    let property = Property::Mca { lambda };
    let mut checked = 0;
    for (interaction, rows) in table.iter() {
        checked += 1;
        if rows.len() < lambda {
            let witness = Witness::Undercovered {
                interaction,
                rows: RowSet::from_sorted(rows.to_vec()),
                required: lambda,
            };
            return VerificationReport::fail(property, witness, checked);
        }
    }
    VerificationReport::pass(property, checked)
}

fn distinct_singles(table: &RhoTable) -> VerificationReport {
    let property = Property::Locating {
        d: 1,
        barred: false,
    };
    let mut seen: FxHashMap<&[u32], Interaction> = FxHashMap::default();
    let mut checked = 0;
    for (interaction, rows) in table.iter() {
        checked += 1;
        if let Some(prev) = seen.get(rows) {
            let witness = Witness::Collision {
                first: vec![prev.clone()],
                second: vec![interaction],
                rows: RowSet::from_sorted(rows.to_vec()),
            };
            return VerificationReport::fail(property, witness, checked);
        }
        seen.insert(rows, interaction);
    }
    VerificationReport::pass(property, checked)
}

fn detecting_single(table: &RhoTable) -> VerificationReport {
    let property = Property::Detecting { d: 1 };
    let entries: Vec<(Interaction, &[u32])> = table.iter().collect();
    let mut by_row: Vec<Vec<usize>> = vec![Vec::new(); table.n_rows()];
    for (i, (_, rows)) in entries.iter().enumerate() {
        for &r in rows.iter() {
            by_row[r as usize].push(i);
        }
    }
    let to_set = |rows: &[u32]| RowSet::from_sorted(rows.to_vec());
    let mut checked = 0;
    for (i, (inner, rows)) in entries.iter().enumerate() {
        checked += 1;
        let candidates: Box<dyn Iterator<Item = usize>> = match rows.first() {
            Some(&r) => Box::new(by_row[r as usize].iter().copied()),
            None => Box::new(0..entries.len()),
        };
        for j in candidates.filter(|&j| j != i) {
            let (outer, outer_rows) = &entries[j];
            if sorted_subset(rows, outer_rows) {
                let witness = Witness::Containment {
                    inner: inner.clone(),
                    outer: vec![outer.clone()],
                    inner_rows: to_set(rows),
                    outer_rows: to_set(outer_rows),
                };
                return VerificationReport::fail(property, witness, checked);
            }
        }
    }
    VerificationReport::pass(property, checked)
}

fn sorted_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

fn detecting_sets(table: &RhoTable, d: usize) -> VerificationReport {
    let property = Property::Detecting { d };
    let n_rows = table.n_rows();
    let (interactions, bits): (Vec<Interaction>, Vec<Bits>) = table
        .iter()
        .map(|(t, rows)| (t, Bits::from_rows(n_rows, rows)))
        .unzip();
    let mut checked = 0;
    for i in 0..interactions.len() {
        let others: Vec<usize> = (0..interactions.len()).filter(|&j| j != i).collect();
        for combo in others.into_iter().combinations(d) {
            checked += 1;
            let mut union = Bits::zeros(n_rows);
            for &j in &combo {
                union.or_assign(&bits[j]);
            }
            if bits[i].is_subset(&union) {
                let witness = Witness::Containment {
                    inner: interactions[i].clone(),
                    outer: combo.iter().map(|&j| interactions[j].clone()).collect(),
                    inner_rows: RowSet::from_sorted(bits[i].to_rows()),
                    outer_rows: RowSet::from_sorted(union.to_rows()),
                };
                return VerificationReport::fail(property, witness, checked);
            }
        }
    }
    VerificationReport::pass(property, checked)
}

/// Shorthands over a default [`Verifier`].
pub fn is_mca(a: &Array, t: usize, lambda: usize) -> Result<VerificationReport> {
    Verifier::default().is_mca(a, t, lambda)
}

pub fn is_locating(a: &Array, t: usize, d: usize, barred: bool) -> Result<VerificationReport> {
    Verifier::default().is_locating(a, t, d, barred)
}

pub fn is_detecting(a: &Array, t: usize, d: usize) -> Result<VerificationReport> {
    Verifier::default().is_detecting(a, t, d)
}

pub fn moa_indices(a: &Array, t: usize) -> Result<IndexProfile> {
    Verifier::default().moa_indices(a, t)
}

pub fn is_pdimoa(a: &Array, t: usize) -> Result<VerificationReport> {
    Verifier::default().is_pdimoa(a, t)
}

pub fn is_pdimoa_star(a: &Array, t: usize) -> Result<VerificationReport> {
    Verifier::default().is_pdimoa_star(a, t)
}

pub fn is_mca2_star(a: &Array, t: usize) -> Result<VerificationReport> {
    Verifier::default().is_mca2_star(a, t)
}

/// Barred single-fault locating at the array's own strength.
pub fn is_bar_la(a: &Array) -> Result<bool> {
    Ok(is_locating(a, a.strength(), 1, true)?.verdict)
}
