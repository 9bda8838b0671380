//! Shared fixtures and slow, independent oracles.
//!
//! The oracles scan rows directly and never touch the library's verifier, so
//! agreement between the two is meaningful.

#![allow(dead_code)]

use std::collections::HashMap;

use locarray::{parse_array, Array};

pub fn load(name: &str) -> Array {
    let path = format!("{}/../core/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse_array(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// 0-based `(col, value)` pairs.
pub type Pairs = Vec<(usize, u32)>;

fn tuples(sizes: &[u32]) -> Vec<Vec<u32>> {
    sizes.iter().fold(vec![Vec::new()], |acc, &v| {
        acc.into_iter()
            .flat_map(|prefix| {
                (0..v).map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect()
    })
}

/// All `t`-way interactions, column subsets taken from bitmasks.
pub fn interactions(levels: &[u32], t: usize) -> Vec<Pairs> {
    let k = levels.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize != t {
            continue;
        }
        let cols: Vec<usize> = (0..k).filter(|c| mask >> c & 1 == 1).collect();
        let sizes: Vec<u32> = cols.iter().map(|&c| levels[c]).collect();
        for values in tuples(&sizes) {
            out.push(cols.iter().copied().zip(values).collect());
        }
    }
    out
}

pub fn rows_of(a: &Array, pairs: &[(usize, u32)]) -> Vec<usize> {
    (0..a.n_rows())
        .filter(|&r| pairs.iter().all(|&(c, v)| a.get(r, c) == v))
        .collect()
}

pub fn row_sets(a: &Array, t: usize) -> Vec<(Pairs, Vec<usize>)> {
    interactions(a.levels(), t)
        .into_iter()
        .map(|p| {
            let rows = rows_of(a, &p);
            (p, rows)
        })
        .collect()
}

pub fn mca(a: &Array, t: usize, lambda: usize) -> bool {
    row_sets(a, t).iter().all(|(_, r)| r.len() >= lambda)
}

/// Distinct single row sets, without requiring coverage.
pub fn unbarred_la1(a: &Array, t: usize) -> bool {
    let sets = row_sets(a, t);
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].1 == sets[j].1 {
                return false;
            }
        }
    }
    true
}

/// Literal `(1̄,t)` definition: sets of size 0 or 1 have pairwise distinct
/// unions. The empty set has the empty union.
pub fn bar_la1(a: &Array, t: usize) -> bool {
    let mut unions: Vec<Vec<usize>> = vec![Vec::new()];
    unions.extend(row_sets(a, t).into_iter().map(|(_, r)| r));
    for i in 0..unions.len() {
        for j in i + 1..unions.len() {
            if unions[i] == unions[j] {
                return false;
            }
        }
    }
    true
}

/// `(1,t)`-detecting: no row set of one interaction sits inside another's.
pub fn da1(a: &Array, t: usize) -> bool {
    let sets = row_sets(a, t);
    for (i, (_, inner)) in sets.iter().enumerate() {
        for (j, (_, outer)) in sets.iter().enumerate() {
            if i != j && inner.iter().all(|r| outer.contains(r)) {
                return false;
            }
        }
    }
    true
}

/// Per-subset index when every tuple on the subset appears equally often.
pub fn moa_indices(a: &Array, t: usize) -> Option<Vec<(Vec<usize>, usize)>> {
    let mut by_cols: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (p, rows) in row_sets(a, t) {
        let cols = p.iter().map(|&(c, _)| c).collect();
        by_cols.entry(cols).or_default().push(rows.len());
    }
    let mut out: Vec<(Vec<usize>, usize)> = Vec::new();
    for (cols, counts) in by_cols {
        if counts.iter().any(|&c| c != counts[0]) {
            return None;
        }
        out.push((cols, counts[0]));
    }
    out.sort();
    Some(out)
}

pub fn pdimoa_star(a: &Array, t: usize) -> bool {
    match moa_indices(a, t) {
        None => false,
        Some(idx) => {
            let mut values: Vec<usize> = idx.iter().map(|e| e.1).collect();
            values.sort_unstable();
            let distinct = values.windows(2).all(|w| w[0] != w[1]);
            distinct && values[0] == 1
        }
    }
}

/// `(uncovered, collisions)` with empty row sets excluded from collisions.
pub fn cost(a: &Array, t: usize) -> (u64, u64) {
    let sets = row_sets(a, t);
    let uncovered = sets.iter().filter(|(_, r)| r.is_empty()).count() as u64;
    let mut collisions = 0;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !sets[i].1.is_empty() && sets[i].1 == sets[j].1 {
                collisions += 1;
            }
        }
    }
    (uncovered, collisions)
}
