//! Seeded simulated annealing for `(1̄,t)`-locating arrays of a given size.
//!
//! The objective counts uncovered `t`-way interactions plus pairs of distinct
//! covered interactions with equal row sets. It is zero exactly when the array
//! is a `(1̄,t)`-LA. Row sets are kept as `u128` masks, so searches are limited
//! to 128 rows.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::bounds::lower_bound;
use crate::error::{Error, Result};
use crate::model::{Array, LevelProfile};
use crate::verifier::{RhoTable, Verifier};

pub const MAX_SEARCH_ROWS: usize = 128;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Cost {
    pub uncovered: u64,
    pub collisions: u64,
}

impl Cost {
    pub fn total(&self) -> u64 {
        self.uncovered + self.collisions
    }
}

/// Full recomputation of the objective at strength `t`.
///
/// Interactions with an empty row set count as uncovered only; they are not
/// also counted as colliding with each other.
pub fn cost(a: &Array, t: usize) -> Result<Cost> {
    let table = RhoTable::build(a, t)?;
    let mut groups: FxHashMap<&[u32], u64> = FxHashMap::default();
    let mut uncovered = 0;
    for (_, rows) in table.iter() {
        if rows.is_empty() {
            uncovered += 1;
        } else {
            *groups.entry(rows).or_default() += 1;
        }
    }
    let collisions = groups.values().map(|&n| n * (n - 1) / 2).sum();
    Ok(Cost {
        uncovered,
        collisions,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchParams {
    pub target_rows: usize,
    pub seed: u64,
    pub max_iterations: u64,
    pub initial_temperature: f64,
    /// Multiplier applied every `steps_per_temperature` iterations.
    pub cooling_ratio: f64,
    pub steps_per_temperature: u64,
    /// Below this the chain restarts from its best state at the initial temperature.
    pub min_temperature: f64,
    pub time_budget: Duration,
    /// Iterations between progress log entries; 0 disables the log.
    pub log_every: u64,
}

impl SearchParams {
    pub fn new(target_rows: usize, seed: u64) -> Self {
        Self {
            target_rows,
            seed,
            max_iterations: 200_000_000,
            initial_temperature: 1.0,
            cooling_ratio: 0.99,
            steps_per_temperature: 1_000,
            min_temperature: 0.05,
            time_budget: Duration::from_secs(120),
            log_every: 100_000,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParams(msg.into()));
        if self.target_rows == 0 || self.target_rows > MAX_SEARCH_ROWS {
            return bad("target rows must be in 1..=128");
        }
        if self.max_iterations == 0 || self.steps_per_temperature == 0 {
            return bad("iteration counts must be positive");
        }
        if !(self.initial_temperature > 0.0 && self.initial_temperature.is_finite()) {
            return bad("initial temperature must be positive");
        }
        if !(self.cooling_ratio > 0.0 && self.cooling_ratio < 1.0) {
            return bad("cooling ratio must lie in (0, 1)");
        }
        if !(self.min_temperature > 0.0 && self.min_temperature < self.initial_temperature) {
            return bad("minimum temperature must lie in (0, initial temperature)");
        }
        if self.time_budget.is_zero() {
            return bad("time budget must be positive");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProgressEntry {
    pub iteration: u64,
    pub temperature: f64,
    pub cost: u64,
    pub best: u64,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// A verified `(1̄,t)`-LA, or `None` when the budget ran out.
    pub array: Option<Array>,
    pub seed: u64,
    pub iterations: u64,
    pub best_cost: Cost,
    pub log: Vec<ProgressEntry>,
}

struct Subset {
    cols: Vec<usize>,
    strides: Vec<usize>,
    masks: Vec<u128>,
}

/// Incrementally maintained objective.
struct State {
    k: usize,
    cells: Vec<u32>,
    subsets: Vec<Subset>,
    /// For each column, the subsets containing it and the column's stride there.
    by_col: Vec<Vec<(usize, usize)>>,
    counts: FxHashMap<u128, u64>,
    uncovered: u64,
    collisions: u64,
}

impl State {
    fn new(levels: &[u32], t: usize, n: usize, cells: Vec<u32>) -> Self {
        let k = levels.len();
        let mut subsets = Vec::new();
        let mut by_col = vec![Vec::new(); k];
        for cols in (0..k).combinations(t) {
            let mut strides = vec![0; t];
            let mut acc = 1;
            for i in (0..t).rev() {
                strides[i] = acc;
                acc *= levels[cols[i]] as usize;
            }
            for (i, &c) in cols.iter().enumerate() {
                by_col[c].push((subsets.len(), strides[i]));
            }
            subsets.push(Subset {
                cols,
                strides,
                masks: vec![0; acc],
            });
        }
        let mut state = Self {
            k,
            cells,
            subsets,
            by_col,
            counts: FxHashMap::default(),
            uncovered: 0,
            collisions: 0,
        };
        for r in 0..n {
            for s in 0..state.subsets.len() {
                let code = state.code(s, r);
                state.subsets[s].masks[code] |= 1 << r;
            }
        }
        let masks: Vec<u128> = state
            .subsets
            .iter()
            .flat_map(|s| s.masks.iter().copied())
            .collect();
        for m in masks {
            state.add_mask(m);
        }
        state
    }

    fn code(&self, s: usize, r: usize) -> usize {
        let sub = &self.subsets[s];
        let row = &self.cells[r * self.k..(r + 1) * self.k];
        sub.cols
            .iter()
            .zip(&sub.strides)
            .map(|(&c, &st)| row[c] as usize * st)
            .sum()
    }

    fn add_mask(&mut self, m: u128) {
        if m == 0 {
            self.uncovered += 1;
        } else {
            let c = self.counts.entry(m).or_default();
            self.collisions += *c;
            *c += 1;
        }
    }

    fn drop_mask(&mut self, m: u128) {
        if m == 0 {
            self.uncovered -= 1;
        } else {
            let c = self.counts.get_mut(&m).expect("mask present");
            *c -= 1;
            self.collisions -= *c;
            if *c == 0 {
                self.counts.remove(&m);
            }
        }
    }

    fn get(&self, r: usize, c: usize) -> u32 {
        self.cells[r * self.k + c]
    }

    fn set(&mut self, r: usize, c: usize, value: u32) {
        let old = self.get(r, c);
        if old == value {
            return;
        }
        let bit = 1u128 << r;
        for i in 0..self.by_col[c].len() {
            let (s, stride) = self.by_col[c][i];
            let from = self.code(s, r);
            let to = from + value as usize * stride - old as usize * stride;
            let (m_from, m_to) = {
                let masks = &self.subsets[s].masks;
                (masks[from], masks[to])
            };
            self.drop_mask(m_from);
            self.drop_mask(m_to);
            self.add_mask(m_from & !bit);
            self.add_mask(m_to | bit);
            let masks = &mut self.subsets[s].masks;
            masks[from] = m_from & !bit;
            masks[to] = m_to | bit;
        }
        self.cells[r * self.k + c] = value;
    }

    fn cost(&self) -> Cost {
        Cost {
            uncovered: self.uncovered,
            collisions: self.collisions,
        }
    }

    fn total(&self) -> u64 {
        self.uncovered + self.collisions
    }
}

fn initial_cells(levels: &[u32], n: usize) -> Vec<u32> {
    (0..n)
        .flat_map(|r| levels.iter().map(move |&v| r as u32 % v))
        .collect()
}

fn check_request(p: &LevelProfile, params: &SearchParams) -> Result<()> {
    params.validate()?;
    let bound = lower_bound(p)?;
    if (params.target_rows as u128) < bound.value {
        return Err(Error::BelowBound {
            rows: params.target_rows,
            bound: bound.value,
        });
    }
    Ok(())
}

/// One annealing chain. `abandon` is polled at each temperature step.
fn run_chain(
    p: &LevelProfile,
    params: &SearchParams,
    abandon: impl Fn() -> bool,
) -> Result<SearchOutcome> {
    let start = Instant::now();
    let n = params.target_rows;
    let t = p.strength();
    let levels = p.levels();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut state = State::new(levels, t, n, initial_cells(levels, n));
    let mut best_cells = state.cells.clone();
    let mut best = state.cost();
    let mut temperature = params.initial_temperature;
    let mut log = Vec::new();
    let mut iteration = 0;

    while iteration < params.max_iterations && state.total() > 0 {
        iteration += 1;
        let r = rng.gen_range(0..n);
        let c = rng.gen_range(0..state.k);
        let old = state.get(r, c);
        let mut value = rng.gen_range(0..levels[c] - 1);
        if value >= old {
            value += 1;
        }
        let before = state.total();
        state.set(r, c, value);
        let after = state.total();
        if after > before {
            let delta = (after - before) as f64;
            if rng.gen::<f64>() >= (-delta / temperature).exp() {
                state.set(r, c, old);
            }
        }
        if state.total() < best.total() {
            best = state.cost();
            best_cells.clone_from(&state.cells);
        }
        if params.log_every > 0 && iteration % params.log_every == 0 {
            log.push(ProgressEntry {
                iteration,
                temperature,
                cost: state.total(),
                best: best.total(),
            });
        }
        if iteration % params.steps_per_temperature == 0 {
            temperature *= params.cooling_ratio;
            if temperature < params.min_temperature {
                temperature = params.initial_temperature;
                state = State::new(levels, t, n, best_cells.clone());
            }
            if start.elapsed() >= params.time_budget || abandon() {
                break;
            }
        }
    }

    let array = if best.total() == 0 {
        let a = Array::from_cells(p.clone(), n, best_cells)?;
        let report = Verifier::forced().is_locating(&a, t, 1, true)?;
        if !report.verdict {
            return Err(Error::Precondition(format!(
                "search produced an array that failed verification: {}",
                report.render().trim_end()
            )));
        }
        Some(a)
    } else {
        None
    };
    Ok(SearchOutcome {
        array,
        seed: params.seed,
        iterations: iteration,
        best_cost: best,
        log,
    })
}

/// Single seeded chain. Bit-reproducible unless the time budget cuts it short.
pub fn anneal(p: &LevelProfile, params: &SearchParams) -> Result<SearchOutcome> {
    check_request(p, params)?;
    run_chain(p, params, || false)
}

/// `chains` independent chains seeded `seed, seed + 1, ...`, run on the
/// current rayon pool. The successful chain with the lowest seed wins; chains
/// with higher seeds stop once a lower one has succeeded.
pub fn anneal_parallel(
    p: &LevelProfile,
    params: &SearchParams,
    chains: usize,
) -> Result<SearchOutcome> {
    check_request(p, params)?;
    let chains = chains.max(1);
    let winner = AtomicUsize::new(usize::MAX);
    let outcomes: Vec<Result<SearchOutcome>> = (0..chains)
        .into_par_iter()
        .map(|i| {
            let mut chain = params.clone();
            chain.seed = params.seed.wrapping_add(i as u64);
            let out = run_chain(p, &chain, || winner.load(Ordering::Relaxed) < i)?;
            if out.array.is_some() {
                winner.fetch_min(i, Ordering::Relaxed);
            }
            Ok(out)
        })
        .collect();
    let outcomes = outcomes.into_iter().collect::<Result<Vec<_>>>()?;
    let pick = outcomes
        .iter()
        .position(|o| o.array.is_some())
        .unwrap_or_else(|| {
            outcomes
                .iter()
                .position_min_by_key(|o| o.best_cost.total())
                .unwrap_or(0)
        });
    Ok(outcomes.into_iter().nth(pick).expect("at least one chain"))
}
