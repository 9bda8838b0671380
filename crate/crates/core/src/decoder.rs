//! Single-fault localization from pass/fail outcomes.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;

use crate::error::{precondition, Error, Result};
use crate::model::{Array, Interaction, RowSet};
use crate::verifier::{rho, RhoTable, Verifier};

/// One flag per row; `true` means the test in that row failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcomes(Vec<bool>);

impl Outcomes {
    pub fn from_flags(fails: Vec<bool>) -> Self {
        Outcomes(fails)
    }

    pub fn all_pass(n: usize) -> Self {
        Outcomes(vec![false; n])
    }

    pub fn flags(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn failing_rows(&self) -> RowSet {
        RowSet::from_sorted(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &f)| f)
                .map(|(r, _)| r as u32)
                .collect(),
        )
    }
}

/// Accepts `p`/`f` characters; whitespace (including newlines) is ignored,
/// so both `ppfp` and one flag per line parse.
impl FromStr for Outcomes {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'p' | 'P' => Ok(false),
                'f' | 'F' => Ok(true),
                other => Err(Error::Parse {
                    line: 0,
                    msg: format!("outcome must be p or f, got {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Outcomes)
    }
}

impl fmt::Display for Outcomes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &fail in &self.0 {
            f.write_str(if fail { "f" } else { "p" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnosis {
    NoFault,
    Located(Interaction),
    /// No single `t`-way interaction explains these failing rows.
    Inconsistent(RowSet),
}

impl fmt::Display for Diagnosis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnosis::NoFault => f.write_str("NO_FAULT"),
            Diagnosis::Located(t) => write!(f, "LOCATED {t}"),
            Diagnosis::Inconsistent(rows) => write!(f, "INCONSISTENT rows={rows}"),
        }
    }
}

/// Row outcomes produced by a single faulty interaction (or none).
pub fn simulate_outcomes(a: &Array, fault: Option<&Interaction>) -> Result<Outcomes> {
    let mut flags = vec![false; a.n_rows()];
    if let Some(fault) = fault {
        for &r in rho(a, fault)?.indices() {
            flags[r as usize] = true;
        }
    }
    Ok(Outcomes(flags))
}

enum Preimage {
    Unique(Interaction),
    Shared(Vec<Interaction>),
}

/// Row-set to interaction index over all `t`-way interactions of an array.
///
/// Built once and reused across queries.
pub struct Decoder {
    n_rows: usize,
    index: FxHashMap<Vec<u32>, Preimage>,
}

impl Decoder {
    /// Builds the index without certifying the array. Ambiguous row sets are
    /// still detected and reported when queried.
    pub fn new(a: &Array, t: usize) -> Result<Self> {
        let table = RhoTable::build(a, t)?;
        let mut index: FxHashMap<Vec<u32>, Preimage> = FxHashMap::default();
        for (interaction, rows) in table.iter().filter(|(_, rows)| !rows.is_empty()) {
            match index.get_mut(rows) {
                None => {
                    index.insert(rows.to_vec(), Preimage::Unique(interaction));
                }
                Some(Preimage::Unique(first)) => {
                    let first = first.clone();
                    index.insert(rows.to_vec(), Preimage::Shared(vec![first, interaction]));
                }
                Some(Preimage::Shared(all)) => all.push(interaction),
            }
        }
        Ok(Self {
            n_rows: a.n_rows(),
            index,
        })
    }

    /// Like [`Decoder::new`] but first confirms the array is a `(1̄,t)`-LA.
    pub fn certified(a: &Array, t: usize, verifier: &Verifier) -> Result<Self> {
        let report = verifier.is_locating(a, t, 1, true)?;
        if !report.verdict {
            return match report.witness {
                Some(w) => precondition(format!("array is not a (1̄,{t})-LA: {w}")),
                None => precondition(format!("array is not a (1̄,{t})-LA")),
            };
        }
        Self::new(a, t)
    }

    pub fn locate(&self, outcomes: &Outcomes) -> Result<Diagnosis> {
        if outcomes.len() != self.n_rows {
            return Err(Error::OutcomeLength {
                got: outcomes.len(),
                expected: self.n_rows,
            });
        }
        let failing = outcomes.failing_rows();
        if failing.is_empty() {
            return Ok(Diagnosis::NoFault);
        }
        match self.index.get(failing.indices()) {
            None => Ok(Diagnosis::Inconsistent(failing)),
            Some(Preimage::Unique(t)) => Ok(Diagnosis::Located(t.clone())),
            Some(Preimage::Shared(all)) => {
                let names: Vec<String> = all.iter().map(|t| format!("{{{t}}}")).collect();
                Err(Error::AmbiguousPreimage(format!(
                    "{failing} (candidates {})",
                    names.join(" ")
                )))
            }
        }
    }
}

/// One-shot localization; builds a fresh [`Decoder`] without certification.
pub fn locate(a: &Array, outcomes: &Outcomes, t: usize) -> Result<Diagnosis> {
    Decoder::new(a, t)?.locate(outcomes)
}
