//! `construct` subcommands. Columns on the command line are 1-based.

use std::path::{Path, PathBuf};

use anyhow::{bail, Result};
use clap::{Args, Subcommand};
use locarray::direct::{
    build_la_1_w, build_la_2_3, build_oa_sum, build_pdimoa_star_general,
    build_pdimoa_star_t_plus_1,
};
use locarray::recursive::{
    derive, expand_level, fuse, pdimoa_product, product, roux_one, roux_two, split_column,
    truncate, Checks,
};
use locarray::verifier::Verifier;
use locarray::Array;

use crate::{read_array, write_array, Status};

#[derive(Args)]
pub struct Common {
    /// Skip checking the inputs' preconditions.
    #[arg(long)]
    unchecked: bool,
    /// Lift the verifier's size caps for input and output checks.
    #[arg(long)]
    force: bool,
    /// Write the array here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn checks(&self) -> Checks {
        match (self.unchecked, self.force) {
            (true, _) => Checks::Unchecked,
            (false, true) => Checks::VerifyForced,
            (false, false) => Checks::Verify,
        }
    }
}

#[derive(Args)]
pub struct Unary {
    array: PathBuf,
    /// 1-based column.
    #[arg(long)]
    col: usize,
}

#[derive(Subcommand)]
pub enum Op {
    /// Orthogonal array of index 1 over `v` symbols with `t + 1` columns.
    OaSum {
        #[arg(long)]
        v: u32,
        #[arg(long)]
        strength: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Distinct-index MOA of strength k-1 over increasing levels that are
    /// multiples of the first.
    PdimoaT1 {
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Distinct-index MOA of any strength by splitting a shared first factor.
    PdimoaGeneral {
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<u32>,
        #[arg(long)]
        strength: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Strength-2 LA with v2 * v3 rows over three columns.
    #[command(name = "la-2-3")]
    La23 {
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Strength-1 LA with `v` rows over `w` columns of size `w` and one of size `v`.
    #[command(name = "la-1-w")]
    La1W {
        #[arg(long)]
        w: u32,
        #[arg(long)]
        v: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Drop a column.
    Truncate {
        #[command(flatten)]
        input: Unary,
        #[command(flatten)]
        common: Common,
    },
    /// Keep the rows holding `symbol` in a column, then drop the column.
    Derive {
        #[command(flatten)]
        input: Unary,
        #[arg(long)]
        symbol: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Symbol-wise product of an LA with a covering array.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Split a column into several, factor sizes listed in increasing order.
    Split {
        #[command(flatten)]
        input: Unary,
        #[arg(long, value_delimiter = ',', required = true)]
        factors: Vec<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Product of two distinct-index MOAs.
    PdimoaProduct {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Grow a column's alphabet to at most twice its size.
    Expand {
        #[command(flatten)]
        input: Unary,
        #[arg(long)]
        new_size: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Merge a column's symbols down to a smaller alphabet.
    Fuse {
        #[command(flatten)]
        input: Unary,
        #[arg(long)]
        target: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Add `e` symbols to a column using a lower-strength LA.
    RouxOne {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        col: usize,
        #[arg(long)]
        e: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Add symbols to two columns using three lower-strength LAs.
    RouxTwo {
        a: PathBuf,
        b: PathBuf,
        c: PathBuf,
        d: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        common: Common,
    },
}

/// What the output is certified as.
enum Claim {
    Moa,
    PdimoaStar,
    BarLa,
}

fn zero_based(col: usize) -> Result<usize> {
    match col.checked_sub(1) {
        Some(c) => Ok(c),
        None => bail!("columns are 1-based"),
    }
}

fn load(path: &Path) -> Result<Array> {
    read_array(path, false)
}

fn build(op: &Op) -> Result<(Array, Claim, &Common)> {
    Ok(match op {
        Op::OaSum { v, strength, common } => (build_oa_sum(*v, *strength)?, Claim::Moa, common),
        Op::PdimoaT1 { levels, common } => {
            (build_pdimoa_star_t_plus_1(levels)?, Claim::PdimoaStar, common)
        }
        Op::PdimoaGeneral { levels, strength, common } => (
            build_pdimoa_star_general(levels, *strength)?,
            Claim::PdimoaStar,
            common,
        ),
        Op::La23 { levels, common } => {
            let &[v1, v2, v3] = levels.as_slice() else {
                bail!("la-2-3 needs exactly three levels");
            };
            (build_la_2_3(v1, v2, v3)?, Claim::BarLa, common)
        }
        Op::La1W { w, v, common } => (build_la_1_w(*w, *v)?, Claim::BarLa, common),
        Op::Truncate { input, common } => {
            let a = load(&input.array)?;
            (truncate(&a, zero_based(input.col)?, common.checks())?, Claim::BarLa, common)
        }
        Op::Derive { input, symbol, common } => {
            let a = load(&input.array)?;
            let out = derive(&a, zero_based(input.col)?, *symbol, common.checks())?;
            (out, Claim::BarLa, common)
        }
        Op::Product { a, b, common } => {
            (product(&load(a)?, &load(b)?, common.checks())?, Claim::BarLa, common)
        }
        Op::Split { input, factors, common } => {
            let a = load(&input.array)?;
            let out = split_column(&a, zero_based(input.col)?, factors, common.checks())?;
            (out, Claim::PdimoaStar, common)
        }
        Op::PdimoaProduct { a, b, common } => (
            pdimoa_product(&load(a)?, &load(b)?, common.checks())?,
            Claim::PdimoaStar,
            common,
        ),
        Op::Expand { input, new_size, common } => {
            let a = load(&input.array)?;
            let out = expand_level(&a, zero_based(input.col)?, *new_size, common.checks())?;
            (out, Claim::BarLa, common)
        }
        Op::Fuse { input, target, common } => {
            let a = load(&input.array)?;
            let out = fuse(&a, zero_based(input.col)?, *target, common.checks())?;
            (out, Claim::BarLa, common)
        }
        Op::RouxOne { a, b, col, e, common } => {
            let out = roux_one(&load(a)?, &load(b)?, zero_based(*col)?, *e, common.checks())?;
            (out, Claim::BarLa, common)
        }
        Op::RouxTwo { a, b, c, d, i, j, p, q, common } => {
            let out = roux_two(
                &load(a)?,
                &load(b)?,
                &load(c)?,
                &load(d)?,
                zero_based(*i)?,
                zero_based(*j)?,
                *p,
                *q,
                common.checks(),
            )?;
            (out, Claim::BarLa, common)
        }
    })
}

/// Builds, writes, then certifies the output. The certificate goes to
/// stderr; an output that fails or cannot be checked exits 1.
pub fn run(op: Op) -> Result<Status> {
    let (array, claim, common) = build(&op)?;
    write_array(&array, common.out.as_deref())?;
    let v = Verifier { force: common.force };
    let t = array.strength();
    let report = match claim {
        Claim::Moa => v.is_moa(&array, t),
        Claim::PdimoaStar => v.is_pdimoa_star(&array, t),
        Claim::BarLa => v.is_locating(&array, t, 1, true),
    };
    match report {
        Ok(report) => {
            eprint!("{}", report.render());
            Ok(if report.verdict { Status::Ok } else { Status::Negative })
        }
        Err(e) => {
            eprintln!("UNCERTIFIED {e}");
            Ok(Status::Negative)
        }
    }
}
