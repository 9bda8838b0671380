use thiserror::Error;

use crate::verifier::Witness;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid level profile: {0}")]
    InvalidProfile(String),

    #[error("invalid strength {t} for {k} factors")]
    InvalidStrength { t: usize, k: usize },

    #[error("row {row}, column {col}: entry {value} outside alphabet of size {size}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u32,
        size: u32,
    },

    #[error("invalid interaction: {0}")]
    InvalidInteraction(String),

    #[error("invalid column {col} (array has {k} columns)")]
    InvalidColumn { col: usize, k: usize },

    #[error("instance too large: {count} {what} exceeds cap of {cap} (use force to override)")]
    SizeCap {
        what: &'static str,
        count: u128,
        cap: u128,
    },

    #[error("not an orthogonal array: {0}")]
    NotOrthogonal(Box<Witness>),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("requested {rows} rows but the lower bound for this profile is {bound}")]
    BelowBound { rows: usize, bound: u128 },

    #[error("invalid search parameters: {0}")]
    InvalidParams(String),

    #[error("outcome length {got} does not match array size {expected}")]
    OutcomeLength { got: usize, expected: usize },

    #[error("failing rows {0} have more than one preimage")]
    AmbiguousPreimage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
