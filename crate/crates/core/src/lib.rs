//! Mixed-level locating arrays: construction, verification, size bounds,
//! annealing search and single-fault decoding.

pub mod bounds;
pub mod decoder;
pub mod direct;
pub mod error;
pub mod format;
pub mod model;
pub mod recursive;
pub mod search;
mod util;
pub mod verifier;

pub use error::{Error, Result};
pub use format::{parse_array, parse_transposed, serialize_array};
pub use model::{canonicalize, Array, ColumnMap, Interaction, LevelProfile, RowSet};
