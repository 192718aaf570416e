use thiserror::Error;

use crate::instances::Family;

#[derive(Debug, Error)]
pub enum Error {
    #[error("instance size must be at least 1")]
    EmptyInstance,

    #[error("index ({row}, {col}) out of range for n = {n}")]
    IndexOutOfRange { row: usize, col: usize, n: usize },

    #[error("{what} is not a permutation of 1..={n}")]
    NotPermutation { what: &'static str, n: usize },

    #[error("query not supported on a {family} instance: {query}")]
    WrongFamily { family: Family, query: &'static str },

    #[error("oracle answers are inconsistent with the {expected} family: {detail}")]
    Inconsistent {
        expected: &'static str,
        detail: String,
    },

    #[error("rows {a} and {b} are equal on the live column set")]
    EqualRows { a: usize, b: usize },

    #[error("sampling compare of rows {a} and {b} hit the cap of {draws} draws")]
    SamplingCapExceeded { a: usize, b: usize, draws: usize },

    #[error("n = {n} exceeds the enumeration cap {cap} for {what}")]
    EnumerationCap {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
