//! Everything a learner learns goes through an oracle. Oracles answer edge,
//! threshold and comparison queries, count them, and charge costs.

mod adversary;
mod counting;
mod transcript;
mod translate;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use adversary::LazyAdversary;
pub use counting::CountingOracle;
pub use transcript::{Answer, Query, QueryKind, QueryRecord, Transcript, TranscriptFormat};
pub use translate::{EdgesViaComparisons, ThresholdsViaEdges};

/// Access to the cells of a hidden `n x n` bipartite adjacency matrix.
pub trait EdgeOracle {
    fn n(&self) -> usize;

    /// Is row vertex `row` adjacent to column vertex `col`? Every call is
    /// counted, repeated ones included.
    fn edge_query(&mut self, row: usize, col: usize) -> Result<bool>;
}

/// "Is `X[col] >= t`?" against a hidden permutation `X` of `1..=n`.
pub trait ThresholdOracle {
    fn n(&self) -> usize;

    fn threshold_query(&mut self, col: usize, t: usize) -> Result<bool>;
}

/// "Is `R[r] >= B[b]`?" between the two hidden lists of a nuts-and-bolts
/// instance.
pub trait ComparisonOracle {
    fn n(&self) -> usize;

    fn comparison_query(&mut self, r: usize, b: usize) -> Result<bool>;
}

impl<O: EdgeOracle + ?Sized> EdgeOracle for &mut O {
    fn n(&self) -> usize {
        (**self).n()
    }

    fn edge_query(&mut self, row: usize, col: usize) -> Result<bool> {
        (**self).edge_query(row, col)
    }
}

impl<O: ThresholdOracle + ?Sized> ThresholdOracle for &mut O {
    fn n(&self) -> usize {
        (**self).n()
    }

    fn threshold_query(&mut self, col: usize, t: usize) -> Result<bool> {
        (**self).threshold_query(col, t)
    }
}

impl<O: ComparisonOracle + ?Sized> ComparisonOracle for &mut O {
    fn n(&self) -> usize {
        (**self).n()
    }

    fn comparison_query(&mut self, r: usize, b: usize) -> Result<bool> {
        (**self).comparison_query(r, b)
    }
}

/// Outcome of comparing two comparable, unequal rows. `Less` means the first
/// row is entrywise below the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RowOrdering {
    Less,
    Greater,
}

impl RowOrdering {
    pub fn reverse(self) -> Self {
        match self {
            RowOrdering::Less => RowOrdering::Greater,
            RowOrdering::Greater => RowOrdering::Less,
        }
    }
}

impl fmt::Display for RowOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowOrdering::Less => "LESS",
            RowOrdering::Greater => "GREATER",
        })
    }
}

/// How interactions are charged. `Unit` and `Sampling` charge 1 per edge
/// query; `Grover` additionally prices each charged row comparison at
/// `ceil(sqrt(m / d))` for live width `m` and restricted Hamming distance `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CostModel {
    Unit,
    Sampling,
    Grover,
}

impl CostModel {
    pub fn as_str(self) -> &'static str {
        match self {
            CostModel::Unit => "unit",
            CostModel::Sampling => "sampling",
            CostModel::Grover => "grover",
        }
    }
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CostModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "unit" => Ok(CostModel::Unit),
            "sampling" => Ok(CostModel::Sampling),
            "grover" => Ok(CostModel::Grover),
            other => Err(Error::Parse(format!("unknown cost model `{other}`"))),
        }
    }
}

/// `ceil(sqrt(width / distance))`, computed exactly in integers.
pub fn grover_charge(width: usize, distance: usize) -> u64 {
    assert!(width > 0 && distance > 0 && distance <= width);
    let q = width.div_ceil(distance) as u64;
    // c^2 >= m/d  <=>  c^2 >= ceil(m/d) for integer c
    let mut c = (q as f64).sqrt() as u64;
    while c * c < q {
        c += 1;
    }
    while c > 1 && (c - 1) * (c - 1) >= q {
        c -= 1;
    }
    c.max(1)
}
