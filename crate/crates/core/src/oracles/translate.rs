//! Query translations between the sorting views and the edge-query view.

use super::{ComparisonOracle, EdgeOracle, ThresholdOracle};
use crate::error::{Error, Result};

/// Answers "is `X[col] >= t`?" with the single edge query at row `n - t` of
/// column `col`.
#[derive(Debug)]
pub struct ThresholdsViaEdges<O>(pub O);

impl<O: EdgeOracle> ThresholdOracle for ThresholdsViaEdges<O> {
    fn n(&self) -> usize {
        self.0.n()
    }

    fn threshold_query(&mut self, col: usize, t: usize) -> Result<bool> {
        let n = self.0.n();
        if t == 0 || t > n {
            return Err(Error::IndexOutOfRange { row: t, col, n });
        }
        self.0.edge_query(n - t, col)
    }
}

/// Serves edge queries to a learner by asking the nuts-and-bolts comparison
/// "is `R[row] >= B[col]`?".
#[derive(Debug)]
pub struct EdgesViaComparisons<O>(pub O);

impl<O: ComparisonOracle> EdgeOracle for EdgesViaComparisons<O> {
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edge_query(&mut self, row: usize, col: usize) -> Result<bool> {
        self.0.comparison_query(row, col)
    }
}
