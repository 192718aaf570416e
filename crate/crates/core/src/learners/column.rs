use crate::error::{Error, Result};
use crate::instances::ColumnPermutedHalfGraph;
use crate::oracles::{EdgeOracle, ThresholdOracle, ThresholdsViaEdges};

/// Recovers the hidden list `X` by a binary search on `t` for each position,
/// asking only "is `X[j] >= t`?". Since `X[j] >= 1` always holds, each
/// position costs at most `ceil(log2 n)` queries.
pub fn sort_thresholds<O: ThresholdOracle>(oracle: &mut O) -> Result<Vec<usize>> {
    let n = oracle.n();
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    (0..n)
        .map(|j| {
            // X[j] >= lo is known true, X[j] >= hi is known false
            let (mut lo, mut hi) = (1, n + 1);
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if oracle.threshold_query(j, mid)? {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Ok(lo)
        })
        .collect()
}

/// Binary search for the top-most 1 of each column, phrased as the threshold
/// search above run through the edge translation.
pub fn learn_column_permuted<O: EdgeOracle>(oracle: &mut O) -> Result<ColumnPermutedHalfGraph> {
    let weights = sort_thresholds(&mut ThresholdsViaEdges(oracle))?;
    ColumnPermutedHalfGraph::new(weights).map_err(|_| Error::Inconsistent {
        expected: "column-permuted half graph",
        detail: "recovered column weights are not a permutation".into(),
    })
}
