use crate::error::{Error, Result};
use crate::instances::Matching;
use crate::oracles::EdgeOracle;

/// Finds each row's partner among the still-unmatched columns, skipping the
/// last candidate, which is implied once all others answered 0. Uses at most
/// `n(n-1)/2` queries.
pub fn learn_matching_greedy<O: EdgeOracle>(oracle: &mut O) -> Result<Matching> {
    let n = oracle.n();
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    let mut free: Vec<usize> = (0..n).collect();
    let mut perm = Vec::with_capacity(n);
    for row in 0..n {
        let last = free.len() - 1;
        let mut pick = last;
        for (k, &col) in free[..last].iter().enumerate() {
            if oracle.edge_query(row, col)? {
                pick = k;
                break;
            }
        }
        perm.push(free.remove(pick));
    }
    Matching::new(perm)
}

/// Row-major scan from column 0 in every row until that row's 1 appears.
/// The trivial baseline: no elimination, no memory across rows.
pub fn learn_matching_full<O: EdgeOracle>(oracle: &mut O) -> Result<Matching> {
    let n = oracle.n();
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    let mut perm = Vec::with_capacity(n);
    for row in 0..n {
        let mut found = None;
        for col in 0..n {
            if oracle.edge_query(row, col)? {
                found = Some(col);
                break;
            }
        }
        let col = found.ok_or_else(|| Error::Inconsistent {
            expected: "matching",
            detail: format!("row {row} has no 1"),
        })?;
        perm.push(col);
    }
    Matching::new(perm).map_err(|_| Error::Inconsistent {
        expected: "matching",
        detail: "two rows share a column".into(),
    })
}
