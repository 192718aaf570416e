//! Exact deterministic query complexity by exhaustive minimax over the set
//! of instances consistent with the answers so far.

use std::collections::{HashMap, HashSet};

use super::{cell_mask, enumerate_family};
use crate::error::{Error, Result};
use crate::instances::Family;

/// Largest `n` accepted by [`exact_det_depth`] for each family.
pub fn depth_cap(family: Family) -> usize {
    match family {
        Family::Matching => 5,
        Family::ColPermuted => 6,
        Family::HalfGraph => 4,
    }
}

/// Consistent set as a bitset over instance indices.
type Set = Vec<u64>;

struct Search {
    /// `ones[c]`: instances with a 1 in cell `c`.
    ones: Vec<Set>,
    memo: HashMap<Set, u32>,
}

fn count(s: &[u64]) -> u32 {
    s.iter().map(|w| w.count_ones()).sum()
}

fn ceil_log2(k: u32) -> u32 {
    if k <= 1 {
        0
    } else {
        32 - (k - 1).leading_zeros()
    }
}

impl Search {
    fn depth(&mut self, s: &Set, only_cell: Option<usize>) -> u32 {
        let total = count(s);
        if total <= 1 {
            return 0;
        }
        if let Some(&d) = self.memo.get(s) {
            return d;
        }
        let lower = ceil_log2(total);

        // informative cells, deduplicated by the split they induce
        let mut seen = HashSet::new();
        let mut candidates = Vec::new();
        for (c, ones) in self.ones.iter().enumerate() {
            if only_cell.is_some_and(|o| o != c) {
                continue;
            }
            let yes: Set = s.iter().zip(ones).map(|(a, b)| a & b).collect();
            let k = count(&yes);
            if k == 0 || k == total || !seen.insert(yes.clone()) {
                continue;
            }
            let no: Set = s.iter().zip(&yes).map(|(a, b)| a & !b).collect();
            candidates.push((k.max(total - k), yes, no));
        }
        candidates.sort_by_key(|c| c.0);

        let mut best = u32::MAX;
        for (larger, yes, no) in candidates {
            if 1 + ceil_log2(larger) >= best {
                break;
            }
            // search the larger side first: it usually decides the max
            let (first, second) = if count(&yes) >= count(&no) {
                (yes, no)
            } else {
                (no, yes)
            };
            let d1 = self.depth(&first, None);
            if 1 + d1 >= best {
                continue;
            }
            let d2 = self.depth(&second, None);
            best = best.min(1 + d1.max(d2));
            if best == lower {
                break;
            }
        }
        self.memo.insert(s.clone(), best);
        best
    }
}

/// Minimum over deterministic query strategies of the worst-case number of
/// edge queries needed to identify a member of `family` at size `n`.
///
/// For matchings the first query is fixed to cell `(0, 0)`: relabeling rows
/// and columns maps the family onto itself and any cell onto any other.
pub fn exact_det_depth(family: Family, n: usize) -> Result<u32> {
    let cap = depth_cap(family);
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    if n > cap {
        return Err(Error::EnumerationCap {
            what: "exact decision-tree depth",
            n,
            cap,
        });
    }
    let masks: Vec<u64> = enumerate_family(family, n).iter().map(cell_mask).collect();
    let words = masks.len().div_ceil(64);
    let mut ones = vec![vec![0u64; words]; n * n];
    for (idx, &m) in masks.iter().enumerate() {
        for (c, set) in ones.iter_mut().enumerate() {
            if m >> c & 1 == 1 {
                set[idx / 64] |= 1 << (idx % 64);
            }
        }
    }
    let mut all = vec![0u64; words];
    for idx in 0..masks.len() {
        all[idx / 64] |= 1 << (idx % 64);
    }
    let mut search = Search {
        ones,
        memo: HashMap::new(),
    };
    let root_cell = (family == Family::Matching && n > 1).then_some(0);
    Ok(search.depth(&all, root_cell))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{family_size, info_lower_bound};

    #[test]
    fn matching_depths() {
        assert_eq!(exact_det_depth(Family::Matching, 1).unwrap(), 0);
        assert_eq!(exact_det_depth(Family::Matching, 2).unwrap(), 1);
        assert_eq!(exact_det_depth(Family::Matching, 3).unwrap(), 3);
        assert_eq!(exact_det_depth(Family::Matching, 4).unwrap(), 6);
    }

    #[test]
    fn col_permuted_depths() {
        assert_eq!(exact_det_depth(Family::ColPermuted, 1).unwrap(), 0);
        assert_eq!(exact_det_depth(Family::ColPermuted, 2).unwrap(), 1);
        for n in 2..=5 {
            let d = exact_det_depth(Family::ColPermuted, n).unwrap();
            let info = info_lower_bound(&family_size(Family::ColPermuted, n)).unwrap();
            assert!(
                u64::from(d) >= info,
                "n = {n}: depth {d} < counting bound {info}"
            );
        }
        assert!(exact_det_depth(Family::ColPermuted, 3).unwrap() >= 3);
    }

    #[test]
    fn half_graph_depths_respect_counting_bound() {
        for n in 1..=3 {
            let d = exact_det_depth(Family::HalfGraph, n).unwrap();
            let info = info_lower_bound(&family_size(Family::HalfGraph, n)).unwrap();
            assert!(u64::from(d) >= info);
            assert!(d as usize <= n * n);
        }
        // each of the four members of H_2 has its single 0 in a different
        // cell, so every query splits 3/1
        assert_eq!(exact_det_depth(Family::HalfGraph, 2).unwrap(), 3);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            exact_det_depth(Family::Matching, 6),
            Err(Error::EnumerationCap { .. })
        ));
        assert!(exact_det_depth(Family::HalfGraph, 0).is_err());
    }
}
