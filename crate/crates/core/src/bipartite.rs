//! Maximum bipartite matching on small dense graphs.
//!
//! [`hopcroft_karp`] computes a maximum matching from scratch;
//! [`augment`] repairs a matching that lost one edge, which is all the lazy
//! adversary needs per query.

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// Dense `n x n` bipartite adjacency, rows on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseBipartite {
    n: usize,
    cells: Vec<bool>,
}

impl DenseBipartite {
    pub fn complete(n: usize) -> Self {
        DenseBipartite {
            n,
            cells: vec![true; n * n],
        }
    }

    pub fn empty(n: usize) -> Self {
        DenseBipartite {
            n,
            cells: vec![false; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.n + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, v: bool) {
        self.cells[row * self.n + col] = v;
    }
}

/// A (partial) matching stored from both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchState {
    pub row_to_col: Vec<usize>,
    pub col_to_row: Vec<usize>,
}

impl MatchState {
    pub fn unmatched(n: usize) -> Self {
        MatchState {
            row_to_col: vec![FREE; n],
            col_to_row: vec![FREE; n],
        }
    }

    pub fn size(&self) -> usize {
        self.row_to_col.iter().filter(|&&c| c != FREE).count()
    }

    pub fn col_of(&self, row: usize) -> Option<usize> {
        let c = self.row_to_col[row];
        (c != FREE).then_some(c)
    }

    pub fn unmatch_row(&mut self, row: usize) {
        let c = self.row_to_col[row];
        if c != FREE {
            self.col_to_row[c] = FREE;
            self.row_to_col[row] = FREE;
        }
    }

    pub(crate) fn link(&mut self, row: usize, col: usize) {
        self.row_to_col[row] = col;
        self.col_to_row[col] = row;
    }
}

/// Hopcroft-Karp: BFS layers from free rows, then vertex-disjoint shortest
/// augmenting paths by DFS, until no augmenting path remains.
pub fn hopcroft_karp(g: &DenseBipartite) -> MatchState {
    let n = g.n();
    let mut m = MatchState::unmatched(n);
    let mut dist = vec![0usize; n];
    loop {
        // BFS over rows; dist[row] is the layer, FREE = unreached
        let mut queue = VecDeque::new();
        for (r, d) in dist.iter_mut().enumerate() {
            if m.row_to_col[r] == FREE {
                *d = 0;
                queue.push_back(r);
            } else {
                *d = FREE;
            }
        }
        let mut found = false;
        while let Some(r) = queue.pop_front() {
            for c in 0..n {
                if !g.get(r, c) {
                    continue;
                }
                let next = m.col_to_row[c];
                if next == FREE {
                    found = true;
                } else if dist[next] == FREE {
                    dist[next] = dist[r] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found {
            return m;
        }
        for r in 0..n {
            if m.row_to_col[r] == FREE {
                layered_dfs(g, &mut m, &mut dist, r);
            }
        }
    }
}

fn layered_dfs(g: &DenseBipartite, m: &mut MatchState, dist: &mut [usize], r: usize) -> bool {
    for c in 0..g.n() {
        if !g.get(r, c) {
            continue;
        }
        let next = m.col_to_row[c];
        if next == FREE || (dist[next] == dist[r] + 1 && layered_dfs(g, m, dist, next)) {
            m.link(r, c);
            return true;
        }
    }
    dist[r] = FREE;
    false
}

/// Tries to match the free row `row` along one augmenting path.
pub fn augment(g: &DenseBipartite, m: &mut MatchState, row: usize) -> bool {
    let mut seen = vec![false; g.n()];
    kuhn(g, m, &mut seen, row)
}

fn kuhn(g: &DenseBipartite, m: &mut MatchState, seen: &mut [bool], r: usize) -> bool {
    for c in 0..g.n() {
        if !g.get(r, c) || seen[c] {
            continue;
        }
        seen[c] = true;
        let next = m.col_to_row[c];
        if next == FREE || kuhn(g, m, seen, next) {
            m.link(r, c);
            return true;
        }
    }
    false
}

pub fn has_perfect_matching(g: &DenseBipartite) -> bool {
    hopcroft_karp(g).size() == g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use proptest::prelude::*;

    fn brute_max_matching(g: &DenseBipartite) -> usize {
        // any matching extends to a permutation over the complete graph
        let n = g.n();
        all_permutations(n, 0)
            .iter()
            .map(|p| (0..n).filter(|&r| g.get(r, p[r])).count())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn complete_and_empty() {
        assert_eq!(hopcroft_karp(&DenseBipartite::complete(7)).size(), 7);
        assert_eq!(hopcroft_karp(&DenseBipartite::empty(7)).size(), 0);
    }

    #[test]
    fn augment_repairs_single_removal() {
        let mut g = DenseBipartite::complete(4);
        let mut m = hopcroft_karp(&g);
        let c = m.col_of(0).unwrap();
        g.set(0, c, false);
        m.unmatch_row(0);
        assert!(augment(&g, &mut m, 0));
        assert_eq!(m.size(), 4);
        assert_ne!(m.col_of(0), Some(c));
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 1usize..7, bits in proptest::collection::vec(any::<bool>(), 36)) {
            let mut g = DenseBipartite::empty(n);
            for r in 0..n {
                for c in 0..n {
                    g.set(r, c, bits[r * 6 + c]);
                }
            }
            let m = hopcroft_karp(&g);
            prop_assert_eq!(m.size(), brute_max_matching(&g));
            for r in 0..n {
                if let Some(c) = m.col_of(r) {
                    prop_assert!(g.get(r, c));
                    prop_assert_eq!(m.col_to_row[c], r);
                }
            }
        }
    }
}
