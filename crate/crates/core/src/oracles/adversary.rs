use super::{Answer, EdgeOracle, Query, Transcript};
use crate::bipartite::{augment, DenseBipartite, MatchState};
use crate::error::{Error, Result};
use crate::instances::Matching;

/// An oracle for matchings that commits to no hidden matching and answers 0
/// whenever some perfect matching avoiding the queried cell is still
/// possible. It answers 1 only when the cell is forced.
///
/// A perfect matching of the still-allowed cells is kept at all times. A
/// 0-answer removes one cell; if that cell was in the kept matching, one
/// augmenting-path search from its row either repairs the matching or shows
/// the cell is in every perfect matching.
#[derive(Debug, Clone)]
pub struct LazyAdversary {
    allowed: DenseBipartite,
    answered: Vec<Option<bool>>,
    current: MatchState,
    transcript: Transcript,
}

impl LazyAdversary {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInstance);
        }
        let mut current = MatchState::unmatched(n);
        for i in 0..n {
            current.link(i, i);
        }
        Ok(LazyAdversary {
            allowed: DenseBipartite::complete(n),
            answered: vec![None; n * n],
            current,
            transcript: Transcript::new(),
        })
    }

    pub fn transcript(&self) -> &Transcript {
        &self.transcript
    }

    /// Cells that some perfect matching consistent with the answers so far
    /// may still use.
    pub fn allowed(&self) -> &DenseBipartite {
        &self.allowed
    }

    pub fn answered(&self, row: usize, col: usize) -> Option<bool> {
        self.answered[row * self.allowed.n() + col]
    }

    /// A matching consistent with every answer given so far.
    pub fn final_instance(&self) -> Matching {
        Matching::new(self.current.row_to_col.clone()).expect("adversary keeps a perfect matching")
    }

    fn decide(&mut self, row: usize, col: usize) -> bool {
        if !self.allowed.get(row, col) {
            return false;
        }
        self.allowed.set(row, col, false);
        if self.current.col_of(row) != Some(col) {
            return false;
        }
        self.current.unmatch_row(row);
        if augment(&self.allowed, &mut self.current, row) {
            return false;
        }
        // forced: (row, col) lies in every perfect matching
        self.allowed.set(row, col, true);
        self.current.link(row, col);
        let n = self.allowed.n();
        for k in 0..n {
            if k != col {
                self.allowed.set(row, k, false);
            }
            if k != row {
                self.allowed.set(k, col, false);
            }
        }
        true
    }
}

impl EdgeOracle for LazyAdversary {
    fn n(&self) -> usize {
        self.allowed.n()
    }

    fn edge_query(&mut self, row: usize, col: usize) -> Result<bool> {
        let n = self.allowed.n();
        if row >= n || col >= n {
            return Err(Error::IndexOutOfRange { row, col, n });
        }
        let answer = match self.answered(row, col) {
            Some(a) => a,
            None => {
                let a = self.decide(row, col);
                self.answered[row * n + col] = Some(a);
                a
            }
        };
        self.transcript
            .push(Query::Edge { row, col }, Answer::Bit(answer), 1);
        Ok(answer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::has_perfect_matching;
    use crate::perm::all_permutations;
    use crate::rng::{below, rng_from_seed};

    /// All matchings consistent with the answers recorded so far.
    fn consistent(adv: &LazyAdversary, n: usize) -> Vec<Vec<usize>> {
        all_permutations(n, 0)
            .into_iter()
            .filter(|p| {
                (0..n).all(|i| {
                    (0..n).all(|j| match adv.answered(i, j) {
                        Some(a) => (p[i] == j) == a,
                        None => true,
                    })
                })
            })
            .collect()
    }

    #[test]
    fn n2_first_query_is_zero_then_forced() {
        for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let mut adv = LazyAdversary::new(2).unwrap();
            assert!(!adv.edge_query(r, c).unwrap());
            // the only remaining matching uses (r, 1 - c)
            assert!(adv.edge_query(r, 1 - c).unwrap());
            assert!(adv.edge_query(1 - r, c).unwrap());
            assert!(!adv.edge_query(1 - r, 1 - c).unwrap());
            let fin = adv.final_instance();
            assert_eq!(fin.perm()[r], 1 - c);
        }
    }

    #[test]
    fn repeated_queries_are_consistent_and_counted() {
        let mut adv = LazyAdversary::new(3).unwrap();
        let a = adv.edge_query(1, 1).unwrap();
        assert_eq!(adv.edge_query(1, 1).unwrap(), a);
        assert_eq!(adv.transcript().total_queries(), 2);
    }

    #[test]
    fn soundness_under_random_queries() {
        for n in 1..=6 {
            for seed in 0..40 {
                let mut rng = rng_from_seed(seed);
                let mut adv = LazyAdversary::new(n).unwrap();
                for _ in 0..(2 * n * n) {
                    let (i, j) = (below(&mut rng, n), below(&mut rng, n));
                    let ans = adv.edge_query(i, j).unwrap();
                    let cons = consistent(&adv, n);
                    assert!(!cons.is_empty());
                    assert!(has_perfect_matching(adv.allowed()));
                    if ans {
                        // forced: every consistent matching uses the cell
                        assert!(cons.iter().all(|p| p[i] == j));
                    } else {
                        // a 1 was possible only if forced
                        assert!(cons.iter().any(|p| p[i] != j));
                    }
                    let fin = adv.final_instance();
                    assert!(cons.contains(&fin.perm().to_vec()));
                }
            }
        }
    }
}
