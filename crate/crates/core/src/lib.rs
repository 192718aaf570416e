//! Learning hidden bipartite graphs with edge queries.
//!
//! Three families of hidden `n x n` bipartite adjacency matrices are covered:
//! perfect matchings, column-permuted half graphs (equivalently, sorting a
//! hidden permutation with threshold queries) and half graphs (equivalently,
//! nuts-and-bolts sorting with cross comparisons).
//!
//! * [`instances`]: the families in permutation form, generators, text form.
//! * [`oracles`]: counting oracles, transcripts, cost models, and the lazy
//!   adversary for matchings.
//! * [`learners`]: greedy matching, binary-search column learner, and the
//!   quicksort half-graph learner with sampling or charged comparisons.
//! * [`bounds`]: brute-force lower-bound checks at small `n`.
//! * [`harness`]: seeded sweeps, CSV records, and growth fits.

pub mod bipartite;
pub mod bounds;
mod error;
pub mod harness;
pub mod instances;
pub mod learners;
pub mod oracles;
pub mod par;
pub mod perm;
pub mod rng;

pub use error::{Error, Result};
pub use instances::{ColumnPermutedHalfGraph, Family, HalfGraph, HiddenInstance, Matching};
pub use oracles::{CostModel, CountingOracle, EdgeOracle, LazyAdversary, RowOrdering, Transcript};
pub use par::Exec;
