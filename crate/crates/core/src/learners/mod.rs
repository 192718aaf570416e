//! Reconstruction algorithms. Every learner is Las Vegas: its output always
//! equals the hidden instance (or, against the lazy adversary, a matching
//! consistent with the adversary's answers); randomness only moves the cost.

mod column;
mod half_graph;
mod matching;

pub use column::{learn_column_permuted, sort_thresholds};
pub use half_graph::{
    compare_rows_sampling, learn_half_graph, learn_half_graph_with, locate_columns, quicksort_rows,
    quicksort_rows_traced, Comparison, GroverComparator, PivotStep, RowComparator, RowOrder,
    SamplingComparator, SubProblem, SAMPLING_CAP_FACTOR,
};
pub use matching::{learn_matching_full, learn_matching_greedy};
