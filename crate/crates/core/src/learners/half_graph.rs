//! Quicksort over the rows of a half graph.
//!
//! Rows of a row- and column-permuted `L_n` form a chain under entrywise
//! order, so the row permutation can be found by quicksort where comparing
//! two rows means finding one column on which they differ. After the row
//! order is known, each column's position is a binary search along it.

use crate::error::{Error, Result};
use crate::instances::HalfGraph;
use crate::oracles::{CostModel, CountingOracle, EdgeOracle, RowOrdering};
use crate::rng::{below, LabRng};

/// A sampling comparison gives up after this many draws per live column.
pub const SAMPLING_CAP_FACTOR: usize = 64;

/// Live rows and columns of one quicksort call. Within `cols`, any two rows
/// of `rows` are comparable and unequal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubProblem {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl SubProblem {
    pub fn full(n: usize) -> Self {
        SubProblem {
            rows: (0..n).collect(),
            cols: (0..n).collect(),
        }
    }
}

/// Row indices in ascending order of row value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowOrder(pub Vec<usize>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Comparison {
    pub ordering: RowOrdering,
    /// A column where the rows differ, when the comparator exposes one.
    pub witness: Option<usize>,
}

/// Strategy for comparing two live rows on the live columns.
pub trait RowComparator<O> {
    fn compare(
        &mut self,
        oracle: &mut O,
        a: usize,
        b: usize,
        cols: &[usize],
        rng: &mut LabRng,
    ) -> Result<Comparison>;
}

/// Classical comparison: sample columns until the two rows differ.
#[derive(Debug, Clone, Copy, Default)]
pub struct SamplingComparator;

impl<O: EdgeOracle> RowComparator<O> for SamplingComparator {
    fn compare(
        &mut self,
        oracle: &mut O,
        a: usize,
        b: usize,
        cols: &[usize],
        rng: &mut LabRng,
    ) -> Result<Comparison> {
        let (ordering, witness) = compare_rows_sampling(oracle, a, b, cols, rng)?;
        Ok(Comparison {
            ordering,
            witness: Some(witness),
        })
    }
}

/// Comparison priced by the quantum search cost model.
#[derive(Debug, Clone, Copy, Default)]
pub struct GroverComparator;

impl RowComparator<CountingOracle> for GroverComparator {
    fn compare(
        &mut self,
        oracle: &mut CountingOracle,
        a: usize,
        b: usize,
        cols: &[usize],
        _rng: &mut LabRng,
    ) -> Result<Comparison> {
        let ordering = oracle.charged_row_compare(a, b, cols)?;
        Ok(Comparison {
            ordering,
            witness: None,
        })
    }
}

/// Draws a uniform column from `cols` and queries both rows there, until
/// they differ. Returns the ordering of `a` relative to `b` and the column
/// that separated them. Expected cost `2 |cols| / d` edge queries for `d`
/// differing columns.
pub fn compare_rows_sampling<O: EdgeOracle>(
    oracle: &mut O,
    a: usize,
    b: usize,
    cols: &[usize],
    rng: &mut LabRng,
) -> Result<(RowOrdering, usize)> {
    let cap = SAMPLING_CAP_FACTOR * cols.len();
    for _ in 0..cap {
        let k = cols[below(rng, cols.len())];
        let va = oracle.edge_query(a, k)?;
        let vb = oracle.edge_query(b, k)?;
        match (va, vb) {
            (false, true) => return Ok((RowOrdering::Less, k)),
            (true, false) => return Ok((RowOrdering::Greater, k)),
            _ => {}
        }
    }
    Err(Error::SamplingCapExceeded { a, b, draws: cap })
}

/// One partition step, recorded by [`quicksort_rows_traced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotStep {
    pub sub: SubProblem,
    pub pivot: usize,
    pub less: SubProblem,
    pub greater: SubProblem,
}

/// Randomized quicksort of `sub.rows` by entrywise order on `sub.cols`.
///
/// The pivot row is read in full on the live columns. Rows below the pivot
/// keep only the pivot's 1-columns, rows above keep only its 0-columns, so
/// both branches are again half-graph instances.
pub fn quicksort_rows<O, C>(
    oracle: &mut O,
    sub: SubProblem,
    rng: &mut LabRng,
    cmp: &mut C,
) -> Result<RowOrder>
where
    O: EdgeOracle,
    C: RowComparator<O>,
{
    let mut out = Vec::with_capacity(sub.rows.len());
    sort_into(oracle, sub, rng, cmp, &mut out, &mut None)?;
    Ok(RowOrder(out))
}

/// [`quicksort_rows`], also returning every partition step in call order.
pub fn quicksort_rows_traced<O, C>(
    oracle: &mut O,
    sub: SubProblem,
    rng: &mut LabRng,
    cmp: &mut C,
) -> Result<(RowOrder, Vec<PivotStep>)>
where
    O: EdgeOracle,
    C: RowComparator<O>,
{
    let mut out = Vec::with_capacity(sub.rows.len());
    let mut steps = Vec::new();
    sort_into(oracle, sub, rng, cmp, &mut out, &mut Some(&mut steps))?;
    Ok((RowOrder(out), steps))
}

fn sort_into<O, C>(
    oracle: &mut O,
    sub: SubProblem,
    rng: &mut LabRng,
    cmp: &mut C,
    out: &mut Vec<usize>,
    trace: &mut Option<&mut Vec<PivotStep>>,
) -> Result<()>
where
    O: EdgeOracle,
    C: RowComparator<O>,
{
    if sub.rows.len() <= 1 {
        out.extend_from_slice(&sub.rows);
        return Ok(());
    }
    let pivot = sub.rows[below(rng, sub.rows.len())];
    let mut ones = Vec::new();
    let mut zeros = Vec::new();
    let mut pivot_bits = Vec::with_capacity(sub.cols.len());
    for &c in &sub.cols {
        let bit = oracle.edge_query(pivot, c)?;
        pivot_bits.push(bit);
        if bit {
            ones.push(c);
        } else {
            zeros.push(c);
        }
    }
    // cols stay sorted when the root is 0..n; partitioning preserves order
    let pivot_bit = |col: usize| {
        sub.cols
            .binary_search(&col)
            .ok()
            .or_else(|| sub.cols.iter().position(|&c| c == col))
            .map(|i| pivot_bits[i])
    };

    let mut less = Vec::new();
    let mut greater = Vec::new();
    for &r in &sub.rows {
        if r == pivot {
            continue;
        }
        let res = cmp.compare(oracle, r, pivot, &sub.cols, rng)?;
        if let Some(k) = res.witness {
            // the witness must be a 1 of the pivot iff the row is below it
            let expect = res.ordering == RowOrdering::Less;
            if pivot_bit(k) != Some(expect) {
                return Err(Error::Inconsistent {
                    expected: "half graph",
                    detail: format!(
                        "row {r} vs pivot {pivot}: witness column {k} contradicts the pivot row"
                    ),
                });
            }
        }
        match res.ordering {
            RowOrdering::Less => less.push(r),
            RowOrdering::Greater => greater.push(r),
        }
    }

    let less = SubProblem {
        rows: less,
        cols: ones,
    };
    let greater = SubProblem {
        rows: greater,
        cols: zeros,
    };
    if let Some(steps) = trace.as_deref_mut() {
        steps.push(PivotStep {
            sub: sub.clone(),
            pivot,
            less: less.clone(),
            greater: greater.clone(),
        });
    }
    sort_into(oracle, less, rng, cmp, out, trace)?;
    out.push(pivot);
    sort_into(oracle, greater, rng, cmp, out, trace)
}

/// Given the true ascending row order, finds each column's value `B[j]` by
/// binary search for the first row along the order where the column is 1.
/// The last row in the order is 1 everywhere, so it is never queried.
pub fn locate_columns<O: EdgeOracle>(oracle: &mut O, order: &RowOrder) -> Result<Vec<usize>> {
    let n = oracle.n();
    if order.0.len() != n {
        return Err(Error::Config(format!(
            "row order has {} rows, oracle has {n}",
            order.0.len()
        )));
    }
    let mut values = Vec::with_capacity(n);
    for col in 0..n {
        let (mut lo, mut hi) = (0, n - 1);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if oracle.edge_query(order.0[mid], col)? {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        values.push(hi + 1);
    }
    if !crate::perm::is_permutation(&values, 1) {
        return Err(Error::Inconsistent {
            expected: "half graph",
            detail: "columns are not monotone along the row order".into(),
        });
    }
    Ok(values)
}

/// Row order by quicksort with the given comparator, then column values by
/// binary search.
pub fn learn_half_graph_with<O, C>(
    oracle: &mut O,
    rng: &mut LabRng,
    cmp: &mut C,
) -> Result<HalfGraph>
where
    O: EdgeOracle,
    C: RowComparator<O>,
{
    let n = oracle.n();
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    let order = quicksort_rows(oracle, SubProblem::full(n), rng, cmp)?;
    let cols = locate_columns(oracle, &order)?;
    let mut rows = vec![0; n];
    for (pos, &r) in order.0.iter().enumerate() {
        rows[r] = pos + 1;
    }
    HalfGraph::new(rows, cols)
}

/// `Sampling` compares rows by random sampling; `Grover` by the charged
/// comparison of the oracle.
pub fn learn_half_graph(
    oracle: &mut CountingOracle,
    rng: &mut LabRng,
    model: CostModel,
) -> Result<HalfGraph> {
    match model {
        CostModel::Sampling => learn_half_graph_with(oracle, rng, &mut SamplingComparator),
        CostModel::Grover => learn_half_graph_with(oracle, rng, &mut GroverComparator),
        CostModel::Unit => Err(Error::Config(
            "the half-graph learner needs the sampling or grover cost model".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_instance, Family, HiddenInstance};
    use crate::perm::all_permutations;
    use crate::rng::rng_from_seed;
    use proptest::prelude::*;

    /// Ascending row order read off the hidden values.
    fn true_order(h: &HalfGraph) -> Vec<usize> {
        let mut rows: Vec<usize> = (0..h.n()).collect();
        rows.sort_by_key(|&r| h.row_values()[r]);
        rows
    }

    fn half(inst: &HiddenInstance) -> &HalfGraph {
        match inst {
            HiddenInstance::HalfGraph(h) => h,
            _ => unreachable!(),
        }
    }

    /// Counts comparator invocations.
    struct Counting<C>(C, usize);

    impl<O, C: RowComparator<O>> RowComparator<O> for Counting<C> {
        fn compare(
            &mut self,
            o: &mut O,
            a: usize,
            b: usize,
            cols: &[usize],
            rng: &mut LabRng,
        ) -> Result<Comparison> {
            self.1 += 1;
            self.0.compare(o, a, b, cols, rng)
        }
    }

    #[test]
    fn sampling_single_column() {
        let mut o = CountingOracle::new(HalfGraph::lower_triangular(5).unwrap().into());
        let mut rng = rng_from_seed(1);
        let (ord, k) = compare_rows_sampling(&mut o, 4, 0, &[2], &mut rng).unwrap();
        assert_eq!((ord, k), (RowOrdering::Greater, 2));
        assert_eq!(o.transcript().total_queries(), 2);
    }

    #[test]
    fn sampling_cap_reports_equal_rows() {
        let mut o = CountingOracle::new(HalfGraph::lower_triangular(5).unwrap().into());
        let mut rng = rng_from_seed(1);
        let err = compare_rows_sampling(&mut o, 3, 4, &[0, 1, 2], &mut rng).unwrap_err();
        assert!(matches!(err, Error::SamplingCapExceeded { draws: 192, .. }));
    }

    #[test]
    fn sampling_mean_matches_geometric() {
        // rows 1 and n of L_n differ on d = n - 1 of n columns; each draw costs
        // 2 queries and succeeds with probability d / n, so the mean is 2n/d.
        for n in [2usize, 3, 8, 50] {
            let all: Vec<usize> = (0..n).collect();
            let mut o = CountingOracle::totals_only(HalfGraph::lower_triangular(n).unwrap().into());
            let mut rng = rng_from_seed(n as u64);
            let trials = 10_000;
            for _ in 0..trials {
                let (ord, _) = compare_rows_sampling(&mut o, 0, n - 1, &all, &mut rng).unwrap();
                assert_eq!(ord, RowOrdering::Less);
            }
            let mean = o.transcript().total_queries() as f64 / trials as f64;
            let bound = 2.0 * n as f64 / (n - 1) as f64;
            assert!(
                mean >= 2.0 && mean <= bound * 1.2,
                "n = {n}: mean {mean}, 2n/d = {bound}"
            );
        }
    }

    #[test]
    fn single_row_costs_nothing() {
        let mut o = CountingOracle::new(HalfGraph::lower_triangular(3).unwrap().into());
        let mut rng = rng_from_seed(0);
        let sub = SubProblem {
            rows: vec![1],
            cols: vec![0, 1, 2],
        };
        let order = quicksort_rows(&mut o, sub, &mut rng, &mut SamplingComparator).unwrap();
        assert_eq!(order.0, vec![1]);
        assert_eq!(o.transcript().total_queries(), 0);
    }

    #[test]
    fn two_rows_enumerated() {
        for rows in [vec![1, 2], vec![2, 1]] {
            for seed in 0..10 {
                let h = HalfGraph::new(rows.clone(), vec![1, 2]).unwrap();
                let expect = true_order(&h);
                let mut o = CountingOracle::new(h.into());
                let mut rng = rng_from_seed(seed);
                let mut cmp = Counting(SamplingComparator, 0);
                let order =
                    quicksort_rows(&mut o, SubProblem::full(2), &mut rng, &mut cmp).unwrap();
                assert_eq!(order.0, expect);
                assert_eq!(cmp.1, 1);
                let pivot_reads = o.transcript().records().iter().take(2).count();
                assert_eq!(pivot_reads, 2);
            }
        }
    }

    #[test]
    fn locate_columns_examples() {
        let mut o = CountingOracle::new(HalfGraph::lower_triangular(1).unwrap().into());
        assert_eq!(locate_columns(&mut o, &RowOrder(vec![0])).unwrap(), vec![1]);
        assert_eq!(o.transcript().total_queries(), 0);

        let n = 9;
        let mut o = CountingOracle::new(HalfGraph::lower_triangular(n).unwrap().into());
        let b = locate_columns(&mut o, &RowOrder((0..n).collect())).unwrap();
        assert_eq!(b, (1..=n).collect::<Vec<_>>());
    }

    #[test]
    fn locate_columns_recovers_b() {
        for n in 1..=10 {
            for seed in 0..8 {
                let inst = gen_instance(Family::HalfGraph, n, seed).unwrap();
                let h = half(&inst).clone();
                let mut o = CountingOracle::new(inst);
                let b = locate_columns(&mut o, &RowOrder(true_order(&h))).unwrap();
                assert_eq!(b, h.col_values());
                let log = n.next_power_of_two().trailing_zeros() as u64;
                assert!(o.transcript().total_queries() <= n as u64 * (log + 1));
            }
        }
    }

    #[test]
    fn locate_columns_rejects_wrong_order() {
        let n = 4;
        let mut o = CountingOracle::new(HalfGraph::lower_triangular(n).unwrap().into());
        assert!(locate_columns(&mut o, &RowOrder(vec![3, 2, 1, 0])).is_err());
    }

    #[test]
    fn unit_model_rejected() {
        let mut o = CountingOracle::new(HalfGraph::lower_triangular(3).unwrap().into());
        assert!(learn_half_graph(&mut o, &mut rng_from_seed(0), CostModel::Unit).is_err());
    }

    #[test]
    fn n1_trivial() {
        for model in [CostModel::Sampling, CostModel::Grover] {
            let mut o = CountingOracle::new(HalfGraph::lower_triangular(1).unwrap().into());
            let h = learn_half_graph(&mut o, &mut rng_from_seed(0), model).unwrap();
            assert_eq!(h, HalfGraph::lower_triangular(1).unwrap());
            assert!(o.transcript().total_queries() <= 1);
        }
    }

    #[test]
    fn exhaustive_n4() {
        let perms = all_permutations(4, 1);
        for r in &perms {
            for b in &perms {
                let h = HalfGraph::new(r.clone(), b.clone()).unwrap();
                for seed in 0..5 {
                    let mut o = CountingOracle::new(h.clone().into());
                    let got =
                        learn_half_graph(&mut o, &mut rng_from_seed(seed), CostModel::Sampling)
                            .unwrap();
                    assert_eq!(got, h);
                }
            }
        }
    }

    #[test]
    fn partition_invariants_against_ground_truth() {
        for n in 2..=8 {
            for seed in 0..30 {
                let inst = gen_instance(Family::HalfGraph, n, seed).unwrap();
                let h = half(&inst).clone();
                let mut o = CountingOracle::new(inst);
                let mut rng = rng_from_seed(seed ^ 0xabc);
                let (order, steps) = quicksort_rows_traced(
                    &mut o,
                    SubProblem::full(n),
                    &mut rng,
                    &mut SamplingComparator,
                )
                .unwrap();
                assert_eq!(order.0, true_order(&h));
                for step in &steps {
                    let (rows, cols) = (step.sub.rows.len(), step.sub.cols.len());
                    assert!(rows <= cols && cols <= rows + 1, "rows {rows}, cols {cols}");
                    // every L-row is 0 on every G-column, every G-row 1 on every L-column
                    for &r in &step.less.rows {
                        assert!(step.greater.cols.iter().all(|&c| !h.cell(r, c)));
                    }
                    for &r in &step.greater.rows {
                        assert!(step.less.cols.iter().all(|&c| h.cell(r, c)));
                    }
                    assert!(step.less.cols.len() + step.greater.cols.len() == cols);
                    // live row values form a contiguous range
                    let mut vals: Vec<usize> =
                        step.sub.rows.iter().map(|&r| h.row_values()[r]).collect();
                    vals.sort_unstable();
                    assert!(vals.windows(2).all(|w| w[1] == w[0] + 1));
                    // rows are pairwise distinct on the live columns
                    for (x, &a) in step.sub.rows.iter().enumerate() {
                        for &b in &step.sub.rows[x + 1..] {
                            assert!(step.sub.cols.iter().any(|&c| h.cell(a, c) != h.cell(b, c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn comparison_count_is_textbook_quicksort() {
        // one comparison per non-pivot row per partition step
        for seed in 0..20 {
            let n = 40;
            let inst = gen_instance(Family::HalfGraph, n, seed).unwrap();
            let mut o = CountingOracle::new(inst);
            let mut cmp = Counting(SamplingComparator, 0);
            let (_, steps) = quicksort_rows_traced(
                &mut o,
                SubProblem::full(n),
                &mut rng_from_seed(seed),
                &mut cmp,
            )
            .unwrap();
            let expect: usize = steps.iter().map(|s| s.sub.rows.len() - 1).sum();
            assert_eq!(cmp.1, expect);
        }
    }

    #[test]
    fn grover_and_sampling_share_pivots() {
        for seed in 0..10 {
            let inst = gen_instance(Family::HalfGraph, 50, seed).unwrap();
            let mut a = CountingOracle::new(inst.clone());
            let mut b = CountingOracle::new(inst.clone());
            let ha =
                learn_half_graph(&mut a, &mut rng_from_seed(seed), CostModel::Sampling).unwrap();
            let hb = learn_half_graph(&mut b, &mut rng_from_seed(seed), CostModel::Grover).unwrap();
            assert_eq!(ha, hb);
            assert_eq!(HiddenInstance::from(ha), inst);
            assert!(b.transcript().total_charge() >= b.transcript().total_queries());
        }
    }

    proptest! {
        #[test]
        fn learns_any_half_graph(n in 1usize..80, seed: u64, grover: bool) {
            let inst = gen_instance(Family::HalfGraph, n, seed).unwrap();
            let mut o = CountingOracle::totals_only(inst.clone());
            let model = if grover { CostModel::Grover } else { CostModel::Sampling };
            let got = learn_half_graph(&mut o, &mut rng_from_seed(seed.rotate_left(7)), model).unwrap();
            prop_assert_eq!(HiddenInstance::from(got), inst);
        }
    }
}
