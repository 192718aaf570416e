use edgeq::harness::{run_experiment, ExperimentConfig, LearnerKind};
use edgeq::instances::gen_instance;
use edgeq::learners::{learn_half_graph_with, sort_thresholds, SamplingComparator};
use edgeq::oracles::{EdgesViaComparisons, QueryKind, ThresholdsViaEdges};
use edgeq::rng::rng_from_seed;
use edgeq::{CostModel, CountingOracle, Family, HiddenInstance};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_learner_is_exact(n in 1usize..40, seed: u64) {
        for learner in [LearnerKind::Greedy, LearnerKind::Full, LearnerKind::BinarySearch, LearnerKind::Quicksort] {
            for model in [CostModel::Unit, CostModel::Sampling, CostModel::Grover] {
                if !learner.supports(model) {
                    continue;
                }
                let out = edgeq::harness::run_learner(learner, model, n, seed, true).unwrap();
                prop_assert!(out.correct, "{learner} {model} {}", out.hidden);
                let t = &out.transcript;
                prop_assert_eq!(t.records().len() as u64, t.total_queries()
                    + t.records().iter().filter(|r| r.query.kind() == QueryKind::ChargedCompare).count() as u64);
                if model != CostModel::Grover {
                    prop_assert_eq!(t.total_charge(), t.total_queries());
                }
            }
        }
    }

    #[test]
    fn threshold_view_matches_edge_view(n in 1usize..64, seed: u64) {
        let inst = gen_instance(Family::ColPermuted, n, seed).unwrap();
        let mut native = CountingOracle::new(inst.clone());
        let mut edges = CountingOracle::new(inst);
        let a = sort_thresholds(&mut native).unwrap();
        let b = sort_thresholds(&mut ThresholdsViaEdges(&mut edges)).unwrap();
        prop_assert_eq!(a, b);
        prop_assert_eq!(native.transcript().answer_bits(), edges.transcript().answer_bits());
        prop_assert!(native.transcript().records().iter().all(|r| r.query.kind() == QueryKind::Threshold));
        prop_assert!(edges.transcript().records().iter().all(|r| r.query.kind() == QueryKind::Edge));
    }

    #[test]
    fn comparison_view_matches_edge_view(n in 1usize..24, seed: u64) {
        let inst = gen_instance(Family::HalfGraph, n, seed).unwrap();
        let mut direct = CountingOracle::new(inst.clone());
        let mut via = CountingOracle::new(inst.clone());
        let a = learn_half_graph_with(&mut direct, &mut rng_from_seed(seed), &mut SamplingComparator).unwrap();
        let b = learn_half_graph_with(&mut EdgesViaComparisons(&mut via), &mut rng_from_seed(seed), &mut SamplingComparator).unwrap();
        prop_assert_eq!(HiddenInstance::from(a.clone()), inst);
        prop_assert_eq!(a, b);
        prop_assert_eq!(direct.transcript().answer_bits(), via.transcript().answer_bits());
        prop_assert!(via.transcript().records().iter().all(|r| r.query.kind() == QueryKind::Comparison));
    }

    #[test]
    fn sweep_records_sorted_and_seeded(seed: u64, trials in 1usize..4) {
        let cfg = ExperimentConfig::new(Family::Matching, LearnerKind::Greedy, CostModel::Unit, vec![3, 7, 12], trials)
            .with_seed(seed);
        let recs = run_experiment(&cfg).unwrap();
        prop_assert_eq!(recs.len(), 3 * trials);
        let keys: Vec<(usize, usize)> = recs.iter().map(|r| (r.n, r.trial)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        prop_assert_eq!(keys, sorted);
        for r in &recs {
            prop_assert!(r.total_queries < (r.n * r.n) as u64 || r.n == 1);
            prop_assert_eq!(r.wall_micros, 0);
        }
    }
}
