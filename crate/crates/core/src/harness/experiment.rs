use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::{gen_instance, Family, HiddenInstance};
use crate::learners::{
    learn_column_permuted, learn_half_graph, learn_matching_full, learn_matching_greedy,
};
use crate::oracles::{Answer, CostModel, CountingOracle, LazyAdversary, Query, Transcript};
use crate::par::Exec;
use crate::rng::{mix64, rng_from_seed, trial_seed};

pub const SCHEMA_VERSION: u32 = 1;

/// Separates the learner's random stream from the instance generator's.
const LEARNER_STREAM: u64 = 0x6c65_6172_6e65_7221;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LearnerKind {
    /// Greedy matching learner on a random hidden matching.
    Greedy,
    /// Greedy matching learner against the lazy adversary.
    GreedyAdversary,
    /// Row-major full scan baseline for matchings.
    Full,
    /// Per-column binary search for column-permuted half graphs.
    BinarySearch,
    /// Row quicksort plus column binary search for half graphs.
    Quicksort,
}

impl LearnerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LearnerKind::Greedy => "greedy",
            LearnerKind::GreedyAdversary => "greedy-adversary",
            LearnerKind::Full => "full",
            LearnerKind::BinarySearch => "binary-search",
            LearnerKind::Quicksort => "quicksort",
        }
    }

    pub fn family(self) -> Family {
        match self {
            LearnerKind::Greedy | LearnerKind::GreedyAdversary | LearnerKind::Full => {
                Family::Matching
            }
            LearnerKind::BinarySearch => Family::ColPermuted,
            LearnerKind::Quicksort => Family::HalfGraph,
        }
    }

    pub fn supports(self, model: CostModel) -> bool {
        match self {
            LearnerKind::Quicksort => model != CostModel::Unit,
            _ => model != CostModel::Grover,
        }
    }

    /// The learner a family gets when none is named.
    pub fn default_for(family: Family) -> Self {
        match family {
            Family::Matching => LearnerKind::Greedy,
            Family::ColPermuted => LearnerKind::BinarySearch,
            Family::HalfGraph => LearnerKind::Quicksort,
        }
    }
}

impl fmt::Display for LearnerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LearnerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "greedy" => Ok(LearnerKind::Greedy),
            "greedy-adversary" => Ok(LearnerKind::GreedyAdversary),
            "full" => Ok(LearnerKind::Full),
            "binary-search" => Ok(LearnerKind::BinarySearch),
            "quicksort" => Ok(LearnerKind::Quicksort),
            other => Err(Error::Parse(format!("unknown learner `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub family: Family,
    pub learner: LearnerKind,
    pub cost_model: CostModel,
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub base_seed: u64,
    /// Record wall-clock time per run. Off by default: timings are the only
    /// non-reproducible column.
    pub timing: bool,
}

impl ExperimentConfig {
    pub fn new(
        family: Family,
        learner: LearnerKind,
        cost_model: CostModel,
        sizes: Vec<usize>,
        trials: usize,
    ) -> Self {
        ExperimentConfig {
            family,
            learner,
            cost_model,
            sizes,
            trials,
            base_seed: 0,
            timing: false,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.base_seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() {
            return Err(Error::Config("no sizes given".into()));
        }
        if self.sizes[0] == 0 {
            return Err(Error::Config("sizes must be positive".into()));
        }
        if self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("sizes must be strictly increasing".into()));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.learner.family() != self.family {
            return Err(Error::Config(format!(
                "learner {} works on {} instances, not {}",
                self.learner,
                self.learner.family(),
                self.family
            )));
        }
        if !self.learner.supports(self.cost_model) {
            return Err(Error::Config(format!(
                "learner {} does not run under the {} cost model",
                self.learner, self.cost_model
            )));
        }
        Ok(())
    }
}

/// One row of the sweep CSV.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub schema_version: u32,
    pub family: Family,
    pub learner: LearnerKind,
    pub cost_model: CostModel,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub total_queries: u64,
    pub total_charge: u64,
    pub wall_micros: u64,
    pub correct: u8,
}

/// Result of a single learner run.
#[derive(Debug)]
pub struct RunOutcome {
    pub hidden: HiddenInstance,
    pub learned: HiddenInstance,
    pub correct: bool,
    pub transcript: Transcript,
    pub wall_micros: u64,
}

/// Generates the instance for `seed` and runs `learner` on a fresh oracle.
/// With `keep_records` the full transcript is returned, otherwise totals only.
pub fn run_learner(
    learner: LearnerKind,
    model: CostModel,
    n: usize,
    seed: u64,
    keep_records: bool,
) -> Result<RunOutcome> {
    if learner == LearnerKind::GreedyAdversary {
        let start = Instant::now();
        let mut adv = LazyAdversary::new(n)?;
        let learned: HiddenInstance = learn_matching_greedy(&mut adv)?.into();
        let wall_micros = start.elapsed().as_micros() as u64;
        let hidden: HiddenInstance = adv.final_instance().into();
        let correct = learned == hidden && consistent_with(&hidden, adv.transcript());
        return Ok(RunOutcome {
            hidden,
            learned,
            correct,
            transcript: adv.transcript().clone(),
            wall_micros,
        });
    }

    let hidden = gen_instance(learner.family(), n, seed)?;
    run_learner_on(learner, model, hidden, seed, keep_records)
}

/// Runs `learner` on a given hidden instance, e.g. a fixture being replayed.
/// `seed` only drives the learner's own randomness.
pub fn run_learner_on(
    learner: LearnerKind,
    model: CostModel,
    hidden: HiddenInstance,
    seed: u64,
    keep_records: bool,
) -> Result<RunOutcome> {
    if learner == LearnerKind::GreedyAdversary {
        return Err(Error::Config(
            "the adversary learner has no fixed hidden instance".into(),
        ));
    }
    if hidden.family() != learner.family() {
        return Err(Error::Config(format!(
            "learner {learner} works on {} instances, not {}",
            learner.family(),
            hidden.family()
        )));
    }
    let mut rng = rng_from_seed(mix64(seed ^ LEARNER_STREAM));
    let start = Instant::now();
    let mut oracle = if keep_records {
        CountingOracle::new(hidden.clone())
    } else {
        CountingOracle::totals_only(hidden.clone())
    };
    let learned: HiddenInstance = match learner {
        LearnerKind::Greedy => learn_matching_greedy(&mut oracle)?.into(),
        LearnerKind::Full => learn_matching_full(&mut oracle)?.into(),
        LearnerKind::BinarySearch => learn_column_permuted(&mut oracle)?.into(),
        LearnerKind::Quicksort => learn_half_graph(&mut oracle, &mut rng, model)?.into(),
        LearnerKind::GreedyAdversary => unreachable!(),
    };
    let wall_micros = start.elapsed().as_micros() as u64;
    let correct = learned == hidden;
    Ok(RunOutcome {
        hidden,
        learned,
        correct,
        transcript: oracle.into_transcript(),
        wall_micros,
    })
}

fn consistent_with(inst: &HiddenInstance, t: &Transcript) -> bool {
    t.records().iter().all(|r| match (r.query, r.answer) {
        (Query::Edge { row, col }, Answer::Bit(b)) => inst.cell(row, col) == b,
        _ => true,
    })
}

/// Runs every `(n, trial)` of the config. Records come back sorted by
/// `(n, trial)` whatever the execution strategy, so the output is a pure
/// function of the config. Fails if any run's output is wrong.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    run_experiment_with(cfg, Exec::default())
}

pub fn run_experiment_with(cfg: &ExperimentConfig, exec: Exec) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    let jobs: Vec<(usize, usize)> = cfg
        .sizes
        .iter()
        .flat_map(|&n| (0..cfg.trials).map(move |t| (n, t)))
        .collect();
    let records = exec
        .map(jobs, |(n, trial)| -> Result<ExperimentRecord> {
            let seed = trial_seed(cfg.base_seed, n, trial);
            let out = run_learner(cfg.learner, cfg.cost_model, n, seed, false)?;
            Ok(ExperimentRecord {
                schema_version: SCHEMA_VERSION,
                family: cfg.family,
                learner: cfg.learner,
                cost_model: cfg.cost_model,
                n,
                trial,
                seed,
                total_queries: out.transcript.total_queries(),
                total_charge: out.transcript.total_charge(),
                wall_micros: if cfg.timing { out.wall_micros } else { 0 },
                correct: u8::from(out.correct),
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = records.iter().find(|r| r.correct != 1) {
        return Err(Error::Inconsistent {
            expected: bad.family.as_str(),
            detail: format!(
                "learner output wrong at n = {}, trial = {}",
                bad.n, bad.trial
            ),
        });
    }
    Ok(records)
}

pub fn write_csv<W: Write>(records: &[ExperimentRecord], w: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    if records.is_empty() {
        wtr.write_record([
            "schema_version",
            "family",
            "learner",
            "cost_model",
            "n",
            "trial",
            "seed",
            "total_queries",
            "total_charge",
            "wall_micros",
            "correct",
        ])?;
    }
    for r in records {
        wtr.serialize(r)?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(r: R) -> Result<Vec<ExperimentRecord>> {
    let mut rdr = csv::Reader::from_reader(r);
    let mut out = Vec::new();
    for rec in rdr.deserialize() {
        let rec: ExperimentRecord = rec?;
        if rec.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "schema version {} is not the supported version {SCHEMA_VERSION}",
                rec.schema_version
            )));
        }
        out.push(rec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greedy_adversary_is_exact() {
        let cfg = ExperimentConfig::new(
            Family::Matching,
            LearnerKind::GreedyAdversary,
            CostModel::Unit,
            (2..=24).collect(),
            2,
        );
        for r in run_experiment(&cfg).unwrap() {
            assert_eq!(r.total_queries as usize, r.n * (r.n - 1) / 2);
            assert_eq!(r.correct, 1);
        }
    }

    #[test]
    fn validation() {
        let ok = ExperimentConfig::new(
            Family::HalfGraph,
            LearnerKind::Quicksort,
            CostModel::Sampling,
            vec![4, 8],
            1,
        );
        assert!(ok.validate().is_ok());
        let mut bad = ok.clone();
        bad.sizes = vec![8, 4];
        assert!(bad.validate().is_err());
        let mut bad = ok.clone();
        bad.trials = 0;
        assert!(bad.validate().is_err());
        let mut bad = ok.clone();
        bad.cost_model = CostModel::Unit;
        assert!(bad.validate().is_err());
        let mut bad = ok.clone();
        bad.learner = LearnerKind::Greedy;
        assert!(bad.validate().is_err());
        let mut bad = ok;
        bad.sizes = vec![];
        assert!(bad.validate().is_err());
    }

    #[test]
    fn csv_round_trip_and_header() {
        let cfg = ExperimentConfig::new(
            Family::ColPermuted,
            LearnerKind::BinarySearch,
            CostModel::Unit,
            vec![3, 5],
            2,
        )
        .with_seed(9);
        let recs = run_experiment(&cfg).unwrap();
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with(
            "schema_version,family,learner,cost_model,n,trial,seed,total_queries,total_charge,wall_micros,correct\n1,col_permuted,binary-search,unit,3,0,"
        ));
        assert_eq!(read_csv(buf.as_slice()).unwrap(), recs);
    }

    #[test]
    fn schema_mismatch_rejected() {
        let text = "schema_version,family,learner,cost_model,n,trial,seed,total_queries,total_charge,wall_micros,correct\n\
                    2,matching,greedy,unit,3,0,1,2,2,0,1\n";
        assert!(read_csv(text.as_bytes()).is_err());
    }

    #[test]
    fn execution_strategies_agree() {
        let cfg = ExperimentConfig::new(
            Family::HalfGraph,
            LearnerKind::Quicksort,
            CostModel::Grover,
            vec![8, 16, 32],
            5,
        )
        .with_seed(3);
        assert_eq!(
            run_experiment_with(&cfg, Exec::Sequential).unwrap(),
            run_experiment_with(&cfg, Exec::Parallel).unwrap()
        );
    }
}
