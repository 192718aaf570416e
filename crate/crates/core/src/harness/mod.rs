//! Seeded sweeps, the versioned CSV schema and growth fits.

mod config;
mod experiment;
mod fit;

pub use config::{parse_config, parse_sizes, ConfigFile};
pub use experiment::{
    read_csv, run_experiment, run_experiment_with, run_learner, run_learner_on, write_csv,
    ExperimentConfig, ExperimentRecord, LearnerKind, RunOutcome, SCHEMA_VERSION,
};
pub use fit::{
    fit_growth, fit_points, mean_cost_by_n, normalized_means, FitModel, FitResult, Metric,
};
