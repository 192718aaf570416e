//! Flat `key = value` config files for sweeps.
//!
//! ```text
//! # comment
//! family = half_graph
//! learner = quicksort
//! cost_model = sampling
//! sizes = 64,128,256
//! trials = 50
//! seed = 7
//! ```

use std::path::PathBuf;

use super::{ExperimentConfig, LearnerKind};
use crate::error::{Error, Result};
use crate::instances::Family;
use crate::oracles::CostModel;

/// A sweep config plus the optional output path named in the file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigFile {
    pub config: ExperimentConfig,
    pub output: Option<PathBuf>,
}

pub fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size `{t}`")))
        })
        .collect()
}

pub fn parse_config(text: &str) -> Result<ConfigFile> {
    let mut family = None;
    let mut learner = None;
    let mut cost_model = CostModel::Unit;
    let mut sizes = None;
    let mut trials = 1usize;
    let mut seed = 0u64;
    let mut timing = false;
    let mut output = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", lineno + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |what: &str| Error::Parse(format!("line {}: bad {what} `{value}`", lineno + 1));
        match key {
            "family" => family = Some(value.parse::<Family>()?),
            "learner" => learner = Some(value.parse::<LearnerKind>()?),
            "cost_model" => cost_model = value.parse()?,
            "sizes" => sizes = Some(parse_sizes(value)?),
            "trials" => trials = value.parse().map_err(|_| bad("trials"))?,
            "seed" | "base_seed" => seed = value.parse().map_err(|_| bad("seed"))?,
            "timing" => timing = value.parse().map_err(|_| bad("timing"))?,
            "out" | "output" => output = Some(PathBuf::from(value)),
            other => {
                return Err(Error::Parse(format!(
                    "line {}: unknown key `{other}`",
                    lineno + 1
                )))
            }
        }
    }

    let family = family
        .or_else(|| learner.map(LearnerKind::family))
        .ok_or_else(|| Error::Config("config names neither family nor learner".into()))?;
    let learner = learner.unwrap_or_else(|| LearnerKind::default_for(family));
    let sizes = sizes.ok_or_else(|| Error::Config("config has no sizes".into()))?;
    let mut config =
        ExperimentConfig::new(family, learner, cost_model, sizes, trials).with_seed(seed);
    config.timing = timing;
    config.validate()?;
    Ok(ConfigFile { config, output })
}
