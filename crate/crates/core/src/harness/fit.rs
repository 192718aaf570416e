use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ExperimentRecord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FitModel {
    /// `n^2`
    #[serde(rename = "POLY")]
    Poly,
    /// `n ln n`
    #[serde(rename = "NLOGN")]
    NLogN,
    /// `n ln^2 n`
    #[serde(rename = "NLOG2N")]
    NLog2N,
}

impl FitModel {
    pub const ALL: [FitModel; 3] = [FitModel::Poly, FitModel::NLogN, FitModel::NLog2N];

    pub fn reference(self, n: f64) -> f64 {
        match self {
            FitModel::Poly => n * n,
            FitModel::NLogN => n * n.ln(),
            FitModel::NLog2N => n * n.ln() * n.ln(),
        }
    }
}

impl fmt::Display for FitModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FitModel::Poly => "POLY",
            FitModel::NLogN => "NLOGN",
            FitModel::NLog2N => "NLOG2N",
        })
    }
}

impl FromStr for FitModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "POLY" | "N2" => Ok(FitModel::Poly),
            "NLOGN" => Ok(FitModel::NLogN),
            "NLOG2N" => Ok(FitModel::NLog2N),
            other => Err(Error::Parse(format!("unknown fit model `{other}`"))),
        }
    }
}

/// Which cost column to fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Metric {
    #[default]
    Queries,
    Charge,
}

impl Metric {
    pub fn of(self, r: &ExperimentRecord) -> u64 {
        match self {
            Metric::Queries => r.total_queries,
            Metric::Charge => r.total_charge,
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "queries" | "total_queries" => Ok(Metric::Queries),
            "charge" | "total_charge" => Ok(Metric::Charge),
            other => Err(Error::Parse(format!("unknown metric `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub model: FitModel,
    /// Average of `mean(n) / g(n)` over the sizes, `g` the model's reference curve.
    pub constant: f64,
    /// Least-squares slope of `ln mean` against `ln n`.
    pub slope: f64,
    /// Euclidean norm of the residuals of that line.
    pub residual: f64,
}

/// Mean of `metric` per distinct `n`, in increasing `n`.
pub fn mean_cost_by_n(records: &[ExperimentRecord], metric: Metric) -> Vec<(usize, f64)> {
    let mut acc: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for r in records {
        let e = acc.entry(r.n).or_default();
        e.0 += metric.of(r) as f64;
        e.1 += 1;
    }
    acc.into_iter()
        .map(|(n, (s, k))| (n, s / k as f64))
        .collect()
}

/// `mean(n) / g(n)` per distinct `n`.
pub fn normalized_means(
    records: &[ExperimentRecord],
    metric: Metric,
    model: FitModel,
) -> Vec<(usize, f64)> {
    mean_cost_by_n(records, metric)
        .into_iter()
        .map(|(n, m)| (n, m / model.reference(n as f64)))
        .collect()
}

pub fn fit_growth(
    records: &[ExperimentRecord],
    model: FitModel,
    metric: Metric,
) -> Result<FitResult> {
    fit_points(&mean_cost_by_n(records, metric), model)
}

/// Fit on `(n, mean cost)` points directly.
pub fn fit_points(points: &[(usize, f64)], model: FitModel) -> Result<FitResult> {
    if points.len() < 3 {
        return Err(Error::Config(format!(
            "a fit needs at least 3 distinct n, got {}",
            points.len()
        )));
    }
    if points
        .iter()
        .any(|&(n, m)| n < 2 || m <= 0.0 || !m.is_finite())
    {
        return Err(Error::Config(
            "fit points need n >= 2 and positive finite cost".into(),
        ));
    }
    let xs: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, m)| m.ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::Config("all n are equal".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum::<f64>()
        .sqrt();
    let constant = points
        .iter()
        .map(|&(n, m)| m / model.reference(n as f64))
        .sum::<f64>()
        / k;
    Ok(FitResult {
        model,
        constant,
        slope,
        residual,
    })
}
