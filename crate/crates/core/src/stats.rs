//! Run-time statistics: nearest-rank percentiles, the inter-quartile range, an
//! exponential run-time-distribution fit with a Kolmogorov–Smirnov check, and
//! per-instance summaries over many runs.

use std::time::Duration;

use thiserror::Error;

use crate::solver::RunRecord;

/// Minimum number of successful runs for the exponential fit.
pub const MIN_FIT_SAMPLES: usize = 10;

/// Asymptotic two-sided Kolmogorov–Smirnov coefficient at alpha = 0.05.
pub const KS_COEFF_005: f64 = 1.36;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("sample is empty")]
    Empty,
    #[error("need at least {need} samples, got {got}")]
    TooFewSamples { got: usize, need: usize },
}

/// Nearest-rank percentile: with `k` sorted samples, the value at 1-based
/// rank `ceil(percent * k / 100)` (at least 1).
pub fn percentile(sorted: &[f64], percent: u32) -> Result<f64, StatsError> {
    if sorted.is_empty() {
        return Err(StatsError::Empty);
    }
    let k = sorted.len();
    let rank = (percent as usize * k).div_ceil(100).max(1);
    Ok(sorted[rank - 1])
}

fn sorted(samples: &[f64]) -> Vec<f64> {
    let mut s = samples.to_vec();
    s.sort_by(f64::total_cmp);
    s
}

/// `P75 - P25` under the nearest-rank rule.
pub fn iqr(samples: &[f64]) -> Result<f64, StatsError> {
    let s = sorted(samples);
    Ok(percentile(&s, 75)? - percentile(&s, 25)?)
}

/// Exponential distribution with median `m`: `F(x) = 1 - 2^(-x/m)`.
pub fn exp_median_cdf(m: f64, x: f64) -> f64 {
    if m <= 0.0 {
        return if x >= 0.0 { 1.0 } else { 0.0 };
    }
    1.0 - (-x / m).exp2()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpFit {
    /// Empirical median, used as the fitted median.
    pub median: f64,
    /// Kolmogorov–Smirnov distance to the fitted distribution.
    pub d: f64,
    /// `d < 1.36 / sqrt(k)`.
    pub pass: bool,
}

impl ExpFit {
    pub fn critical_value(k: usize) -> f64 {
        KS_COEFF_005 / (k as f64).sqrt()
    }
}

/// Fits `1 - 2^(-x/m)` with `m` the nearest-rank median of `times` and
/// measures the KS distance. The critical value ignores that `m` was estimated
/// from the same sample.
pub fn fit_exponential_rtd(times: &[f64]) -> Result<ExpFit, StatsError> {
    let k = times.len();
    if k < MIN_FIT_SAMPLES {
        return Err(StatsError::TooFewSamples {
            got: k,
            need: MIN_FIT_SAMPLES,
        });
    }
    let s = sorted(times);
    let median = percentile(&s, 50)?;
    let kf = k as f64;
    let d = s
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = exp_median_cdf(median, x);
            let above = (i + 1) as f64 / kf - f;
            let below = f - i as f64 / kf;
            above.abs().max(below.abs())
        })
        .fold(0.0, f64::max);
    Ok(ExpFit {
        median,
        d,
        pass: d < ExpFit::critical_value(k),
    })
}

/// Aggregate statistics over the runs on one instance. Fields that are not
/// defined for the given outcome (no successes, too few successes) are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct RtdSummary {
    pub runs: usize,
    pub suc: usize,
    pub size_min: usize,
    pub size_avg: f64,
    pub size_max: usize,
    /// Mean run time, failed runs counted at the cutoff.
    pub time_avg: Option<f64>,
    pub suc_time_avg: Option<f64>,
    /// Mean steps, failed runs counted at their total steps.
    pub steps_avg: Option<f64>,
    pub suc_steps_avg: Option<f64>,
    /// Only when at least 75% of the runs succeeded.
    pub iqr_time: Option<f64>,
    /// Only when at least [`MIN_FIT_SAMPLES`] runs succeeded.
    pub ks: Option<ExpFit>,
}

/// Summarises `records` against the target cover size.
///
/// A run succeeds when its best size is at most `target`. Its time is
/// `time_to_best` on success and `cutoff` otherwise; without a cutoff the run's
/// own total time stands in.
pub fn summarize(records: &[RunRecord], cutoff: Option<Duration>, target: usize) -> RtdSummary {
    let runs = records.len();
    let success = |r: &RunRecord| r.best_size <= target;
    let suc = records.iter().filter(|r| success(r)).count();

    let run_time = |r: &RunRecord| {
        if success(r) {
            r.time_to_best.as_secs_f64()
        } else {
            cutoff.unwrap_or(r.total_time).as_secs_f64()
        }
    };
    let run_steps = |r: &RunRecord| {
        if success(r) {
            r.steps_to_best
        } else {
            r.total_steps
        }
    };
    let times: Vec<f64> = records.iter().map(run_time).collect();
    let suc_times: Vec<f64> = records
        .iter()
        .filter(|r| success(r))
        .map(run_time)
        .collect();
    let mean = |xs: &[f64]| (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64);
    let any_success = suc > 0;

    let steps: Vec<f64> = records.iter().map(|r| run_steps(r) as f64).collect();
    let suc_steps: Vec<f64> = records
        .iter()
        .filter(|r| success(r))
        .map(|r| r.steps_to_best as f64)
        .collect();

    let sizes = records.iter().map(|r| r.best_size);
    RtdSummary {
        runs,
        suc,
        size_min: sizes.clone().min().unwrap_or(0),
        size_avg: mean(&records.iter().map(|r| r.best_size as f64).collect::<Vec<_>>())
            .unwrap_or(0.0),
        size_max: sizes.max().unwrap_or(0),
        time_avg: mean(&times).filter(|_| any_success),
        suc_time_avg: mean(&suc_times),
        steps_avg: mean(&steps).filter(|_| any_success),
        suc_steps_avg: mean(&suc_steps),
        iqr_time: (runs > 0 && suc * 4 >= 3 * runs)
            .then(|| iqr(&times).ok())
            .flatten(),
        ks: fit_exponential_rtd(&suc_times).ok(),
    }
}
