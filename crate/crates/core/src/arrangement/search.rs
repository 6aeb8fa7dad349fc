use rayon::prelude::*;

use super::analysis::{check_conjecture_rgin, shape_check_rgin, ConjectureReport};
use super::random::random_central_arrangement;
use crate::error::{Error, Result};
use crate::gin::{rgin, GinConfig};
use crate::seed;
use crate::QArrangement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub num_vars: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub count: usize,
    pub seed: u64,
    pub workers: usize,
    pub coeff_bound: i64,
    /// Bound and trial budget for each sample; its seed is replaced by the
    /// sample seed.
    pub gin: GinConfig,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { num_vars: 3, n_min: 3, n_max: 6, count: 100, seed: 0, workers: 1, coeff_bound: 5, gin: GinConfig::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleOutcome {
    Holds,
    Vacuous,
    Counterexample,
    GinFailure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleResult {
    pub index: usize,
    pub seed: u64,
    pub arrangement: QArrangement,
    pub outcome: SampleOutcome,
    pub report: Option<ConjectureReport>,
    pub error: Option<String>,
}

impl SampleResult {
    /// An arrangement file that reproduces this sample.
    pub fn replay_file(&self) -> String {
        let mut out = format!("# sample {} (seed {})\n", self.index, self.seed);
        if let Some(r) = &self.report {
            out.push_str(&format!("# {}\n", r.describe(self.arrangement.ring())));
        }
        out.push_str(&self.arrangement.to_string());
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchSummary {
    pub holds: usize,
    pub vacuous: usize,
    pub counterexamples: usize,
    pub gin_failures: usize,
    /// In sample order.
    pub samples: Vec<SampleResult>,
}

fn run_sample(config: &SearchConfig, index: usize) -> Result<SampleResult> {
    let sample_seed = seed::derive(config.seed, "conjecture-sample", index as u64);
    let span = (config.n_max - config.n_min + 1) as u64;
    let n = config.n_min + (seed::derive(config.seed, "conjecture-size", index as u64) % span) as usize;
    let arrangement = random_central_arrangement(config.num_vars, n, sample_seed, config.coeff_bound)?;
    let gin_config = GinConfig { seed: sample_seed, ..config.gin.clone() };
    let mut sample =
        SampleResult { index, seed: sample_seed, arrangement, outcome: SampleOutcome::GinFailure, report: None, error: None };
    let gin = match rgin(&sample.arrangement.jacobian_ideal()?, &gin_config) {
        Ok(g) => g,
        Err(e @ Error::GinFailure { .. }) => {
            sample.error = Some(e.to_string());
            return Ok(sample);
        }
        Err(e) => return Err(e),
    };
    let shape = shape_check_rgin(&gin.ideal, n);
    if !shape.passed {
        return Err(Error::InvariantViolation(format!("sample {index}: {}", shape.problems.join("; "))));
    }
    let report = check_conjecture_rgin(&gin.ideal)?;
    sample.outcome = if !report.holds {
        SampleOutcome::Counterexample
    } else if report.vacuous {
        SampleOutcome::Vacuous
    } else {
        SampleOutcome::Holds
    };
    sample.report = Some(report);
    Ok(sample)
}

/// Samples random central arrangements and checks the degree bound on
/// generators involving the third variable for each. Results do not depend
/// on the number of workers.
pub fn conjecture_search(config: &SearchConfig) -> Result<SearchSummary> {
    if config.num_vars < 3 {
        return Err(Error::Precondition("the search needs at least three variables".into()));
    }
    if config.n_min < 1 || config.n_min > config.n_max {
        return Err(Error::Precondition(format!("empty size range {}..={}", config.n_min, config.n_max)));
    }
    let samples: Vec<SampleResult> = if config.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?;
        pool.install(|| (0..config.count).into_par_iter().map(|i| run_sample(config, i)).collect::<Result<_>>())?
    } else {
        (0..config.count).map(|i| run_sample(config, i)).collect::<Result<_>>()?
    };
    let mut summary = SearchSummary::default();
    for s in &samples {
        match s.outcome {
            SampleOutcome::Holds => summary.holds += 1,
            SampleOutcome::Vacuous => summary.vacuous += 1,
            SampleOutcome::Counterexample => summary.counterexamples += 1,
            SampleOutcome::GinFailure => summary.gin_failures += 1,
        }
    }
    summary.samples = samples;
    Ok(summary)
}
