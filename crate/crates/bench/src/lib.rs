//! Experiment harness for the `moead_mm` optimizers: multi-seed runs,
//! indicator scoring, rank-sum significance tests and report export.
//!
//! A run is described by an [`ExperimentConfig`] (TOML). [`run_experiment`]
//! executes the missing (algorithm, problem, seed) cells in parallel and
//! persists each one; [`summarize`] and [`export`] turn the records into
//! comparison tables.

pub mod algorithms;
pub mod config;
mod error;
pub mod export;
pub mod runner;
pub mod stats;
pub mod summary;

pub use config::{AlgorithmKind, AlgorithmSpec, ExperimentConfig, ProblemSpec, ScalarizerKind};
pub use error::{BenchError, Result};
pub use export::export;
pub use runner::{load_records, run_experiment, ExperimentReport, Layout, RunRecord};
pub use stats::wilcoxon_rank_sum;
pub use summary::{summarize, Indicator, Mark, StatsSummary};
