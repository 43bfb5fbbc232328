//! Per-cell statistics and significance marks against a baseline algorithm.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};
use crate::runner::RunRecord;
use crate::stats::wilcoxon_rank_sum;

/// Significance level of the marks.
pub const ALPHA: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Indicator {
    IgdPlus,
    Igdx,
    Hv,
}

impl Indicator {
    pub const ALL: [Indicator; 3] = [Indicator::IgdPlus, Indicator::Igdx, Indicator::Hv];

    pub fn name(self) -> &'static str {
        match self {
            Self::IgdPlus => "igd_plus",
            Self::Igdx => "igdx",
            Self::Hv => "hv",
        }
    }

    pub fn lower_is_better(self) -> bool {
        !matches!(self, Self::Hv)
    }

    pub fn of(self, r: &RunRecord) -> f64 {
        match self {
            Self::IgdPlus => r.igd_plus,
            Self::Igdx => r.igdx,
            Self::Hv => r.hv,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    pub mean: f64,
    pub median: f64,
    /// Sample standard deviation (0 for a single run).
    pub std: f64,
}

impl Moments {
    pub fn of(values: &[f64]) -> Self {
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let mid = sorted.len() / 2;
        let median = if sorted.len() % 2 == 1 { sorted[mid] } else { (sorted[mid - 1] + sorted[mid]) / 2.0 };
        let std = if values.len() > 1 {
            (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        Self { mean, median, std }
    }
}

/// Outcome of comparing a cell with the baseline cell of the same problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mark {
    /// Significantly better than the baseline.
    Better,
    /// Significantly worse than the baseline.
    Worse,
    /// No significant difference.
    Similar,
    /// The baseline's own cell.
    Baseline,
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Better => "+",
            Self::Worse => "−",
            Self::Similar => "≈",
            Self::Baseline => "",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub algorithm: String,
    pub problem: String,
    pub runs: usize,
    /// Indexed like [`Indicator::ALL`].
    pub moments: [Moments; 3],
    pub marks: [Mark; 3],
    pub p_values: [Option<f64>; 3],
    /// Best mean of its problem row.
    pub best: [bool; 3],
}

impl CellSummary {
    pub fn moments(&self, i: Indicator) -> Moments {
        self.moments[i.index()]
    }

    pub fn mark(&self, i: Indicator) -> Mark {
        self.marks[i.index()]
    }

    pub fn is_best(&self, i: Indicator) -> bool {
        self.best[i.index()]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsSummary {
    pub baseline: String,
    /// Column order: first appearance in the records.
    pub algorithms: Vec<String>,
    /// Row order: first appearance in the records.
    pub problems: Vec<String>,
    pub cells: Vec<CellSummary>,
}

impl StatsSummary {
    pub fn cell(&self, algorithm: &str, problem: &str) -> Option<&CellSummary> {
        self.cells.iter().find(|c| c.algorithm == algorithm && c.problem == problem)
    }

    /// (`+`, `−`, `≈`) counts of an algorithm over all problems.
    pub fn counts(&self, algorithm: &str, indicator: Indicator) -> (usize, usize, usize) {
        let mut out = (0, 0, 0);
        for c in self.cells.iter().filter(|c| c.algorithm == algorithm) {
            match c.mark(indicator) {
                Mark::Better => out.0 += 1,
                Mark::Worse => out.1 += 1,
                Mark::Similar | Mark::Baseline => out.2 += 1,
            }
        }
        out
    }
}

fn first_seen<'a>(items: impl Iterator<Item = &'a str>) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for s in items {
        if !out.iter().any(|o| o == s) {
            out.push(s.to_string());
        }
    }
    out
}

/// Summarizes `records` cell by cell and marks each cell against `baseline`.
///
/// Every (algorithm, problem) pair seen must be present with the same number
/// of runs. Samples shorter than 3 runs are not tested and are marked `≈`.
pub fn summarize(records: &[RunRecord], baseline: &str) -> Result<StatsSummary> {
    let algorithms = first_seen(records.iter().map(|r| r.algorithm.as_str()));
    let problems = first_seen(records.iter().map(|r| r.problem.as_str()));
    if !algorithms.iter().any(|a| a == baseline) {
        return Err(BenchError::Config(format!("baseline '{baseline}' has no records")));
    }
    let values = |alg: &str, prob: &str, i: Indicator| -> Vec<f64> {
        let mut rs: Vec<&RunRecord> = records.iter().filter(|r| r.algorithm == alg && r.problem == prob).collect();
        rs.sort_by_key(|r| r.run);
        rs.iter().map(|r| i.of(r)).collect()
    };

    let mut missing = Vec::new();
    let mut expected_runs = None;
    for p in &problems {
        for a in &algorithms {
            let n = values(a, p, Indicator::Igdx).len();
            if n == 0 {
                missing.push(format!("{p}/{a}"));
            } else if *expected_runs.get_or_insert(n) != n {
                missing.push(format!("{p}/{a} ({n} runs, expected {})", expected_runs.unwrap()));
            }
        }
    }
    if !missing.is_empty() {
        return Err(BenchError::Incomplete(missing));
    }

    let mut cells = Vec::new();
    for p in &problems {
        let mut row: Vec<CellSummary> = Vec::new();
        for a in &algorithms {
            let mut moments = [Moments { mean: 0.0, median: 0.0, std: 0.0 }; 3];
            let mut marks = [Mark::Baseline; 3];
            let mut p_values = [None; 3];
            let mut runs = 0;
            for i in Indicator::ALL {
                let mine = values(a, p, i);
                runs = mine.len();
                moments[i.index()] = Moments::of(&mine);
                if a == baseline {
                    continue;
                }
                let base = values(baseline, p, i);
                if mine.len() < 3 {
                    marks[i.index()] = Mark::Similar;
                    continue;
                }
                let pv = wilcoxon_rank_sum(&mine, &base)?;
                p_values[i.index()] = Some(pv);
                let (m, b) = (Moments::of(&mine).mean, Moments::of(&base).mean);
                let better = if i.lower_is_better() { m < b } else { m > b };
                let worse = if i.lower_is_better() { m > b } else { m < b };
                marks[i.index()] = if pv < ALPHA && better {
                    Mark::Better
                } else if pv < ALPHA && worse {
                    Mark::Worse
                } else {
                    Mark::Similar
                };
            }
            row.push(CellSummary {
                algorithm: a.clone(),
                problem: p.clone(),
                runs,
                moments,
                marks,
                p_values,
                best: [false; 3],
            });
        }
        for i in Indicator::ALL {
            let key = |c: &CellSummary| {
                let m = c.moments(i).mean;
                if i.lower_is_better() {
                    m
                } else {
                    -m
                }
            };
            let best = (0..row.len()).fold(0, |b, k| if key(&row[k]) < key(&row[b]) { k } else { b });
            row[best].best[i.index()] = true;
        }
        cells.extend(row);
    }
    Ok(StatsSummary { baseline: baseline.to_string(), algorithms, problems, cells })
}
