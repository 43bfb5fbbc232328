//! Executes every (algorithm, problem, run) cell of an experiment.
//!
//! Each finished cell leaves two files under `runs/<problem>/<algorithm>/`:
//! the archive in columnar format and a JSON record. The record is written
//! last (via a rename), so its presence marks the cell complete and a rerun
//! skips it.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use moead_mm::columnar::{read_points, read_reference_set, write_archive, write_reference_set};
use moead_mm::indicators::{hv_reference_point, score};
use moead_mm::problems::{sample_reference_set, BuiltinProblem};
use moead_mm::trace::{GenerationTrace, NoTrace, TraceSink};
use moead_mm::{RandomStream, ReferenceSet64, Solution64};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algorithms::run_algorithm;
use crate::config::{AlgorithmSpec, ExperimentConfig};
use crate::error::{BenchError, IoContext, Result};

/// Result of one seeded run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algorithm: String,
    pub problem: String,
    pub run: usize,
    pub seed: u64,
    pub igd_plus: f64,
    pub igdx: f64,
    pub hv: f64,
    pub archive_size: usize,
    pub seconds: f64,
    /// Archive path relative to the output directory.
    pub archive: String,
}

/// File layout of an output directory.
#[derive(Debug, Clone)]
pub struct Layout {
    pub root: PathBuf,
}

impl Layout {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Self { root: root.into() }
    }

    pub fn reference_set(&self, problem: &str, n: usize, seed: u64) -> PathBuf {
        self.root.join("refsets").join(format!("{problem}-n{n}-s{seed}.txt"))
    }

    fn cell_dir(&self, problem: &str, algorithm: &str) -> PathBuf {
        self.root.join("runs").join(problem).join(algorithm)
    }

    pub fn record(&self, problem: &str, algorithm: &str, run: usize) -> PathBuf {
        self.cell_dir(problem, algorithm).join(format!("run{run:03}.json"))
    }

    pub fn archive_relative(problem: &str, algorithm: &str, run: usize) -> String {
        format!("runs/{problem}/{algorithm}/run{run:03}.archive.txt")
    }

    pub fn trace(&self, problem: &str, algorithm: &str, run: usize) -> PathBuf {
        self.cell_dir(problem, algorithm).join(format!("run{run:03}.trace.jsonl"))
    }

    pub fn report_dir(&self) -> PathBuf {
        self.root.join("report")
    }
}

/// Reference sets are sampled with this stream label under the configured seed.
pub const REFERENCE_STREAM: &str = "reference";

/// Samples a reference set without touching the disk.
pub fn fresh_reference_set(problem: BuiltinProblem, n: usize, seed: u64) -> Result<ReferenceSet64> {
    let built = problem.build::<f64>()?;
    let mut rng = RandomStream::derive(seed, REFERENCE_STREAM);
    let mut set = sample_reference_set(&built, n, &mut rng)?;
    set.seed = seed;
    Ok(set)
}

/// Loads the cached reference set, or samples and caches it.
pub fn reference_set(layout: &Layout, problem: BuiltinProblem, n: usize, seed: u64) -> Result<ReferenceSet64> {
    let id = problem.id();
    let path = layout.reference_set(&id, n, seed);
    if path.exists() {
        let file = File::open(&path).at(&path)?;
        let set = read_reference_set(BufReader::new(file)).map_err(|e| BenchError::Format {
            path: path.clone(),
            message: e.to_string(),
        })?;
        if set.problem == id && set.len() == n && set.seed == seed {
            return Ok(set);
        }
    }
    let set = fresh_reference_set(problem, n, seed)?;
    write_atomically(&path, |w| write_reference_set(w, &set))?;
    Ok(set)
}

fn write_atomically(path: &Path, body: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>) -> Result<()> {
    let dir = path.parent().expect("output paths have a parent");
    fs::create_dir_all(dir).at(dir)?;
    let tmp = path.with_extension("tmp");
    let mut w = BufWriter::new(File::create(&tmp).at(&tmp)?);
    body(&mut w).and_then(|_| w.flush()).at(&tmp)?;
    drop(w);
    fs::rename(&tmp, path).at(path)
}

pub fn read_archive(path: &Path) -> Result<Vec<Solution64>> {
    let file = File::open(path).at(path)?;
    let (_, points) = read_points(BufReader::new(file)).map_err(|e| BenchError::Format {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    Ok(points)
}

fn read_record(path: &Path) -> Result<RunRecord> {
    let text = fs::read_to_string(path).at(path)?;
    serde_json::from_str(&text).map_err(|e| BenchError::Format { path: path.to_path_buf(), message: e.to_string() })
}

#[derive(Debug, Clone)]
struct Cell {
    spec: AlgorithmSpec,
    problem: BuiltinProblem,
    run: usize,
}

/// Outcome of [`run_experiment`].
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    /// One record per cell, in configuration order (problem, algorithm, run).
    pub records: Vec<RunRecord>,
    pub executed: usize,
    pub skipped: usize,
}

struct JsonLines(BufWriter<File>, Option<std::io::Error>);

impl TraceSink<f64> for JsonLines {
    fn record(&mut self, trace: &GenerationTrace<f64>) {
        if self.1.is_none() {
            let line = serde_json::to_string(trace).expect("trace serializes");
            if let Err(e) = writeln!(self.0, "{line}") {
                self.1 = Some(e);
            }
        }
    }
}

fn run_cell(config: &ExperimentConfig, layout: &Layout, cell: &Cell, reference: &ReferenceSet64, hv_ref: &[f64]) -> Result<RunRecord> {
    let problem_id = cell.problem.id();
    let algorithm = cell.spec.id();
    let seed = config.seed_of(cell.run);
    let problem = cell.problem.build::<f64>()?;
    let start = Instant::now();
    let archive = if config.trace {
        let path = layout.trace(&problem_id, &algorithm, cell.run);
        let dir = path.parent().expect("trace path has a parent");
        fs::create_dir_all(dir).at(dir)?;
        let mut sink = JsonLines(BufWriter::new(File::create(&path).at(&path)?), None);
        let archive = run_algorithm(&cell.spec, config.population, config.budget, seed, &problem, Some(reference), &mut sink)?;
        if let Some(e) = sink.1.take() {
            return Err(BenchError::Io { path, source: e });
        }
        sink.0.flush().at(&path)?;
        archive
    } else {
        run_algorithm(&cell.spec, config.population, config.budget, seed, &problem, None, &mut NoTrace)?
    };
    let seconds = start.elapsed().as_secs_f64();
    let report = score(&archive, reference, hv_ref)?;

    let archive_rel = Layout::archive_relative(&problem_id, &algorithm, cell.run);
    write_atomically(&layout.root.join(&archive_rel), |w| write_archive(w, &problem_id, seed, &archive))?;
    let record = RunRecord {
        algorithm,
        problem: problem_id,
        run: cell.run,
        seed,
        igd_plus: report.igd_plus,
        igdx: report.igdx,
        hv: report.hv,
        archive_size: report.archive_size,
        seconds,
        archive: archive_rel,
    };
    let path = layout.record(&record.problem, &record.algorithm, record.run);
    let json = serde_json::to_string_pretty(&record).expect("record serializes");
    write_atomically(&path, |w| w.write_all(json.as_bytes()))?;
    Ok(record)
}

/// Cells in configuration order.
fn cells(config: &ExperimentConfig) -> Result<Vec<Cell>> {
    let algorithms = config.expanded_algorithms();
    let mut out = Vec::new();
    for problem in config.resolved_problems()? {
        for spec in &algorithms {
            for run in 0..config.runs {
                out.push(Cell { spec: spec.clone(), problem, run });
            }
        }
    }
    Ok(out)
}

/// Looks up a completed cell; `None` if it has not run (or was interrupted).
fn completed(layout: &Layout, cell: &Cell, seed: u64) -> Option<RunRecord> {
    let path = layout.record(&cell.problem.id(), &cell.spec.id(), cell.run);
    let record = read_record(&path).ok()?;
    (record.seed == seed && layout.root.join(&record.archive).exists()).then_some(record)
}

/// Runs every missing cell of `config` on up to `jobs` threads (all cores when `None`).
///
/// Every problem and algorithm id is checked before the first run starts.
/// Seeds come from the configuration alone, so results do not depend on
/// scheduling or on which cells were already present.
pub fn run_experiment(config: &ExperimentConfig, jobs: Option<usize>) -> Result<ExperimentReport> {
    config.validate()?;
    let layout = Layout::new(&config.output_dir);
    fs::create_dir_all(&layout.root).at(&layout.root)?;
    let resolved = layout.root.join("config.toml");
    write_atomically(&resolved, |w| w.write_all(config.to_toml().as_bytes()))?;

    let mut references = Vec::new();
    for problem in config.resolved_problems()? {
        let set = reference_set(&layout, problem, config.reference.size, config.reference.seed)?;
        let hv_ref = hv_reference_point(&set.objective_points)?;
        references.push((problem, set, hv_ref));
    }

    let all = cells(config)?;
    let pending: Vec<(usize, &Cell)> = all
        .iter()
        .enumerate()
        .filter(|(_, c)| completed(&layout, c, config.seed_of(c.run)).is_none())
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| BenchError::Config(format!("thread pool: {e}")))?;
    let fresh: Vec<(usize, RunRecord)> = pool.install(|| {
        pending
            .par_iter()
            .map(|&(k, cell)| {
                let (_, set, hv_ref) = references.iter().find(|(p, ..)| *p == cell.problem).expect("reference prepared");
                run_cell(config, &layout, cell, set, hv_ref).map(|r| (k, r))
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let executed = fresh.len();
    let mut slots: Vec<Option<RunRecord>> = vec![None; all.len()];
    for (k, r) in fresh {
        slots[k] = Some(r);
    }
    let mut records = Vec::with_capacity(all.len());
    for (slot, cell) in slots.into_iter().zip(&all) {
        match slot.or_else(|| completed(&layout, cell, config.seed_of(cell.run))) {
            Some(r) => records.push(r),
            None => return Err(BenchError::Incomplete(vec![format!("{}/{}/run{}", cell.problem, cell.spec.id(), cell.run)])),
        }
    }
    Ok(ExperimentReport { records, executed, skipped: all.len() - executed })
}

/// Reads back every completed record of `config`; fails listing the cells that are missing.
pub fn load_records(config: &ExperimentConfig) -> Result<Vec<RunRecord>> {
    config.validate()?;
    let layout = Layout::new(&config.output_dir);
    let mut records = Vec::new();
    let mut missing = Vec::new();
    for cell in cells(config)? {
        match completed(&layout, &cell, config.seed_of(cell.run)) {
            Some(r) => records.push(r),
            None => missing.push(format!("{}/{}/run{}", cell.problem, cell.spec.id(), cell.run)),
        }
    }
    if missing.is_empty() {
        Ok(records)
    } else {
        Err(BenchError::Incomplete(missing))
    }
}
