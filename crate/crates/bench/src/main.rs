use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use mmbench::config::{AlgorithmKind, ProblemSpec};
use mmbench::runner::{fresh_reference_set, read_archive, reference_set};
use mmbench::{export, load_records, run_experiment, summarize, AlgorithmSpec, ExperimentConfig, Layout, ScalarizerKind};
use moead_mm::columnar::write_reference_set;
use moead_mm::indicators::{hv_reference_point, score};
use moead_mm::problems::{BuiltinProblem, REFERENCE_SET_SIZE};

#[derive(Parser)]
#[command(name = "mmbench", version, about = "Multi-seed benchmark harness for MOEA/D-MM and its baselines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment (resumes an interrupted one) and write the report.
    Run(RunArgs),
    /// Score an archive file against a problem's reference set.
    Score(ScoreArgs),
    /// Sample a reference set and write it in columnar format.
    Refset(RefsetArgs),
    /// Summarize a finished experiment and write tables.
    Report(ReportArgs),
    /// Sub-population-size sweep of MOEA/D-MM.
    Sweep(SweepArgs),
}

#[derive(Args, Default)]
struct Overrides {
    /// Base seed; run r uses seed + r.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    runs: Option<usize>,
    /// Evaluations per run, initialization included.
    #[arg(long)]
    budget: Option<usize>,
    /// Population size N.
    #[arg(long)]
    pop: Option<usize>,
    /// Sub-population size for every MOEA/D-MM entry.
    #[arg(long)]
    mu: Option<usize>,
    /// Scalarizing function for every algorithm entry (tch or pbi).
    #[arg(long)]
    scalarizer: Option<ScalarizerKind>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Write per-generation traces (JSON lines) next to the archives.
    #[arg(long)]
    trace: bool,
}

impl Overrides {
    fn apply(&self, config: &mut ExperimentConfig) {
        if let Some(v) = self.seed {
            config.base_seed = v;
        }
        if let Some(v) = self.runs {
            config.runs = v;
        }
        if let Some(v) = self.budget {
            config.budget = v;
        }
        if let Some(v) = self.pop {
            config.population = v;
        }
        if let Some(mu) = self.mu {
            for a in config.algorithms.iter_mut().filter(|a| a.name == AlgorithmKind::Moeadmm) {
                a.mu = Some(mu);
            }
        }
        if let Some(s) = self.scalarizer {
            for a in &mut config.algorithms {
                a.scalarizer = s;
                if s == ScalarizerKind::Tch {
                    a.theta = None;
                }
            }
        }
        if let Some(out) = &self.out {
            config.output_dir = out.clone();
        }
        config.trace |= self.trace;
    }
}

#[derive(Args)]
struct RunArgs {
    /// Experiment file (TOML).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Problem ids, used when no config file is given (e.g. suf3, multipolygon-d4).
    #[arg(long = "problem")]
    problems: Vec<String>,
    /// Algorithm ids, used when no config file is given (e.g. moeadmm-tch, moead-pbi, moeadad-tch).
    #[arg(long = "algorithm")]
    algorithms: Vec<String>,
    #[command(flatten)]
    overrides: Overrides,
}

#[derive(Args)]
struct ScoreArgs {
    #[arg(long)]
    problem: String,
    /// Archive in columnar format.
    #[arg(long)]
    archive: PathBuf,
    #[arg(long, default_value_t = REFERENCE_SET_SIZE)]
    refsize: usize,
    #[arg(long, default_value_t = 1)]
    refseed: u64,
    /// Reuse (or fill) the reference-set cache of this output directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RefsetArgs {
    #[arg(long)]
    problem: String,
    #[arg(long, default_value_t = REFERENCE_SET_SIZE)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Destination file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long)]
    config: PathBuf,
    /// Output directory of the experiment, if it differs from the config.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Algorithm id to compare against.
    #[arg(long)]
    baseline: Option<String>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long = "problem", required = true)]
    problems: Vec<String>,
    /// Sub-population sizes to try.
    #[arg(long = "mus", value_delimiter = ',', default_values_t = [2usize, 3, 4, 5, 6])]
    mus: Vec<usize>,
    #[command(flatten)]
    overrides: Overrides,
}

fn config_from_ids(problems: &[String], algorithms: &[String]) -> Result<ExperimentConfig> {
    if problems.is_empty() || algorithms.is_empty() {
        bail!("give --config, or at least one --problem and one --algorithm");
    }
    let algorithms = algorithms
        .iter()
        .map(|a| a.parse::<AlgorithmSpec>())
        .collect::<mmbench::Result<Vec<_>>>()?;
    Ok(ExperimentConfig::new(problems.iter().cloned().map(ProblemSpec::Id).collect(), algorithms))
}

fn finish(config: &ExperimentConfig, jobs: Option<usize>) -> Result<()> {
    let report = run_experiment(config, jobs)?;
    eprintln!("{} runs executed, {} reused", report.executed, report.skipped);
    write_report(config, &report.records, &config.baseline_id())
}

fn write_report(config: &ExperimentConfig, records: &[mmbench::RunRecord], baseline: &str) -> Result<()> {
    let summary = summarize(records, baseline)?;
    let files = export(config, &summary, records)?;
    for table in &files.tables {
        println!("{}", table.display());
    }
    print!("{}", mmbench::export::comparison_table(&summary, mmbench::Indicator::Igdx));
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Run(args) => {
            let mut config = match &args.config {
                Some(path) => ExperimentConfig::load(path)?,
                None => config_from_ids(&args.problems, &args.algorithms)?,
            };
            args.overrides.apply(&mut config);
            finish(&config, args.overrides.jobs)
        }
        Command::Sweep(args) => {
            let problems = args.problems.iter().cloned().map(ProblemSpec::Id).collect();
            let mut config = ExperimentConfig::new(problems, vec![AlgorithmSpec::new(AlgorithmKind::Moeadmm, ScalarizerKind::Tch)]);
            config.mu_sweep = args.mus.clone();
            config.output_dir = PathBuf::from("results-sweep");
            args.overrides.apply(&mut config);
            finish(&config, args.overrides.jobs)
        }
        Command::Report(args) => {
            let mut config = ExperimentConfig::load(&args.config)?;
            if let Some(out) = args.out {
                config.output_dir = out;
            }
            let records = load_records(&config)?;
            let baseline = args.baseline.unwrap_or_else(|| config.baseline_id());
            write_report(&config, &records, &baseline)
        }
        Command::Score(args) => {
            let problem: BuiltinProblem = args.problem.parse()?;
            let reference = match &args.out {
                Some(dir) => reference_set(&Layout::new(dir), problem, args.refsize, args.refseed)?,
                None => fresh_reference_set(problem, args.refsize, args.refseed)?,
            };
            let archive = read_archive(&args.archive)?;
            let hv_ref = hv_reference_point(&reference.objective_points)?;
            let report = score(&archive, &reference, &hv_ref)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(())
        }
        Command::Refset(args) => {
            let problem: BuiltinProblem = args.problem.parse()?;
            let set = fresh_reference_set(problem, args.n, args.seed)?;
            match &args.out {
                Some(path) => {
                    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
                    write_reference_set(BufWriter::new(file), &set).with_context(|| format!("writing {}", path.display()))?;
                }
                None => write_reference_set(std::io::stdout().lock(), &set)?,
            }
            Ok(())
        }
    }
}
