//! Writes tables, long-format indicators, visualization archives and μ-sweep curves.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::config::{AlgorithmKind, ExperimentConfig};
use crate::error::{IoContext, Result};
use crate::runner::{Layout, RunRecord};
use crate::summary::{Indicator, Moments, StatsSummary};

/// Scientific notation with four significant digits, as in the published tables.
pub fn sci(v: f64) -> String {
    format!("{v:.3e}")
}

/// Comparison table for one indicator: one row per problem, one column per
/// algorithm, cells `mean (std) mark`, best mean starred, and a closing
/// `+/−/≈` count row.
pub fn comparison_table(summary: &StatsSummary, indicator: Indicator) -> String {
    let mut out = String::from("problem");
    for a in &summary.algorithms {
        out.push('\t');
        out.push_str(a);
    }
    out.push('\n');
    for p in &summary.problems {
        out.push_str(p);
        for a in &summary.algorithms {
            let c = summary.cell(a, p).expect("summary is complete");
            let m = c.moments(indicator);
            write!(out, "\t{} ({}){}", sci(m.mean), sci(m.std), c.mark(indicator)).unwrap();
            if c.is_best(indicator) {
                out.push('*');
            }
        }
        out.push('\n');
    }
    out.push_str("+/−/≈");
    for a in &summary.algorithms {
        if *a == summary.baseline {
            out.push_str("\tbaseline");
        } else {
            let (plus, minus, same) = summary.counts(a, indicator);
            write!(out, "\t{plus}/{minus}/{same}").unwrap();
        }
    }
    out.push('\n');
    out
}

/// One line per run with full-precision indicator values (wall-clock time excluded).
pub fn long_format(records: &[RunRecord]) -> String {
    let mut out = String::from("algorithm\tproblem\trun\tseed\tigd_plus\tigdx\thv\tarchive_size\n");
    for r in records {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{:e}\t{:e}\t{:e}\t{}",
            r.algorithm, r.problem, r.run, r.seed, r.igd_plus, r.igdx, r.hv, r.archive_size
        )
        .unwrap();
    }
    out
}

/// Run whose value of `indicator` is the (lower) median of its cell; ties go to the lower run index.
pub fn median_run<'a>(records: &[&'a RunRecord], indicator: Indicator) -> &'a RunRecord {
    let mut sorted: Vec<&RunRecord> = records.to_vec();
    sorted.sort_by(|a, b| indicator.of(a).total_cmp(&indicator.of(b)).then(a.run.cmp(&b.run)));
    sorted[(sorted.len() - 1) / 2]
}

/// Files written by [`export`].
#[derive(Debug, Clone, Default)]
pub struct ExportedFiles {
    pub tables: Vec<PathBuf>,
    pub indicators: PathBuf,
    pub records: PathBuf,
    pub visualization: PathBuf,
    pub archives: Vec<PathBuf>,
    pub mu_sweep: Option<PathBuf>,
}

fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).at(dir)?;
    }
    fs::write(path, text).at(path)
}

/// Writes every report artifact under `<output_dir>/report`.
pub fn export(config: &ExperimentConfig, summary: &StatsSummary, records: &[RunRecord]) -> Result<ExportedFiles> {
    let layout = Layout::new(&config.output_dir);
    let dir = layout.report_dir();
    let mut files = ExportedFiles::default();

    for i in Indicator::ALL {
        let path = dir.join(format!("table_{}.tsv", i.name()));
        write(&path, &comparison_table(summary, i))?;
        files.tables.push(path);
    }

    files.indicators = dir.join("indicators.tsv");
    write(&files.indicators, &long_format(records))?;

    files.records = dir.join("records.jsonl");
    let mut jsonl = String::new();
    for r in records {
        jsonl.push_str(&serde_json::to_string(r).expect("record serializes"));
        jsonl.push('\n');
    }
    write(&files.records, &jsonl)?;

    // The median-HV run of each cell is the one plotted; the median-IGDX run
    // is listed too because the HV reference point is a local convention.
    let mut vis = String::from("problem\talgorithm\tmedian_hv_run\tmedian_igdx_run\tarchive\n");
    for p in &summary.problems {
        for a in &summary.algorithms {
            let cell: Vec<&RunRecord> = records.iter().filter(|r| &r.problem == p && &r.algorithm == a).collect();
            let by_hv = median_run(&cell, Indicator::Hv);
            let by_igdx = median_run(&cell, Indicator::Igdx);
            let rel = format!("report/archives/{p}__{a}.txt");
            let target = layout.root.join(&rel);
            let source = layout.root.join(&by_hv.archive);
            if let Some(parent) = target.parent() {
                fs::create_dir_all(parent).at(parent)?;
            }
            fs::copy(&source, &target).at(&source)?;
            files.archives.push(target);
            writeln!(vis, "{p}\t{a}\t{}\t{}\t{rel}", by_hv.run, by_igdx.run).unwrap();
        }
    }
    files.visualization = dir.join("visualization.tsv");
    write(&files.visualization, &vis)?;

    let sweep_path = dir.join("mu_sweep.tsv");
    if config.mu_sweep.is_empty() {
        let _ = fs::remove_file(&sweep_path);
    } else {
        let mut text = String::from("problem\tscalarizer\tmu\tmedian_igdx\tmedian_igd_plus\n");
        let algorithms = config.expanded_algorithms();
        for p in &summary.problems {
            for spec in algorithms.iter().filter(|s| s.name == AlgorithmKind::Moeadmm) {
                if !config.mu_sweep.contains(&spec.mu()) {
                    continue;
                }
                let cell: Vec<f64> = records.iter().filter(|r| &r.problem == p && r.algorithm == spec.id()).map(|r| r.igdx).collect();
                let cell_plus: Vec<f64> = records.iter().filter(|r| &r.problem == p && r.algorithm == spec.id()).map(|r| r.igd_plus).collect();
                if cell.is_empty() {
                    continue;
                }
                writeln!(
                    text,
                    "{p}\t{}\t{}\t{}\t{}",
                    spec.scalarizer,
                    spec.mu(),
                    sci(Moments::of(&cell).median),
                    sci(Moments::of(&cell_plus).median)
                )
                .unwrap();
            }
        }
        write(&sweep_path, &text)?;
        files.mu_sweep = Some(sweep_path);
    }
    Ok(files)
}
