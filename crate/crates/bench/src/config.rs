//! Experiment configuration, read from TOML.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use moead_mm::problems::{BuiltinProblem, REFERENCE_SET_SIZE};
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, IoContext, Result};

/// Sub-population size used when an algorithm entry leaves `mu` unset.
pub const DEFAULT_MU: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgorithmKind {
    #[serde(alias = "moead-mm")]
    Moeadmm,
    Moead,
    #[serde(alias = "moead-ad")]
    Moeadad,
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Moeadmm => "moeadmm",
            Self::Moead => "moead",
            Self::Moeadad => "moeadad",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarizerKind {
    #[default]
    Tch,
    Pbi,
}

impl fmt::Display for ScalarizerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Tch => "tch",
            Self::Pbi => "pbi",
        })
    }
}

impl FromStr for ScalarizerKind {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tch" | "tchebycheff" => Ok(Self::Tch),
            "pbi" => Ok(Self::Pbi),
            other => Err(BenchError::Config(format!("unknown scalarizer '{other}' (expected tch or pbi)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmSpec {
    pub name: AlgorithmKind,
    #[serde(default)]
    pub scalarizer: ScalarizerKind,
    /// Sub-population size (MOEA/D-MM only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    /// PBI penalty; 5 when unset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    /// Neighbourhood size (classic MOEA/D only); 20 when unset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighborhood: Option<usize>,
}

impl AlgorithmSpec {
    pub fn new(name: AlgorithmKind, scalarizer: ScalarizerKind) -> Self {
        Self { name, scalarizer, mu: None, theta: None, neighborhood: None }
    }

    pub fn mu(&self) -> usize {
        self.mu.unwrap_or(DEFAULT_MU)
    }

    /// Cell id, e.g. `moeadmm-tch`, `moead-pbi`, `moeadmm-tch-mu6`.
    pub fn id(&self) -> String {
        let mut id = format!("{}-{}", self.name, self.scalarizer);
        if self.name == AlgorithmKind::Moeadmm && self.mu() != DEFAULT_MU {
            id.push_str(&format!("-mu{}", self.mu()));
        }
        if let Some(t) = self.neighborhood {
            id.push_str(&format!("-t{t}"));
        }
        if let Some(theta) = self.theta {
            id.push_str(&format!("-theta{theta}"));
        }
        id
    }
}

impl FromStr for AlgorithmSpec {
    type Err = BenchError;

    /// Parses ids of the form produced by [`AlgorithmSpec::id`] (`-t` and `-theta` suffixes excluded).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || BenchError::Config(format!("unknown algorithm id '{s}'"));
        let mut parts = s.split('-');
        let name = match parts.next().ok_or_else(bad)? {
            "moeadmm" => AlgorithmKind::Moeadmm,
            "moead" => AlgorithmKind::Moead,
            "moeadad" => AlgorithmKind::Moeadad,
            _ => return Err(bad()),
        };
        let mut spec = Self::new(name, parts.next().map_or(Ok(ScalarizerKind::Tch), str::parse)?);
        if let Some(mu) = parts.next() {
            let mu = mu.strip_prefix("mu").and_then(|m| m.parse().ok()).ok_or_else(bad)?;
            if name != AlgorithmKind::Moeadmm {
                return Err(bad());
            }
            spec.mu = Some(mu);
        }
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(spec)
    }
}

/// A problem entry: either an id string (`"multipolygon-d4"`) or a table
/// (`{ name = "multipolygon", dimension = 4 }`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProblemSpec {
    Id(String),
    Table {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dimension: Option<usize>,
    },
}

impl ProblemSpec {
    pub fn resolve(&self) -> Result<BuiltinProblem> {
        let id = match self {
            Self::Id(id) => id.clone(),
            Self::Table { name, dimension: Some(d) } if !name.contains("-d") => format!("{name}-d{d}"),
            Self::Table { name, .. } => name.clone(),
        };
        id.parse::<BuiltinProblem>().map_err(|e| BenchError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceSpec {
    #[serde(default = "defaults::reference_size")]
    pub size: usize,
    #[serde(default = "defaults::reference_seed")]
    pub seed: u64,
}

impl Default for ReferenceSpec {
    fn default() -> Self {
        Self { size: defaults::reference_size(), seed: defaults::reference_seed() }
    }
}

mod defaults {
    use std::path::PathBuf;

    pub fn runs() -> usize {
        31
    }
    pub fn population() -> usize {
        300
    }
    pub fn budget() -> usize {
        100_000
    }
    pub fn output_dir() -> PathBuf {
        PathBuf::from("results")
    }
    pub fn reference_size() -> usize {
        super::REFERENCE_SET_SIZE
    }
    pub fn reference_seed() -> u64 {
        1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problems: Vec<ProblemSpec>,
    pub algorithms: Vec<AlgorithmSpec>,
    #[serde(default = "defaults::runs")]
    pub runs: usize,
    #[serde(default = "defaults::population")]
    pub population: usize,
    /// Evaluations per run, initialization included.
    #[serde(default = "defaults::budget")]
    pub budget: usize,
    /// Extra `mu` values run for every MOEA/D-MM entry.
    #[serde(default)]
    pub mu_sweep: Vec<usize>,
    /// Run `r` uses seed `base_seed + r`.
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default = "defaults::output_dir")]
    pub output_dir: PathBuf,
    #[serde(default)]
    pub reference: ReferenceSpec,
    /// Algorithm id the significance marks compare against; the first algorithm when unset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub baseline: Option<String>,
    /// Write a per-generation trace next to every archive.
    #[serde(default)]
    pub trace: bool,
}

impl ExperimentConfig {
    pub fn new(problems: Vec<ProblemSpec>, algorithms: Vec<AlgorithmSpec>) -> Self {
        Self {
            problems,
            algorithms,
            runs: defaults::runs(),
            population: defaults::population(),
            budget: defaults::budget(),
            mu_sweep: Vec::new(),
            base_seed: 0,
            output_dir: defaults::output_dir(),
            reference: ReferenceSpec::default(),
            baseline: None,
            trace: false,
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let config: Self = toml::from_str(text).map_err(|e| BenchError::Config(e.to_string()))?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).at(path)?;
        Self::from_toml(&text).map_err(|e| match e {
            BenchError::Config(m) => BenchError::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("experiment config serializes")
    }

    pub fn seed_of(&self, run: usize) -> u64 {
        self.base_seed.wrapping_add(run as u64)
    }

    /// Algorithm entries with the μ-sweep expanded, duplicates (by id) dropped.
    pub fn expanded_algorithms(&self) -> Vec<AlgorithmSpec> {
        let mut out: Vec<AlgorithmSpec> = Vec::new();
        let mut push = |spec: AlgorithmSpec| {
            if !out.iter().any(|s| s.id() == spec.id()) {
                out.push(spec);
            }
        };
        for spec in &self.algorithms {
            push(spec.clone());
        }
        for spec in &self.algorithms {
            if spec.name == AlgorithmKind::Moeadmm {
                for &mu in &self.mu_sweep {
                    push(AlgorithmSpec { mu: Some(mu), ..spec.clone() });
                }
            }
        }
        out
    }

    pub fn resolved_problems(&self) -> Result<Vec<BuiltinProblem>> {
        let mut out = Vec::new();
        for p in &self.problems {
            let b = p.resolve()?;
            if !out.contains(&b) {
                out.push(b);
            }
        }
        Ok(out)
    }

    pub fn baseline_id(&self) -> String {
        self.baseline
            .clone()
            .unwrap_or_else(|| self.expanded_algorithms().first().map(AlgorithmSpec::id).unwrap_or_default())
    }

    /// Checks everything that can be checked before a single evaluation is spent.
    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(BenchError::Config(m));
        if self.runs < 1 {
            return fail("runs must be >= 1".into());
        }
        if self.problems.is_empty() || self.algorithms.is_empty() {
            return fail("at least one problem and one algorithm are required".into());
        }
        if self.budget < self.population {
            return fail(format!("budget {} is smaller than the population {}", self.budget, self.population));
        }
        if self.reference.size < 1 {
            return fail("reference.size must be >= 1".into());
        }
        for p in self.resolved_problems()? {
            p.build::<f64>()?;
        }
        let algorithms = self.expanded_algorithms();
        for spec in &algorithms {
            match spec.name {
                AlgorithmKind::Moeadmm => {
                    let mu = spec.mu();
                    if mu < 1 || self.population / mu < 2 {
                        return fail(format!("{}: population {} with mu {mu} gives fewer than 2 weights", spec.id(), self.population));
                    }
                }
                AlgorithmKind::Moead | AlgorithmKind::Moeadad => {
                    if spec.mu.is_some() {
                        return fail(format!("{}: mu only applies to moeadmm", spec.id()));
                    }
                }
            }
            if spec.neighborhood.is_some() && spec.name != AlgorithmKind::Moead {
                return fail(format!("{}: neighborhood only applies to moead", spec.id()));
            }
            if spec.neighborhood == Some(0) {
                return fail(format!("{}: neighborhood must be positive", spec.id()));
            }
            if let Some(theta) = spec.theta {
                if spec.scalarizer != ScalarizerKind::Pbi || !(theta > 0.0) {
                    return fail(format!("{}: theta must be positive and only applies to pbi", spec.id()));
                }
            }
        }
        if let Some(b) = &self.baseline {
            if !algorithms.iter().any(|s| &s.id() == b) {
                return fail(format!("baseline '{b}' is not among the algorithms"));
            }
        }
        Ok(())
    }
}
