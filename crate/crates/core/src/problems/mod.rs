//! Benchmark problems with known equivalent Pareto subsets, and reference-set sampling.

mod polygon;
mod ssuf1;
mod suf3;
mod sympart;

use std::fmt;
use std::str::FromStr;

pub use polygon::{MultiPolygon, MultiPolygonParams};
pub use ssuf1::Ssuf1;
pub use suf3::Suf3;
pub use sympart::{SymPart, SymPartParams};

use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::real::Real;
use crate::rng::RandomStream;

/// Default number of reference points per problem.
pub const REFERENCE_SET_SIZE: usize = 10_000;

/// The built-in problems, addressable by id (`sympart`, `ssuf1`, `suf3`, `multipolygon-d<D>`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinProblem {
    SymPart,
    Ssuf1,
    Suf3,
    MultiPolygon { dimension: usize },
}

impl BuiltinProblem {
    pub fn id(&self) -> String {
        self.to_string()
    }

    pub fn build<T: Real>(&self) -> Result<Box<dyn Problem<T>>> {
        Ok(match *self {
            Self::SymPart => Box::new(SymPart::<T>::default()),
            Self::Ssuf1 => Box::new(Ssuf1::<T>::default()),
            Self::Suf3 => Box::new(Suf3::<T>::default()),
            Self::MultiPolygon { dimension } => Box::new(MultiPolygon::<T>::hexagons(dimension)?),
        })
    }
}

impl fmt::Display for BuiltinProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SymPart => f.write_str("sympart"),
            Self::Ssuf1 => f.write_str("ssuf1"),
            Self::Suf3 => f.write_str("suf3"),
            Self::MultiPolygon { dimension } => write!(f, "multipolygon-d{dimension}"),
        }
    }
}

impl FromStr for BuiltinProblem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "sympart" | "sym-part" => Ok(Self::SymPart),
            "ssuf1" => Ok(Self::Ssuf1),
            "suf3" => Ok(Self::Suf3),
            _ => {
                let dim = lower
                    .strip_prefix("multipolygon-d")
                    .or_else(|| lower.strip_prefix("polygon-d"))
                    .and_then(|d| d.parse::<usize>().ok());
                match dim {
                    Some(d) if d >= 2 && d % 2 == 0 => Ok(Self::MultiPolygon { dimension: d }),
                    _ => Err(Error::Config(format!("unknown problem id '{s}'"))),
                }
            }
        }
    }
}

/// Pareto-set sample `S` and its objective-space image `P`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceSet<T> {
    pub problem: String,
    pub seed: u64,
    pub decision_points: Vec<Vec<T>>,
    pub objective_points: Vec<Vec<T>>,
}

impl<T: Real> ReferenceSet<T> {
    pub fn len(&self) -> usize {
        self.decision_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.decision_points.is_empty()
    }
}

/// Samples `n` points uniformly over the problem's Pareto set and evaluates them.
///
/// Points are split across the equivalent subsets in proportion to their
/// length (curves) or area (regions); each subset gets a fixed share.
pub fn sample_reference_set<T: Real, P: Problem<T> + ?Sized>(
    problem: &P,
    n: usize,
    rng: &mut RandomStream,
) -> Result<ReferenceSet<T>> {
    if n == 0 {
        return Err(Error::Config("reference set size must be positive".into()));
    }
    let decision_points = problem.sample_pareto_set(n, rng)?;
    let objective_points = decision_points
        .iter()
        .map(|x| problem.evaluate(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReferenceSet {
        problem: problem.descriptor().name.clone(),
        seed: rng.seed(),
        decision_points,
        objective_points,
    })
}

/// Splits `n` into integer shares proportional to `weights` (largest remainder,
/// ties to the lower index).
pub(crate) fn split_counts(n: usize, weights: &[f64]) -> Vec<usize> {
    let total: f64 = weights.iter().sum();
    let exact: Vec<f64> = weights.iter().map(|w| n as f64 * w / total).collect();
    let mut counts: Vec<usize> = exact.iter().map(|e| e.floor() as usize).collect();
    let mut left = n - counts.iter().sum::<usize>();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&i, &j| {
        let ri = exact[i] - exact[i].floor();
        let rj = exact[j] - exact[j].floor();
        rj.total_cmp(&ri).then(i.cmp(&j))
    });
    for &i in order.iter().cycle() {
        if left == 0 {
            break;
        }
        counts[i] += 1;
        left -= 1;
    }
    counts
}

/// Inverse-CDF sampler for points uniformly spread by arc length along a planar
/// curve `u -> (a, b)`, `u` in `[0, 1]`. Returns the curve parameter.
pub(crate) struct ArcLengthTable {
    cumulative: Vec<f64>,
}

impl ArcLengthTable {
    const SEGMENTS: usize = 8192;

    pub(crate) fn new(curve: impl Fn(f64) -> (f64, f64)) -> Self {
        let mut cumulative = Vec::with_capacity(Self::SEGMENTS + 1);
        cumulative.push(0.0);
        let mut prev = curve(0.0);
        for k in 1..=Self::SEGMENTS {
            let cur = curve(k as f64 / Self::SEGMENTS as f64);
            let step = ((cur.0 - prev.0).powi(2) + (cur.1 - prev.1).powi(2)).sqrt();
            cumulative.push(cumulative[k - 1] + step);
            prev = cur;
        }
        Self { cumulative }
    }

    pub(crate) fn sample(&self, rng: &mut RandomStream) -> f64 {
        let total = *self.cumulative.last().unwrap();
        let s = rng.unit_f64() * total;
        let k = self.cumulative.partition_point(|&c| c <= s).clamp(1, Self::SEGMENTS);
        let lo = self.cumulative[k - 1];
        let span = self.cumulative[k] - lo;
        let frac = if span > 0.0 { (s - lo) / span } else { 0.0 };
        ((k - 1) as f64 + frac) / Self::SEGMENTS as f64
    }
}
