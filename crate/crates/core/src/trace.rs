//! Per-generation trace records for convergence plots.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::indicators::{igd_plus, igdx};
use crate::problems::ReferenceSet;
use crate::real::Real;
use crate::solution::Solution;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct GenerationTrace<T> {
    pub generation: usize,
    pub evaluations: usize,
    /// Clearing radius; absent for algorithms without one.
    pub sigma: Option<T>,
    pub ideal: Vec<T>,
    pub population: usize,
    pub igdx: Option<T>,
    pub igd_plus: Option<T>,
}

impl<T: Real> GenerationTrace<T> {
    /// Fills the indicator fields from the non-dominated part of `population`.
    pub fn with_indicators(mut self, archive: &[Solution<T>], reference: Option<&ReferenceSet<T>>) -> Result<Self> {
        if let Some(r) = reference {
            let xs: Vec<&[T]> = archive.iter().map(|s| s.x.as_slice()).collect();
            let fs: Vec<&[T]> = archive.iter().map(|s| s.f.as_slice()).collect();
            self.igdx = Some(igdx(&xs, &r.decision_points)?);
            self.igd_plus = Some(igd_plus(&fs, &r.objective_points)?);
        }
        Ok(self)
    }
}

/// Receives one record per completed generation.
pub trait TraceSink<T> {
    fn record(&mut self, trace: &GenerationTrace<T>);

    /// False when records would be thrown away, letting callers skip building them.
    fn enabled(&self) -> bool {
        true
    }
}

impl<T, F: FnMut(&GenerationTrace<T>)> TraceSink<T> for F {
    fn record(&mut self, trace: &GenerationTrace<T>) {
        self(trace)
    }
}

/// Discards every record.
pub struct NoTrace;

impl<T> TraceSink<T> for NoTrace {
    fn record(&mut self, _: &GenerationTrace<T>) {}

    fn enabled(&self) -> bool {
        false
    }
}
