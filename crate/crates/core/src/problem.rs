use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::Real;
use crate::rng::RandomStream;

/// Static description of a test problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct ProblemDescriptor<T> {
    pub name: String,
    pub objectives: usize,
    pub dimension: usize,
    pub bounds: Vec<(T, T)>,
    pub pareto_subset_count: usize,
}

impl<T: Real> ProblemDescriptor<T> {
    pub fn new(
        name: impl Into<String>,
        objectives: usize,
        bounds: Vec<(T, T)>,
        pareto_subset_count: usize,
    ) -> Result<Self> {
        let desc = Self {
            name: name.into(),
            objectives,
            dimension: bounds.len(),
            bounds,
            pareto_subset_count,
        };
        desc.validate()?;
        Ok(desc)
    }

    pub fn validate(&self) -> Result<()> {
        if self.objectives < 2 {
            return Err(Error::Config(format!("{}: need at least 2 objectives", self.name)));
        }
        if self.dimension < 2 || self.bounds.len() != self.dimension {
            return Err(Error::Config(format!("{}: need at least 2 decision variables", self.name)));
        }
        if let Some(i) = self.bounds.iter().position(|&(lo, hi)| !(lo < hi)) {
            return Err(Error::Config(format!("{}: empty bound interval at coordinate {i}", self.name)));
        }
        if self.pareto_subset_count == 0 {
            return Err(Error::Config(format!("{}: pareto_subset_count must be positive", self.name)));
        }
        Ok(())
    }

    /// Fails with a domain error unless `x` has the right length and lies in the box.
    pub fn check_domain(&self, x: &[T]) -> Result<()> {
        if x.len() != self.dimension {
            return Err(Error::Domain(format!(
                "{}: expected {} coordinates, got {}",
                self.name,
                self.dimension,
                x.len()
            )));
        }
        for (i, (&xi, &(lo, hi))) in x.iter().zip(&self.bounds).enumerate() {
            if !(xi >= lo && xi <= hi) {
                return Err(Error::Domain(format!(
                    "{}: x[{i}] = {xi} outside [{lo}, {hi}]",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

/// A box-constrained multi-objective minimization problem.
pub trait Problem<T: Real>: Send + Sync {
    fn descriptor(&self) -> &ProblemDescriptor<T>;

    /// Objective vector of `x`. Out-of-box inputs are a domain error.
    fn evaluate(&self, x: &[T]) -> Result<Vec<T>>;

    /// Draws `n` decision vectors uniformly over the known Pareto set,
    /// stratified across the equivalent subsets.
    fn sample_pareto_set(&self, n: usize, rng: &mut RandomStream) -> Result<Vec<Vec<T>>> {
        let _ = (n, rng);
        Err(Error::Config(format!(
            "{}: no known Pareto-set description",
            self.descriptor().name
        )))
    }

    /// Two distinct decision vectors with (numerically) equal objective vectors.
    fn equivalence_witness(&self) -> Option<(Vec<T>, Vec<T>)> {
        None
    }
}

impl<T: Real, P: Problem<T> + ?Sized> Problem<T> for Box<P> {
    fn descriptor(&self) -> &ProblemDescriptor<T> {
        (**self).descriptor()
    }
    fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        (**self).evaluate(x)
    }
    fn sample_pareto_set(&self, n: usize, rng: &mut RandomStream) -> Result<Vec<Vec<T>>> {
        (**self).sample_pareto_set(n, rng)
    }
    fn equivalence_witness(&self) -> Option<(Vec<T>, Vec<T>)> {
        (**self).equivalence_witness()
    }
}

/// Uniform random point in the problem's box.
pub fn random_point<T: Real>(desc: &ProblemDescriptor<T>, rng: &mut RandomStream) -> Vec<T> {
    desc.bounds.iter().map(|&(lo, hi)| rng.uniform(lo, hi)).collect()
}
