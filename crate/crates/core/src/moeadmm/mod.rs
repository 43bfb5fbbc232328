//! MOEA/D-MM: decomposition with a fixed-size sub-population per weight vector.
//!
//! Every weight vector `w_i` owns `mu` solutions. Once per generation the
//! clearing radius `sigma` is estimated from the whole population; then each
//! sub-population in turn breeds one offspring (first parent from its own
//! members, second from the union of its neighbours' sub-populations), updates
//! the ideal point, and drops one of its `mu + 1` candidates by clearing or,
//! failing that, by greedy removal of the worst scalarizing value.

mod clearing;
mod selection;
mod variation;

use serde::{Deserialize, Serialize};

pub use clearing::{clearing_rank, estimate_clearing_radius};
pub use selection::{choose_removal, environmental_selection, Removal, RemovalRule};
pub use variation::{polynomial_mutation, sbx_crossover, VariationParams};

use crate::error::{Error, Result};
use crate::pareto::nondominated_filter;
use crate::problem::{random_point, Problem};
use crate::problems::ReferenceSet;
use crate::real::Real;
use crate::rng::RandomStream;
use crate::scalarization::{generate_weights, neighborhoods, IdealPoint, Scalarizer, WeightVector};
use crate::solution::Solution;
use crate::trace::{GenerationTrace, NoTrace, TraceSink};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct MoeadMmConfig<T> {
    /// Population size `N`.
    pub population: usize,
    /// Sub-population size `mu`.
    pub mu: usize,
    pub scalarizer: Scalarizer<T>,
    /// Maximum number of evaluations, initial population included.
    pub budget: usize,
    pub seed: u64,
    pub variation: VariationParams<T>,
}

impl<T: Real> MoeadMmConfig<T> {
    pub fn new(population: usize, mu: usize, scalarizer: Scalarizer<T>, budget: usize, seed: u64) -> Self {
        Self {
            population,
            mu,
            scalarizer,
            budget,
            seed,
            variation: VariationParams::default(),
        }
    }

    /// Number of weight vectors, `floor(N / mu)`.
    pub fn weight_count(&self) -> usize {
        if self.mu == 0 {
            0
        } else {
            self.population / self.mu
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.mu < 1 || self.population < self.mu {
            return Err(Error::Config(format!(
                "need N >= mu >= 1 (N = {}, mu = {})",
                self.population, self.mu
            )));
        }
        if self.weight_count() < 2 {
            return Err(Error::Config(format!(
                "floor(N / mu) = {} weight vectors; at least 2 required",
                self.weight_count()
            )));
        }
        if self.budget < self.population {
            return Err(Error::Config(format!(
                "budget {} is smaller than the population {}",
                self.budget, self.population
            )));
        }
        Ok(())
    }
}

/// The `mu` solutions owned by one weight vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SubPopulation<T> {
    pub owner: usize,
    pub members: Vec<Solution<T>>,
}

/// Full state of one MOEA/D-MM run.
#[derive(Debug, Clone)]
pub struct AlgorithmState<T> {
    pub config: MoeadMmConfig<T>,
    pub weights: Vec<WeightVector<T>>,
    /// `neighbors[i]`: the `T` nearest other weights of `w_i`.
    pub neighbors: Vec<Vec<usize>>,
    pub subpops: Vec<SubPopulation<T>>,
    pub ideal: IdealPoint<T>,
    pub evaluations_used: usize,
    pub sigma: T,
    pub generation: usize,
    rng: RandomStream,
}

/// Outcome of one call to [`AlgorithmState::step_generation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    /// Every weight vector was updated.
    Complete,
    /// The budget ran out after updating this many weight vectors.
    BudgetExhausted { updated: usize },
}

impl<T: Real> AlgorithmState<T> {
    /// Generates weights and neighbourhoods, draws `lambda * mu` uniform
    /// solutions and sets the ideal point from them.
    pub fn initialize<P: Problem<T> + ?Sized>(config: MoeadMmConfig<T>, problem: &P) -> Result<Self> {
        config.validate()?;
        let desc = problem.descriptor();
        let lambda = config.weight_count();
        let weights = generate_weights::<T>(desc.objectives, lambda)?;
        let t = (lambda / 10).max(1).min(lambda - 1);
        let neighbors = neighborhoods(&weights, t);

        let mut init_rng = RandomStream::derive(config.seed, "init");
        let mut subpops = Vec::with_capacity(lambda);
        for owner in 0..lambda {
            let members = (0..config.mu)
                .map(|_| Solution::evaluate(problem, random_point(desc, &mut init_rng)))
                .collect::<Result<Vec<_>>>()?;
            subpops.push(SubPopulation { owner, members });
        }
        let ideal = IdealPoint::from_points(subpops.iter().flat_map(|p| p.members.iter().map(|s| s.f.as_slice())))?;

        Ok(Self {
            evaluations_used: lambda * config.mu,
            rng: RandomStream::derive(config.seed, "variation"),
            config,
            weights,
            neighbors,
            subpops,
            ideal,
            sigma: T::zero(),
            generation: 0,
        })
    }

    pub fn lambda(&self) -> usize {
        self.weights.len()
    }

    /// Neighbourhood size `T = max(1, floor(lambda / 10))`.
    pub fn neighborhood_size(&self) -> usize {
        self.neighbors.first().map_or(0, Vec::len)
    }

    pub fn population_size(&self) -> usize {
        self.subpops.iter().map(|p| p.members.len()).sum()
    }

    pub fn is_finished(&self) -> bool {
        self.evaluations_used >= self.config.budget
    }

    pub fn all_solutions(&self) -> impl Iterator<Item = &Solution<T>> {
        self.subpops.iter().flat_map(|p| p.members.iter())
    }

    /// Breeds one offspring for weight `i` and evaluates it.
    pub fn mating<P: Problem<T> + ?Sized>(&mut self, i: usize, problem: &P) -> Result<Solution<T>> {
        if self.is_finished() {
            return Err(Error::BudgetExhausted);
        }
        let own = &self.subpops[i].members;
        let x1 = &own[self.rng.index(own.len())].x;
        let pool: usize = self.neighbors[i].iter().map(|&j| self.subpops[j].members.len()).sum();
        let mut pick = self.rng.index(pool);
        let mut x2 = &own[0].x;
        for &j in &self.neighbors[i] {
            let members = &self.subpops[j].members;
            if pick < members.len() {
                x2 = &members[pick].x;
                break;
            }
            pick -= members.len();
        }
        let bounds = &problem.descriptor().bounds;
        let mut child = sbx_crossover(x1, x2, &self.config.variation, bounds, &mut self.rng);
        polynomial_mutation(&mut child, &self.config.variation, bounds, &mut self.rng);
        let offspring = Solution::evaluate(problem, child)?;
        self.evaluations_used += 1;
        Ok(offspring)
    }

    /// One generation: estimate `sigma`, then update every sub-population in order.
    pub fn step_generation<P: Problem<T> + ?Sized>(&mut self, problem: &P) -> Result<StepOutcome> {
        let xs: Vec<&[T]> = self.all_solutions().map(|s| s.x.as_slice()).collect();
        self.sigma = estimate_clearing_radius(&xs, self.config.population)?;
        for i in 0..self.lambda() {
            let offspring = match self.mating(i, problem) {
                Ok(y) => y,
                Err(Error::BudgetExhausted) => {
                    self.generation += 1;
                    return Ok(StepOutcome::BudgetExhausted { updated: i });
                }
                Err(e) => return Err(e),
            };
            self.ideal.update(&offspring.f)?;
            let mut candidates = std::mem::take(&mut self.subpops[i].members);
            candidates.push(offspring);
            let (survivors, _) = environmental_selection(
                self.weights[i].as_slice(),
                candidates,
                self.config.mu,
                self.sigma,
                self.ideal.as_slice(),
                &self.config.scalarizer,
            )?;
            self.subpops[i].members = survivors;
        }
        self.generation += 1;
        Ok(StepOutcome::Complete)
    }

    /// Non-dominated members of the current population.
    pub fn archive(&self) -> Vec<Solution<T>> {
        let all: Vec<Solution<T>> = self.all_solutions().cloned().collect();
        nondominated_filter(&all)
    }

    pub fn trace(&self, reference: Option<&ReferenceSet<T>>) -> Result<GenerationTrace<T>> {
        GenerationTrace {
            generation: self.generation,
            evaluations: self.evaluations_used,
            sigma: Some(self.sigma),
            ideal: self.ideal.as_slice().to_vec(),
            population: self.population_size(),
            igdx: None,
            igd_plus: None,
        }
        .with_indicators(&self.archive(), reference)
    }
}

/// Runs MOEA/D-MM until the budget is spent and returns the non-dominated solutions.
pub fn run<T: Real, P: Problem<T> + ?Sized>(config: MoeadMmConfig<T>, problem: &P) -> Result<Vec<Solution<T>>> {
    run_traced(config, problem, None, &mut NoTrace)
}

/// [`run`] with one trace record per generation.
pub fn run_traced<T: Real, P: Problem<T> + ?Sized>(
    config: MoeadMmConfig<T>,
    problem: &P,
    reference: Option<&ReferenceSet<T>>,
    sink: &mut dyn TraceSink<T>,
) -> Result<Vec<Solution<T>>> {
    let mut state = AlgorithmState::initialize(config, problem)?;
    while !state.is_finished() {
        state.step_generation(problem)?;
        if sink.enabled() {
            sink.record(&state.trace(reference)?);
        }
    }
    Ok(state.archive())
}
