use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moeadmm::{polynomial_mutation, sbx_crossover, VariationParams};
use crate::pareto::nondominated_filter;
use crate::problem::{random_point, Problem};
use crate::problems::ReferenceSet;
use crate::real::Real;
use crate::rng::RandomStream;
use crate::scalarization::{generate_weights, neighbor_indices, IdealPoint, Scalarizer, WeightVector};
use crate::solution::Solution;
use crate::trace::{GenerationTrace, NoTrace, TraceSink};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct MoeadConfig<T> {
    /// Population size, one solution per weight vector.
    pub population: usize,
    /// Neighbourhood size, the weight itself included.
    pub neighborhood: usize,
    pub scalarizer: Scalarizer<T>,
    pub budget: usize,
    pub seed: u64,
    pub variation: VariationParams<T>,
}

impl<T: Real> MoeadConfig<T> {
    /// Classic settings: neighbourhood of 20.
    pub fn new(population: usize, scalarizer: Scalarizer<T>, budget: usize, seed: u64) -> Self {
        Self {
            population,
            neighborhood: 20,
            scalarizer,
            budget,
            seed,
            variation: VariationParams::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.population < 1 {
            return Err(Error::Config("MOEA/D needs a positive population".into()));
        }
        if self.neighborhood < 1 {
            return Err(Error::Config("MOEA/D needs a positive neighbourhood".into()));
        }
        if self.budget < self.population {
            return Err(Error::Config("budget is smaller than the population".into()));
        }
        Ok(())
    }
}

/// Classic MOEA/D state: one incumbent per weight vector.
#[derive(Debug, Clone)]
pub struct MoeadState<T> {
    pub config: MoeadConfig<T>,
    pub weights: Vec<WeightVector<T>>,
    /// `neighborhoods[i]` starts with `i` itself.
    pub neighborhoods: Vec<Vec<usize>>,
    pub population: Vec<Solution<T>>,
    pub ideal: IdealPoint<T>,
    pub evaluations_used: usize,
    pub generation: usize,
    rng: RandomStream,
}

impl<T: Real> MoeadState<T> {
    pub fn initialize<P: Problem<T> + ?Sized>(config: MoeadConfig<T>, problem: &P) -> Result<Self> {
        config.validate()?;
        let desc = problem.descriptor();
        let weights = generate_weights::<T>(desc.objectives, config.population)?;
        let t = config.neighborhood.min(config.population);
        let neighborhoods = (0..weights.len())
            .map(|i| {
                let mut b = vec![i];
                b.extend(neighbor_indices(&weights, i, t - 1));
                b
            })
            .collect();
        let mut init_rng = RandomStream::derive(config.seed, "init");
        let population = (0..config.population)
            .map(|_| Solution::evaluate(problem, random_point(desc, &mut init_rng)))
            .collect::<Result<Vec<_>>>()?;
        let ideal = IdealPoint::from_points(population.iter().map(|s| s.f.as_slice()))?;
        Ok(Self {
            evaluations_used: config.population,
            rng: RandomStream::derive(config.seed, "variation"),
            config,
            weights,
            neighborhoods,
            population,
            ideal,
            generation: 0,
        })
    }

    pub fn is_finished(&self) -> bool {
        self.evaluations_used >= self.config.budget
    }

    /// Scalarizing value of the incumbent of weight `i` under the current ideal point.
    pub fn incumbent_value(&self, i: usize) -> T {
        self.config
            .scalarizer
            .evaluate(self.weights[i].as_slice(), &self.population[i].f, self.ideal.as_slice())
    }

    /// One pass over all weights; stops early when the budget runs out.
    pub fn step_generation<P: Problem<T> + ?Sized>(&mut self, problem: &P) -> Result<()> {
        let bounds = &problem.descriptor().bounds;
        for i in 0..self.weights.len() {
            if self.is_finished() {
                break;
            }
            let b = &self.neighborhoods[i];
            let k = b[self.rng.index(b.len())];
            let l = b[self.rng.index(b.len())];
            let mut child = sbx_crossover(
                &self.population[k].x,
                &self.population[l].x,
                &self.config.variation,
                bounds,
                &mut self.rng,
            );
            polynomial_mutation(&mut child, &self.config.variation, bounds, &mut self.rng);
            let y = Solution::evaluate(problem, child)?;
            self.evaluations_used += 1;
            self.ideal.update(&y.f)?;
            let z = self.ideal.as_slice();
            for &j in &self.neighborhoods[i] {
                let w = self.weights[j].as_slice();
                let g = &self.config.scalarizer;
                if g.evaluate(w, &y.f, z) <= g.evaluate(w, &self.population[j].f, z) {
                    self.population[j] = y.clone();
                }
            }
        }
        self.generation += 1;
        Ok(())
    }

    pub fn archive(&self) -> Vec<Solution<T>> {
        nondominated_filter(&self.population)
    }

    pub fn trace(&self, reference: Option<&ReferenceSet<T>>) -> Result<GenerationTrace<T>> {
        GenerationTrace {
            generation: self.generation,
            evaluations: self.evaluations_used,
            sigma: None,
            ideal: self.ideal.as_slice().to_vec(),
            population: self.population.len(),
            igdx: None,
            igd_plus: None,
        }
        .with_indicators(&self.archive(), reference)
    }
}

/// Classic MOEA/D; returns the non-dominated final population.
pub fn moead_run<T: Real, P: Problem<T> + ?Sized>(config: MoeadConfig<T>, problem: &P) -> Result<Vec<Solution<T>>> {
    moead_run_traced(config, problem, None, &mut NoTrace)
}

pub fn moead_run_traced<T: Real, P: Problem<T> + ?Sized>(
    config: MoeadConfig<T>,
    problem: &P,
    reference: Option<&ReferenceSet<T>>,
    sink: &mut dyn TraceSink<T>,
) -> Result<Vec<Solution<T>>> {
    let mut state = MoeadState::initialize(config, problem)?;
    while !state.is_finished() {
        state.step_generation(problem)?;
        if sink.enabled() {
            sink.record(&state.trace(reference)?);
        }
    }
    Ok(state.archive())
}
