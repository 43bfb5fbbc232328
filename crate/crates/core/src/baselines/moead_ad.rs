use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moeadmm::{polynomial_mutation, sbx_crossover, VariationParams};
use crate::pareto::{nondominated_filter, squared_distance};
use crate::problem::{random_point, Problem};
use crate::problems::ReferenceSet;
use crate::real::Real;
use crate::rng::RandomStream;
use crate::scalarization::{generate_weights, IdealPoint, Scalarizer, WeightVector};
use crate::solution::Solution;
use crate::trace::{GenerationTrace, NoTrace, TraceSink};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct MoeadAdConfig<T> {
    /// Number of weight vectors; also the initial population size.
    pub weights: usize,
    pub scalarizer: Scalarizer<T>,
    pub budget: usize,
    pub seed: u64,
    pub variation: VariationParams<T>,
}

impl<T: Real> MoeadAdConfig<T> {
    pub fn new(weights: usize, scalarizer: Scalarizer<T>, budget: usize, seed: u64) -> Self {
        Self {
            weights,
            scalarizer,
            budget,
            seed,
            variation: VariationParams::default(),
        }
    }
}

/// Outcome of the acceptance rule for one offspring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdDecision {
    pub accepted: bool,
    /// Population indices removed in favour of the offspring.
    pub removed: Vec<usize>,
}

/// Acceptance rule over the members that are both in the offspring's
/// sub-population and among its decision-space neighbours.
///
/// `rivals` pairs population indices with their scalarizing values. With no
/// rivals the offspring is accepted outright; otherwise it enters only if it
/// is strictly better than at least one rival, and every rival it beats leaves.
pub fn ad_acceptance<T: Real>(offspring_value: T, rivals: &[(usize, T)]) -> AdDecision {
    if rivals.is_empty() {
        return AdDecision { accepted: true, removed: Vec::new() };
    }
    let removed: Vec<usize> = rivals
        .iter()
        .filter(|&&(_, g)| g > offspring_value)
        .map(|&(i, _)| i)
        .collect();
    AdDecision {
        accepted: !removed.is_empty(),
        removed,
    }
}

/// Log of a single MOEA/D-AD iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct AdStep<T> {
    pub offspring: Solution<T>,
    pub weight: usize,
    /// Population indices of the `L` nearest members (before insertion).
    pub neighbors: Vec<usize>,
    /// Neighbours assigned to `weight`, with their scalarizing values.
    pub rivals: Vec<(usize, T)>,
    pub offspring_value: T,
    pub decision: AdDecision,
    pub population_before: usize,
}

#[derive(Debug, Clone)]
pub struct MoeadAdState<T> {
    pub config: MoeadAdConfig<T>,
    pub weights: Vec<WeightVector<T>>,
    pub population: Vec<Solution<T>>,
    /// Weight index each member is assigned to.
    pub assignment: Vec<usize>,
    pub ideal: IdealPoint<T>,
    pub evaluations_used: usize,
    rng: RandomStream,
}

impl<T: Real> MoeadAdState<T> {
    pub fn initialize<P: Problem<T> + ?Sized>(config: MoeadAdConfig<T>, problem: &P) -> Result<Self> {
        if config.weights < 1 || config.budget < config.weights {
            return Err(Error::Config("MOEA/D-AD needs weights >= 1 and budget >= weights".into()));
        }
        let desc = problem.descriptor();
        let weights = generate_weights::<T>(desc.objectives, config.weights)?;
        let mut init_rng = RandomStream::derive(config.seed, "init");
        let population = (0..config.weights)
            .map(|_| Solution::evaluate(problem, random_point(desc, &mut init_rng)))
            .collect::<Result<Vec<_>>>()?;
        let ideal = IdealPoint::from_points(population.iter().map(|s| s.f.as_slice()))?;
        Ok(Self {
            assignment: (0..config.weights).collect(),
            evaluations_used: config.weights,
            rng: RandomStream::derive(config.seed, "variation"),
            config,
            weights,
            population,
            ideal,
        })
    }

    pub fn is_finished(&self) -> bool {
        self.evaluations_used >= self.config.budget
    }

    /// Weight whose direction makes the smallest angle with `f - z` (lowest index on ties).
    pub fn closest_weight(&self, f: &[T]) -> usize {
        let z = self.ideal.as_slice();
        let u: Vec<T> = f.iter().zip(z).map(|(&a, &b)| a - b).collect();
        let u_norm = u.iter().fold(T::zero(), |a, &v| a + v * v).sqrt();
        if !(u_norm > T::zero()) {
            return 0;
        }
        let mut best = 0;
        let mut best_cos = -T::infinity();
        for (i, w) in self.weights.iter().enumerate() {
            let w = w.as_slice();
            let dot = w.iter().zip(&u).fold(T::zero(), |a, (&wi, &ui)| a + wi * ui);
            let w_norm = w.iter().fold(T::zero(), |a, &v| a + v * v).sqrt();
            let cos = dot / (w_norm * u_norm);
            if cos > best_cos {
                best_cos = cos;
                best = i;
            }
        }
        best
    }

    /// Generates, assigns and (maybe) inserts one offspring.
    pub fn step<P: Problem<T> + ?Sized>(&mut self, problem: &P) -> Result<AdStep<T>> {
        if self.is_finished() {
            return Err(Error::BudgetExhausted);
        }
        let bounds = &problem.descriptor().bounds;
        let n = self.population.len();
        let a = self.rng.index(n);
        let b = self.rng.index(n);
        let mut child = sbx_crossover(
            &self.population[a].x,
            &self.population[b].x,
            &self.config.variation,
            bounds,
            &mut self.rng,
        );
        polynomial_mutation(&mut child, &self.config.variation, bounds, &mut self.rng);
        let y = Solution::evaluate(problem, child)?;
        self.evaluations_used += 1;
        self.ideal.update(&y.f)?;

        let weight = self.closest_weight(&y.f);
        let l = (n / 10).max(1).min(n);
        let mut by_distance: Vec<(T, usize)> = self
            .population
            .iter()
            .enumerate()
            .map(|(k, s)| (squared_distance(&s.x, &y.x), k))
            .collect();
        by_distance.select_nth_unstable_by(l - 1, |p, q| p.0.partial_cmp(&q.0).unwrap().then(p.1.cmp(&q.1)));
        let mut neighbors: Vec<usize> = by_distance[..l].iter().map(|&(_, k)| k).collect();
        neighbors.sort_unstable();

        let w = self.weights[weight].as_slice();
        let z = self.ideal.as_slice();
        let g = &self.config.scalarizer;
        let rivals: Vec<(usize, T)> = neighbors
            .iter()
            .filter(|&&k| self.assignment[k] == weight)
            .map(|&k| (k, g.evaluate(w, &self.population[k].f, z)))
            .collect();
        let offspring_value = g.evaluate(w, &y.f, z);
        let decision = ad_acceptance(offspring_value, &rivals);

        if decision.accepted {
            // Remove from the back so earlier indices stay valid.
            let mut gone = decision.removed.clone();
            gone.sort_unstable_by(|p, q| q.cmp(p));
            for k in gone {
                self.population.swap_remove(k);
                self.assignment.swap_remove(k);
            }
            self.population.push(y.clone());
            self.assignment.push(weight);
        }
        Ok(AdStep {
            offspring: y,
            weight,
            neighbors,
            rivals,
            offspring_value,
            decision,
            population_before: n,
        })
    }

    pub fn archive(&self) -> Vec<Solution<T>> {
        nondominated_filter(&self.population)
    }
}

/// MOEA/D-AD with an unbounded population; returns its non-dominated members.
pub fn moead_ad_run<T: Real, P: Problem<T> + ?Sized>(config: MoeadAdConfig<T>, problem: &P) -> Result<Vec<Solution<T>>> {
    moead_ad_run_traced(config, problem, None, &mut NoTrace)
}

/// Emits one trace record per `weights` offspring.
pub fn moead_ad_run_traced<T: Real, P: Problem<T> + ?Sized>(
    config: MoeadAdConfig<T>,
    problem: &P,
    reference: Option<&ReferenceSet<T>>,
    sink: &mut dyn TraceSink<T>,
) -> Result<Vec<Solution<T>>> {
    let period = config.weights;
    let mut state = MoeadAdState::initialize(config, problem)?;
    let mut generation = 0;
    let mut since = 0;
    while !state.is_finished() {
        state.step(problem)?;
        since += 1;
        if since == period || state.is_finished() {
            since = 0;
            generation += 1;
            if sink.enabled() {
                let trace = GenerationTrace {
                    generation,
                    evaluations: state.evaluations_used,
                    sigma: None,
                    ideal: state.ideal.as_slice().to_vec(),
                    population: state.population.len(),
                    igdx: None,
                    igd_plus: None,
                }
                .with_indicators(&state.archive(), reference)?;
                sink.record(&trace);
            }
        }
    }
    Ok(state.archive())
}
