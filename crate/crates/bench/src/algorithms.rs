//! Maps an [`AlgorithmSpec`] onto the optimizers in `moead_mm`.

use moead_mm::baselines::{moead_ad_run_traced, moead_run_traced};
use moead_mm::moeadmm::run_traced;
use moead_mm::trace::TraceSink;
use moead_mm::{MoeadAdConfig64, MoeadConfig64, MoeadMmConfig64, Problem, ReferenceSet64, Scalarizer64, Solution64};

use crate::config::{AlgorithmKind, AlgorithmSpec, ScalarizerKind};
use crate::error::Result;

pub fn scalarizer(spec: &AlgorithmSpec) -> Scalarizer64 {
    match spec.scalarizer {
        ScalarizerKind::Tch => Scalarizer64::Tchebycheff,
        ScalarizerKind::Pbi => match spec.theta {
            Some(theta) => Scalarizer64::Pbi { theta },
            None => Scalarizer64::pbi_default(),
        },
    }
}

/// One seeded run; returns the final non-dominated set.
pub fn run_algorithm(
    spec: &AlgorithmSpec,
    population: usize,
    budget: usize,
    seed: u64,
    problem: &dyn Problem<f64>,
    reference: Option<&ReferenceSet64>,
    sink: &mut dyn TraceSink<f64>,
) -> Result<Vec<Solution64>> {
    let g = scalarizer(spec);
    let archive = match spec.name {
        AlgorithmKind::Moeadmm => {
            let config = MoeadMmConfig64::new(population, spec.mu(), g, budget, seed);
            run_traced(config, problem, reference, sink)?
        }
        AlgorithmKind::Moead => {
            let mut config = MoeadConfig64::new(population, g, budget, seed);
            if let Some(t) = spec.neighborhood {
                config.neighborhood = t;
            }
            moead_run_traced(config, problem, reference, sink)?
        }
        AlgorithmKind::Moeadad => {
            let config = MoeadAdConfig64::new(population, g, budget, seed);
            moead_ad_run_traced(config, problem, reference, sink)?
        }
    };
    Ok(archive)
}
