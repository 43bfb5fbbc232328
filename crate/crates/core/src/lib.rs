//! Decomposition-based multi-modal multi-objective evolutionary optimization.
//!
//! The main algorithm, [`moeadmm`], gives every weight vector a fixed-size
//! sub-population and keeps equivalent Pareto-optimal solutions apart with a
//! clearing step in decision space. The crate also ships classic MOEA/D and
//! MOEA/D-AD for comparison, the SYM-PART, SSUF1, SUF3 and multi-polygon test
//! problems, and the IGD+, IGDX and hypervolume indicators.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`); the `*64` aliases
//! below fix the scalar to `f64`, which is what the benchmark harness uses.
//!
//! ```
//! use moead_mm::{moeadmm, problems::MultiPolygon, MoeadMmConfig64, Scalarizer};
//!
//! let problem = MultiPolygon::<f64>::hexagons(2).unwrap();
//! let config = MoeadMmConfig64::new(40, 4, Scalarizer::Tchebycheff, 2_000, 7);
//! let archive = moeadmm::run(config, &problem).unwrap();
//! assert!(!archive.is_empty());
//! ```

pub mod baselines;
pub mod columnar;
mod error;
pub mod indicators;
pub mod moeadmm;
pub mod pareto;
mod problem;
pub mod problems;
mod real;
mod rng;
pub mod scalarization;
mod solution;
pub mod trace;

pub use error::{Error, Result};
pub use pareto::{clamp_to_bounds, dominates, euclidean_distance, nondominated_filter};
pub use problem::{random_point, Problem, ProblemDescriptor};
pub use real::Real;
pub use rng::RandomStream;
pub use scalarization::{IdealPoint, Scalarizer, WeightVector};
pub use solution::Solution;

pub use baselines::{MoeadAdConfig, MoeadConfig};
pub use indicators::IndicatorReport;
pub use moeadmm::{AlgorithmState, MoeadMmConfig, SubPopulation, VariationParams};
pub use problems::ReferenceSet;

pub type Solution64 = Solution<f64>;
pub type Solution32 = Solution<f32>;
pub type ProblemDescriptor64 = ProblemDescriptor<f64>;
pub type WeightVector64 = WeightVector<f64>;
pub type IdealPoint64 = IdealPoint<f64>;
pub type Scalarizer64 = Scalarizer<f64>;
pub type ReferenceSet64 = ReferenceSet<f64>;
pub type IndicatorReport64 = IndicatorReport<f64>;
pub type VariationParams64 = VariationParams<f64>;
pub type MoeadMmConfig64 = MoeadMmConfig<f64>;
pub type MoeadMmConfig32 = MoeadMmConfig<f32>;
pub type AlgorithmState64 = AlgorithmState<f64>;
pub type MoeadConfig64 = MoeadConfig<f64>;
pub type MoeadAdConfig64 = MoeadAdConfig<f64>;
