//! Simulated binary crossover and polynomial mutation.

use serde::{Deserialize, Serialize};

use crate::pareto::clamp_to_bounds;
use crate::real::Real;
use crate::rng::RandomStream;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct VariationParams<T> {
    pub sbx_eta: T,
    pub sbx_prob: T,
    pub mut_eta: T,
    /// Per-variable mutation probability; `None` means `1 / D`.
    pub mut_prob: Option<T>,
}

impl<T: Real> Default for VariationParams<T> {
    fn default() -> Self {
        Self {
            sbx_eta: T::of(20.0),
            sbx_prob: T::one(),
            mut_eta: T::of(20.0),
            mut_prob: None,
        }
    }
}

impl<T: Real> VariationParams<T> {
    /// No crossover and no mutation: the child copies its first parent.
    pub fn identity() -> Self {
        Self {
            sbx_prob: T::zero(),
            mut_prob: Some(T::zero()),
            ..Self::default()
        }
    }

    pub fn mutation_probability(&self, dimension: usize) -> T {
        self.mut_prob.unwrap_or_else(|| T::one() / T::of_usize(dimension.max(1)))
    }
}

/// One SBX child of `x1` and `x2`.
///
/// With probability `sbx_prob` every variable receives a spread factor
/// `beta` and the child takes, by coin flip, either
/// `((1+beta) x1 + (1-beta) x2) / 2` or `((1-beta) x1 + (1+beta) x2) / 2`.
/// Otherwise the child is a copy of `x1`.
pub fn sbx_crossover<T: Real>(
    x1: &[T],
    x2: &[T],
    params: &VariationParams<T>,
    bounds: &[(T, T)],
    rng: &mut RandomStream,
) -> Vec<T> {
    let mut child = x1.to_vec();
    if !(rng.unit::<T>() < params.sbx_prob) {
        return child;
    }
    let half = T::of(0.5);
    let one = T::one();
    let exponent = one / (params.sbx_eta + one);
    for (c, (&a, &b)) in child.iter_mut().zip(x1.iter().zip(x2)) {
        let u = rng.unit::<T>();
        let beta = if u <= half {
            (u + u).powf(exponent)
        } else {
            (one / (T::of(2.0) * (one - u))).powf(exponent)
        };
        let mid = half * (a + b);
        let spread = half * beta * (a - b);
        *c = if rng.coin() { mid + spread } else { mid - spread };
    }
    clamp_to_bounds(&mut child, bounds);
    child
}

/// Bounded polynomial mutation, applied per variable with the configured probability.
pub fn polynomial_mutation<T: Real>(
    x: &mut [T],
    params: &VariationParams<T>,
    bounds: &[(T, T)],
    rng: &mut RandomStream,
) {
    let prob = params.mutation_probability(x.len());
    let one = T::one();
    let two = T::of(2.0);
    let power = one / (params.mut_eta + one);
    for (xi, &(lo, hi)) in x.iter_mut().zip(bounds) {
        if !(rng.unit::<T>() < prob) {
            continue;
        }
        let span = hi - lo;
        let d1 = (*xi - lo) / span;
        let d2 = (hi - *xi) / span;
        let u = rng.unit::<T>();
        let dq = if u < T::of(0.5) {
            let base = two * u + (one - two * u) * (one - d1).powf(params.mut_eta + one);
            base.powf(power) - one
        } else {
            let base = two * (one - u) + two * (u - T::of(0.5)) * (one - d2).powf(params.mut_eta + one);
            one - base.powf(power)
        };
        *xi = (*xi + dq * span).max(lo).min(hi);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BOUNDS: [(f64, f64); 3] = [(-100.0, 100.0); 3];

    #[test]
    fn identical_parents_give_identical_child() {
        let mut rng = RandomStream::new(1);
        let p = [1.5, -3.0, 42.0];
        for _ in 0..100 {
            assert_eq!(sbx_crossover(&p, &p, &VariationParams::default(), &BOUNDS, &mut rng), p.to_vec());
        }
    }

    #[test]
    fn identity_params_copy_first_parent() {
        let mut rng = RandomStream::new(2);
        let params = VariationParams::identity();
        let mut child = sbx_crossover(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0], &params, &BOUNDS, &mut rng);
        polynomial_mutation(&mut child, &params, &BOUNDS, &mut rng);
        assert_eq!(child, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn children_stay_in_bounds() {
        let bounds = [(1.0, 3.0), (-1.0, 1.0)];
        let mut rng = RandomStream::new(3);
        let params = VariationParams { mut_prob: Some(1.0), sbx_eta: 1.0, mut_eta: 1.0, ..Default::default() };
        for _ in 0..10_000 {
            let a = [rng.uniform(1.0, 3.0), rng.uniform(-1.0, 1.0)];
            let b = [rng.uniform(1.0, 3.0), rng.uniform(-1.0, 1.0)];
            let mut c = sbx_crossover(&a, &b, &params, &bounds, &mut rng);
            polynomial_mutation(&mut c, &params, &bounds, &mut rng);
            assert!(c.iter().zip(&bounds).all(|(v, (lo, hi))| v >= lo && v <= hi));
        }
    }

    #[test]
    fn sbx_child_mean_is_parent_midpoint() {
        let mut rng = RandomStream::new(4);
        let params = VariationParams::default();
        let (a, b) = ([0.0, 10.0, -5.0], [2.0, 4.0, 5.0]);
        let n = 100_000;
        let mut sum = [0.0; 3];
        let mut sq = [0.0; 3];
        for _ in 0..n {
            let c = sbx_crossover(&a, &b, &params, &BOUNDS, &mut rng);
            for j in 0..3 {
                sum[j] += c[j];
                sq[j] += c[j] * c[j];
            }
        }
        for j in 0..3 {
            let mean = sum[j] / n as f64;
            let var = sq[j] / n as f64 - mean * mean;
            let se = (var / n as f64).sqrt();
            let mid = 0.5 * (a[j] + b[j]);
            assert!((mean - mid).abs() <= 3.0 * se, "coord {j}: {mean} vs {mid} (se {se})");
        }
    }

    #[test]
    fn mutation_moves_about_one_variable_on_average() {
        let mut rng = RandomStream::new(5);
        let params = VariationParams::default();
        let bounds = [(0.0, 1.0); 10];
        let trials = 20_000;
        let mut changed = 0;
        for _ in 0..trials {
            let mut x = [0.5; 10];
            polynomial_mutation(&mut x, &params, &bounds, &mut rng);
            changed += x.iter().filter(|&&v| v != 0.5).count();
        }
        let rate = changed as f64 / trials as f64;
        assert!((rate - 1.0).abs() < 0.05, "{rate}");
    }
}
