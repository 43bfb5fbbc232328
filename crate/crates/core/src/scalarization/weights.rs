use crate::error::{Error, Result};
use crate::pareto::distance_unchecked;
use crate::real::Real;
use crate::rng::RandomStream;

use super::WeightVector;

/// Seed of the stream that tops up an incomplete simplex lattice.
const FILL_SEED: u64 = 0x5EED_0F_5171_1CE5;

/// Generates exactly `lambda` distinct weight vectors in `m` objectives.
///
/// Two objectives get `lambda` evenly spaced weights. With more objectives
/// the simplex lattice with the largest `H` such that `C(H+M-1, M-1) <= lambda`
/// is used, and the remainder is filled with uniform simplex draws from a
/// fixed-seed stream. A single weight is the simplex centroid.
pub fn generate_weights<T: Real>(m: usize, lambda: usize) -> Result<Vec<WeightVector<T>>> {
    if m < 2 {
        return Err(Error::Config(format!("need at least 2 objectives, got {m}")));
    }
    if lambda < 1 {
        return Err(Error::Config("need at least one weight vector".into()));
    }
    if lambda == 1 {
        let c = T::one() / T::of_usize(m);
        let mut w = vec![c; m];
        w[m - 1] = T::one() - c * T::of_usize(m - 1);
        return Ok(vec![WeightVector::new(w)?]);
    }
    if m == 2 {
        let step = T::of_usize(lambda - 1);
        return (0..lambda)
            .map(|i| {
                let w1 = T::of_usize(i) / step;
                WeightVector::new(vec![w1, T::one() - w1])
            })
            .collect();
    }

    let mut h = 0;
    while binomial(h + 1 + m - 1, m - 1) <= lambda as u128 {
        h += 1;
    }
    // h == 0 means even the corner lattice does not fit; fill everything.
    let points = if h == 0 { Vec::new() } else { lattice(m, h) };
    let mut out: Vec<Vec<T>> = points
        .into_iter()
        .map(|parts| {
            let mut w: Vec<T> = parts.iter().map(|&p| T::of_usize(p) / T::of_usize(h)).collect();
            // Put the rounding residue on the last component so the sum is 1.
            let head = w[..m - 1].iter().fold(T::zero(), |a, &b| a + b);
            w[m - 1] = (T::one() - head).max(T::zero());
            w
        })
        .collect();

    let mut rng = RandomStream::derive(FILL_SEED, "weights");
    while out.len() < lambda {
        let e: Vec<f64> = (0..m).map(|_| -(1.0 - rng.unit_f64()).ln()).collect();
        let total: f64 = e.iter().sum();
        let mut w: Vec<T> = e.iter().map(|&v| T::of(v / total)).collect();
        let head = w[..m - 1].iter().fold(T::zero(), |a, &b| a + b);
        if head > T::one() {
            continue;
        }
        w[m - 1] = T::one() - head;
        if !out.iter().any(|o| o == &w) {
            out.push(w);
        }
    }
    out.into_iter().map(WeightVector::new).collect()
}

/// All compositions of `h` into `m` non-negative parts, lexicographic order.
fn lattice(m: usize, h: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m - 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in 0..=left {
            prefix.push(v);
            rec(m, left - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, h, &mut Vec::with_capacity(m), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The `t` weight indices closest to `weights[i]` (Euclidean), excluding `i`.
///
/// Ties go to the lower index. `t` is capped at `weights.len() - 1`.
pub fn neighbor_indices<T: Real>(weights: &[WeightVector<T>], i: usize, t: usize) -> Vec<usize> {
    let wi = weights[i].as_slice();
    let mut others: Vec<(T, usize)> = weights
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(j, w)| (distance_unchecked(wi, w.as_slice()), j))
        .collect();
    others.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal).then(a.1.cmp(&b.1)));
    others.truncate(t);
    others.into_iter().map(|(_, j)| j).collect()
}

/// [`neighbor_indices`] for every weight, computed once.
pub fn neighborhoods<T: Real>(weights: &[WeightVector<T>], t: usize) -> Vec<Vec<usize>> {
    (0..weights.len()).map(|i| neighbor_indices(weights, i, t)).collect()
}
