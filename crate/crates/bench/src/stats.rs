//! Two-sided Wilcoxon rank-sum test.

use statrs::function::erf::erfc;

use crate::error::{BenchError, Result};

/// Largest pooled sample size handled by exact enumeration.
pub const EXACT_LIMIT: usize = 12;

/// Ranks with ties given their average rank (1-based).
fn midranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let rank = (start + end + 1) as f64 / 2.0;
        for &k in &order[start..end] {
            ranks[k] = rank;
        }
        start = end;
    }
    ranks
}

/// Two-sided p-value for a location shift between `a` and `b`.
///
/// Exact (by enumerating every split of the pooled ranks) when
/// `a.len() + b.len() <= 12`; otherwise the normal approximation with tie
/// and continuity corrections. An all-equal pooled sample gives 1.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() < 3 || b.len() < 3 {
        return Err(BenchError::Stats(format!("rank-sum needs >= 3 values per sample, got {} and {}", a.len(), b.len())));
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(BenchError::Stats("rank-sum input contains a non-finite value".into()));
    }
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    if pooled.iter().all(|&v| v == pooled[0]) {
        return Ok(1.0);
    }
    let ranks = midranks(&pooled);
    let (n1, n2) = (a.len(), b.len());
    let n = n1 + n2;
    let w: f64 = ranks[..n1].iter().sum();
    let expected = n1 as f64 * (n as f64 + 1.0) / 2.0;
    let observed = (w - expected).abs();

    if n <= EXACT_LIMIT {
        let (mut extreme, mut total) = (0u64, 0u64);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != n1 {
                continue;
            }
            let s: f64 = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| ranks[k]).sum();
            total += 1;
            if (s - expected).abs() >= observed - 1e-9 {
                extreme += 1;
            }
        }
        return Ok(extreme as f64 / total as f64);
    }

    let mut sorted = pooled.clone();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut k = 0;
    while k < n {
        let mut e = k + 1;
        while e < n && sorted[e] == sorted[k] {
            e += 1;
        }
        let t = (e - k) as f64;
        tie_term += t * t * t - t;
        k = e;
    }
    let (n1f, n2f, nf) = (n1 as f64, n2 as f64, n as f64);
    let variance = n1f * n2f / 12.0 * ((nf + 1.0) - tie_term / (nf * (nf - 1.0)));
    if !(variance > 0.0) {
        return Ok(1.0);
    }
    let z = ((observed - 0.5).max(0.0)) / variance.sqrt();
    Ok(erfc(z / std::f64::consts::SQRT_2).min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midranks_average_ties() {
        assert_eq!(midranks(&[3.0, 1.0, 3.0, 2.0]), vec![3.5, 1.0, 3.5, 2.0]);
    }

    #[test]
    fn exact_small_cases() {
        assert_eq!(wilcoxon_rank_sum(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]).unwrap(), 0.1);
        // Interleaved samples sit at the center of the null distribution.
        assert_eq!(wilcoxon_rank_sum(&[1.0, 4.0, 5.0], &[2.0, 3.0, 6.0]).unwrap(), 1.0);
    }

    #[test]
    fn short_samples_are_rejected() {
        assert!(wilcoxon_rank_sum(&[1.0, 2.0], &[3.0, 4.0, 5.0]).is_err());
    }
}
