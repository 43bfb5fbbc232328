use crate::error::{Error, Result};
use crate::pareto::distance_unchecked;
use crate::real::Real;

/// Neighbour rank used for the clearing radius: `max(1, floor(N / 10))`.
pub fn clearing_rank(population_size: usize) -> usize {
    (population_size / 10).max(1)
}

/// Mean distance from each point to its `L`-th nearest other point,
/// `L = max(1, floor(population_size / 10))`.
///
/// A point is never its own neighbour; duplicates count as distance zero.
/// `L` is capped at `points.len() - 1`.
pub fn estimate_clearing_radius<T: Real, X: AsRef<[T]>>(points: &[X], population_size: usize) -> Result<T> {
    let n = points.len();
    if n < 2 {
        return Err(Error::Contract(format!("clearing radius needs >= 2 solutions, got {n}")));
    }
    let rank = clearing_rank(population_size).min(n - 1);

    let mut dist = vec![T::zero(); n * n];
    for i in 0..n {
        for j in i + 1..n {
            let d = distance_unchecked(points[i].as_ref(), points[j].as_ref());
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    let mut row: Vec<T> = Vec::with_capacity(n - 1);
    let mut total = T::zero();
    for i in 0..n {
        row.clear();
        row.extend((0..n).filter(|&j| j != i).map(|j| dist[i * n + j]));
        let (_, kth, _) = row.select_nth_unstable_by(rank - 1, |a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        total = total + *kth;
    }
    Ok(total / T::of_usize(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_example_on_a_line() {
        let pts = vec![vec![0.0], vec![1.0], vec![2.0], vec![3.0]];
        assert_eq!(estimate_clearing_radius::<f64, _>(&pts, 4).unwrap(), 1.0);
        // L = 2: distances to second-nearest are (2, 1, 1, 2).
        assert_eq!(estimate_clearing_radius::<f64, _>(&pts, 20).unwrap(), 1.5);
    }

    #[test]
    fn identical_points_give_zero_radius() {
        let pts = vec![vec![1.0, 2.0]; 10];
        assert_eq!(estimate_clearing_radius::<f64, _>(&pts, 300).unwrap(), 0.0);
    }

    #[test]
    fn rank_follows_population_size() {
        assert_eq!(clearing_rank(300), 30);
        assert_eq!(clearing_rank(4), 1);
        assert!(estimate_clearing_radius::<f64, _>(&[vec![0.0]], 10).is_err());
    }

    #[test]
    fn matches_sorting_oracle() {
        let mut rng = crate::rng::RandomStream::new(12);
        let pts: Vec<Vec<f64>> = (0..60).map(|_| vec![rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)]).collect();
        let l = clearing_rank(100);
        let mut total = 0.0;
        for (i, p) in pts.iter().enumerate() {
            let mut d: Vec<f64> = pts
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt())
                .collect();
            d.sort_by(f64::total_cmp);
            total += d[l - 1];
        }
        let expected = total / pts.len() as f64;
        let got: f64 = estimate_clearing_radius(&pts, 100).unwrap();
        assert!((got - expected).abs() <= 1e-12 * expected);
    }
}
