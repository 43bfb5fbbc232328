//! Dominance, distances and bound projection.

use crate::error::{check_same_len, Result};
use crate::real::Real;
use crate::solution::Solution;

/// `a` Pareto-dominates `b` under minimization.
///
/// Equal vectors never dominate each other.
pub fn dominates<T: Real>(a: &[T], b: &[T]) -> Result<bool> {
    check_same_len("dominates", a.len(), b.len())?;
    Ok(dominates_unchecked(a, b))
}

#[inline]
pub(crate) fn dominates_unchecked<T: Real>(a: &[T], b: &[T]) -> bool {
    let mut strictly_better = false;
    for (&ai, &bi) in a.iter().zip(b) {
        if ai > bi {
            return false;
        }
        if ai < bi {
            strictly_better = true;
        }
    }
    strictly_better
}

/// Keeps every solution that no other member dominates.
///
/// Members with identical objective vectors are all retained; they may be
/// equivalent solutions at different decision vectors.
pub fn nondominated_filter<T: Real>(pop: &[Solution<T>]) -> Vec<Solution<T>> {
    nondominated_indices(pop.iter().map(|s| s.f.as_slice()))
        .into_iter()
        .map(|i| pop[i].clone())
        .collect()
}

/// Indices (in input order) of the non-dominated objective vectors.
pub fn nondominated_indices<'a, T: Real, I>(points: I) -> Vec<usize>
where
    I: IntoIterator<Item = &'a [T]>,
{
    let points: Vec<&[T]> = points.into_iter().collect();
    // Lexicographic sort: a point can only be dominated by one sorted before it.
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| lex_cmp(points[i], points[j]).then(i.cmp(&j)));

    let mut front: Vec<usize> = Vec::new();
    for &i in &order {
        if !front.iter().any(|&k| dominates_unchecked(points[k], points[i])) {
            front.push(i);
        }
    }
    front.sort_unstable();
    front
}

fn lex_cmp<T: Real>(a: &[T], b: &[T]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(std::cmp::Ordering::Equal) | None => continue,
            Some(ord) => return ord,
        }
    }
    std::cmp::Ordering::Equal
}

pub fn euclidean_distance<T: Real>(a: &[T], b: &[T]) -> Result<T> {
    check_same_len("euclidean_distance", a.len(), b.len())?;
    Ok(distance_unchecked(a, b))
}

#[inline]
pub(crate) fn distance_unchecked<T: Real>(a: &[T], b: &[T]) -> T {
    squared_distance(a, b).sqrt()
}

#[inline]
pub(crate) fn squared_distance<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&ai, &bi)| {
        let d = ai - bi;
        acc + d * d
    })
}

/// Projects each coordinate into its `[low, high]` interval.
pub fn clamp_to_bounds<T: Real>(x: &mut [T], bounds: &[(T, T)]) {
    for (xi, &(lo, hi)) in x.iter_mut().zip(bounds) {
        *xi = xi.max(lo).min(hi);
    }
}
