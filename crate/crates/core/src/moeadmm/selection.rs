use crate::error::{Error, Result};
use crate::pareto::distance_unchecked;
use crate::real::Real;
use crate::scalarization::Scalarizer;
use crate::solution::Solution;

/// Which rule removed a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalRule {
    /// The closest pair was within the clearing radius; its worse member left.
    Clearing { pair: (usize, usize) },
    /// No pair within the radius; the globally worst member left.
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Removal {
    pub index: usize,
    pub rule: RemovalRule,
}

/// Decides which of the `mu + 1` candidates leaves.
///
/// `g` holds the scalarizing values of `xs`. The closest pair in decision
/// space (lexicographically smallest index pair on ties) is cleared when its
/// distance is strictly below `sigma`: the member with larger `g` goes, the
/// higher index on equal `g`. Otherwise the largest `g` overall goes, again the
/// higher index on ties.
pub fn choose_removal<T: Real>(xs: &[&[T]], g: &[T], sigma: T) -> Result<Removal> {
    if xs.len() < 2 || xs.len() != g.len() {
        return Err(Error::Contract(format!(
            "selection needs >= 2 candidates with matching values ({} / {})",
            xs.len(),
            g.len()
        )));
    }
    let mut best = (0, 1);
    let mut best_d = T::infinity();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let d = distance_unchecked(xs[i], xs[j]);
            if d < best_d {
                best_d = d;
                best = (i, j);
            }
        }
    }
    if best_d < sigma {
        let (i, j) = best;
        let index = if g[i] > g[j] { i } else { j };
        return Ok(Removal { index, rule: RemovalRule::Clearing { pair: best } });
    }
    let mut worst = 0;
    for k in 1..g.len() {
        if g[k] >= g[worst] {
            worst = k;
        }
    }
    Ok(Removal { index: worst, rule: RemovalRule::Greedy })
}

/// Environmental selection of one sub-population.
///
/// Takes the `mu + 1` candidates (incumbents first, offspring last) and
/// returns the `mu` survivors in their original order, plus the removal made.
pub fn environmental_selection<T: Real>(
    w: &[T],
    candidates: Vec<Solution<T>>,
    mu: usize,
    sigma: T,
    z: &[T],
    scalarizer: &Scalarizer<T>,
) -> Result<(Vec<Solution<T>>, Removal)> {
    if candidates.len() != mu + 1 {
        return Err(Error::Contract(format!(
            "environmental selection expects {} candidates, got {}",
            mu + 1,
            candidates.len()
        )));
    }
    let g: Vec<T> = candidates.iter().map(|s| scalarizer.evaluate(w, &s.f, z)).collect();
    let xs: Vec<&[T]> = candidates.iter().map(|s| s.x.as_slice()).collect();
    let removal = choose_removal(&xs, &g, sigma)?;
    let mut survivors = candidates;
    survivors.remove(removal.index);
    Ok((survivors, removal))
}
