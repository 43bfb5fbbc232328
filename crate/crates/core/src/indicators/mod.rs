//! Quality indicators: IGD+ in objective space, IGDX in decision space, and hypervolume.

mod hypervolume;

use serde::{Deserialize, Serialize};

pub use hypervolume::{hv_reference_point, hypervolume, hypervolume_monte_carlo, HV_MONTE_CARLO_SAMPLES};

use crate::error::{Error, Result};
use crate::pareto::squared_distance;
use crate::problems::ReferenceSet;
use crate::real::Real;
use crate::solution::Solution;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct IndicatorReport<T> {
    pub igd_plus: T,
    pub igdx: T,
    pub hv: T,
    pub archive_size: usize,
}

fn check_sets<T, A: AsRef<[T]>, B: AsRef<[T]>>(what: &str, a: &[A], r: &[B]) -> Result<()> {
    if a.is_empty() || r.is_empty() {
        return Err(Error::Contract(format!("{what}: empty point set")));
    }
    let dim = r[0].as_ref().len();
    if a.iter().map(|p| p.as_ref().len()).chain(r.iter().map(|p| p.as_ref().len())).any(|l| l != dim) {
        return Err(Error::Contract(format!("{what}: points of unequal length")));
    }
    Ok(())
}

/// Squared `d+`: only the components where `a` is worse than `z` count.
#[inline]
fn squared_dplus<T: Real>(z: &[T], a: &[T]) -> T {
    z.iter().zip(a).fold(T::zero(), |acc, (&zi, &ai)| {
        let d = (ai - zi).max(T::zero());
        acc + d * d
    })
}

/// Dominance-aware distance from reference point `z` to solution `a`.
pub fn dplus<T: Real>(z: &[T], a: &[T]) -> T {
    squared_dplus(z, a).sqrt()
}

/// IGD+ of archive `a` against reference front `p`: mean over `p` of the
/// smallest `d+` to any archive point.
pub fn igd_plus<T: Real, A: AsRef<[T]>, P: AsRef<[T]>>(a: &[A], p: &[P]) -> Result<T> {
    check_sets("igd_plus", a, p)?;
    let total = p.iter().fold(T::zero(), |acc, z| {
        let z = z.as_ref();
        let best = a.iter().fold(T::infinity(), |m, x| m.min(squared_dplus(z, x.as_ref())));
        acc + best.sqrt()
    });
    Ok(total / T::of_usize(p.len()))
}

/// IGDX of archive `a` against decision-space reference set `s`.
pub fn igdx<T: Real, A: AsRef<[T]>, S: AsRef<[T]>>(a: &[A], s: &[S]) -> Result<T> {
    check_sets("igdx", a, s)?;
    let total = s.iter().fold(T::zero(), |acc, x| {
        let x = x.as_ref();
        let best = a.iter().fold(T::infinity(), |m, y| m.min(squared_distance(x, y.as_ref())));
        acc + best.sqrt()
    });
    Ok(total / T::of_usize(s.len()))
}

/// Scores an archive against a reference set with all three indicators.
pub fn score<T: Real>(archive: &[Solution<T>], reference: &ReferenceSet<T>, hv_ref: &[T]) -> Result<IndicatorReport<T>> {
    let xs: Vec<&[T]> = archive.iter().map(|s| s.x.as_slice()).collect();
    let fs: Vec<&[T]> = archive.iter().map(|s| s.f.as_slice()).collect();
    Ok(IndicatorReport {
        igd_plus: igd_plus(&fs, &reference.objective_points)?,
        igdx: igdx(&xs, &reference.decision_points)?,
        hv: hypervolume(&fs, hv_ref)?,
        archive_size: archive.len(),
    })
}
