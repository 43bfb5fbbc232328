//! Weight vectors, scalarizing functions and the ideal point.

mod weights;

use serde::{Deserialize, Serialize};

pub use weights::{generate_weights, neighbor_indices, neighborhoods};

use crate::error::{check_same_len, Error, Result};
use crate::real::Real;

/// Floor applied to Tchebycheff weights so zero entries still see their objective.
pub const TCHEBYCHEFF_WEIGHT_FLOOR: f64 = 1e-6;

/// Default PBI penalty.
pub const DEFAULT_PBI_THETA: f64 = 5.0;

/// Non-negative simplex point, one per scalar sub-problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct WeightVector<T>(Vec<T>);

impl<T: Real> WeightVector<T> {
    /// Checks non-negativity and unit sum (to 1e-12).
    pub fn new(w: Vec<T>) -> Result<Self> {
        if w.len() < 2 {
            return Err(Error::Config("weight vector needs at least 2 components".into()));
        }
        if w.iter().any(|&v| !(v >= T::zero())) {
            return Err(Error::Config(format!("negative weight component in {w:?}")));
        }
        let sum = w.iter().fold(T::zero(), |a, &b| a + b);
        if (sum - T::one()).abs() > T::of(1e-12).max(T::epsilon() * T::of(8.0)) {
            return Err(Error::Config(format!("weights sum to {sum}, not 1")));
        }
        Ok(Self(w))
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<T> AsRef<[T]> for WeightVector<T> {
    fn as_ref(&self) -> &[T] {
        &self.0
    }
}

/// Componentwise minimum of every objective vector seen so far.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct IdealPoint<T>(Vec<T>);

impl<T: Real> IdealPoint<T> {
    pub fn from_point(f: &[T]) -> Self {
        Self(f.to_vec())
    }

    /// Componentwise minimum over a non-empty set of objective vectors.
    pub fn from_points<'a>(points: impl IntoIterator<Item = &'a [T]>) -> Result<Self> {
        let mut iter = points.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::Contract("ideal point of an empty set".into()))?;
        let mut z = Self::from_point(first);
        for f in iter {
            z.update(f)?;
        }
        Ok(z)
    }

    /// `z_j <- min(z_j, f_j)`. Returns whether any component moved.
    pub fn update(&mut self, f: &[T]) -> Result<bool> {
        check_same_len("update_ideal", self.0.len(), f.len())?;
        let mut moved = false;
        for (z, &v) in self.0.iter_mut().zip(f) {
            if v < *z {
                *z = v;
                moved = true;
            }
        }
        Ok(moved)
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }
}

/// Pure form of [`IdealPoint::update`].
pub fn update_ideal<T: Real>(z: &IdealPoint<T>, f: &[T]) -> Result<IdealPoint<T>> {
    let mut next = z.clone();
    next.update(f)?;
    Ok(next)
}

/// Weighted Tchebycheff distance `max_i max(w_i, 1e-6) |f_i - z_i|`.
pub fn tchebycheff<T: Real>(w: &[T], f: &[T], z: &[T]) -> T {
    let floor = T::of(TCHEBYCHEFF_WEIGHT_FLOOR);
    w.iter()
        .zip(f)
        .zip(z)
        .fold(T::zero(), |acc, ((&wi, &fi), &zi)| acc.max(wi.max(floor) * (fi - zi).abs()))
}

/// Penalty-based boundary intersection `d1 + theta * d2`.
///
/// `d1` is the length of `f - z` projected on the unit weight direction and
/// `d2` the perpendicular distance to that direction.
pub fn pbi<T: Real>(w: &[T], f: &[T], z: &[T], theta: T) -> T {
    let norm = w.iter().fold(T::zero(), |a, &v| a + v * v).sqrt();
    let d1 = f
        .iter()
        .zip(z)
        .zip(w)
        .fold(T::zero(), |acc, ((&fi, &zi), &wi)| acc + (fi - zi) * wi / norm)
        .abs();
    let d2 = f
        .iter()
        .zip(z)
        .zip(w)
        .fold(T::zero(), |acc, ((&fi, &zi), &wi)| {
            let r = fi - zi - d1 * wi / norm;
            acc + r * r
        })
        .sqrt();
    d1 + theta * d2
}

/// Scalarizing function `g(w, f, z)` used by the decomposition algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub enum Scalarizer<T> {
    Tchebycheff,
    Pbi { theta: T },
}

impl<T: Real> Scalarizer<T> {
    pub fn pbi_default() -> Self {
        Self::Pbi { theta: T::of(DEFAULT_PBI_THETA) }
    }

    #[inline]
    pub fn evaluate(&self, w: &[T], f: &[T], z: &[T]) -> T {
        match *self {
            Self::Tchebycheff => tchebycheff(w, f, z),
            Self::Pbi { theta } => pbi(w, f, z, theta),
        }
    }

    /// Short tag: `tch` or `pbi`.
    pub fn tag(&self) -> &'static str {
        match self {
            Self::Tchebycheff => "tch",
            Self::Pbi { .. } => "pbi",
        }
    }

    /// Parses `tch` / `pbi` (PBI gets the default penalty).
    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag.to_ascii_lowercase().as_str() {
            "tch" | "tchebycheff" => Ok(Self::Tchebycheff),
            "pbi" => Ok(Self::pbi_default()),
            other => Err(Error::Config(format!("unknown scalarizer '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tchebycheff_examples() {
        assert_eq!(tchebycheff(&[0.5, 0.5], &[2.0, 4.0], &[0.0, 0.0]), 2.0);
        assert_eq!(tchebycheff(&[0.3, 0.7], &[1.0, 2.0], &[1.0, 2.0]), 0.0);
        assert_eq!(tchebycheff(&[1.0, 0.0], &[3.0, 100.0], &[0.0, 0.0]), 3.0);
        // The floored weight still sees a large enough second objective.
        assert_eq!(tchebycheff(&[1.0, 0.0], &[0.0, 1e7], &[0.0, 0.0]), 10.0);
    }

    #[test]
    fn pbi_examples() {
        let g = pbi(&[1.0, 1.0], &[3.0, 3.0], &[1.0, 1.0], 5.0);
        assert!((g - 8f64.sqrt()).abs() < 1e-12);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let g = pbi(&[h, h], &[1.0, 0.0], &[0.0, 0.0], 5.0);
        assert!((g - 6.0 / 2f64.sqrt()).abs() < 1e-12);
        assert!((g - 4.2426).abs() < 1e-4);
        assert_eq!(pbi(&[0.2, 0.8], &[0.5, 0.5], &[0.5, 0.5], 5.0), 0.0);
    }

    #[test]
    fn ideal_point_updates() {
        let z = IdealPoint::from_point(&[1.0, 2.0]);
        assert_eq!(update_ideal(&z, &[0.0, 3.0]).unwrap().as_slice(), &[0.0, 2.0]);
        assert_eq!(update_ideal(&z, &[4.0, 5.0]).unwrap(), z);
        assert!(update_ideal(&z, &[1.0]).is_err());
    }

    #[test]
    fn weight_vector_validation() {
        assert!(WeightVector::new(vec![0.25, 0.75]).is_ok());
        assert!(WeightVector::new(vec![-0.25, 1.25]).is_err());
        assert!(WeightVector::new(vec![0.3, 0.3]).is_err());
    }

    #[test]
    fn scalarizer_tags() {
        assert_eq!(Scalarizer::<f64>::from_tag("tch").unwrap(), Scalarizer::Tchebycheff);
        assert_eq!(Scalarizer::<f64>::from_tag("PBI").unwrap(), Scalarizer::Pbi { theta: 5.0 });
        assert!(Scalarizer::<f64>::from_tag("ws").is_err());
    }

    fn simplex(m: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(0.0f64..1.0, m).prop_map(|v| {
            let s: f64 = v.iter().sum::<f64>() + 1e-9;
            v.iter().map(|x| x / s).collect()
        })
    }

    proptest! {
        #[test]
        fn scalarizers_nonnegative_when_f_above_z(
            w in simplex(4),
            z in prop::collection::vec(-5.0f64..5.0, 4),
            gap in prop::collection::vec(0.0f64..5.0, 4),
        ) {
            let f: Vec<f64> = z.iter().zip(&gap).map(|(a, b)| a + b).collect();
            prop_assert!(tchebycheff(&w, &f, &z) >= 0.0);
            prop_assert!(pbi(&w, &f, &z, 5.0) >= 0.0);
            prop_assert_eq!(tchebycheff(&w, &z, &z), 0.0);
        }

        #[test]
        fn tchebycheff_is_permutation_invariant(
            w in simplex(4),
            f in prop::collection::vec(0.0f64..5.0, 4),
            rot in 0usize..4,
        ) {
            let z = vec![0.0; 4];
            let perm = |v: &[f64]| { let mut v = v.to_vec(); v.rotate_left(rot); v };
            prop_assert_eq!(tchebycheff(&w, &f, &z), tchebycheff(&perm(&w), &perm(&f), &perm(&z)));
        }

        #[test]
        fn ranking_is_translation_invariant(
            w in simplex(3),
            fs in prop::collection::vec(prop::collection::vec(0.0f64..4.0, 3), 2..12),
            shift in prop::collection::vec(-3.0f64..3.0, 3),
        ) {
            // Dyadic values keep the shifted arithmetic exact.
            let q = |v: f64| (v * 64.0).round() / 64.0;
            let fs: Vec<Vec<f64>> = fs.iter().map(|f| f.iter().map(|&v| q(v)).collect()).collect();
            let shift: Vec<f64> = shift.iter().map(|&v| q(v)).collect();
            let z = vec![0.0; 3];
            let zs: Vec<f64> = shift.clone();
            for g in [Scalarizer::Tchebycheff, Scalarizer::Pbi { theta: 5.0 }] {
                let rank = |fs: &[Vec<f64>], z: &[f64]| {
                    let vals: Vec<f64> = fs.iter().map(|f| g.evaluate(&w, f, z)).collect();
                    let mut idx: Vec<usize> = (0..fs.len()).collect();
                    idx.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]).then(a.cmp(&b)));
                    (idx, vals)
                };
                let moved: Vec<Vec<f64>> =
                    fs.iter().map(|f| f.iter().zip(&shift).map(|(a, b)| a + b).collect()).collect();
                let (_, before) = rank(&fs, &z);
                let (_, after) = rank(&moved, &zs);
                for (a, b) in before.iter().zip(&after) {
                    prop_assert!((a - b).abs() <= 1e-9);
                }
            }
        }
    }
}
