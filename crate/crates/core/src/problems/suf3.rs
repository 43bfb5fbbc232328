use crate::error::Result;
use crate::problem::{Problem, ProblemDescriptor};
use crate::real::Real;
use crate::rng::RandomStream;

use super::{split_counts, ArcLengthTable};

/// SUF3: a symmetric UF3-style problem with two curved Pareto subsets.
///
/// With `r(x1) = 0.1 + 0.3 sqrt(x1)` the subsets are the curves
/// `x2 = 1.5 - r(x1)` and `x2 = 1.5 + r(x1)`. Off the curves the distance
/// `y = |x2 - 1.5| - r(x1)` is penalised by the multimodal term
/// `h(y) = 4 y^2 - 2 cos(20 pi y / sqrt 2) + 2`:
///
/// `f1 = x1`, `f2 = 1 - sqrt(x1) + 2 h(y)`.
#[derive(Debug, Clone)]
pub struct Suf3<T> {
    desc: ProblemDescriptor<T>,
}

impl<T: Real> Default for Suf3<T> {
    fn default() -> Self {
        let bounds = vec![(T::zero(), T::one()), (T::one(), T::of(2.0))];
        let desc = ProblemDescriptor::new("suf3", 2, bounds, 2).expect("static SUF3 descriptor");
        Self { desc }
    }
}

fn offset<T: Real>(x1: T) -> T {
    T::of(0.1) + T::of(0.3) * x1.sqrt()
}

fn penalty<T: Real>(y: T) -> T {
    let four = T::of(4.0);
    let two = T::of(2.0);
    four * y * y - two * (T::of(20.0) * T::PI() * y / T::SQRT_2()).cos() + two
}

impl<T: Real> Suf3<T> {
    /// The two subset curves at `x1`, lower branch first.
    pub fn branches(x1: T) -> (T, T) {
        let mid = T::of(1.5);
        (mid - offset(x1), mid + offset(x1))
    }
}

impl<T: Real> Problem<T> for Suf3<T> {
    fn descriptor(&self) -> &ProblemDescriptor<T> {
        &self.desc
    }

    fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        self.desc.check_domain(x)?;
        let y = (x[1] - T::of(1.5)).abs() - offset(x[0]);
        let f1 = x[0];
        let f2 = T::one() - x[0].sqrt() + T::of(2.0) * penalty(y);
        Ok(vec![f1, f2])
    }

    fn sample_pareto_set(&self, n: usize, rng: &mut RandomStream) -> Result<Vec<Vec<T>>> {
        // Parameterised by u = sqrt(x1) so the tangent stays finite at x1 = 0.
        let table = ArcLengthTable::new(|u| (u * u, 0.3 * u));
        let counts = split_counts(n, &[1.0, 1.0]);
        let mut out = Vec::with_capacity(n);
        for (branch, &count) in counts.iter().enumerate() {
            for _ in 0..count {
                let u = T::of(table.sample(rng));
                let x1 = u * u;
                let (lower, upper) = Self::branches(x1);
                out.push(vec![x1, if branch == 0 { lower } else { upper }]);
            }
        }
        Ok(out)
    }

    fn equivalence_witness(&self) -> Option<(Vec<T>, Vec<T>)> {
        let x1 = T::of(0.25);
        let (lower, upper) = Self::branches(x1);
        Some((vec![x1, lower], vec![x1, upper]))
    }
}
