use crate::error::Result;
use crate::problem::{Problem, ProblemDescriptor};
use crate::real::Real;
use crate::rng::RandomStream;

use super::{split_counts, ArcLengthTable};

/// SSUF1: two mirrored sine-shaped Pareto subsets on either side of `x1 = 2`.
///
/// `f1 = |x1 - 2|`, `f2 = 1 - sqrt(f1) + 2 (x2 - sin(6 pi f1 + pi))^2`.
#[derive(Debug, Clone)]
pub struct Ssuf1<T> {
    desc: ProblemDescriptor<T>,
}

impl<T: Real> Default for Ssuf1<T> {
    fn default() -> Self {
        let bounds = vec![(T::one(), T::of(3.0)), (-T::one(), T::one())];
        let desc = ProblemDescriptor::new("ssuf1", 2, bounds, 2).expect("static SSUF1 descriptor");
        Self { desc }
    }
}

fn branch_height<T: Real>(t: T) -> T {
    (T::of(6.0) * T::PI() * t + T::PI()).sin()
}

impl<T: Real> Problem<T> for Ssuf1<T> {
    fn descriptor(&self) -> &ProblemDescriptor<T> {
        &self.desc
    }

    fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        self.desc.check_domain(x)?;
        let f1 = (x[0] - T::of(2.0)).abs();
        let gap = x[1] - branch_height(f1);
        let f2 = T::one() - f1.sqrt() + T::of(2.0) * gap * gap;
        Ok(vec![f1, f2])
    }

    fn sample_pareto_set(&self, n: usize, rng: &mut RandomStream) -> Result<Vec<Vec<T>>> {
        let table = ArcLengthTable::new(|t| (t, (6.0 * std::f64::consts::PI * t + std::f64::consts::PI).sin()));
        let counts = split_counts(n, &[1.0, 1.0]);
        let mut out = Vec::with_capacity(n);
        for (branch, &count) in counts.iter().enumerate() {
            let sign = if branch == 0 { -T::one() } else { T::one() };
            for _ in 0..count {
                let t = T::of(table.sample(rng));
                out.push(vec![T::of(2.0) + sign * t, branch_height(t)]);
            }
        }
        Ok(out)
    }

    fn equivalence_witness(&self) -> Option<(Vec<T>, Vec<T>)> {
        Some((vec![T::of(1.75), T::one()], vec![T::of(2.25), T::one()]))
    }
}
