use crate::error::{Error, Result};
use crate::problem::{Problem, ProblemDescriptor};
use crate::real::Real;
use crate::rng::RandomStream;

use super::split_counts;

/// Geometry of the rotation-free SYM-PART problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymPartParams<T> {
    /// Half-length of each Pareto segment.
    pub a: T,
    /// Vertical spacing between segment centers.
    pub b: T,
    /// Horizontal gap between neighbouring segments.
    pub c: T,
}

impl<T: Real> Default for SymPartParams<T> {
    fn default() -> Self {
        Self {
            a: T::of(2.0),
            b: T::of(10.0),
            c: T::of(10.0),
        }
    }
}

/// SYM-PART: nine equivalent line-segment Pareto subsets on a 3x3 tile grid.
///
/// A point is shifted into the central tile, then scored against the two
/// anchors `(-a, 0)` and `(a, 0)`.
#[derive(Debug, Clone)]
pub struct SymPart<T> {
    params: SymPartParams<T>,
    desc: ProblemDescriptor<T>,
}

impl<T: Real> SymPart<T> {
    pub fn new(params: SymPartParams<T>) -> Result<Self> {
        if !(params.a > T::zero() && params.b > T::zero() && params.c > T::zero()) {
            return Err(Error::Config("SYM-PART parameters must be positive".into()));
        }
        let bound = (T::of(-100.0), T::of(100.0));
        let desc = ProblemDescriptor::new("sympart", 2, vec![bound; 2], 9)?;
        Ok(Self { params, desc })
    }

    pub fn params(&self) -> &SymPartParams<T> {
        &self.params
    }

    fn horizontal_period(&self) -> T {
        self.params.c + self.params.a + self.params.a
    }

    /// Tile indices `(t1, t2)` in `{-1, 0, 1}`.
    pub fn tile_of(&self, x: &[T]) -> (T, T) {
        let one = T::one();
        let t1 = (x[0] / self.horizontal_period()).round().max(-one).min(one);
        let t2 = (x[1] / self.params.b).round().max(-one).min(one);
        (t1, t2)
    }
}

impl<T: Real> Default for SymPart<T> {
    fn default() -> Self {
        Self::new(SymPartParams::default()).expect("default SYM-PART parameters are valid")
    }
}

impl<T: Real> Problem<T> for SymPart<T> {
    fn descriptor(&self) -> &ProblemDescriptor<T> {
        &self.desc
    }

    fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        self.desc.check_domain(x)?;
        let (t1, t2) = self.tile_of(x);
        let p1 = x[0] - t1 * self.horizontal_period();
        let p2 = x[1] - t2 * self.params.b;
        let a = self.params.a;
        let f1 = (p1 + a) * (p1 + a) + p2 * p2;
        let f2 = (p1 - a) * (p1 - a) + p2 * p2;
        Ok(vec![f1, f2])
    }

    fn sample_pareto_set(&self, n: usize, rng: &mut RandomStream) -> Result<Vec<Vec<T>>> {
        let counts = split_counts(n, &[1.0; 9]);
        let mut out = Vec::with_capacity(n);
        let a = self.params.a;
        let mut k = 0;
        for t2 in [-1.0, 0.0, 1.0] {
            for t1 in [-1.0, 0.0, 1.0] {
                let cx = T::of(t1) * self.horizontal_period();
                let cy = T::of(t2) * self.params.b;
                for _ in 0..counts[k] {
                    let p1 = rng.uniform(-a, a);
                    out.push(vec![cx + p1, cy]);
                }
                k += 1;
            }
        }
        Ok(out)
    }

    fn equivalence_witness(&self) -> Option<(Vec<T>, Vec<T>)> {
        let x1 = vec![T::of(0.5), T::zero()];
        let x2 = vec![T::of(0.5) + self.horizontal_period(), self.params.b];
        Some((x1, x2))
    }
}
