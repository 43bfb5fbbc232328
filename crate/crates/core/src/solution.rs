use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::problem::Problem;
use crate::real::Real;

/// A decision vector together with its objective vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct Solution<T> {
    pub x: Vec<T>,
    pub f: Vec<T>,
}

impl<T: Real> Solution<T> {
    /// Evaluates `x` on `problem`. This is the only place evaluation happens.
    pub fn evaluate<P: Problem<T> + ?Sized>(problem: &P, x: Vec<T>) -> Result<Self> {
        let f = problem.evaluate(&x)?;
        Ok(Self { x, f })
    }

    /// Pairs an already evaluated point, e.g. one read back from an archive file.
    pub fn from_parts(x: Vec<T>, f: Vec<T>) -> Self {
        Self { x, f }
    }
}
