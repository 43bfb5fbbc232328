use crate::error::{Error, Result};
use crate::problem::{Problem, ProblemDescriptor};
use crate::real::Real;
use crate::rng::RandomStream;

use super::split_counts;

/// Layout of the multi-polygon problem.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPolygonParams<T> {
    pub centers: Vec<[T; 2]>,
    pub radius: T,
    /// Vertices per polygon, which is also the objective count.
    pub vertices: usize,
    /// Decision dimension; even, each coordinate pair repeats the 2-D layout.
    pub dimension: usize,
}

impl<T: Real> MultiPolygonParams<T> {
    /// Four unit-radius hexagons centred at (0,0), (0,5), (5,0), (5,5).
    pub fn four_hexagons(dimension: usize) -> Self {
        let c = |a: f64, b: f64| [T::of(a), T::of(b)];
        Self {
            centers: vec![c(0.0, 0.0), c(0.0, 5.0), c(5.0, 0.0), c(5.0, 5.0)],
            radius: T::one(),
            vertices: 6,
            dimension,
        }
    }
}

/// Distance-to-vertices problem whose Pareto set is the union of regular polygons.
///
/// Objective `i` is the distance from `x` to the nearest `i`-th vertex over all
/// polygons. Vertex `i` (1-based) of polygon `k` sits at angle `2 pi i / M`
/// around its center. In `D > 2` each 2-D vertex is replicated across all
/// coordinate pairs, so every subset embeds as a copy of the planar polygon.
#[derive(Debug, Clone)]
pub struct MultiPolygon<T> {
    params: MultiPolygonParams<T>,
    /// `vertex_table[k][i]` is vertex `i` of polygon `k` in the plane.
    vertex_table: Vec<Vec<[T; 2]>>,
    desc: ProblemDescriptor<T>,
}

impl<T: Real> MultiPolygon<T> {
    pub fn new(params: MultiPolygonParams<T>) -> Result<Self> {
        if params.dimension < 2 || params.dimension % 2 != 0 {
            return Err(Error::Config(format!(
                "multi-polygon needs an even dimension >= 2, got {}",
                params.dimension
            )));
        }
        if params.vertices < 3 || params.centers.is_empty() || !(params.radius > T::zero()) {
            return Err(Error::Config("multi-polygon needs >= 3 vertices, a center and a positive radius".into()));
        }
        let m = params.vertices;
        let vertex_table = params
            .centers
            .iter()
            .map(|c| {
                (1..=m)
                    .map(|i| {
                        let angle = T::of(2.0) * T::PI() * T::of_usize(i) / T::of_usize(m);
                        [c[0] + params.radius * angle.cos(), c[1] + params.radius * angle.sin()]
                    })
                    .collect()
            })
            .collect();
        let bounds = vec![(T::of(-100.0), T::of(100.0)); params.dimension];
        let name = format!("multipolygon-d{}", params.dimension);
        let desc = ProblemDescriptor::new(name, m, bounds, params.centers.len())?;
        Ok(Self { params, vertex_table, desc })
    }

    /// The four-hexagon instance in `dimension` decision variables.
    pub fn hexagons(dimension: usize) -> Result<Self> {
        Self::new(MultiPolygonParams::four_hexagons(dimension))
    }

    pub fn params(&self) -> &MultiPolygonParams<T> {
        &self.params
    }

    pub fn vertex(&self, polygon: usize, index: usize) -> [T; 2] {
        self.vertex_table[polygon][index]
    }

    /// Replicates a planar point across every coordinate pair.
    pub fn embed(&self, p: [T; 2]) -> Vec<T> {
        (0..self.params.dimension).map(|j| p[j % 2]).collect()
    }

    /// True when the planar point `p` lies inside (or on) polygon `k`.
    pub fn contains_planar(&self, k: usize, p: [T; 2]) -> bool {
        let verts = &self.vertex_table[k];
        let tol = T::of(1e-12) * self.params.radius;
        (0..verts.len()).all(|i| {
            let a = verts[i];
            let b = verts[(i + 1) % verts.len()];
            // Vertices run counter-clockwise, so inside points are on the left of every edge.
            let cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
            cross >= -tol
        })
    }

    /// Index of the polygon containing the embedded point `x`, if any.
    ///
    /// Requires `x` to lie on the replicated plane (all pairs equal).
    pub fn containing_polygon(&self, x: &[T]) -> Option<usize> {
        let p = [x[0], x[1]];
        let on_plane = x.chunks(2).all(|pair| pair[0] == p[0] && pair[1] == p[1]);
        if !on_plane {
            return None;
        }
        (0..self.vertex_table.len()).find(|&k| self.contains_planar(k, p))
    }
}

impl<T: Real> Problem<T> for MultiPolygon<T> {
    fn descriptor(&self) -> &ProblemDescriptor<T> {
        &self.desc
    }

    fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        self.desc.check_domain(x)?;
        let m = self.params.vertices;
        let mut f = vec![T::infinity(); m];
        for verts in &self.vertex_table {
            for (fi, v) in f.iter_mut().zip(verts) {
                let sq = x.chunks(2).fold(T::zero(), |acc, pair| {
                    let d0 = pair[0] - v[0];
                    let d1 = pair[1] - v[1];
                    acc + d0 * d0 + d1 * d1
                });
                *fi = fi.min(sq.sqrt());
            }
        }
        Ok(f)
    }

    fn sample_pareto_set(&self, n: usize, rng: &mut RandomStream) -> Result<Vec<Vec<T>>> {
        let polygons = self.vertex_table.len();
        let counts = split_counts(n, &vec![1.0; polygons]);
        let r = self.params.radius;
        let mut out = Vec::with_capacity(n);
        for (k, &count) in counts.iter().enumerate() {
            let c = self.params.centers[k];
            let mut drawn = 0;
            while drawn < count {
                let p = [c[0] + rng.uniform(-r, r), c[1] + rng.uniform(-r, r)];
                if self.contains_planar(k, p) {
                    out.push(self.embed(p));
                    drawn += 1;
                }
            }
        }
        Ok(out)
    }

    fn equivalence_witness(&self) -> Option<(Vec<T>, Vec<T>)> {
        let a = self.params.centers[0];
        let b = *self.params.centers.iter().find(|c| **c != a)?;
        Some((self.embed(a), self.embed(b)))
    }
}
