use crate::error::{Error, Result};
use crate::pareto::nondominated_indices;
use crate::real::Real;
use crate::rng::RandomStream;

/// Sample count of the Monte-Carlo estimate used for three or more objectives.
pub const HV_MONTE_CARLO_SAMPLES: usize = 1_000_000;

const HV_SEED: u64 = 0x4856_5F4D_435F_5345;

/// Reference point: componentwise maximum of the reference front plus 0.1.
pub fn hv_reference_point<T: Real, P: AsRef<[T]>>(front: &[P]) -> Result<Vec<T>> {
    let first = front
        .first()
        .ok_or_else(|| Error::Contract("hv reference point of an empty front".into()))?
        .as_ref();
    let mut r = first.to_vec();
    for p in front {
        for (ri, &v) in r.iter_mut().zip(p.as_ref()) {
            *ri = ri.max(v);
        }
    }
    Ok(r.into_iter().map(|v| v + T::of(0.1)).collect())
}

/// Hypervolume of `points` against `reference`.
///
/// Exact for two objectives; a fixed-seed Monte-Carlo estimate with
/// [`HV_MONTE_CARLO_SAMPLES`] samples otherwise. Points not strictly better
/// than the reference in every objective contribute nothing.
pub fn hypervolume<T: Real, P: AsRef<[T]>>(points: &[P], reference: &[T]) -> Result<T> {
    if reference.len() == 2 {
        hypervolume_2d(points, reference)
    } else {
        hypervolume_monte_carlo(points, reference, HV_MONTE_CARLO_SAMPLES, HV_SEED)
    }
}

fn clipped<T: Real, P: AsRef<[T]>>(points: &[P], reference: &[T]) -> Result<Vec<Vec<T>>> {
    let mut kept = Vec::new();
    for p in points {
        let p = p.as_ref();
        if p.len() != reference.len() {
            return Err(Error::Contract("hypervolume: point and reference lengths differ".into()));
        }
        if p.iter().zip(reference).all(|(&v, &r)| v < r) {
            kept.push(p.to_vec());
        }
    }
    let front = nondominated_indices(kept.iter().map(|p| p.as_slice()));
    Ok(front.into_iter().map(|i| kept[i].clone()).collect())
}

fn hypervolume_2d<T: Real, P: AsRef<[T]>>(points: &[P], reference: &[T]) -> Result<T> {
    let mut front = clipped(points, reference)?;
    front.sort_by(|a, b| a[0].partial_cmp(&b[0]).unwrap().then(a[1].partial_cmp(&b[1]).unwrap()));
    let mut volume = T::zero();
    let mut ceiling = reference[1];
    for p in &front {
        if p[1] < ceiling {
            volume = volume + (reference[0] - p[0]) * (ceiling - p[1]);
            ceiling = p[1];
        }
    }
    Ok(volume)
}

/// Monte-Carlo hypervolume over the box spanned by the points' minimum and `reference`.
pub fn hypervolume_monte_carlo<T: Real, P: AsRef<[T]>>(
    points: &[P],
    reference: &[T],
    samples: usize,
    seed: u64,
) -> Result<T> {
    let front = clipped(points, reference)?;
    if front.is_empty() {
        return Ok(T::zero());
    }
    let m = reference.len();
    let lower: Vec<f64> = (0..m)
        .map(|j| front.iter().map(|p| p[j].as_f64()).fold(f64::INFINITY, f64::min))
        .collect();
    let upper: Vec<f64> = reference.iter().map(|r| r.as_f64()).collect();
    let front64: Vec<Vec<f64>> = front.iter().map(|p| p.iter().map(|v| v.as_f64()).collect()).collect();
    let box_volume: f64 = lower.iter().zip(&upper).map(|(l, u)| u - l).product();

    let mut rng = RandomStream::derive(seed, "hypervolume");
    let mut sample = vec![0.0; m];
    let mut hits = 0usize;
    for _ in 0..samples {
        for j in 0..m {
            sample[j] = lower[j] + (upper[j] - lower[j]) * rng.unit_f64();
        }
        if front64.iter().any(|p| p.iter().zip(&sample).all(|(a, s)| a <= s)) {
            hits += 1;
        }
    }
    Ok(T::of(box_volume * hits as f64 / samples as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_dimensional_examples() {
        let a = vec![vec![1.0, 2.0], vec![2.0, 1.0]];
        assert_eq!(hypervolume(&a, &[3.0, 3.0]).unwrap(), 3.0);
        assert_eq!(hypervolume(&[vec![3.0, 3.0]], &[3.0, 3.0]).unwrap(), 0.0);
        let mut b = a.clone();
        b.push(vec![2.5, 2.5]);
        assert_eq!(hypervolume(&b, &[3.0, 3.0]).unwrap(), 3.0);
    }

    #[test]
    fn three_dimensional_unit_cube() {
        let hv = hypervolume(&[vec![0.0, 0.0, 0.0]], &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(hv, 1.0);
        let hv: f64 = hypervolume(&[vec![0.0, 0.0, 0.5], vec![0.5, 0.5, 0.0]], &[1.0, 1.0, 1.0]).unwrap();
        // 0.5 + 0.25 - 0.125 overlap = 0.625 exactly; estimate within 5 sigma.
        assert!((hv - 0.625).abs() < 5.0 * (0.625f64 * 0.375 / 1e6).sqrt());
    }

    #[test]
    fn reference_point_adds_margin() {
        let r = hv_reference_point(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(r, vec![1.1, 1.1]);
    }
}
