use moead_mm::indicators::{dplus, hv_reference_point, hypervolume, hypervolume_monte_carlo, igd_plus, igdx};
use moead_mm::RandomStream;

fn random_set(rng: &mut RandomStream, n: usize, dim: usize) -> Vec<Vec<f64>> {
    (0..n).map(|_| (0..dim).map(|_| rng.uniform(-3.0, 3.0)).collect()).collect()
}

// Written without reference to the library code: plain double loops.
fn brute_igd_plus(a: &[Vec<f64>], p: &[Vec<f64>]) -> f64 {
    let mut sum = 0.0;
    for z in p {
        let mut best = f64::INFINITY;
        for x in a {
            let mut s = 0.0;
            for k in 0..z.len() {
                let d = if x[k] > z[k] { x[k] - z[k] } else { 0.0 };
                s += d * d;
            }
            let d = s.sqrt();
            if d < best {
                best = d;
            }
        }
        sum += best;
    }
    sum / p.len() as f64
}

fn brute_igdx(a: &[Vec<f64>], s: &[Vec<f64>]) -> f64 {
    let mut sum = 0.0;
    for x in s {
        let mut best = f64::INFINITY;
        for y in a {
            let mut q = 0.0;
            for k in 0..x.len() {
                q += (x[k] - y[k]) * (x[k] - y[k]);
            }
            let d = q.sqrt();
            if d < best {
                best = d;
            }
        }
        sum += best;
    }
    sum / s.len() as f64
}

#[test]
fn indicators_match_a_brute_force_oracle_bit_for_bit() {
    let mut rng = RandomStream::new(77);
    for _ in 0..200 {
        let dim = 2 + rng.index(5);
        let (na, ns) = (1 + rng.index(50), 1 + rng.index(50));
        let a = random_set(&mut rng, na, dim);
        let s = random_set(&mut rng, ns, dim);
        assert_eq!(igd_plus(&a, &s).unwrap().to_bits(), brute_igd_plus(&a, &s).to_bits());
        assert_eq!(igdx(&a, &s).unwrap().to_bits(), brute_igdx(&a, &s).to_bits());
    }
}

#[test]
fn hand_cases() {
    let p = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
    assert_eq!(igd_plus(&[vec![1.0, 1.0]], &p).unwrap(), 1.0);
    assert_eq!(igd_plus(&[vec![-1.0, -1.0]], &[vec![0.0, 0.0]]).unwrap(), 0.0);
    assert_eq!(igd_plus(&p, &p).unwrap(), 0.0);
    let s = vec![vec![0.0, 0.0], vec![2.0, 0.0]];
    assert_eq!(igdx(&[vec![1.0, 0.0]], &s).unwrap(), 1.0);
    assert_eq!(igdx(&s, &s).unwrap(), 0.0);
    let empty: Vec<Vec<f64>> = Vec::new();
    assert!(igd_plus(&empty, &p).is_err());
    assert!(igdx(&s, &empty).is_err());
}

#[test]
fn dplus_is_zero_when_dominating_and_euclidean_when_dominated() {
    let mut rng = RandomStream::new(3);
    for _ in 0..1_000 {
        let z: Vec<f64> = (0..3).map(|_| rng.unit_f64()).collect();
        let below: Vec<f64> = z.iter().map(|v| v - rng.unit_f64()).collect();
        let above: Vec<f64> = z.iter().map(|v| v + rng.unit_f64()).collect();
        assert_eq!(dplus(&z, &below), 0.0);
        let e = z.iter().zip(&above).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
        assert!((dplus(&z, &above) - e).abs() <= 1e-15);
    }
}

#[test]
fn adding_points_never_worsens_either_indicator() {
    let mut rng = RandomStream::new(8);
    for _ in 0..200 {
        let p = random_set(&mut rng, 30, 2);
        let mut a = random_set(&mut rng, 5, 2);
        let (g0, x0) = (igd_plus(&a, &p).unwrap(), igdx(&a, &p).unwrap());
        a.extend(random_set(&mut rng, 3, 2));
        assert!(igd_plus(&a, &p).unwrap() <= g0);
        assert!(igdx(&a, &p).unwrap() <= x0);
    }
}

#[test]
fn igd_plus_is_weakly_pareto_compliant_on_matched_pairs() {
    let mut rng = RandomStream::new(12);
    for _ in 0..500 {
        let p = random_set(&mut rng, 25, 3);
        let worse = random_set(&mut rng, 8, 3);
        let better: Vec<Vec<f64>> = worse.iter().map(|w| w.iter().map(|v| v - 0.5 * rng.unit_f64()).collect()).collect();
        assert!(igd_plus(&better, &p).unwrap() <= igd_plus(&worse, &p).unwrap());
    }
}

#[test]
fn exact_two_dimensional_hv_agrees_with_a_large_monte_carlo_estimate() {
    let mut rng = RandomStream::new(99);
    for trial in 0..3 {
        let pts: Vec<Vec<f64>> = (0..15).map(|_| vec![rng.unit_f64(), rng.unit_f64()]).collect();
        let reference = hv_reference_point(&pts).unwrap();
        let exact: f64 = hypervolume(&pts, &reference).unwrap();
        let samples = 10_000_000;
        let estimate: f64 = hypervolume_monte_carlo(&pts, &reference, samples, trial).unwrap();
        // The estimator samples the box between the front minimum and the reference.
        let lower: Vec<f64> = (0..2).map(|j| pts.iter().map(|p| p[j]).fold(f64::INFINITY, f64::min)).collect();
        let area = (reference[0] - lower[0]) * (reference[1] - lower[1]);
        let q = exact / area;
        let se = area * (q * (1.0 - q) / samples as f64).sqrt();
        assert!((estimate - exact).abs() <= 3.0 * se, "trial {trial}: {estimate} vs {exact} (se {se})");
    }
}

#[test]
fn hypervolume_examples() {
    let a = vec![vec![1.0, 2.0], vec![2.0, 1.0]];
    assert_eq!(hypervolume(&a, &[3.0, 3.0]).unwrap(), 3.0);
    assert_eq!(hypervolume(&[vec![3.0, 3.0]], &[3.0, 3.0]).unwrap(), 0.0);
    let mut b = a.clone();
    b.push(vec![2.5, 2.5]);
    assert_eq!(hypervolume(&b, &[3.0, 3.0]).unwrap(), 3.0);
    assert_eq!(hv_reference_point(&a).unwrap(), vec![2.1, 2.1]);
}
