use moead_mm::baselines::{ad_acceptance, moead_run, MoeadAdState, MoeadState};
use moead_mm::problems::{MultiPolygon, SymPart};
use moead_mm::{MoeadAdConfig64, MoeadConfig64, Scalarizer, Solution64, VariationParams};

#[test]
fn moead_population_size_is_constant() {
    let problem = SymPart::<f64>::default();
    let mut state = MoeadState::initialize(MoeadConfig64::new(50, Scalarizer::Tchebycheff, 5_000, 1), &problem).unwrap();
    assert!(state.neighborhoods.iter().all(|b| b.len() == 20 && b.contains(&b[0])));
    while !state.is_finished() {
        state.step_generation(&problem).unwrap();
        assert_eq!(state.population.len(), 50);
    }
    assert_eq!(state.evaluations_used, 5_000);
}

/// The ideal point moves, so the incumbent's raw value may rise between
/// generations; what must hold is that the new incumbent is never worse than
/// the old one under the ideal point in force after the step.
#[test]
fn single_weight_moead_is_a_monotone_hill_climb() {
    let problem = MultiPolygon::<f64>::hexagons(2).unwrap();
    let mut state = MoeadState::initialize(MoeadConfig64::new(1, Scalarizer::Tchebycheff, 2_000, 5), &problem).unwrap();
    assert_eq!(state.neighborhoods, vec![vec![0]]);
    let g = Scalarizer::Tchebycheff;
    let mut replaced = 0;
    while !state.is_finished() {
        let old = state.population[0].clone();
        state.step_generation(&problem).unwrap();
        let w = state.weights[0].as_slice();
        let z = state.ideal.as_slice();
        assert!(state.incumbent_value(0) <= g.evaluate(w, &old.f, z), "generation {}", state.generation);
        replaced += (state.population[0] != old) as usize;
    }
    assert!(replaced > 10);
}

#[test]
fn moead_runs_are_deterministic() {
    let problem = SymPart::<f64>::default();
    let run = |seed| moead_run(MoeadConfig64::new(60, Scalarizer::pbi_default(), 6_000, seed), &problem).unwrap();
    assert_eq!(run(17), run(17));
}

#[test]
fn acceptance_rule_hand_cases() {
    let far = ad_acceptance(5.0, &[]);
    assert!(far.accepted && far.removed.is_empty());
    let worse = ad_acceptance(0.9, &[(0, 0.1), (2, 0.5)]);
    assert!(!worse.accepted && worse.removed.is_empty());
    let tie = ad_acceptance(0.5, &[(4, 0.5)]);
    assert!(!tie.accepted);
    let some = ad_acceptance(0.3, &[(1, 0.1), (3, 0.4), (7, 0.8)]);
    assert!(some.accepted);
    assert_eq!(some.removed, vec![3, 7]);
}

#[test]
fn offspring_no_better_than_its_niche_is_rejected() {
    // Three members, each assigned to its own closest weight. With identity
    // variation every offspring duplicates a member, so it lands in that
    // member's niche with an equal value and must be turned away.
    let problem = MultiPolygon::<f64>::hexagons(2).unwrap();
    let mut config = MoeadAdConfig64::new(3, Scalarizer::Tchebycheff, 200, 2);
    config.variation = VariationParams::identity();
    let mut state = MoeadAdState::initialize(config, &problem).unwrap();
    state.population = vec![
        Solution64::evaluate(&problem, vec![0.0, 1.0]).unwrap(),
        Solution64::evaluate(&problem, vec![1.5, 1.5]).unwrap(),
        Solution64::evaluate(&problem, vec![-0.8, 0.2]).unwrap(),
    ];
    state.ideal = moead_mm::IdealPoint::from_points(state.population.iter().map(|s| s.f.as_slice())).unwrap();
    state.assignment = state.population.iter().map(|s| state.closest_weight(&s.f)).collect();
    let before = state.population.clone();
    while !state.is_finished() {
        let step = state.step(&problem).unwrap();
        assert_eq!(step.neighbors.len(), 1);
        assert!(!step.decision.accepted, "{step:?}");
        assert_eq!(state.population, before);
    }
}

fn oracle_angle_weight(weights: &[Vec<f64>], f: &[f64], z: &[f64]) -> usize {
    let u: Vec<f64> = f.iter().zip(z).map(|(a, b)| a - b).collect();
    let nu = u.iter().map(|v| v * v).sum::<f64>().sqrt();
    if nu == 0.0 {
        return 0;
    }
    let mut best = (0, f64::NEG_INFINITY);
    for (i, w) in weights.iter().enumerate() {
        let nw = w.iter().map(|v| v * v).sum::<f64>().sqrt();
        let c = w.iter().zip(&u).map(|(a, b)| a * b).sum::<f64>() / (nw * nu);
        if c > best.1 {
            best = (i, c);
        }
    }
    best.0
}

fn sorted(mut pop: Vec<Solution64>) -> Vec<Solution64> {
    pop.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap());
    pop
}

/// Replays every logged decision of a seeded run against a rule oracle
/// that only sees the pre-step population, the offspring and the ideal point.
#[test]
fn logged_decisions_match_an_independent_rule_oracle() {
    for (problem, scalarizer) in [
        (Box::new(SymPart::<f64>::default()) as Box<dyn moead_mm::Problem<f64>>, Scalarizer::Tchebycheff),
        (Box::new(MultiPolygon::<f64>::hexagons(4).unwrap()), Scalarizer::pbi_default()),
    ] {
        let config = MoeadAdConfig64::new(40, scalarizer, 3_000, 21);
        let mut state = MoeadAdState::initialize(config, &problem).unwrap();
        let weights: Vec<Vec<f64>> = state.weights.iter().map(|w| w.as_slice().to_vec()).collect();
        let (mut accepted, mut rejected) = (0, 0);
        while !state.is_finished() {
            let pre = state.clone();
            let step = state.step(&problem).unwrap();
            let y = &step.offspring;

            let z: Vec<f64> = pre.ideal.as_slice().iter().zip(&y.f).map(|(a, b)| a.min(*b)).collect();
            let k = oracle_angle_weight(&weights, &y.f, &z);
            assert_eq!(step.weight, k);

            let n = pre.population.len();
            let l = (n / 10).max(1);
            let mut order: Vec<usize> = (0..n).collect();
            let d2 = |j: usize| pre.population[j].x.iter().zip(&y.x).map(|(a, b)| (a - b) * (a - b)).sum::<f64>();
            order.sort_by(|&a, &b| d2(a).partial_cmp(&d2(b)).unwrap().then(a.cmp(&b)));
            let mut q: Vec<usize> = order[..l].to_vec();
            q.sort_unstable();
            assert_eq!(step.neighbors, q);

            let gy = scalarizer.evaluate(&weights[k], &y.f, &z);
            let rivals: Vec<usize> = q.iter().copied().filter(|&j| pre.assignment[j] == k).collect();
            let beaten: Vec<usize> = rivals
                .iter()
                .copied()
                .filter(|&j| scalarizer.evaluate(&weights[k], &pre.population[j].f, &z) > gy)
                .collect();
            let accept = rivals.is_empty() || !beaten.is_empty();
            assert_eq!(step.decision.accepted, accept);

            let mut expected: Vec<Solution64> = pre.population.clone();
            if accept {
                expected = expected.into_iter().enumerate().filter(|(j, _)| !beaten.contains(j)).map(|(_, s)| s).collect();
                expected.push(y.clone());
                accepted += 1;
                assert_eq!(state.population.len(), n + 1 - beaten.len());
            } else {
                rejected += 1;
                assert_eq!(state.population.len(), n);
            }
            assert_eq!(sorted(state.population.clone()), sorted(expected));
            assert_eq!(state.population.len(), state.assignment.len());
        }
        assert!(accepted > 0 && rejected > 0);
    }
}
