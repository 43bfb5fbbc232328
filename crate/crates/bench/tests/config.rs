use mmbench::config::{AlgorithmKind, ProblemSpec, DEFAULT_MU};
use mmbench::{AlgorithmSpec, ExperimentConfig, ScalarizerKind};

const EXAMPLE: &str = r#"
problems = ["suf3", { name = "multipolygon", dimension = 4 }]
runs = 5
base_seed = 100
output_dir = "out"
mu_sweep = [2, 6]
baseline = "moeadmm-tch"

[[algorithms]]
name = "moeadmm"
scalarizer = "tch"

[[algorithms]]
name = "moead"
scalarizer = "pbi"
theta = 3.0
"#;

#[test]
fn parses_with_defaults() {
    let c = ExperimentConfig::from_toml(EXAMPLE).unwrap();
    c.validate().unwrap();
    assert_eq!(c.population, 300);
    assert_eq!(c.budget, 100_000);
    assert_eq!(c.reference.size, 10_000);
    assert_eq!(c.seed_of(3), 103);
    let ids: Vec<String> = c.resolved_problems().unwrap().iter().map(|p| p.id()).collect();
    assert_eq!(ids, vec!["suf3", "multipolygon-d4"]);
    let algs: Vec<String> = c.expanded_algorithms().iter().map(AlgorithmSpec::id).collect();
    assert_eq!(algs, vec!["moeadmm-tch", "moead-pbi-theta3", "moeadmm-tch-mu2", "moeadmm-tch-mu6"]);
    assert_eq!(ExperimentConfig::from_toml(&c.to_toml()).unwrap(), c);
}

#[test]
fn ids_round_trip() {
    for id in ["moeadmm-tch", "moeadmm-pbi-mu6", "moead-tch", "moeadad-pbi"] {
        assert_eq!(id.parse::<AlgorithmSpec>().unwrap().id(), id);
    }
    assert_eq!("moeadmm-tch".parse::<AlgorithmSpec>().unwrap().mu(), DEFAULT_MU);
    for bad in ["nsga2-tch", "moead-tch-mu3", "moeadmm-xyz", "moeadmm-tch-6"] {
        assert!(bad.parse::<AlgorithmSpec>().is_err(), "{bad}");
    }
}

#[test]
fn invalid_configs_are_rejected() {
    let base = || {
        ExperimentConfig::new(
            vec![ProblemSpec::Id("sympart".into())],
            vec![AlgorithmSpec::new(AlgorithmKind::Moeadmm, ScalarizerKind::Tch)],
        )
    };
    let mut c = base();
    c.problems.push(ProblemSpec::Id("zdt9".into()));
    assert!(c.validate().is_err());
    let mut c = base();
    c.runs = 0;
    assert!(c.validate().is_err());
    let mut c = base();
    c.algorithms[0].mu = Some(200);
    assert!(c.validate().is_err());
    let mut c = base();
    c.baseline = Some("moead-tch".into());
    assert!(c.validate().is_err());
    assert!(ExperimentConfig::from_toml("problems = []\nalgorithms = []\nbogus = 1").is_err());
}
