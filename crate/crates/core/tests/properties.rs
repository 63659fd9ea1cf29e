use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use zigzag::graph::{count_fillings, covers, estimate_kernel, predecessors, FillingSampler};
use zigzag::harness::{emit, run_experiment, ExperimentConfig, Format, SequenceSpec};
use zigzag::paintbox::{
    composition_paintbox, paintbox_distance, run_paintbox, IntervalSystem, XiSampler,
};
use zigzag::rational::ratio;
use zigzag::rng::seeded;
use zigzag::rsk::{inverse_rsk, rsk, tableau_descents};
use zigzag::walk::{descent_walk, eulerian_row, limit_profile, profile_distance};
use zigzag::{Composition, Permutation};

fn composition(max: usize) -> impl Strategy<Value = Composition> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n - 1).prop_map(move |bits| {
            let des: Vec<usize> = (1..n).filter(|&i| bits[i - 1]).collect();
            Composition::from_descents(&des, n).unwrap()
        })
    })
}

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|w| Permutation::new(w).unwrap())
    })
}

fn system() -> impl Strategy<Value = IntervalSystem> {
    (composition(40), any::<bool>()).prop_filter_map("size >= 2", |(c, runs)| {
        if c.size() < 2 {
            return None;
        }
        Some(if runs {
            run_paintbox(&c).unwrap()
        } else {
            composition_paintbox(&c).unwrap()
        })
    })
}

fn complement(c: &Composition) -> Composition {
    let n = c.size();
    let des: Vec<usize> = (1..n).filter(|&i| !c.is_descent(i)).collect();
    Composition::from_descents(&des, n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn paintbox_distance_is_a_metric(u in system(), v in system(), w in system()) {
        prop_assert!(paintbox_distance(&u, &u).is_zero());
        let uv = paintbox_distance(&u, &v);
        prop_assert_eq!(&uv, &paintbox_distance(&v, &u));
        prop_assert!(uv <= paintbox_distance(&u, &w) + paintbox_distance(&w, &v));
        prop_assert!(uv <= ratio(1, 1));
    }

    #[test]
    fn covers_and_predecessors_agree(mu in composition(10)) {
        for nu in covers(&mu) {
            prop_assert_eq!(nu.size(), mu.size() + 1);
            prop_assert!(predecessors(&nu).contains(&mu));
        }
        for p in predecessors(&mu) {
            prop_assert!(covers(&p).contains(&mu));
        }
    }

    #[test]
    fn counting_symmetries(lambda in composition(40)) {
        let d = count_fillings(&lambda);
        prop_assert_eq!(&d, &count_fillings(&lambda.reversed()));
        prop_assert_eq!(&d, &count_fillings(&complement(&lambda)));
        let sum: BigUint = predecessors(&lambda).iter().map(count_fillings).sum();
        if lambda.size() > 1 {
            prop_assert_eq!(d, sum);
        }
    }

    #[test]
    fn sampled_fillings_have_the_descent_class(lambda in composition(60), seed in any::<u64>()) {
        let s = FillingSampler::new(&lambda);
        let mut rng = seeded(seed);
        for _ in 0..5 {
            prop_assert_eq!(&s.sample(&mut rng).descent_composition(), &lambda);
        }
    }

    #[test]
    fn rsk_is_a_bijection_carrying_descents(sigma in permutation(30)) {
        let (p, q) = rsk(&sigma);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(sigma.descents(), tableau_descents(&q));
        prop_assert_eq!(inverse_rsk(&p, &q).unwrap(), sigma);
    }

    #[test]
    fn walk_step_accounting(sigma in permutation(200)) {
        let f = descent_walk(&sigma);
        let n = sigma.len() as i64;
        prop_assert_eq!(f.values()[0], 0);
        prop_assert!(f.values().windows(2).all(|w| (w[1] - w[0]).abs() == 1));
        prop_assert_eq!(f.end(), n - 1 - 2 * sigma.descent_count() as i64);
    }

    #[test]
    fn profiles_are_lipschitz_and_start_at_zero(u in system()) {
        let f = limit_profile(&u);
        prop_assert!(f.eval(&ratio(0, 1)).is_zero());
        let pts = f.breakpoints();
        for w in pts.windows(2) {
            let rise = (f.eval(&w[1]) - f.eval(&w[0])).abs();
            prop_assert!(rise <= &w[1] - &w[0]);
        }
        prop_assert!(profile_distance(&f, &f).is_zero());
    }

    #[test]
    fn profile_distance_is_at_most_two(u in system(), v in system()) {
        // both profiles are 1-Lipschitz from 0, so they differ by at most 2
        let d: BigRational = profile_distance(&limit_profile(&u), &limit_profile(&v));
        prop_assert!(d >= BigRational::zero() && d <= ratio(2, 1));
    }

    #[test]
    fn xi_values_stay_in_their_boxes(lambda in composition(80), seed in any::<u64>()) {
        let s = XiSampler::new(&lambda).unwrap();
        let mut rng = seeded(seed);
        let k = lambda.size().min(4);
        let d = s.sample(k, &mut rng).unwrap();
        prop_assert!(d.xi.is_consistent());
        prop_assert_eq!(d.xi.len(), k);
    }

    #[test]
    fn sequence_specs_round_trip(spec in prop_oneof![
        Just("column".to_string()),
        Just("random".to_string()),
        proptest::collection::vec(1usize..5, 1..4)
            .prop_map(|b| format!("zigzag:{}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))),
        proptest::collection::vec(1usize..5, 1..4)
            .prop_map(|b| format!("padded:{}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))),
    ]) {
        let parsed: SequenceSpec = spec.parse().unwrap();
        prop_assert_eq!(parsed.to_string(), spec);
        let again: SequenceSpec = parsed.to_string().parse().unwrap();
        prop_assert_eq!(again, parsed);
    }
}

#[test]
fn eulerian_rows_are_symmetric_and_sum_to_factorial() {
    let mut fact = BigUint::from(1u32);
    for n in 1..=25usize {
        fact *= BigUint::from(n);
        let row = eulerian_row(n);
        assert_eq!(row.len(), n);
        let rev: Vec<_> = row.iter().rev().cloned().collect();
        assert_eq!(row, rev);
        assert_eq!(row.iter().sum::<BigUint>(), fact);
    }
}

#[test]
fn eulerian_row_matches_enumeration() {
    for n in 1..=7 {
        let mut tally: HashMap<usize, u64> = HashMap::new();
        for p in Permutation::all_of_size(n) {
            *tally.entry(p.descent_count()).or_default() += 1;
        }
        let row = eulerian_row(n);
        for (k, a) in row.iter().enumerate() {
            assert_eq!(*a, BigUint::from(tally.get(&k).copied().unwrap_or(0)));
        }
    }
}

#[test]
fn kernel_estimates_are_deterministic() {
    let lambda: Composition = "3,2,4,1".parse().unwrap();
    let mu: Composition = "2,1".parse().unwrap();
    let a = estimate_kernel(&mu, &lambda, 5000, 9).unwrap();
    let b = estimate_kernel(&mu, &lambda, 5000, 9).unwrap();
    assert_eq!(a, b);
    assert!(a.stderr > 0.0);
}

#[test]
fn emitted_files_are_byte_identical() {
    let cfg = ExperimentConfig::from_toml(
        r#"
        experiment = "boundary-convergence"
        sequence = "column"
        sizes = [5, 30]
        samples = 2000
        seed = 5
        "#,
    )
    .unwrap();
    let dir = tempfile::tempdir().unwrap();
    for (name, format) in [("r.json", Format::Json), ("r.csv", Format::Csv)] {
        let a = dir.path().join(format!("a-{name}"));
        let b = dir.path().join(format!("b-{name}"));
        emit(&run_experiment(&cfg).unwrap(), &a, format).unwrap();
        emit(&run_experiment(&cfg).unwrap(), &b, format).unwrap();
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
}

#[test]
fn every_mc_record_has_a_positive_stderr() {
    let cfg = ExperimentConfig::from_toml(
        r#"
        experiment = "boundary-convergence"
        sequence = "runs:+3,-2,+4,-1"
        sizes = [30, 60]
        samples = 4000
        seed = 8
        exact_limit = 30
        panel_max_level = 2
        [tolerances]
        approach = 0.1
        "#,
    )
    .unwrap();
    let report = run_experiment(&cfg).unwrap();
    assert!(!report.records.is_empty());
    assert_eq!(report.seed, 8);
    for r in &report.records {
        if r.provenance == zigzag::harness::Provenance::Mc {
            assert!(r.stderr.unwrap() > 0.0, "{r:?}");
        }
    }
}

#[test]
fn unreachable_target_is_a_config_mismatch() {
    let cfg = ExperimentConfig::from_toml(
        r#"
        experiment = "boundary-convergence"
        sequence = "column"
        sizes = [10, 20]
        samples = 1000
        seed = 1
        [target]
        up = "0,1"
        "#,
    )
    .unwrap();
    assert!(matches!(
        run_experiment(&cfg),
        Err(zigzag::Error::ConfigMismatch(_))
    ));
}
