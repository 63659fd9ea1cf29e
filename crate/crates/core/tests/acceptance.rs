//! Acceptance suite: one line per criterion, tolerances and seeds pinned here.
//!
//! Run with `cargo test --test acceptance`; pass criterion numbers as extra
//! arguments to run a subset.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng as _;

use zigzag::elr::{
    delta, delta_bounds, delta_bounds_integrated, first_run, last_run, marginal_cdfs,
    prob_one_between, prob_one_in_valley, prob_one_in_valley_counting, run_cdf_bounds,
    valley_window_bound, volume,
};
use zigzag::graph::{class_hits, count_fillings, martin_kernel, predecessors, FillingSampler};
use zigzag::harness::SequenceSpec;
use zigzag::harness::{run_experiment, ExperimentConfig, Format};
use zigzag::paintbox::{
    composition_paintbox, paintbox_distance, run_paintbox, IntervalSystem, PaintboxSampler,
    XiSampler,
};
use zigzag::rational::ratio;
use zigzag::rng::{self, seeded, Rng};
use zigzag::rsk::{
    check_harmonicity_transfer, count_syt, inverse_rsk, rsk, tableau_descents, verify_linkyz,
    Partition,
};
use zigzag::stats::{correlation, ks_normal, ks_uniform};
use zigzag::walk::{clt_experiment, descent_moments, lln_experiment};
use zigzag::{Composition, Permutation};

/// Master seed of the suite, fixed before any run.
const SEED: u64 = 20_240_917;

/// Criteria whose FAIL is the documented outcome of a faithful check.
const KNOWN_FAILURES: &[u32] = &[9];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

type Check = fn() -> Outcome;

/// (number, name, time budget in seconds, check)
const CRITERIA: [(u32, &str, f64, Check); 20] = [
    (1, "counting equals brute force, n <= 8", 60.0, c01_counting),
    (2, "branching identity, n <= 12", 60.0, c02_branching),
    (
        3,
        "projected class frequency vs d(mu) K_mu",
        300.0,
        c03_class_frequency,
    ),
    (
        4,
        "paintbox distance U vs U~ <= 1/n",
        60.0,
        c04_paintbox_distance,
    ),
    (
        5,
        "deterministic reconstruction from xi",
        300.0,
        c05_reconstruction,
    ),
    (6, "n! V_lambda = d(lambda), n <= 10", 120.0, c06_volume),
    (
        7,
        "valley probability: integral vs counting",
        300.0,
        c07_valley,
    ),
    (8, "first-run CDF bounds", 120.0, c08_cdf_bounds),
    (9, "Delta sandwich, stated bounds", 120.0, c09_delta),
    (10, "valley window bound 2(b-a)/n", 60.0, c10_window),
    (11, "xi_1 uniform at n = 500", 180.0, c11_xi_one),
    (
        12,
        "xi(k) independent uniforms at n = 1000",
        300.0,
        c12_xi_vector,
    ),
    (
        13,
        "kernel trend to (0,0) and MC paintbox consistency",
        600.0,
        c13_boundary,
    ),
    (14, "RSK suite", 120.0, c14_rsk),
    (
        15,
        "descent class / Young tableau link identity, n <= 8",
        300.0,
        c15_link,
    ),
    (
        16,
        "harmonicity transfer, |lambda| <= 7, k <= 4",
        300.0,
        c16_transfer,
    ),
    (17, "descent count moments and CLT", 300.0, c17_clt),
    (
        18,
        "Brownian covariance of the descent walk",
        300.0,
        c18_covariance,
    ),
    (19, "LLN for paintbox walks", 180.0, c19_lln),
    (20, "determinism of experiments", 60.0, c20_determinism),
];

fn main() -> ExitCode {
    let only: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut unexpected = 0;
    for (num, name, budget, check) in CRITERIA {
        if !only.is_empty() && !only.contains(&num) {
            continue;
        }
        let start = Instant::now();
        let out = check();
        let secs = start.elapsed().as_secs_f64();
        let pass = out.pass && secs <= budget;
        let known = KNOWN_FAILURES.contains(&num);
        let verdict = match (pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!(
            "criterion {num:>2} {verdict:<12} {name}: {} [{secs:.1}s / {budget:.0}s]",
            out.detail
        );
        if !pass && !known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn random_composition(n: usize, rng: &mut Rng) -> Composition {
    let des: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.5)).collect();
    Composition::from_descents(&des, n).unwrap()
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, k| a * BigUint::from(k))
}

fn big(n: &BigUint) -> BigRational {
    BigRational::from_integer(n.clone().into())
}

fn c01_counting() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=8 {
        let mut tally: HashMap<Vec<usize>, u64> = HashMap::new();
        for p in Permutation::all_of_size(n) {
            let w = p.word();
            let des: Vec<usize> = (1..n).filter(|&i| w[i - 1] > w[i]).collect();
            *tally.entry(des).or_default() += 1;
        }
        for lambda in Composition::all_of_size(n) {
            let brute = tally.get(lambda.descents()).copied().unwrap_or(0);
            checked += 1;
            if count_fillings(&lambda) != BigUint::from(brute) {
                bad.push(lambda.to_string());
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} compositions, mismatches {bad:?}"),
    )
}

fn c02_branching() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=12 {
        for lambda in Composition::all_of_size(n) {
            let sum: BigUint = predecessors(&lambda).iter().map(count_fillings).sum();
            checked += 1;
            if sum != count_fillings(&lambda) {
                bad.push(lambda.to_string());
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} compositions, mismatches {bad:?}"),
    )
}

fn c03_class_frequency() -> Outcome {
    const SAMPLES: usize = 100_000;
    const SIGMAS: f64 = 4.0;
    let mut rng = rng::stream(SEED, 3);
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for t in 0..20u64 {
        let n = rng.gen_range(2..=12);
        let lambda = random_composition(n, &mut rng);
        let k = rng.gen_range(1..=n);
        // μ drawn as the class of a projected filling, so it has positive mass
        let sigma = FillingSampler::new(&lambda).sample(&mut rng);
        let mu = sigma.project_down(k).unwrap().descent_composition();
        let p = big(&count_fillings(&mu)) * martin_kernel(&mu, &lambda).unwrap().to_rational();
        let p = num_traits::ToPrimitive::to_f64(&p).unwrap();
        let hits = class_hits(
            &lambda,
            k,
            mu.descents(),
            SAMPLES,
            rng::derive_seed(SEED, 300 + t),
        );
        let freq = hits as f64 / SAMPLES as f64;
        let se = (p * (1.0 - p) / SAMPLES as f64).sqrt();
        let z = if se > 0.0 {
            (freq - p).abs() / se
        } else if freq == p {
            0.0
        } else {
            f64::INFINITY
        };
        worst = worst.max(z);
        if z > SIGMAS {
            bad.push(format!("({lambda}; {mu}) z={z:.2}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("20 triples, max |z| {worst:.2} (limit {SIGMAS}), outliers {bad:?}"),
    )
}

fn c04_paintbox_distance() -> Outcome {
    let mut rng = rng::stream(SEED, 4);
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    for _ in 0..400 {
        let n = rng.gen_range(2..=200);
        let lambda = random_composition(n, &mut rng);
        let d = paintbox_distance(
            &composition_paintbox(&lambda).unwrap(),
            &run_paintbox(&lambda).unwrap(),
        );
        let scaled = d.clone() * BigRational::from_integer((n as i64).into());
        worst = worst.max(num_traits::ToPrimitive::to_f64(&scaled).unwrap());
        if d > ratio(1, n as i64) {
            bad.push(lambda.to_string());
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "400 compositions, max n*d = {worst:.3}, violations {}",
            bad.len()
        ),
    )
}

fn c05_reconstruction() -> Outcome {
    const DRAWS: usize = 100;
    let mut rng = rng::stream(SEED, 5);
    let mut checks = 0u64;
    let mut failures = 0u64;
    for n in 2..=7 {
        let mut cache: HashMap<Composition, (XiSampler, PaintboxSampler)> = HashMap::new();
        for sigma in Permutation::all_of_size(n) {
            let lambda = sigma.descent_composition();
            let (xi, paint) = cache.entry(lambda.clone()).or_insert_with(|| {
                (
                    XiSampler::new(&lambda).unwrap(),
                    PaintboxSampler::new(&run_paintbox(&lambda).unwrap()),
                )
            });
            for k in 1..=n {
                let target = sigma.project_down(k).unwrap();
                for _ in 0..DRAWS {
                    let v = xi.xi_for(sigma.word(), k, &mut rng);
                    checks += 1;
                    match paint.word(&v.values) {
                        Ok(w) if w == target.word() => {}
                        _ => failures += 1,
                    }
                }
            }
        }
    }
    outcome(
        failures == 0,
        format!("{checks} reconstructions, {failures} failures"),
    )
}

fn c06_volume() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=10 {
        let nf = big(&factorial(n));
        for lambda in Composition::all_of_size(n) {
            checked += 1;
            if &nf * volume(&lambda).unwrap() != big(&count_fillings(&lambda)) {
                bad.push(lambda.to_string());
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} compositions, mismatches {bad:?}"),
    )
}

fn c07_valley() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=9 {
        for lambda in Composition::all_of_size(n) {
            for v in lambda.run_decomposition().unwrap().valleys() {
                checked += 1;
                if prob_one_in_valley(&lambda, v).unwrap()
                    != prob_one_in_valley_counting(&lambda, v).unwrap()
                {
                    bad.push(format!("{lambda}@{v}"));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} (composition, valley) pairs, mismatches {bad:?}"),
    )
}

fn c08_cdf_bounds() -> Outcome {
    let mut rng = rng::stream(SEED, 8);
    let mut tested = 0;
    let mut violations = 0;
    while tested < 200 {
        let n = rng.gen_range(3..=14);
        let lambda = random_composition(n, &mut rng);
        if runs(&lambda) < 2 {
            continue;
        }
        tested += 1;
        let (lo, hi) = run_cdf_bounds(&lambda).unwrap();
        let f = marginal_cdfs(&lambda).unwrap().cdf_x;
        let mut points: Vec<BigRational> = (0..=100).map(|i| ratio(i, 100)).collect();
        points.extend(f.breakpoints().iter().cloned());
        for t in &points {
            let v = f.eval(t);
            if v < lo.eval(t) || v > hi.eval(t) {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("{tested} compositions, {violations} violations"),
    )
}

fn c09_delta() -> Outcome {
    let mut pairs = 0;
    let mut stated = 0;
    let mut integrated = 0;
    let mut example = None;
    // pairs where both factors have two runs or more, as the run bounds assume
    let mut multi = (0, 0);
    for total in 2..=9 {
        for a in 1..total {
            for lambda in Composition::all_of_size(a) {
                for mu in Composition::all_of_size(total - a) {
                    let (Some((l, dl)), Some((r, dr))) = (last_run(&lambda), first_run(&mu)) else {
                        continue;
                    };
                    pairs += 1;
                    let d = delta(&lambda, &mu).unwrap();
                    let (lo, hi) = delta_bounds(l, r, dl, dr);
                    let both = runs(&lambda) >= 2 && runs(&mu) >= 2;
                    multi.0 += both as usize;
                    if d < lo || d > hi {
                        stated += 1;
                        multi.1 += both as usize;
                        example.get_or_insert_with(|| {
                            format!("Delta({lambda}; {mu}) = {d} outside [{lo}, {hi}]")
                        });
                    }
                    let (lo, hi) = delta_bounds_integrated(l, r, dl, dr);
                    if d < lo || d > hi {
                        integrated += 1;
                    }
                }
            }
        }
    }
    outcome(
        stated == 0,
        format!(
            "{pairs} pairs, stated bounds violated in {stated} (first: {}; {} of {} among \
             pairs with two runs each), integrated run bounds violated in {integrated}",
            example.unwrap_or_else(|| "none".into()),
            multi.1,
            multi.0
        ),
    )
}

fn runs(lambda: &Composition) -> usize {
    lambda.run_decomposition().unwrap().runs().len()
}

fn c10_window() -> Outcome {
    let mut rng = rng::stream(SEED, 10);
    let mut tested = 0;
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    while tested < 200 {
        let n = rng.gen_range(3..=12);
        let lambda = random_composition(n, &mut rng);
        let peaks = lambda.run_decomposition().unwrap().peaks();
        if peaks.len() < 2 {
            continue;
        }
        let mut pick = peaks
            .choose_multiple(&mut rng, 2)
            .copied()
            .collect::<Vec<_>>();
        pick.sort_unstable();
        let (a, b) = (pick[0], pick[1]);
        tested += 1;
        let p = prob_one_between(&lambda, a, b).unwrap();
        let bound = valley_window_bound(&lambda, a, b).unwrap();
        worst = worst.max(num_traits::ToPrimitive::to_f64(&(&p / &bound)).unwrap());
        if p > bound {
            bad.push(format!("{lambda} ({a},{b})"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{tested} triples, max P/bound {worst:.3}, violations {bad:?}"),
    )
}

fn xi_samples(lambda: &Composition, k: usize, samples: usize, seed: u64) -> Vec<Vec<f64>> {
    let s = XiSampler::new(lambda).unwrap();
    rng::par_collect(samples, seed, |r| s.sample_values(k, r))
}

fn c11_xi_one() -> Outcome {
    const SAMPLES: usize = 10_000;
    const KS: f64 = 0.05;
    let mut rng = rng::stream(SEED, 11);
    let mut worst = 0.0f64;
    for i in 0..20 {
        let lambda = random_composition(500, &mut rng);
        let xs: Vec<f64> = xi_samples(&lambda, 1, SAMPLES, rng::derive_seed(SEED, 1100 + i))
            .into_iter()
            .map(|v| v[0])
            .collect();
        worst = worst.max(ks_uniform(&xs));
    }
    outcome(
        worst <= KS,
        format!("20 compositions, max KS {worst:.4} (limit {KS})"),
    )
}

fn c12_xi_vector() -> Outcome {
    const SAMPLES: usize = 10_000;
    const KS: f64 = 0.03;
    const CORR: f64 = 0.05;
    let mut rng = rng::stream(SEED, 12);
    let mut max_ks = 0.0f64;
    let mut max_corr = 0.0f64;
    for k in [2usize, 3] {
        let lambda = random_composition(1000, &mut rng);
        let draws = xi_samples(&lambda, k, SAMPLES, rng::derive_seed(SEED, 1200 + k as u64));
        let cols: Vec<Vec<f64>> = (0..k)
            .map(|i| draws.iter().map(|v| v[i]).collect())
            .collect();
        for (i, c) in cols.iter().enumerate() {
            max_ks = max_ks.max(ks_uniform(c));
            for d in &cols[i + 1..] {
                max_corr = max_corr.max(correlation(c, d).abs());
            }
        }
    }
    outcome(
        max_ks <= KS && max_corr <= CORR,
        format!(
            "k = 2, 3: max KS {max_ks:.4} (limit {KS}), max |corr| {max_corr:.4} (limit {CORR})"
        ),
    )
}

fn c13_boundary() -> Outcome {
    const LIMIT: f64 = 0.1;
    let sizes = [6usize, 10, 14, 18];
    let zigzag: SequenceSpec = "zigzag:2".parse().unwrap();
    let lambdas: Vec<Composition> = sizes.iter().map(|&n| zigzag.at(n, 0).unwrap()).collect();
    let mut panel = 0;
    let mut bad = Vec::new();
    let mut last_max = 0.0f64;
    for k in 1..=3 {
        let kf = big(&factorial(k));
        for mu in Composition::all_of_size(k) {
            panel += 1;
            let d_mu = big(&count_fillings(&mu));
            let target = &d_mu / &kf;
            let errs: Vec<BigRational> = lambdas
                .iter()
                .map(|l| {
                    let e = &d_mu * martin_kernel(&mu, l).unwrap().to_rational() - &target;
                    if e < BigRational::zero() {
                        -e
                    } else {
                        e
                    }
                })
                .collect();
            let last = num_traits::ToPrimitive::to_f64(errs.last().unwrap()).unwrap();
            last_max = last_max.max(last);
            if errs.windows(2).any(|w| w[1] > w[0]) || last > LIMIT {
                bad.push(mu.to_string());
            }
        }
    }
    // Monte Carlo consistency along a four-run sequence at n = 200
    let cfg = ExperimentConfig::from_toml(&format!(
        r#"
        experiment = "boundary-convergence"
        sequence = "runs:+3,-2,+4,-1"
        sizes = [200]
        samples = 100000
        seed = {SEED}
        panel_max_level = 3
        [tolerances]
        sigmas = 4.0
        approach = 0.05
        "#
    ))
    .unwrap();
    let (mc_pass, mc_records) = match run_experiment(&cfg) {
        Ok(r) => (r.all_pass(), r.records.len()),
        Err(e) => {
            bad.push(e.to_string());
            (false, 0)
        }
    };
    outcome(
        bad.is_empty() && mc_pass,
        format!(
            "{panel} panel compositions, max error at n = 18 {last_max:.4} (limit {LIMIT}), \
             not monotone or too large {bad:?}; MC at n = 200: {mc_records} records, all within 4 sigma: {mc_pass}"
        ),
    )
}

fn c14_rsk() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=6 {
        let mut seen = std::collections::HashSet::new();
        for sigma in Permutation::all_of_size(n) {
            let (p, q) = rsk(&sigma);
            if inverse_rsk(&p, &q).ok().as_ref() != Some(&sigma) {
                failures.push(format!("inverse {sigma}"));
            }
            seen.insert((p.clone(), q.clone()));
            if rsk(&sigma.inverse()) != (q.clone(), p.clone()) {
                failures.push(format!("symmetry {sigma}"));
            }
            if n > 1 {
                let (pd, _) = rsk(&sigma.project_down(n - 1).unwrap());
                if pd != p.delete_largest() {
                    failures.push(format!("restriction {sigma}"));
                }
            }
            if sigma.descents() != tableau_descents(&q) {
                failures.push(format!("descents {sigma}"));
            }
        }
        if seen.len() as u64 != (1..=n as u64).product::<u64>() {
            failures.push(format!("not injective at n = {n}"));
        }
    }
    for n in 1..=10 {
        let sum: BigUint = Partition::all_of_size(n)
            .iter()
            .map(|t| {
                let f = count_syt(t);
                &f * &f
            })
            .sum();
        if sum != factorial(n) {
            failures.push(format!("hook sum n = {n}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!("exhaustive n <= 6 and hook sums n <= 10, failures {failures:?}"),
    )
}

fn c15_link() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=8 {
        for lambda in Composition::all_of_size(n) {
            checked += 1;
            if !verify_linkyz(&lambda).unwrap() {
                bad.push(lambda.to_string());
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} compositions, failures {bad:?}"),
    )
}

fn c16_transfer() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=7 {
        for lambda in Composition::all_of_size(n) {
            for k in 1..=n.min(4) {
                checked += 1;
                if !check_harmonicity_transfer(&lambda, k).unwrap() {
                    bad.push(format!("{lambda} k={k}"));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} (composition, k) pairs, failures {bad:?}"),
    )
}

const CLT_N: usize = 10_000;
const CLT_SAMPLES: usize = 10_000;

fn c17_clt() -> Outcome {
    const KS: f64 = 0.02;
    let mut moment_bad = Vec::new();
    for n in 2..=50i64 {
        let (mean, var) = descent_moments(n as usize);
        if mean != ratio(n - 1, 2) || var != ratio(n + 1, 12) {
            moment_bad.push(n);
        }
    }
    let report = clt_experiment(CLT_N, CLT_SAMPLES, rng::derive_seed(SEED, 17)).unwrap();
    // independent recomputation of the KS statistic from the raw sample
    let ks = ks_normal(&report.statistics, 0.0, (1.0f64 / 12.0).sqrt());
    outcome(
        moment_bad.is_empty() && ks <= KS,
        format!(
            "moments exact for n <= 50 (mismatches {moment_bad:?}); KS at n/2 centering {ks:.4} (limit {KS})"
        ),
    )
}

fn c18_covariance() -> Outcome {
    const SIGMAS: f64 = 3.0;
    let report = clt_experiment(CLT_N, CLT_SAMPLES, rng::derive_seed(SEED, 18)).unwrap();
    let wanted = [(0.25, 0.5), (0.5, 0.75), (0.25, 0.75)];
    let mut parts = Vec::new();
    let mut pass = true;
    for (s, t) in wanted {
        let Some(c) = report.covariances.iter().find(|c| c.s == s && c.t == t) else {
            return outcome(false, format!("no covariance recorded at ({s}, {t})"));
        };
        let target = s.min(t) / 3.0;
        let z = (c.empirical - target) / c.stderr;
        pass &= c.target == target && z.abs() <= SIGMAS;
        parts.push(format!("({s},{t}) z={z:.2}"));
    }
    outcome(pass, format!("{} (limit {SIGMAS})", parts.join(", ")))
}

fn c19_lln() -> Outcome {
    const LIMIT: f64 = 0.05;
    let systems = [
        ("(0,0)", IntervalSystem::empty()),
        ("column", IntervalSystem::parse("", "0,1").unwrap()),
        (
            "four runs",
            run_paintbox(&"3,2,4,1".parse().unwrap()).unwrap(),
        ),
    ];
    let mut parts = Vec::new();
    let mut pass = true;
    for (i, (name, u)) in systems.iter().enumerate() {
        let r = lln_experiment(u, 2000, 50, rng::derive_seed(SEED, 1900 + i as u64)).unwrap();
        pass &= r.mean <= LIMIT;
        parts.push(format!("{name} {:.4}", r.mean));
    }
    outcome(
        pass,
        format!("mean sup-distance {} (limit {LIMIT})", parts.join(", ")),
    )
}

fn c20_determinism() -> Outcome {
    let configs = [
        r#"
        experiment = "boundary-convergence"
        sequence = "zigzag:2"
        sizes = [6, 10]
        seed = 11
        exact_limit = 6
        samples = 3000
        panel_max_level = 2
        "#,
        r#"
        experiment = "boundary-convergence"
        sequence = "runs:+3,-2,+4,-1"
        sizes = [40]
        samples = 3000
        seed = 12
        panel_max_level = 2
        [tolerances]
        approach = 0.1
        "#,
        r#"
        experiment = "xi-uniformity"
        sequence = "random"
        sizes = [50, 100]
        samples = 3000
        seed = 13
        k = 3
        "#,
    ];
    let mut mismatches = Vec::new();
    let render = |cfg: &ExperimentConfig| -> (String, String) {
        let r = run_experiment(cfg).unwrap();
        (r.render(Format::Json), r.render(Format::Csv))
    };
    for (i, text) in configs.iter().enumerate() {
        let cfg = ExperimentConfig::from_toml(text).unwrap();
        let a = render(&cfg);
        let b = render(&cfg);
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| render(&cfg));
        if a != b || a != single {
            mismatches.push(i);
        }
    }
    let u = run_paintbox(&"3,2,4,1".parse().unwrap()).unwrap();
    let walk = |seed| {
        (
            serde_json::to_string(&clt_experiment(500, 2000, seed).unwrap()).unwrap(),
            serde_json::to_string(&lln_experiment(&u, 300, 200, seed).unwrap()).unwrap(),
        )
    };
    if walk(21) != walk(21) {
        mismatches.push(configs.len());
    }
    let mut rng = seeded(22);
    let lambda = random_composition(30, &mut rng);
    let draws = |seed| xi_samples(&lambda, 2, 5000, seed);
    if draws(23) != draws(23) {
        mismatches.push(configs.len() + 1);
    }
    outcome(
        mismatches.is_empty(),
        format!("3 configs (JSON and CSV, 1 vs many threads) plus walk and xi draws, mismatches {mismatches:?}"),
    )
}
