//! Small statistics toolkit used by the estimators and experiments.

use std::collections::HashMap;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF, Normal};

/// A Monte Carlo frequency with its binomial standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub estimate: f64,
    pub stderr: f64,
    pub samples: u64,
}

impl Estimate {
    /// Frequency `hits / samples`, scaled by `scale` (estimate and stderr alike).
    pub fn binomial(hits: u64, samples: u64, scale: f64) -> Self {
        assert!(samples > 0, "estimate needs at least one sample");
        let p = hits as f64 / samples as f64;
        let se = (p * (1.0 - p) / samples as f64).sqrt();
        Self {
            estimate: p * scale,
            stderr: se * scale,
            samples,
        }
    }

    /// Whether `target` lies within `sigmas` standard errors. A zero stderr
    /// demands exact agreement up to rounding.
    pub fn agrees_with(&self, target: f64, sigmas: f64) -> bool {
        (self.estimate - target).abs() <= sigmas * self.stderr + 1e-12
    }

    /// Standard error assuming the true frequency is `p` rather than the
    /// empirical one; used when the empirical frequency is 0 or 1.
    pub fn stderr_at(p: f64, samples: u64) -> f64 {
        (p * (1.0 - p) / samples as f64).sqrt()
    }
}

/// Kolmogorov–Smirnov distance between the empirical law of `xs` and a
/// continuous CDF. Ties (lattice data) are handled exactly.
pub fn ks_distance<F: Fn(f64) -> f64>(xs: &[f64], cdf: F) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len() as f64;
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        let f = cdf(v[i]);
        d = d
            .max((f - i as f64 / n).abs())
            .max((j as f64 / n - f).abs());
        i = j;
    }
    d
}

pub fn ks_uniform(xs: &[f64]) -> f64 {
    ks_distance(xs, |x| x.clamp(0.0, 1.0))
}

pub fn ks_normal(xs: &[f64], mean: f64, sd: f64) -> f64 {
    let law = Normal::new(mean, sd).expect("positive standard deviation");
    ks_distance(xs, |x| law.cdf(x))
}

/// Pearson chi-square statistic and its upper-tail p-value for observed
/// counts against expected probabilities (cells with zero probability must
/// have zero counts and are skipped).
pub fn chi_square(observed: &[u64], expected: &[f64]) -> (f64, f64) {
    assert_eq!(observed.len(), expected.len());
    let total: u64 = observed.iter().sum();
    let mut stat = 0.0;
    let mut cells = 0usize;
    for (&o, &p) in observed.iter().zip(expected) {
        if p == 0.0 {
            assert_eq!(o, 0, "count in a cell of probability zero");
            continue;
        }
        let e = p * total as f64;
        stat += (o as f64 - e).powi(2) / e;
        cells += 1;
    }
    if cells < 2 {
        return (0.0, 1.0);
    }
    let law = ChiSquared::new((cells - 1) as f64).expect("positive degrees of freedom");
    (stat, 1.0 - law.cdf(stat))
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample covariance.
pub fn covariance(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let (mx, my) = (mean(xs), mean(ys));
    xs.iter()
        .zip(ys)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum::<f64>()
        / (xs.len() as f64 - 1.0)
}

/// Standard error of the sample covariance, estimated from the spread of the
/// centred products.
pub fn covariance_stderr(xs: &[f64], ys: &[f64]) -> f64 {
    let (mx, my) = (mean(xs), mean(ys));
    let prods: Vec<f64> = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (x - mx) * (y - my))
        .collect();
    let m = mean(&prods);
    let var = prods.iter().map(|p| (p - m).powi(2)).sum::<f64>() / (prods.len() as f64 - 1.0);
    (var / prods.len() as f64).sqrt()
}

pub fn correlation(xs: &[f64], ys: &[f64]) -> f64 {
    covariance(xs, ys) / (covariance(xs, xs) * covariance(ys, ys)).sqrt()
}

/// Total-variation distance between two empirical laws given as counts.
pub fn total_variation<K: Eq + Hash>(a: &HashMap<K, u64>, b: &HashMap<K, u64>) -> f64 {
    let na: u64 = a.values().sum();
    let nb: u64 = b.values().sum();
    let mut d = 0.0;
    for (k, &ca) in a {
        let cb = b.get(k).copied().unwrap_or(0);
        d += (ca as f64 / na as f64 - cb as f64 / nb as f64).abs();
    }
    for (k, &cb) in b {
        if !a.contains_key(k) {
            d += cb as f64 / nb as f64;
        }
    }
    d / 2.0
}
