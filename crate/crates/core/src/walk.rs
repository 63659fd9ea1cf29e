//! Descent walks of permutations, their Eulerian statistics, and the
//! deterministic and Gaussian limits of the rescaled walk.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use serde::Serialize;

use crate::composition::Permutation;
use crate::error::{Error, Result};
use crate::paintbox::{IntervalSystem, Label, PaintboxSampler};
use crate::rng;
use crate::stats;

/// The lattice path `f(0) = 0`, `f(i) - f(i-1) = -1` if `i` is a descent and
/// `+1` otherwise, for `i = 1..n-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LatticePath {
    values: Vec<i64>,
}

impl LatticePath {
    /// Walk of a word, read through its descents.
    pub fn from_word(word: &[usize]) -> Self {
        let mut values = Vec::with_capacity(word.len().max(1));
        let mut f = 0i64;
        values.push(0);
        for w in word.windows(2) {
            f += if w[1] < w[0] { -1 } else { 1 };
            values.push(f);
        }
        Self { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn steps(&self) -> usize {
        self.values.len() - 1
    }

    pub fn end(&self) -> i64 {
        *self.values.last().expect("non-empty")
    }

    /// `sup_t |f(m t)/m - profile(t)|` with `m` the number of steps. Both
    /// functions are piecewise linear, so the supremum is attained on the
    /// union of their breakpoints.
    pub fn sup_distance(&self, profile: &LimitProfile) -> f64 {
        let m = self.steps();
        if m == 0 {
            return 0.0;
        }
        let mf = m as f64;
        let at = |t: f64| {
            let x = t * mf;
            let i = (x.floor() as usize).min(m - 1);
            let frac = x - i as f64;
            (self.values[i] as f64 * (1.0 - frac) + self.values[i + 1] as f64 * frac) / mf
        };
        let mut d: f64 = 0.0;
        for (i, &v) in self.values.iter().enumerate() {
            let t = i as f64 / mf;
            d = d.max((v as f64 / mf - profile.eval_f64(t)).abs());
        }
        for b in &profile.breaks_f64 {
            d = d.max((at(*b) - profile.eval_f64(*b)).abs());
        }
        d
    }
}

pub fn descent_walk(sigma: &Permutation) -> LatticePath {
    LatticePath::from_word(sigma.word())
}

/// `A(n, k)`, the number of permutations of `n` with `k` descents; zero out
/// of range.
pub fn eulerian(n: usize, k: usize) -> BigUint {
    if n == 0 {
        return if k == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    eulerian_row(n).into_iter().nth(k).unwrap_or_default()
}

/// `(A(n, 0), …, A(n, n-1))`.
pub fn eulerian_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 2..=n {
        let mut next = vec![BigUint::zero(); m];
        for (k, slot) in next.iter_mut().enumerate() {
            if k < row.len() {
                *slot += &row[k] * (k + 1);
            }
            if k >= 1 {
                *slot += &row[k - 1] * (m - k);
            }
        }
        row = next;
    }
    if n == 0 {
        row.clear();
    }
    row
}

/// Exact mean and variance of the descent count of a uniform permutation
/// of `n`, from Eulerian weights.
pub fn descent_moments(n: usize) -> (BigRational, BigRational) {
    let row = eulerian_row(n);
    let total: BigUint = row.iter().sum();
    let total = BigRational::from_integer(total.into());
    let mut m1 = BigRational::zero();
    let mut m2 = BigRational::zero();
    for (k, a) in row.iter().enumerate() {
        let a = BigRational::from_integer(a.clone().into());
        let k = BigRational::from_integer(k.into());
        m1 += &a * &k;
        m2 += &a * &k * &k;
    }
    let mean = m1 / &total;
    let var = m2 / &total - &mean * &mean;
    (mean, var)
}

/// The piecewise linear limit `f_U`: slope `+1` on `U↑`, `-1` on `U↓`,
/// `0` elsewhere, starting at 0.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitProfile {
    #[serde(serialize_with = "crate::rational::ser_rationals")]
    breakpoints: Vec<BigRational>,
    #[serde(serialize_with = "crate::rational::ser_rationals")]
    values: Vec<BigRational>,
    #[serde(skip)]
    breaks_f64: Vec<f64>,
    #[serde(skip)]
    values_f64: Vec<f64>,
}

impl LimitProfile {
    pub fn breakpoints(&self) -> &[BigRational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let b = &self.breakpoints;
        if t <= &b[0] {
            return self.values[0].clone();
        }
        let i = b.partition_point(|x| x < t);
        if i == b.len() {
            return self.values[i - 1].clone();
        }
        let (x0, x1) = (&b[i - 1], &b[i]);
        let (y0, y1) = (&self.values[i - 1], &self.values[i]);
        y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        let b = &self.breaks_f64;
        if t <= b[0] {
            return self.values_f64[0];
        }
        let i = b.partition_point(|&x| x < t);
        if i == b.len() {
            return self.values_f64[i - 1];
        }
        let (x0, x1) = (b[i - 1], b[i]);
        let (y0, y1) = (self.values_f64[i - 1], self.values_f64[i]);
        y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    }

    /// Slopes on consecutive breakpoint intervals.
    pub fn slopes(&self) -> Vec<i8> {
        self.breakpoints
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(x, y)| {
                let s = (&y[1] - &y[0]) / (&x[1] - &x[0]);
                if s.is_zero() {
                    0
                } else if s.is_positive() {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }
}

pub fn limit_profile(u: &IntervalSystem) -> LimitProfile {
    let mut breakpoints = vec![BigRational::zero()];
    let mut values = vec![BigRational::zero()];
    for (iv, label) in u.components() {
        let last_v = values.last().cloned().expect("non-empty");
        if &iv.lo > breakpoints.last().expect("non-empty") {
            breakpoints.push(iv.lo.clone());
            values.push(last_v.clone());
        }
        let delta = iv.length();
        breakpoints.push(iv.hi.clone());
        values.push(match label {
            Label::Up => last_v + delta,
            Label::Down => last_v - delta,
        });
    }
    let one = BigRational::one();
    if breakpoints.last() != Some(&one) {
        let v = values.last().cloned().expect("non-empty");
        breakpoints.push(one);
        values.push(v);
    }
    let breaks_f64 = breakpoints
        .iter()
        .map(|x| x.to_f64().unwrap_or(f64::NAN))
        .collect();
    let values_f64 = values
        .iter()
        .map(|x| x.to_f64().unwrap_or(f64::NAN))
        .collect();
    LimitProfile {
        breakpoints,
        values,
        breaks_f64,
        values_f64,
    }
}

/// Exact sup-distance between two limit profiles.
pub fn profile_distance(a: &LimitProfile, b: &LimitProfile) -> BigRational {
    a.breakpoints
        .iter()
        .chain(&b.breakpoints)
        .map(|t| (a.eval(t) - b.eval(t)).abs())
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// Summary of `sup_t |f_{σ_U}(n t)/n - f_U(t)|` over independent draws of
/// `σ_U` on `n + 1` points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LlnReport {
    pub n: usize,
    pub samples: usize,
    pub mean: f64,
    pub max: f64,
    pub rejected: u64,
}

pub fn lln_experiment(
    u: &IntervalSystem,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<LlnReport> {
    if n == 0 || samples == 0 {
        return Err(Error::InvalidArgument(
            "need n >= 1 and samples >= 1".into(),
        ));
    }
    let profile = limit_profile(u);
    let sampler = PaintboxSampler::new(u);
    let draws = rng::par_collect(samples, seed, |r| {
        let (word, rejected) = sampler.sample_word(n + 1, r);
        (
            LatticePath::from_word(&word).sup_distance(&profile),
            rejected,
        )
    });
    let d: Vec<f64> = draws.iter().map(|x| x.0).collect();
    Ok(LlnReport {
        n,
        samples,
        mean: stats::mean(&d),
        max: d.iter().copied().fold(0.0, f64::max),
        rejected: draws.iter().map(|x| x.1).sum(),
    })
}

/// Empirical covariance of the rescaled walk at two times.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CovarianceCheck {
    pub s: f64,
    pub t: f64,
    pub empirical: f64,
    pub stderr: f64,
    pub target: f64,
}

impl CovarianceCheck {
    pub fn within(&self, sigmas: f64) -> bool {
        (self.empirical - self.target).abs() <= sigmas * self.stderr
    }
}

/// Fluctuations of the descent walk of a uniform permutation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CltReport {
    pub n: usize,
    pub samples: usize,
    pub center: f64,
    /// KS distance of `(#Des - center)/√n` to `N(0, 1/12)`.
    pub ks: f64,
    pub covariances: Vec<CovarianceCheck>,
    #[serde(skip)]
    pub statistics: Vec<f64>,
}

/// Times at which walk marginals are recorded.
pub const CLT_TIMES: [f64; 3] = [0.25, 0.5, 0.75];

/// Draws `samples` uniform permutations of `n` (Fisher–Yates), standardizes
/// the descent count around `n/2`, and records `f(⌊n t⌋)/√n` at
/// [`CLT_TIMES`].
pub fn clt_experiment(n: usize, samples: usize, seed: u64) -> Result<CltReport> {
    clt_experiment_centered(n, samples, seed, n as f64 / 2.0)
}

/// As [`clt_experiment`] with an explicit centering of the descent count.
pub fn clt_experiment_centered(
    n: usize,
    samples: usize,
    seed: u64,
    center: f64,
) -> Result<CltReport> {
    if n < 2 || samples < 2 {
        return Err(Error::InvalidArgument(
            "need n >= 2 and samples >= 2".into(),
        ));
    }
    let idx: Vec<usize> = CLT_TIMES
        .iter()
        .map(|t| (t * n as f64).floor() as usize)
        .collect();
    let sqrt_n = (n as f64).sqrt();
    let draws = rng::par_chunks(samples, seed, |r, count| {
        let mut word: Vec<usize> = (1..=n).collect();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            word.shuffle(r);
            let path = LatticePath::from_word(&word);
            let des = (path.steps() as i64 - path.end()) / 2;
            let marg: Vec<f64> = idx
                .iter()
                .map(|&i| path.values()[i] as f64 / sqrt_n)
                .collect();
            out.push(((des as f64 - center) / sqrt_n, marg));
        }
        out
    });
    let draws: Vec<(f64, Vec<f64>)> = draws.into_iter().flatten().collect();
    let statistics: Vec<f64> = draws.iter().map(|d| d.0).collect();
    let ks = stats::ks_normal(&statistics, 0.0, (1.0f64 / 12.0).sqrt());
    let column = |j: usize| draws.iter().map(|d| d.1[j]).collect::<Vec<f64>>();
    let mut covariances = Vec::new();
    for (a, &s) in CLT_TIMES.iter().enumerate() {
        for (b, &t) in CLT_TIMES.iter().enumerate().skip(a) {
            let (xa, xb) = (column(a), column(b));
            covariances.push(CovarianceCheck {
                s,
                t,
                empirical: stats::covariance(&xa, &xb),
                stderr: stats::covariance_stderr(&xa, &xb),
                target: s.min(t) / 3.0,
            });
        }
    }
    Ok(CltReport {
        n,
        samples,
        center,
        ks,
        covariances,
        statistics,
    })
}
