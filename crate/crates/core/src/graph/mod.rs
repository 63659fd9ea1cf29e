//! The graded graph of compositions: covering relations, path counts, the
//! Martin kernel and its Monte Carlo estimate.

mod counting;
mod sampler;

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

pub use counting::{count_fillings, count_fillings_brute_force};
pub use sampler::FillingSampler;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::rng;
use crate::stats::Estimate;

/// All `ν` with `μ ↗ ν`: one part grows by one, or one part `μ_j` splits into
/// `(a, μ_j + 1 - a)`. The root covers `(1)` only.
pub fn covers(mu: &Composition) -> Vec<Composition> {
    if mu.is_empty() {
        return vec![Composition::row(1)];
    }
    let parts = mu.parts();
    let mut out = BTreeSet::new();
    for j in 0..parts.len() {
        let mut grown = parts.to_vec();
        grown[j] += 1;
        out.insert(grown);
        for a in 1..=parts[j] {
            let mut split = Vec::with_capacity(parts.len() + 1);
            split.extend_from_slice(&parts[..j]);
            split.push(a);
            split.push(parts[j] + 1 - a);
            split.extend_from_slice(&parts[j + 1..]);
            out.insert(split);
        }
    }
    out.into_iter()
        .map(|p| Composition::new(p).expect("positive parts"))
        .collect()
}

/// All `μ` with `μ ↗ ν`.
pub fn predecessors(nu: &Composition) -> Vec<Composition> {
    if nu.is_empty() {
        return Vec::new();
    }
    if nu.size() == 1 {
        return vec![Composition::empty()];
    }
    let parts = nu.parts();
    let mut out = BTreeSet::new();
    for j in 0..parts.len() {
        if parts[j] >= 2 {
            let mut shrunk = parts.to_vec();
            shrunk[j] -= 1;
            out.insert(shrunk);
        }
        if j + 1 < parts.len() {
            let mut merged = parts[..j].to_vec();
            merged.push(parts[j] + parts[j + 1] - 1);
            merged.extend_from_slice(&parts[j + 2..]);
            out.insert(merged);
        }
    }
    out.into_iter()
        .map(|p| Composition::new(p).expect("positive parts"))
        .collect()
}

/// Number of paths from each vertex of level `k` to `lambda`, for the
/// vertices that have at least one. Computed level by level downwards.
pub fn paths_to(lambda: &Composition, k: usize) -> HashMap<Composition, BigUint> {
    let mut level: HashMap<Composition, BigUint> = HashMap::new();
    if k > lambda.size() {
        return level;
    }
    level.insert(lambda.clone(), BigUint::one());
    for _ in k..lambda.size() {
        let mut below: HashMap<Composition, BigUint> = HashMap::with_capacity(level.len() * 2);
        for (nu, ways) in &level {
            for mu in predecessors(nu) {
                *below.entry(mu).or_insert_with(BigUint::zero) += ways;
            }
        }
        level = below;
    }
    level
}

/// `d(μ, λ)`, the number of increasing paths from `μ` to `λ`; zero when
/// `|μ| > |λ|`.
pub fn count_paths(mu: &Composition, lambda: &Composition) -> BigUint {
    paths_to(lambda, mu.size())
        .remove(mu)
        .unwrap_or_else(BigUint::zero)
}

/// An exact kernel value `d(μ, λ) / d(λ)`, kept unreduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelValue {
    #[serde(serialize_with = "crate::rational::ser_display")]
    pub num: BigUint,
    #[serde(serialize_with = "crate::rational::ser_display")]
    pub den: BigUint,
}

impl KernelValue {
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone().into(), self.den.clone().into())
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }
}

/// `K_μ(λ) = d(μ, λ) / d(λ)`.
pub fn martin_kernel(mu: &Composition, lambda: &Composition) -> Result<KernelValue> {
    if mu.is_empty() {
        return Err(Error::InvalidArgument(
            "the kernel needs a nonempty composition".into(),
        ));
    }
    Ok(KernelValue {
        num: count_paths(mu, lambda),
        den: count_fillings(lambda),
    })
}

/// `K_μ(λ)` for every `μ ⊢ k` reachable below `λ`; compositions of `k`
/// missing from the map have kernel zero.
pub fn kernel_table(lambda: &Composition, k: usize) -> HashMap<Composition, KernelValue> {
    let den = count_fillings(lambda);
    paths_to(lambda, k)
        .into_iter()
        .map(|(mu, num)| {
            (
                mu,
                KernelValue {
                    num,
                    den: den.clone(),
                },
            )
        })
        .collect()
}

/// Monte Carlo estimate of `K_μ(λ)`: the frequency of `des(σ_λ↓k) = D_μ`
/// over uniform fillings, divided by `d(μ)`.
pub fn estimate_kernel(
    mu: &Composition,
    lambda: &Composition,
    samples: usize,
    seed: u64,
) -> Result<Estimate> {
    let k = mu.size();
    if k == 0 || k > lambda.size() {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= |μ| <= |λ|, got |μ| = {k}, |λ| = {}",
            lambda.size()
        )));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be positive".into()));
    }
    let d_mu = count_fillings(mu).to_f64().unwrap_or(f64::INFINITY);
    let hits = class_hits(lambda, k, mu.descents(), samples, seed);
    Ok(Estimate::binomial(hits, samples as u64, 1.0 / d_mu))
}

/// How many of `samples` uniform fillings of `lambda` restrict to descent
/// set `target` on the values `1..=k`.
pub fn class_hits(
    lambda: &Composition,
    k: usize,
    target: &[usize],
    samples: usize,
    seed: u64,
) -> u64 {
    let sampler = FillingSampler::new(lambda);
    rng::par_count(samples, seed, |r| {
        let word = sampler.sample_word(r);
        projected_descents_equal(&word, k, target)
    })
}

/// Whether the word restricted to letters `<= k` has descent set `target`.
pub(crate) fn projected_descents_equal(word: &[usize], k: usize, target: &[usize]) -> bool {
    let mut prev = None;
    let mut t = target.iter().peekable();
    for (pos, &v) in word.iter().filter(|&&v| v <= k).enumerate() {
        if let Some(p) = prev {
            let is_d = v < p;
            let expect = t.peek() == Some(&&pos);
            if is_d != expect {
                return false;
            }
            if expect {
                t.next();
            }
        }
        prev = Some(v);
    }
    t.next().is_none()
}

/// Empirical law of `des(σ_λ↓k)` as counts per composition of `k`.
pub fn projected_class_counts(
    lambda: &Composition,
    k: usize,
    samples: usize,
    seed: u64,
) -> HashMap<Composition, u64> {
    let sampler = FillingSampler::new(lambda);
    let parts = rng::par_chunks(samples, seed, |r, count| {
        let mut m: HashMap<Composition, u64> = HashMap::new();
        for _ in 0..count {
            let word: Vec<usize> = sampler
                .sample_word(r)
                .into_iter()
                .filter(|&v| v <= k)
                .collect();
            let des: Vec<usize> = word
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[1] < w[0])
                .map(|(i, _)| i + 1)
                .collect();
            let c = Composition::from_descents(&des, k).expect("valid descents");
            *m.entry(c).or_default() += 1;
        }
        m
    });
    let mut total = HashMap::new();
    for m in parts {
        for (c, v) in m {
            *total.entry(c).or_default() += v;
        }
    }
    total
}

/// Checks the harmonicity recursion `p(μ) = Σ_{μ↗ν} p(ν)` on levels
/// `1..max_level` together with `p((1)) = 1`.
pub fn check_harmonic(p: &HashMap<Composition, BigRational>, max_level: usize) -> Result<bool> {
    let get = |c: &Composition| {
        p.get(c)
            .ok_or_else(|| Error::IncompleteInput(c.to_string()))
    };
    if max_level == 0 {
        return Ok(true);
    }
    if !get(&Composition::row(1))?.is_one() {
        return Ok(false);
    }
    for k in 1..max_level {
        for mu in Composition::all_of_size(k) {
            let mut sum = BigRational::zero();
            for nu in covers(&mu) {
                sum += get(&nu)?;
            }
            if &sum != get(&mu)? {
                return Ok(false);
            }
        }
    }
    // every vertex of the top level must be present too
    for nu in Composition::all_of_size(max_level) {
        get(&nu)?;
    }
    Ok(true)
}
