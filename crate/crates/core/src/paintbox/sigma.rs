//! The paintbox permutation `σ_U` and Monte Carlo laws of its descent class.

use std::collections::HashMap;

use rand::Rng as _;

use super::{FastComponent, IntervalSystem, Label};
use crate::composition::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::rng::{self, Rng};
use crate::stats::Estimate;

/// Sampling-side view of an interval system with `f64` endpoints.
#[derive(Clone, Debug)]
pub struct PaintboxSampler {
    comps: Vec<FastComponent>,
}

impl PaintboxSampler {
    pub fn new(u: &IntervalSystem) -> Self {
        Self {
            comps: u.fast_components(),
        }
    }

    /// Word of `σ_U(xs)`: labels `1..=k` sorted by position, where a point in a
    /// component sits at the component's left end, ordered by arrival inside
    /// up components and by reverse arrival inside down ones; free points sit
    /// at their own value.
    pub fn word(&self, xs: &[f64]) -> Result<Vec<usize>> {
        let mut keys: Vec<(f64, i64, usize)> = Vec::with_capacity(xs.len());
        for (idx, &x) in xs.iter().enumerate() {
            let label = idx + 1;
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::DegenerateSample(format!("{x} outside [0,1]")));
            }
            let pos = self.comps.partition_point(|c| c.hi < x);
            let key = match self.comps.get(pos) {
                Some(c) if c.lo == x || c.hi == x => {
                    return Err(Error::DegenerateSample(format!(
                        "{x} is an endpoint of a component"
                    )))
                }
                Some(c) if c.lo < x => match c.label {
                    Label::Up => (c.lo, label as i64),
                    Label::Down => (c.lo, -(label as i64)),
                },
                _ => {
                    // a component may end exactly at x with the next starting later
                    if pos > 0 && self.comps[pos - 1].hi == x {
                        return Err(Error::DegenerateSample(format!(
                            "{x} is an endpoint of a component"
                        )));
                    }
                    (x, 0)
                }
            };
            keys.push((key.0, key.1, label));
        }
        keys.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        for w in keys.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(Error::DegenerateSample("tied values".into()));
            }
        }
        Ok(keys.into_iter().map(|k| k.2).collect())
    }

    /// Draws `k` iid uniforms until the paintbox word is defined; returns the
    /// word and the number of rejected draws.
    pub fn sample_word(&self, k: usize, rng: &mut Rng) -> (Vec<usize>, u64) {
        let mut rejected = 0;
        let mut xs = vec![0.0; k];
        loop {
            xs.iter_mut().for_each(|x| *x = rng.gen::<f64>());
            match self.word(&xs) {
                Ok(w) => return (w, rejected),
                Err(_) => rejected += 1,
            }
        }
    }
}

/// `σ_U(xs)` as a permutation.
pub fn sigma_u(u: &IntervalSystem, xs: &[f64]) -> Result<Permutation> {
    PaintboxSampler::new(u)
        .word(xs)
        .map(Permutation::from_word_unchecked)
}

fn descent_composition(word: &[usize]) -> Composition {
    let des: Vec<usize> = word
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] < w[0])
        .map(|(i, _)| i + 1)
        .collect();
    Composition::from_descents(&des, word.len()).expect("valid descents")
}

/// Empirical law of `des(σ_U(k))` over `samples` draws, with the number of
/// degenerate draws that were resampled.
pub fn paintbox_class_counts(
    u: &IntervalSystem,
    k: usize,
    samples: usize,
    seed: u64,
) -> (HashMap<Composition, u64>, u64) {
    let sampler = PaintboxSampler::new(u);
    let chunks = rng::par_chunks(samples, seed, |r, count| {
        let mut m: HashMap<Composition, u64> = HashMap::new();
        let mut rejected = 0;
        for _ in 0..count {
            let (w, rej) = sampler.sample_word(k, r);
            rejected += rej;
            *m.entry(descent_composition(&w)).or_default() += 1;
        }
        (m, rejected)
    });
    let mut total = HashMap::new();
    let mut rejected = 0;
    for (m, rej) in chunks {
        rejected += rej;
        for (c, v) in m {
            *total.entry(c).or_default() += v;
        }
    }
    (total, rejected)
}

/// Monte Carlo estimate of `P(des(σ_U(k)) = D_μ)` with `k = |μ|`.
pub fn estimate_paintbox_law(
    u: &IntervalSystem,
    mu: &Composition,
    samples: usize,
    seed: u64,
) -> Result<Estimate> {
    if mu.is_empty() || samples == 0 {
        return Err(Error::InvalidArgument(
            "need a nonempty composition and a positive sample count".into(),
        ));
    }
    let (counts, _) = paintbox_class_counts(u, mu.size(), samples, seed);
    let hits = counts.get(mu).copied().unwrap_or(0);
    Ok(Estimate::binomial(hits, samples as u64, 1.0))
}
