//! Averaged coordinates: each small value of a uniform filling is spread
//! uniformly over the rescaled slope of its cell.

use rand::Rng as _;

use crate::composition::{Composition, Permutation, RunDecomposition};
use crate::error::{Error, Result};
use crate::graph::FillingSampler;
use crate::rng::Rng;

/// `ξ_1, …, ξ_k` with, for each, the slope box `[start/n, end/n]` it was
/// drawn from (`start = x(c) - 1`, `end = y(c)` for the cell `c`).
#[derive(Clone, Debug, PartialEq)]
pub struct XiVector {
    pub values: Vec<f64>,
    pub boxes: Vec<(usize, usize)>,
    pub n: usize,
}

impl XiVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Whether every value lies in its recorded box.
    pub fn is_consistent(&self) -> bool {
        let n = self.n as f64;
        self.values
            .iter()
            .zip(&self.boxes)
            .all(|(&v, &(a, b))| a as f64 / n <= v && v <= b as f64 / n)
    }
}

/// A filling together with the averaged coordinates of its first values.
#[derive(Clone, Debug)]
pub struct XiDraw {
    pub sigma: Permutation,
    pub xi: XiVector,
}

#[derive(Clone, Debug)]
pub struct XiSampler {
    fillings: FillingSampler,
    runs: RunDecomposition,
}

impl XiSampler {
    pub fn new(lambda: &Composition) -> Result<Self> {
        Ok(Self {
            fillings: FillingSampler::new(lambda),
            runs: lambda.run_decomposition()?,
        })
    }

    pub fn size(&self) -> usize {
        self.runs.size()
    }

    /// Slope boxes of the cells holding `1..=k` in `sigma`.
    pub fn boxes(&self, sigma: &[usize], k: usize) -> Vec<(usize, usize)> {
        let mut cells = vec![0usize; k];
        for (pos, &v) in sigma.iter().enumerate() {
            if v <= k {
                cells[v - 1] = pos + 1;
            }
        }
        cells
            .into_iter()
            .map(|c| {
                let s = self.runs.slope(c);
                (s.start - 1, s.end)
            })
            .collect()
    }

    /// Draws `ξ_1..ξ_k` for a given filling.
    pub fn xi_for(&self, sigma: &[usize], k: usize, rng: &mut Rng) -> XiVector {
        let n = self.size();
        let boxes = self.boxes(sigma, k);
        let values = boxes
            .iter()
            .map(|&(a, b)| (a as f64 + rng.gen::<f64>() * (b - a) as f64) / n as f64)
            .collect();
        XiVector { values, boxes, n }
    }

    /// A uniform filling and its averaged coordinates for `1..=k`.
    pub fn sample(&self, k: usize, rng: &mut Rng) -> Result<XiDraw> {
        if k == 0 || k > self.size() {
            return Err(Error::OutOfRange {
                index: k,
                max: self.size(),
            });
        }
        let word = self.fillings.sample_word(rng);
        let xi = self.xi_for(&word, k, rng);
        Ok(XiDraw {
            sigma: Permutation::from_word_unchecked(word),
            xi,
        })
    }

    /// Only the coordinate values, skipping the permutation wrapper.
    pub fn sample_values(&self, k: usize, rng: &mut Rng) -> Vec<f64> {
        let word = self.fillings.sample_word(rng);
        self.xi_for(&word, k, rng).values
    }
}

/// One draw of `ξ^λ(k)`.
pub fn sample_xi(lambda: &Composition, k: usize, rng: &mut Rng) -> Result<XiVector> {
    Ok(XiSampler::new(lambda)?.sample(k, rng)?.xi)
}
