//! Uniform sampling of standard fillings.
//!
//! The counting DP is rerun in floating point with each row rescaled to a
//! maximum of one; relative ranks are then drawn backwards from the last
//! cell, and values are recovered from the ranks with a Fenwick tree. Each
//! row keeps exactly the cumulative sums (prefix or suffix, depending on the
//! next step) that produced the following row, so the backward draw never
//! subtracts nearly equal numbers.

use rand::Rng as _;

use crate::composition::{Composition, Permutation};
use crate::rng::Rng;

#[derive(Clone, Debug)]
pub struct FillingSampler {
    lambda: Composition,
    /// Row `i` (1-based) occupies `cum[off(i)..off(i) + i]`.
    cum: Vec<f64>,
}

fn off(i: usize) -> usize {
    i * (i - 1) / 2
}

impl FillingSampler {
    pub fn new(lambda: &Composition) -> Self {
        let n = lambda.size();
        assert!(n >= 1, "cannot sample a filling of the empty composition");
        let mut cum = Vec::with_capacity(off(n + 1));
        let mut w = vec![1.0f64];
        for i in 1..=n {
            let descent = i < n && lambda.is_descent(i);
            let start = cum.len();
            if descent {
                cum.resize(start + i, 0.0);
                let mut acc = 0.0;
                for j in (0..i).rev() {
                    acc += w[j];
                    cum[start + j] = acc;
                }
            } else {
                let mut acc = 0.0;
                for &x in &w {
                    acc += x;
                    cum.push(acc);
                }
            }
            if i == n {
                break;
            }
            let row = &cum[start..start + i];
            let mut next = vec![0.0; i + 1];
            if descent {
                next[..i].copy_from_slice(row);
            } else {
                next[1..].copy_from_slice(row);
            }
            let max = next.iter().copied().fold(0.0, f64::max);
            next.iter_mut().for_each(|x| *x /= max);
            w = next;
        }
        Self {
            lambda: lambda.clone(),
            cum,
        }
    }

    pub fn composition(&self) -> &Composition {
        &self.lambda
    }

    pub fn size(&self) -> usize {
        self.lambda.size()
    }

    fn row(&self, i: usize) -> &[f64] {
        &self.cum[off(i)..off(i) + i]
    }

    /// A uniformly distributed filling, as a permutation word.
    pub fn sample(&self, rng: &mut Rng) -> Permutation {
        Permutation::from_word_unchecked(self.sample_word(rng))
    }

    pub fn sample_word(&self, rng: &mut Rng) -> Vec<usize> {
        let n = self.size();
        let mut ranks = vec![0usize; n];
        // last cell: prefix sums over all ranks
        let last = self.row(n);
        let u = rng.gen::<f64>() * last[n - 1];
        ranks[n - 1] = last.partition_point(|&p| p <= u).min(n - 1);
        for i in (1..n).rev() {
            let r = ranks[i];
            let row = self.row(i);
            ranks[i - 1] = if self.lambda.is_descent(i) {
                // old rank in r..i, row holds suffix sums
                let u = rng.gen::<f64>() * row[r];
                let above = row[r..].partition_point(|&s| s > u);
                r + above.max(1) - 1
            } else {
                // old rank in 0..r, row holds prefix sums
                let u = rng.gen::<f64>() * row[r - 1];
                row[..r].partition_point(|&p| p <= u).min(r - 1)
            };
        }
        let mut free = Fenwick::full(n);
        let mut word = vec![0usize; n];
        for i in (0..n).rev() {
            let v = free.kth(ranks[i] + 1);
            free.remove(v);
            word[i] = v;
        }
        word
    }
}

/// Fenwick tree over `1..=n` holding 0/1 availability flags.
struct Fenwick {
    tree: Vec<u32>,
    log: usize,
}

impl Fenwick {
    fn full(n: usize) -> Self {
        let mut tree = vec![0u32; n + 1];
        for i in 1..=n {
            tree[i] += 1;
            let j = i + (i & i.wrapping_neg());
            if j <= n {
                tree[j] += tree[i];
            }
        }
        let log = usize::BITS as usize - n.leading_zeros() as usize;
        Self { tree, log }
    }

    fn remove(&mut self, mut i: usize) {
        while i < self.tree.len() {
            self.tree[i] -= 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Smallest `v` with `k` available values in `1..=v`.
    fn kth(&self, mut k: usize) -> usize {
        let mut pos = 0;
        for b in (0..=self.log).rev() {
            let next = pos + (1 << b);
            if next < self.tree.len() && (self.tree[next] as usize) < k {
                pos = next;
                k -= self.tree[next] as usize;
            }
        }
        pos + 1
    }
}
