//! Exact counts of standard fillings.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::composition::{Composition, Permutation};

/// `d(λ)`: the number of permutations whose descent set is `D_λ`.
///
/// Rank-insertion DP: `t[j]` counts fillings of the first `i` cells whose
/// last value has relative rank `j + 1` among them. An ascent after cell `i`
/// sums ranks below the new one, a descent sums ranks at or above it.
pub fn count_fillings(lambda: &Composition) -> BigUint {
    let n = lambda.size();
    if n == 0 {
        return BigUint::one();
    }
    let mut t = vec![BigUint::one()];
    for i in 1..n {
        let mut next = Vec::with_capacity(i + 1);
        if lambda.is_descent(i) {
            // suffix sums: new rank j' needs old rank >= j'
            let mut acc = BigUint::zero();
            let mut suffix = vec![BigUint::zero(); i + 1];
            for j in (0..i).rev() {
                acc += &t[j];
                suffix[j] = acc.clone();
            }
            next.extend(suffix);
        } else {
            let mut acc = BigUint::zero();
            next.push(BigUint::zero());
            for v in &t {
                acc += v;
                next.push(acc.clone());
            }
        }
        t = next;
    }
    t.into_iter().sum()
}

/// Same count by enumerating `S_n`. Only for small `n`.
pub fn count_fillings_brute_force(lambda: &Composition) -> u64 {
    Permutation::all_with_descents(lambda).len() as u64
}
