//! Interval systems attached to a composition.

use super::{Interval, IntervalSystem};
use crate::composition::{CellKind, Composition};
use crate::error::{Error, Result};
use crate::rational::ratio;

/// `U_λ`: the step `s ∈ [1, n-1]` owns `[(s-1)/(n-1), s/(n-1)]`, labelled down
/// when `s` is a descent and up otherwise; touching steps of equal label merge.
pub fn composition_paintbox(lambda: &Composition) -> Result<IntervalSystem> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::UndefinedPaintbox(n));
    }
    let m = (n - 1) as i64;
    let mut up = Vec::new();
    let mut down = Vec::new();
    for s in 1..n {
        let i = Interval::new(ratio(s as i64 - 1, m), ratio(s as i64, m));
        if lambda.is_descent(s) {
            down.push(i);
        } else {
            up.push(i);
        }
    }
    IntervalSystem::new(up, down)
}

/// `Ũ_λ`: each extreme cell `a_i` owns `((a_i - 1)/n, (a_{i+1} - 1)/n)`, with
/// `a_{i+1} = n + 1` for the last cell; valleys give up intervals and peaks
/// down intervals.
pub fn run_paintbox(lambda: &Composition) -> Result<IntervalSystem> {
    let rd = lambda.run_decomposition()?;
    let n = lambda.size() as i64;
    let ext = rd.extremes();
    let mut up = Vec::new();
    let mut down = Vec::new();
    for (idx, &a) in ext.iter().enumerate() {
        let next = ext.get(idx + 1).map_or(n + 1, |&b| b as i64);
        let i = Interval::new(ratio(a as i64 - 1, n), ratio(next - 1, n));
        match rd.kind(a) {
            CellKind::Valley => up.push(i),
            CellKind::Peak => down.push(i),
            CellKind::Interior => unreachable!("extreme cells are valleys or peaks"),
        }
    }
    IntervalSystem::new(up, down)
}
