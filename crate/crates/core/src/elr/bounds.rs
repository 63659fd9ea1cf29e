//! Run-length bounds on the endpoint laws and on the valley integral.

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::rational::{int, ratio};

/// Direction of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Inc,
    Dec,
}

/// Polynomial bounds `lower ≤ F_X ≤ upper` from the first run of `λ`:
/// `1 - (1-t)^R ≤ F_X ≤ 1 - (1-t)^{R+1}` for an increasing run of length
/// `R`, and `t^{R+1} ≤ F_X ≤ t^R` for a decreasing one.
pub fn run_cdf_bounds(lambda: &Composition) -> Result<(Poly, Poly)> {
    let rd = lambda.run_decomposition()?;
    if rd.runs().len() < 2 {
        return Err(Error::NotApplicable(format!(
            "{lambda} has fewer than two runs"
        )));
    }
    let first = rd.runs()[0];
    let r = first.len();
    Ok(if first.ascending {
        (
            Poly::one() - Poly::one_minus_t_pow(r),
            Poly::one() - Poly::one_minus_t_pow(r + 1),
        )
    } else {
        (Poly::monomial(r + 1), Poly::monomial(r))
    })
}

/// Length and direction of the last run of `λ`.
pub fn last_run(lambda: &Composition) -> Option<(usize, Direction)> {
    let rd = lambda.run_decomposition().ok()?;
    rd.runs().last().map(|r| (r.len(), dir(r.ascending)))
}

/// Length and direction of the first run of `λ`.
pub fn first_run(lambda: &Composition) -> Option<(usize, Direction)> {
    let rd = lambda.run_decomposition().ok()?;
    rd.runs().first().map(|r| (r.len(), dir(r.ascending)))
}

fn dir(ascending: bool) -> Direction {
    if ascending {
        Direction::Inc
    } else {
        Direction::Dec
    }
}

/// `(a+1)(a+2)…(b)`, the empty product being 1.
fn rising(a: usize, b: usize) -> BigRational {
    let mut p = BigRational::one();
    for k in a + 1..=b {
        p *= int(k as i64);
    }
    p
}

/// The four closed-form bounds on `Δ = ∫(1-F_Y)(1-F_X)` as stated for the
/// last run of the left factor (length `L`, direction `last`) and the first
/// run of the right factor (length `R`, direction `first`).
pub fn delta_bounds(
    l: usize,
    r: usize,
    last: Direction,
    first: Direction,
) -> (BigRational, BigRational) {
    assert!(l >= 1 && r >= 1, "run lengths must be positive");
    let one = BigRational::one();
    let inv = |k: usize| ratio(1, k as i64);
    match (last, first) {
        (Direction::Inc, Direction::Inc) => (
            inv(r + 1) * (&one - &one / rising(r + 1, r + l)),
            inv(r) * (&one - &one / rising(r, r + l)),
        ),
        (Direction::Dec, Direction::Inc) => (
            inv(l + r + 1),
            if l + r >= 2 { inv(l + r - 1) } else { one },
        ),
        (Direction::Inc, Direction::Dec) => (
            &one - inv(r) - inv(l) + inv(r + l - 1),
            &one - inv(r + 1) - inv(l + 1) + inv(l + r + 1),
        ),
        (Direction::Dec, Direction::Dec) => (
            inv(l + 1) * (&one - &one / rising(l + 1, l + r)),
            inv(l) * (&one - &one / rising(l, l + r)),
        ),
    }
}

/// Bounds on `Δ` obtained by multiplying the run bounds on `1 - F_Y` and
/// `1 - F_X` and integrating exactly. `B(a, b)` below is the Beta integral
/// `∫ t^{a-1} (1-t)^{b-1}`.
///
/// - last run increasing: `1 - t^L ≤ 1 - F_Y ≤ 1 - t^{L+1}`
/// - last run decreasing: `(1-t)^{L+1} ≤ 1 - F_Y ≤ (1-t)^L`
/// - first run increasing: `(1-t)^{R+1} ≤ 1 - F_X ≤ (1-t)^R`
/// - first run decreasing: `1 - t^R ≤ 1 - F_X ≤ 1 - t^{R+1}`
pub fn delta_bounds_integrated(
    l: usize,
    r: usize,
    last: Direction,
    first: Direction,
) -> (BigRational, BigRational) {
    let y = |shift: usize| match last {
        Direction::Inc => Poly::one() - Poly::monomial(l + shift),
        Direction::Dec => Poly::one_minus_t_pow(l + 1 - shift),
    };
    let x = |shift: usize| match first {
        Direction::Inc => Poly::one_minus_t_pow(r + 1 - shift),
        Direction::Dec => Poly::one() - Poly::monomial(r + shift),
    };
    ((&y(0) * &x(0)).integral(), (&y(1) * &x(1)).integral())
}

/// `2(b - a)/n` for two peaks `a < b` of `λ`.
pub fn valley_window_bound(lambda: &Composition, a: usize, b: usize) -> Result<BigRational> {
    let rd = lambda.run_decomposition()?;
    for p in [a, b] {
        if !rd.is_peak(p) {
            return Err(Error::InvalidPeak {
                cell: p,
                composition: lambda.to_string(),
            });
        }
    }
    if a >= b {
        return Err(Error::InvalidArgument(format!(
            "need a < b, got {a} >= {b}"
        )));
    }
    Ok(ratio(2 * (b - a) as i64, lambda.size() as i64))
}
