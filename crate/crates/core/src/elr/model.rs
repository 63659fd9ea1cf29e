//! Endpoint laws and volumes of the alternating-inequality chain.
//!
//! A composition `λ ⊢ n` defines the region of `[0,1]^n` where
//! `x_i < x_{i+1}` for ascents and `x_i > x_{i+1}` for descents. Its volume
//! `V_λ` satisfies `n! V_λ = d(λ)`, and the first and last coordinates
//! `X_λ`, `Y_λ` of a uniform point of the region have polynomial laws.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{PiecewisePolynomial, Poly};
use crate::composition::{Composition, ConcatMode, Window};
use crate::error::{Error, Result};
use crate::graph::count_fillings;

/// Unnormalized density of the last coordinate: integrate the chain one
/// cell at a time, `∫_0^t` across an ascent and `∫_t^1` across a descent.
pub fn last_cell_weight(lambda: &Composition) -> Poly {
    let mut g = Poly::one();
    for i in 1..lambda.size() {
        g = if lambda.is_descent(i) {
            g.integral_to_one()
        } else {
            g.integral_from_zero()
        };
    }
    g
}

/// The same weight computed run by run: an ascending run of length `l` acts
/// as convolution with `(t-s)^{l-1}/(l-1)!` from 0 and a descending run as
/// convolution with `(s-t)^{l-1}/(l-1)!` towards 1.
pub fn last_cell_weight_by_runs(lambda: &Composition) -> Result<Poly> {
    let rd = lambda.run_decomposition()?;
    let mut g = Poly::one();
    for run in rd.runs() {
        g = run_kernel(&g, run.len(), run.ascending);
    }
    Ok(g)
}

/// `∫_0^t (t-s)^{l-1}/(l-1)! g(s) ds` (ascending) or
/// `∫_t^1 (s-t)^{l-1}/(l-1)! g(s) ds` (descending), expanded binomially.
fn run_kernel(g: &Poly, l: usize, ascending: bool) -> Poly {
    let mut fact = BigRational::one();
    for k in 1..l {
        fact *= BigRational::from_integer(k.into());
    }
    let mut out = Poly::zero();
    let mut binom = BigRational::one();
    for a in 0..l {
        // term C(l-1, a) t^a (-s)^{l-1-a}, i.e. ± t^a ∫ s^{l-1-a} g(s)
        let b = l - 1 - a;
        let moment = &Poly::monomial(b) * g;
        let inner = if ascending {
            moment.integral_from_zero()
        } else {
            moment.integral_to_one()
        };
        // ascending: (t - s)^{l-1}; descending: (s - t)^{l-1}
        let negative = if ascending { b % 2 == 1 } else { a % 2 == 1 };
        let coef = if negative {
            -binom.clone()
        } else {
            binom.clone()
        };
        out = out + (&Poly::monomial(a) * &inner).scale(&coef);
        binom = binom * BigRational::from_integer((l - 1 - a).into())
            / BigRational::from_integer((a + 1).into());
    }
    out.scale(&(BigRational::one() / fact))
}

/// Densities, CDFs and volume of the endpoint variables.
#[derive(Clone, Debug, PartialEq)]
pub struct EndpointLaws {
    pub density_x: Poly,
    pub density_y: Poly,
    pub cdf_x: PiecewisePolynomial,
    pub cdf_y: PiecewisePolynomial,
    pub volume: BigRational,
}

impl EndpointLaws {
    pub fn cdf_x_poly(&self) -> &Poly {
        &self.cdf_x.pieces()[0]
    }

    pub fn cdf_y_poly(&self) -> &Poly {
        &self.cdf_y.pieces()[0]
    }
}

/// Exact laws of `X_λ` (first cell) and `Y_λ` (last cell). For the single
/// cell both are the same uniform point.
pub fn marginal_cdfs(lambda: &Composition) -> Result<EndpointLaws> {
    if lambda.is_empty() {
        return Err(Error::InvalidComposition(
            "endpoint laws of the empty composition".into(),
        ));
    }
    let wy = last_cell_weight(lambda);
    let wx = last_cell_weight(&lambda.reversed());
    let volume = wy.integral();
    let inv = BigRational::one() / &volume;
    let density_y = wy.scale(&inv);
    let density_x = wx.scale(&inv);
    Ok(EndpointLaws {
        cdf_x: PiecewisePolynomial::single(density_x.integral_from_zero()),
        cdf_y: PiecewisePolynomial::single(density_y.integral_from_zero()),
        density_x,
        density_y,
        volume,
    })
}

/// `V_λ`.
pub fn volume(lambda: &Composition) -> Result<BigRational> {
    if lambda.is_empty() {
        return Err(Error::InvalidComposition(
            "volume of the empty composition".into(),
        ));
    }
    Ok(last_cell_weight(lambda).integral())
}

/// `V_λ V_μ P(Y_λ ≤_ε X_μ)` with independent endpoints; `≤_+` is `≤` and
/// `≤_-` is `≥`.
pub fn concat_volume(
    lambda: &Composition,
    mu: &Composition,
    mode: ConcatMode,
) -> Result<BigRational> {
    if lambda.is_empty() || mu.is_empty() {
        return Err(Error::InvalidArgument(
            "concatenation needs two nonempty compositions".into(),
        ));
    }
    let l = marginal_cdfs(lambda)?;
    let m = marginal_cdfs(mu)?;
    let fx = m.cdf_x_poly();
    let p = match mode {
        ConcatMode::Plus => (&l.density_y * &(Poly::one() - fx.clone())).integral(),
        ConcatMode::Minus => (&l.density_y * fx).integral(),
    };
    Ok(l.volume * m.volume * p)
}

/// `1 - F_Y` of the cells left of a valley, or the constant 1 when there are
/// none (the left neighbour is then a point mass at 1).
fn left_survival(lambda: &Composition, v: usize) -> Result<Poly> {
    if v == 1 {
        return Ok(Poly::one());
    }
    let left = lambda.restrict(Window::Before(v))?;
    Ok(Poly::one() - marginal_cdfs(&left)?.cdf_y_poly().clone())
}

fn right_survival(lambda: &Composition, v: usize) -> Result<Poly> {
    if v == lambda.size() {
        return Ok(Poly::one());
    }
    let right = lambda.restrict(Window::After(v))?;
    Ok(Poly::one() - marginal_cdfs(&right)?.cdf_x_poly().clone())
}

fn check_valley(lambda: &Composition, v: usize) -> Result<()> {
    let rd = lambda.run_decomposition()?;
    if v == 0 || v > lambda.size() || !rd.is_valley(v) {
        return Err(Error::InvalidValley {
            cell: v,
            composition: lambda.to_string(),
        });
    }
    Ok(())
}

/// `∫_0^1 (1 - F_Y(t)) (1 - F_X(t)) dt` for the left part of `λ` and the
/// right part of `μ`.
pub fn delta(lambda: &Composition, mu: &Composition) -> Result<BigRational> {
    let fy = marginal_cdfs(lambda)?;
    let fx = marginal_cdfs(mu)?;
    let a = Poly::one() - fy.cdf_y_poly().clone();
    let b = Poly::one() - fx.cdf_x_poly().clone();
    Ok((&a * &b).integral())
}

/// `P(1 sits in cell v)` for a uniform filling, from the integral form
/// `(1/n) / ∫ (1 - F_{Y_{λ<v}}) (1 - F_{X_{λ>v}})`.
pub fn prob_one_in_valley(lambda: &Composition, v: usize) -> Result<BigRational> {
    check_valley(lambda, v)?;
    let integral = (&left_survival(lambda, v)? * &right_survival(lambda, v)?).integral();
    let n = BigRational::from_integer(lambda.size().into());
    Ok(BigRational::one() / (n * integral))
}

/// The same probability by counting: `1` goes to `v` and the remaining
/// values split between the two sides, `C(n-1, |λ<v|) d(λ<v) d(λ>v) / d(λ)`.
pub fn prob_one_in_valley_counting(lambda: &Composition, v: usize) -> Result<BigRational> {
    check_valley(lambda, v)?;
    let n = lambda.size();
    let left = lambda.restrict_range(1, v - 1);
    let right = lambda.restrict_range(v + 1, n);
    let binom = binomial(n - 1, v - 1);
    let num = binom * count_fillings(&left) * count_fillings(&right);
    Ok(BigRational::new(num.into(), count_fillings(lambda).into()))
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    let mut b = BigUint::one();
    for i in 0..k {
        b = b * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    b
}

/// `P(1 ∈ λ_{>a,<b})`, summed over the valleys strictly between `a` and `b`.
pub fn prob_one_between(lambda: &Composition, a: usize, b: usize) -> Result<BigRational> {
    let rd = lambda.run_decomposition()?;
    let mut total = BigRational::zero();
    for v in rd.valleys().into_iter().filter(|&v| a < v && v < b) {
        total += prob_one_in_valley_counting(lambda, v)?;
    }
    Ok(total)
}
