//! Young's lattice: path counts, the projection of fillings to Young paths,
//! and the identities linking the two graded graphs.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::insertion::{insertion_tableau, rsk};
use super::tableau::{Partition, Tableau};
use crate::composition::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::graph::{count_fillings, FillingSampler};
use crate::rng;
use crate::stats::Estimate;

/// Largest size accepted by the exhaustive enumerations.
pub const ENUMERATION_BOUND: usize = 9;

fn check_bound(n: usize) -> Result<()> {
    if n > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            size: n,
            bound: ENUMERATION_BOUND,
        });
    }
    Ok(())
}

/// Number of standard Young tableaux of shape `τ` (hook length formula).
pub fn count_syt(tau: &Partition) -> BigUint {
    let parts = tau.parts();
    let n = tau.size();
    let mut num = BigUint::one();
    for k in 2..=n {
        num *= k;
    }
    let mut den = BigUint::one();
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = parts[r + 1..].iter().take_while(|&&p| p > c).count();
            den *= arm + leg + 1;
        }
    }
    num / den
}

/// All standard Young tableaux of shape `τ`.
pub fn all_syt(tau: &Partition) -> Vec<Tableau> {
    fn rec(shape: &Partition, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = shape.size();
        if n == 0 {
            out.push(Vec::new());
            return;
        }
        for r in shape.corners() {
            let smaller = shape.remove_corner(r);
            let mut sub = Vec::new();
            rec(&smaller, &mut sub);
            for mut rows in sub {
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                rows[r].push(n);
                out.push(rows);
            }
        }
    }
    let mut out = Vec::new();
    rec(tau, &mut out);
    let mut ts: Vec<Tableau> = out.into_iter().map(Tableau::from_rows_unchecked).collect();
    ts.sort();
    ts
}

/// `d_Y(τ, ρ)`: the number of saturated chains from `τ` up to `ρ`.
pub fn count_young_paths(tau: &Partition, rho: &Partition) -> BigUint {
    if !tau.is_contained_in(rho) {
        return BigUint::zero();
    }
    let mut level: HashMap<Partition, BigUint> = HashMap::from([(tau.clone(), BigUint::one())]);
    for _ in tau.size()..rho.size() {
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for (p, c) in &level {
            for r in p.addable() {
                let q = p.add_cell(r);
                if q.is_contained_in(rho) {
                    *next.entry(q).or_default() += c;
                }
            }
        }
        level = next;
    }
    level.remove(rho).unwrap_or_default()
}

/// `K^Y_τ(ρ) = d_Y(τ, ρ) / d_Y(∅, ρ)`.
pub fn young_kernel(tau: &Partition, rho: &Partition) -> BigRational {
    BigRational::new(count_young_paths(tau, rho).into(), count_syt(rho).into())
}

/// Shapes of `P(σ↓k)` for `k = 1..=n`.
pub fn project_path(sigma: &Permutation) -> Vec<Partition> {
    let (p, _) = rsk(sigma);
    (1..=sigma.len()).map(|k| p.restrict(k).shape()).collect()
}

/// Both sides of the identity
/// `d_Z(∅, λ) = Σ_τ d_Y(∅, τ) · #{Q ∈ SYT(τ) : des(Q) = D_λ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkCount {
    #[serde(serialize_with = "crate::rational::ser_display")]
    pub fillings: BigUint,
    pub terms: Vec<LinkTerm>,
    #[serde(serialize_with = "crate::rational::ser_display")]
    pub total: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkTerm {
    pub shape: Partition,
    #[serde(serialize_with = "crate::rational::ser_display")]
    pub syt: BigUint,
    pub matching_recording: u64,
}

impl LinkCount {
    pub fn holds(&self) -> bool {
        self.fillings == self.total
    }
}

/// Evaluates both sides of the filling/tableau counting identity by
/// exhaustive tableau generation.
pub fn link_count(lambda: &Composition) -> Result<LinkCount> {
    let n = lambda.size();
    check_bound(n)?;
    let mut terms = Vec::new();
    let mut total = BigUint::zero();
    for tau in Partition::all_of_size(n) {
        let matching = all_syt(&tau)
            .iter()
            .filter(|q| q.descents() == lambda.descents())
            .count() as u64;
        let syt = count_syt(&tau);
        total += &syt * matching;
        terms.push(LinkTerm {
            shape: tau,
            syt,
            matching_recording: matching,
        });
    }
    Ok(LinkCount {
        fillings: count_fillings(lambda),
        terms,
        total,
    })
}

pub fn verify_linkyz(lambda: &Composition) -> Result<bool> {
    Ok(link_count(lambda)?.holds())
}

/// `Σ_ρ law(ρ) · d_Y(∅, τ) · K^Y_τ(ρ)` for every `τ ⊢ k` reachable from the
/// support of `law`.
fn mixture<W: Clone>(
    law: &BTreeMap<Partition, W>,
    k: usize,
    weight: impl Fn(&W, &BigRational) -> W,
    add: impl Fn(&mut W, W),
    zero: W,
) -> BTreeMap<Partition, W> {
    let mut out = BTreeMap::new();
    for tau in Partition::all_of_size(k) {
        let f_tau = BigRational::from_integer(count_syt(&tau).into());
        let mut acc = zero.clone();
        for (rho, w) in law {
            let k_tr = young_kernel(&tau, rho);
            if !k_tr.is_zero() {
                add(&mut acc, weight(w, &(&f_tau * k_tr)));
            }
        }
        out.insert(tau, acc);
    }
    out
}

/// Exact law of `shape(P(σ_λ↓k))` and of `shape(Q(σ_λ))` by enumerating
/// all fillings of `λ`.
pub fn exact_projected_marginal(
    lambda: &Composition,
    k: usize,
) -> Result<(
    BTreeMap<Partition, BigRational>,
    BTreeMap<Partition, BigRational>,
)> {
    let n = lambda.size();
    check_bound(n)?;
    check_level(k, n)?;
    let omega = Permutation::all_with_descents(lambda);
    let total = BigRational::from_integer(omega.len().into());
    let mut proj: BTreeMap<Partition, BigRational> = BTreeMap::new();
    let mut full: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for s in &omega {
        let (p, _) = rsk(s);
        *proj
            .entry(p.restrict(k).shape())
            .or_insert_with(BigRational::zero) += BigRational::one();
        *full.entry(p.shape()).or_insert_with(BigRational::zero) += BigRational::one();
    }
    for v in proj.values_mut().chain(full.values_mut()) {
        *v /= &total;
    }
    Ok((proj, full))
}

/// The mixture prediction `Σ_ρ law(ρ) d_Y(∅,τ) K^Y_τ(ρ)`, exact.
pub fn predicted_marginal(
    shape_law: &BTreeMap<Partition, BigRational>,
    k: usize,
) -> BTreeMap<Partition, BigRational> {
    mixture(
        shape_law,
        k,
        |w, c| w * c,
        |a, b| *a += b,
        BigRational::zero(),
    )
}

fn check_level(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= {n}, got {k}"
        )));
    }
    Ok(())
}

/// Monte Carlo law of `shape(P(σ_λ↓k))` next to the mixture prediction
/// computed from the empirical law of `shape(Q(σ_λ))`.
#[derive(Clone, Debug, Serialize)]
pub struct YoungMarginal {
    pub k: usize,
    pub samples: u64,
    pub empirical: BTreeMap<Partition, Estimate>,
    pub predicted: BTreeMap<Partition, f64>,
    pub shape_law: BTreeMap<Partition, Estimate>,
}

impl YoungMarginal {
    /// Largest `|estimate - prediction| / stderr`, using the stderr at the
    /// predicted value when the empirical one vanishes.
    pub fn max_sigma(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (tau, pred) in &self.predicted {
            let est = self.empirical.get(tau).map_or(0.0, |e| e.estimate);
            let diff = (est - pred).abs();
            let se = Estimate::stderr_at(*pred, self.samples)
                .max(self.empirical.get(tau).map_or(0.0, |e| e.stderr));
            let z = if se > 0.0 {
                diff / se
            } else if diff > 1e-12 {
                f64::INFINITY
            } else {
                0.0
            };
            worst = worst.max(z);
        }
        worst
    }
}

pub fn projected_marginal(
    lambda: &Composition,
    k: usize,
    samples: usize,
    seed: u64,
) -> Result<YoungMarginal> {
    let n = lambda.size();
    check_level(k, n)?;
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be positive".into()));
    }
    let sampler = FillingSampler::new(lambda);
    let chunks = rng::par_chunks(samples, seed, |r, count| {
        let mut m: HashMap<(Partition, Partition), u64> = HashMap::new();
        for _ in 0..count {
            let p = insertion_tableau(&sampler.sample_word(r));
            *m.entry((p.restrict(k).shape(), p.shape())).or_default() += 1;
        }
        m
    });
    let mut proj: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut full: BTreeMap<Partition, u64> = BTreeMap::new();
    for m in chunks {
        for ((tau, rho), c) in m {
            *proj.entry(tau).or_default() += c;
            *full.entry(rho).or_default() += c;
        }
    }
    let s = samples as u64;
    let freq: BTreeMap<Partition, f64> = full
        .iter()
        .map(|(r, &c)| (r.clone(), c as f64 / s as f64))
        .collect();
    let predicted = mixture(
        &freq,
        k,
        |w, c| w * c.to_f64().unwrap_or(0.0),
        |a, b| *a += b,
        0.0,
    );
    Ok(YoungMarginal {
        k,
        samples: s,
        empirical: proj
            .into_iter()
            .map(|(t, c)| (t, Estimate::binomial(c, s, 1.0)))
            .collect(),
        predicted,
        shape_law: full
            .into_iter()
            .map(|(t, c)| (t, Estimate::binomial(c, s, 1.0)))
            .collect(),
    })
}

/// For uniform `σ_λ`, the number of fillings whose projected Young path up
/// to level `k` is the tableau `T`, for every standard `T` with `|T| = k`,
/// grouped by shape.
pub fn projected_path_counts(
    lambda: &Composition,
    k: usize,
) -> Result<BTreeMap<Partition, BTreeMap<Tableau, u64>>> {
    let n = lambda.size();
    check_bound(n)?;
    check_level(k, n)?;
    let mut out: BTreeMap<Partition, BTreeMap<Tableau, u64>> = Partition::all_of_size(k)
        .into_iter()
        .map(|tau| {
            let m = all_syt(&tau).into_iter().map(|t| (t, 0)).collect();
            (tau, m)
        })
        .collect();
    for s in Permutation::all_with_descents(lambda) {
        let t = insertion_tableau(s.word()).restrict(k);
        *out.get_mut(&t.shape())
            .and_then(|m| m.get_mut(&t))
            .expect("every standard tableau is listed") += 1;
    }
    Ok(out)
}

/// Whether the projected path probability depends only on the shape at
/// level `k`.
pub fn check_harmonicity_transfer(lambda: &Composition, k: usize) -> Result<bool> {
    Ok(projected_path_counts(lambda, k)?
        .values()
        .all(|m| m.values().min() == m.values().max()))
}
