//! Exact polynomials and piecewise polynomials on `[0, 1]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, parse_rational};

/// A polynomial with rational coefficients, lowest degree first, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// `t`.
    pub fn t() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        Self::new(c)
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let mut c = Vec::with_capacity(k + 1);
        let mut binom = BigInt::one();
        for j in 0..=k {
            let sign = if j % 2 == 0 {
                binom.clone()
            } else {
                -binom.clone()
            };
            c.push(BigRational::from_integer(sign));
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// The antiderivative vanishing at 0, i.e. `t ↦ ∫_0^t p`.
    pub fn integral_from_zero(&self) -> Self {
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(BigRational::zero());
        for (k, a) in self.coeffs.iter().enumerate() {
            c.push(a / int(k as i64 + 1));
        }
        Self::new(c)
    }

    /// `t ↦ ∫_t^1 p`.
    pub fn integral_to_one(&self) -> Self {
        let anti = self.integral_from_zero();
        let total = anti.eval(&BigRational::one());
        Self::constant(total) - anti
    }

    /// `∫_0^1 p`.
    pub fn integral(&self) -> BigRational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a / int(k as i64 + 1))
            .sum()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * int(k as i64))
                .collect(),
        )
    }

    /// `p(1 - t)`.
    pub fn reflect(&self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * Self::one_minus_t_pow(1) + Self::constant(c.clone());
        }
        acc
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = BigRational::zero();
        Poly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + rhs.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self + &(-rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs.clone())
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = format_rational(&c.abs());
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}·t")?,
                _ => write!(f, "{a}·t^{k}")?,
            }
        }
        Ok(())
    }
}

/// A function on `[0, 1]` given by one polynomial per piece between
/// consecutive breakpoints `0 = t_0 < … < t_m = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePolynomial {
    breakpoints: Vec<BigRational>,
    pieces: Vec<Poly>,
}

impl PiecewisePolynomial {
    pub fn new(breakpoints: Vec<BigRational>, pieces: Vec<Poly>) -> Result<Self> {
        if breakpoints.len() != pieces.len() + 1 || pieces.is_empty() {
            return Err(Error::InvalidArgument(
                "need one more breakpoint than pieces".into(),
            ));
        }
        if !breakpoints[0].is_zero() || !breakpoints.last().unwrap().is_one() {
            return Err(Error::InvalidArgument("breakpoints must span [0,1]".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "breakpoints must increase strictly".into(),
            ));
        }
        Ok(Self {
            breakpoints,
            pieces,
        })
    }

    /// A single polynomial on all of `[0, 1]`.
    pub fn single(p: Poly) -> Self {
        Self {
            breakpoints: vec![BigRational::zero(), BigRational::one()],
            pieces: vec![p],
        }
    }

    pub fn breakpoints(&self) -> &[BigRational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Poly] {
        &self.pieces
    }

    fn piece_at(&self, t: &BigRational) -> &Poly {
        let idx = self.breakpoints[1..].partition_point(|b| b < t);
        &self.pieces[idx.min(self.pieces.len() - 1)]
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.piece_at(t).eval(t)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        let idx = self.breakpoints[1..].partition_point(|b| b.to_f64().unwrap_or(1.0) < t);
        self.pieces[idx.min(self.pieces.len() - 1)].eval_f64(t)
    }

    /// `m + 1` equally spaced rational points plus all breakpoints, sorted.
    pub fn grid(&self, m: usize) -> Vec<BigRational> {
        let mut pts: Vec<BigRational> = (0..=m)
            .map(|k| BigRational::new(BigInt::from(k), BigInt::from(m)))
            .chain(self.breakpoints.iter().cloned())
            .collect();
        pts.sort();
        pts.dedup();
        pts
    }

    /// Whether the function is a CDF: `F(0) = 0`, `F(1) = 1` and each piece
    /// nondecreasing. A piece whose derivative has no root inside is
    /// certified by Sturm counting plus one sign evaluation; otherwise the
    /// derivative's sign is checked on a fine rational grid.
    pub fn is_cdf(&self) -> bool {
        if !self.eval(&BigRational::zero()).is_zero() || !self.eval(&BigRational::one()).is_one() {
            return false;
        }
        let two = int(2);
        self.pieces
            .iter()
            .zip(self.breakpoints.windows(2))
            .all(|(p, w)| {
                let d = p.derivative();
                let mid = (&w[0] + &w[1]) / &two;
                let certified =
                    sturm_root_count(&d, &w[0], &w[1]) == 0 && !d.eval(&mid).is_negative();
                certified || sampled_nonnegative(&d, &w[0], &w[1])
            })
    }
}

/// Number of distinct real roots of `p` in `(a, b]`, by Sturm's theorem.
pub fn sturm_root_count(p: &Poly, a: &BigRational, b: &BigRational) -> usize {
    if p.is_zero() || p.degree() == 0 {
        return 0;
    }
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        let r = poly_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    let changes = |x: &BigRational| {
        let signs: Vec<bool> = seq
            .iter()
            .map(|q| q.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(a).saturating_sub(changes(b))
}

fn sampled_nonnegative(d: &Poly, a: &BigRational, b: &BigRational) -> bool {
    let steps = 256;
    (0..=steps).all(|k| {
        let t = a + (b - a) * BigRational::new(BigInt::from(k), BigInt::from(steps));
        !d.eval(&t).is_negative()
    })
}

fn poly_rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.coeffs.clone();
    let db = b.coeffs.len() - 1;
    let lead = b.coeffs[db].clone();
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let q = r.last().unwrap() / &lead;
        for (j, c) in b.coeffs.iter().enumerate() {
            r[shift + j] -= &q * c;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    Poly::new(r)
}

#[derive(Serialize, Deserialize)]
struct PiecewiseJson {
    breakpoints: Vec<String>,
    pieces: Vec<Vec<String>>,
}

impl Serialize for PiecewisePolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PiecewiseJson {
            breakpoints: self.breakpoints.iter().map(format_rational).collect(),
            pieces: self
                .pieces
                .iter()
                .map(|p| p.coeffs.iter().map(format_rational).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiecewisePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PiecewiseJson::deserialize(d)?;
        let parse_all = |v: &[String]| {
            v.iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>>>()
        };
        let bps = parse_all(&raw.breakpoints).map_err(D::Error::custom)?;
        let pieces = raw
            .pieces
            .iter()
            .map(|c| parse_all(c).map(Poly::new))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        PiecewisePolynomial::new(bps, pieces).map_err(D::Error::custom)
    }
}
