//! Oriented interval systems, the paintbox permutation they induce, and the
//! systems attached to a composition.

mod construct;
mod distance;
mod sigma;
mod xi;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use construct::{composition_paintbox, run_paintbox};
pub use distance::paintbox_distance;
pub use sigma::{estimate_paintbox_law, paintbox_class_counts, sigma_u, PaintboxSampler};
pub use xi::{sample_xi, XiDraw, XiSampler, XiVector};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, ratio};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Up,
    Down,
}

/// An open interval `(lo, hi)` with exact endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        Self { lo, hi }
    }

    pub fn length(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{}",
            format_rational(&self.lo),
            format_rational(&self.hi)
        )
    }
}

/// A component with floating-point endpoints, used on the sampling path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct FastComponent {
    pub lo: f64,
    pub hi: f64,
    pub label: Label,
}

/// A pair `(U↑, U↓)` of disjoint finite unions of open subintervals of
/// `(0, 1)`, kept in canonical form: sorted, with touching intervals of the
/// same label merged.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntervalSystem {
    up: Vec<Interval>,
    down: Vec<Interval>,
}

impl IntervalSystem {
    /// `(∅, ∅)`.
    pub fn empty() -> Self {
        Self {
            up: Vec::new(),
            down: Vec::new(),
        }
    }

    pub fn new(up: Vec<Interval>, down: Vec<Interval>) -> Result<Self> {
        let mut all: Vec<(Interval, Label)> = up
            .into_iter()
            .map(|i| (i, Label::Up))
            .chain(down.into_iter().map(|i| (i, Label::Down)))
            .collect();
        for (i, _) in &all {
            if i.lo >= i.hi {
                return Err(Error::InvalidIntervalSystem(format!(
                    "empty interval ({i})"
                )));
            }
            if i.lo < BigRational::zero() || i.hi > BigRational::one() {
                return Err(Error::InvalidIntervalSystem(format!(
                    "interval ({i}) leaves (0,1)"
                )));
            }
        }
        all.sort_by(|a, b| a.0.lo.cmp(&b.0.lo));
        for w in all.windows(2) {
            if w[1].0.lo < w[0].0.hi {
                return Err(Error::InvalidIntervalSystem(format!(
                    "intervals ({}) and ({}) overlap",
                    w[0].0, w[1].0
                )));
            }
        }
        let mut up = Vec::new();
        let mut down = Vec::new();
        let mut merged: Vec<(Interval, Label)> = Vec::with_capacity(all.len());
        for (i, l) in all {
            match merged.last_mut() {
                Some((last, ll)) if *ll == l && last.hi == i.lo => last.hi = i.hi,
                _ => merged.push((i, l)),
            }
        }
        for (i, l) in merged {
            match l {
                Label::Up => up.push(i),
                Label::Down => down.push(i),
            }
        }
        Ok(Self { up, down })
    }

    /// Builds a system from `(lo, hi)` numerator pairs over a common
    /// denominator.
    pub fn from_fractions(up: &[(i64, i64)], down: &[(i64, i64)], den: i64) -> Result<Self> {
        let conv = |v: &[(i64, i64)]| {
            v.iter()
                .map(|&(a, b)| Interval::new(ratio(a, den), ratio(b, den)))
                .collect::<Vec<_>>()
        };
        Self::new(conv(up), conv(down))
    }

    pub fn up(&self) -> &[Interval] {
        &self.up
    }

    pub fn down(&self) -> &[Interval] {
        &self.down
    }

    pub fn intervals(&self, label: Label) -> &[Interval] {
        match label {
            Label::Up => &self.up,
            Label::Down => &self.down,
        }
    }

    /// All components sorted by left endpoint.
    pub fn components(&self) -> Vec<(&Interval, Label)> {
        let mut all: Vec<(&Interval, Label)> = self
            .up
            .iter()
            .map(|i| (i, Label::Up))
            .chain(self.down.iter().map(|i| (i, Label::Down)))
            .collect();
        all.sort_by(|a, b| a.0.lo.cmp(&b.0.lo));
        all
    }

    pub(crate) fn fast_components(&self) -> Vec<FastComponent> {
        self.components()
            .into_iter()
            .map(|(i, label)| FastComponent {
                lo: i.lo.to_f64().unwrap_or(f64::NAN),
                hi: i.hi.to_f64().unwrap_or(f64::NAN),
                label,
            })
            .collect()
    }

    /// The lengths of the up and down components, each sorted decreasingly.
    pub fn omega(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let sorted = |v: &[Interval]| {
            let mut l: Vec<BigRational> = v.iter().map(Interval::length).collect();
            l.sort_by(|a, b| b.cmp(a));
            l
        };
        (sorted(&self.up), sorted(&self.down))
    }

    /// Parses the `a,b;c,d` form for each label; empty strings mean no
    /// intervals.
    pub fn parse(up: &str, down: &str) -> Result<Self> {
        Self::new(parse_intervals(up)?, parse_intervals(down)?)
    }

    pub fn up_string(&self) -> String {
        join(&self.up)
    }

    pub fn down_string(&self) -> String {
        join(&self.down)
    }
}

fn parse_intervals(s: &str) -> Result<Vec<Interval>> {
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|pair| {
            let pair = pair.trim().trim_start_matches('(').trim_end_matches(')');
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("interval {pair:?} needs two endpoints")))?;
            Ok(Interval::new(parse_rational(a)?, parse_rational(b)?))
        })
        .collect()
}

fn join(v: &[Interval]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

impl fmt::Display for IntervalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "up={} down={}", join(&self.up), join(&self.down))
    }
}

impl fmt::Debug for IntervalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntervalSystem({self})")
    }
}

impl FromStr for IntervalSystem {
    type Err = Error;

    /// `up=a,b;c,d down=e,f`; either side may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let mut up = "";
        let mut down = "";
        for tok in s.split_whitespace() {
            if let Some(v) = tok.strip_prefix("up=") {
                up = v;
            } else if let Some(v) = tok.strip_prefix("down=") {
                down = v;
            } else {
                return Err(Error::Parse(format!("unexpected token {tok:?}")));
            }
        }
        Self::parse(up, down)
    }
}

impl serde::Serialize for IntervalSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for IntervalSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
