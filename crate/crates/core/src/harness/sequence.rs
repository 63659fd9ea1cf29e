//! Composition sequences indexed by size.
//!
//! - `column`: `(1, …, 1)`
//! - `zigzag:2` / `zigzag:(2)^k` / `zigzag:2,1`: a block of parts repeated,
//!   the last part cut so the size is exactly `n`
//! - `padded:3,2,4,1` (alias `fixed:3,2,4,1`): a fixed prefix followed by
//!   parts equal to 1
//! - `runs:+3,-2,+4,-1`: runs of the given directions with lengths
//!   proportional to the weights
//! - `random`: a uniform composition of `n`, drawn from the master seed

use std::fmt;
use std::str::FromStr;

use rand::Rng as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::paintbox::IntervalSystem;
use crate::rational::ratio;
use crate::rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    Column,
    Zigzag(Vec<usize>),
    Padded(Vec<usize>),
    Runs(Vec<(bool, usize)>),
    Random,
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("part {p:?}: {e}")))
        })
        .collect::<Result<_>>()?;
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::Parse(format!("bad part list {s:?}")));
    }
    Ok(parts)
}

impl FromStr for SequenceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        match kind {
            "column" => Ok(Self::Column),
            "random" => Ok(Self::Random),
            "zigzag" => {
                let block = arg
                    .trim()
                    .trim_end_matches("^k")
                    .trim_start_matches('(')
                    .trim_end_matches(')');
                Ok(Self::Zigzag(parse_parts(block)?))
            }
            "padded" | "fixed" => {
                let prefix = arg.trim().trim_end_matches("-suffix");
                Ok(Self::Padded(parse_parts(prefix)?))
            }
            "runs" => {
                let runs = arg
                    .split(',')
                    .map(|r| {
                        let r = r.trim();
                        let (up, w) = match r.as_bytes().first() {
                            Some(b'+') => (true, &r[1..]),
                            Some(b'-') => (false, &r[1..]),
                            _ => return Err(Error::Parse(format!("run {r:?} needs a sign"))),
                        };
                        let w: usize = w
                            .parse()
                            .map_err(|e| Error::Parse(format!("run weight {w:?}: {e}")))?;
                        if w == 0 {
                            return Err(Error::Parse("run weights must be positive".into()));
                        }
                        Ok((up, w))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if runs.is_empty() || runs.windows(2).any(|w| w[0].0 == w[1].0) {
                    return Err(Error::Parse(
                        "runs must be nonempty and alternate in direction".into(),
                    ));
                }
                Ok(Self::Runs(runs))
            }
            _ => Err(Error::Parse(format!("unknown sequence {s:?}"))),
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Self::Column => f.write_str("column"),
            Self::Random => f.write_str("random"),
            Self::Zigzag(b) => write!(f, "zigzag:{}", join(b)),
            Self::Padded(p) => write!(f, "padded:{}", join(p)),
            Self::Runs(r) => {
                let s: Vec<String> = r
                    .iter()
                    .map(|(up, w)| format!("{}{w}", if *up { '+' } else { '-' }))
                    .collect();
                write!(f, "runs:{}", s.join(","))
            }
        }
    }
}

impl Serialize for SequenceSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SequenceSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

impl SequenceSpec {
    /// The member of size `n`; `seed` is only used by `random`.
    pub fn at(&self, n: usize, seed: u64) -> Result<Composition> {
        if n == 0 {
            return Err(Error::InvalidArgument("sizes must be positive".into()));
        }
        match self {
            Self::Column => Ok(Composition::column(n)),
            Self::Zigzag(block) => {
                let mut parts = Vec::new();
                let mut total = 0;
                for &p in block.iter().cycle() {
                    let p = p.min(n - total);
                    parts.push(p);
                    total += p;
                    if total == n {
                        break;
                    }
                }
                Composition::new(parts)
            }
            Self::Padded(prefix) => {
                let size: usize = prefix.iter().sum();
                if n < size {
                    return Err(Error::ConfigMismatch(format!(
                        "size {n} is smaller than the prefix {self}"
                    )));
                }
                let mut parts = prefix.clone();
                parts.extend(std::iter::repeat_n(1, n - size));
                Composition::new(parts)
            }
            Self::Runs(runs) => {
                let steps = n - 1;
                if steps < runs.len() {
                    return Err(Error::ConfigMismatch(format!(
                        "size {n} is too small for {} runs",
                        runs.len()
                    )));
                }
                let lengths = apportion(steps, &runs.iter().map(|r| r.1).collect::<Vec<_>>());
                let mut descents = Vec::new();
                let mut s = 0;
                for (&(up, _), &len) in runs.iter().zip(&lengths) {
                    for _ in 0..len {
                        s += 1;
                        if !up {
                            descents.push(s);
                        }
                    }
                }
                Composition::from_descents(&descents, n)
            }
            Self::Random => {
                let mut r = rng::stream(seed, n as u64);
                let descents: Vec<usize> = (1..n).filter(|_| r.gen::<bool>()).collect();
                Composition::from_descents(&descents, n)
            }
        }
    }

    /// The interval system the sequence's paintboxes approach, when the
    /// sequence has one.
    pub fn limit(&self) -> Option<IntervalSystem> {
        match self {
            Self::Column | Self::Padded(_) => {
                Some(IntervalSystem::parse("", "0,1").expect("valid system"))
            }
            Self::Zigzag(block) if block.iter().all(|&p| p <= 2) => Some(IntervalSystem::empty()),
            Self::Runs(runs) => {
                let total: usize = runs.iter().map(|r| r.1).sum();
                let mut up = Vec::new();
                let mut down = Vec::new();
                let mut acc = 0;
                for &(is_up, w) in runs {
                    let iv = crate::paintbox::Interval::new(
                        ratio(acc as i64, total as i64),
                        ratio((acc + w) as i64, total as i64),
                    );
                    if is_up {
                        up.push(iv);
                    } else {
                        down.push(iv);
                    }
                    acc += w;
                }
                IntervalSystem::new(up, down).ok()
            }
            _ => None,
        }
    }
}

/// Splits `total` into integer parts proportional to `weights` (largest
/// remainder), each at least 1 when `total >= weights.len()`.
fn apportion(total: usize, weights: &[usize]) -> Vec<usize> {
    let wsum: usize = weights.iter().sum();
    let mut out: Vec<usize> = weights.iter().map(|&w| (total * w / wsum).max(1)).collect();
    let mut rem: Vec<(usize, usize)> = weights
        .iter()
        .enumerate()
        .map(|(i, &w)| ((total * w) % wsum, i))
        .collect();
    rem.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut assigned: usize = out.iter().sum();
    let mut idx = 0;
    while assigned < total {
        out[rem[idx % rem.len()].1] += 1;
        assigned += 1;
        idx += 1;
    }
    while assigned > total {
        let i = (0..out.len()).max_by_key(|&i| out[i]).expect("nonempty");
        out[i] -= 1;
        assigned -= 1;
    }
    out
}
