//! Partitions and standard Young tableaux.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    pub fn column(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Rows whose last cell is removable.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&r| r + 1 == self.0.len() || self.0[r + 1] < self.0[r])
            .collect()
    }

    /// Shape with one cell removed from row `r` (must be a corner).
    pub fn remove_corner(&self, r: usize) -> Self {
        let mut p = self.0.clone();
        p[r] -= 1;
        if p[r] == 0 {
            p.pop();
        }
        Self(p)
    }

    /// Rows where a cell can be added.
    pub fn addable(&self) -> Vec<usize> {
        (0..=self.0.len())
            .filter(|&r| r == 0 || r == self.0.len() || self.0[r] < self.0[r - 1])
            .collect()
    }

    pub fn add_cell(&self, r: usize) -> Self {
        let mut p = self.0.clone();
        if r == p.len() {
            p.push(1);
        } else {
            p[r] += 1;
        }
        Self(p)
    }

    /// Whether `other` is obtained by adding one cell.
    pub fn is_covered_by(&self, other: &Self) -> bool {
        other.size() == self.size() + 1 && self.is_contained_in(other)
    }

    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Self> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("partition part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "partition parts must be positive".into(),
            ));
        }
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A standard Young tableau: rows increase to the right, columns increase
/// downwards, entries are `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Self { rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        Self { rows }
    }

    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTableau(m));
        if self.rows.iter().any(Vec::is_empty) {
            return bad("empty row".into());
        }
        for w in self.rows.windows(2) {
            if w[1].len() > w[0].len() {
                return bad("row lengths must weakly decrease".into());
            }
            if w[1].iter().zip(&w[0]).any(|(b, a)| b <= a) {
                return bad("columns must increase downwards".into());
            }
        }
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return bad("rows must increase".into());
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return bad(format!("entries must be 1..={n} without repeats"));
            }
            seen[v] = true;
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    /// Row index (0-based) of each entry `1..=n`.
    pub fn row_of(&self) -> Vec<usize> {
        let mut r = vec![0; self.size() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                r[v] = i;
            }
        }
        r
    }

    /// `T↓`: the tableau without its largest entry.
    pub fn delete_largest(&self) -> Self {
        let n = self.size();
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            if row.last() == Some(&n) {
                row.pop();
                break;
            }
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Self { rows }
    }

    /// The entries `<= k`.
    pub fn restrict(&self, k: usize) -> Self {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&v| v <= k).collect::<Vec<_>>())
            .filter(|r| !r.is_empty())
            .collect();
        Self { rows }
    }

    /// `{i : i + 1 lies in a strictly lower row than i}`.
    pub fn descents(&self) -> Vec<usize> {
        let r = self.row_of();
        (1..self.size()).filter(|&i| r[i + 1] > r[i]).collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("[{}]", s.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}
