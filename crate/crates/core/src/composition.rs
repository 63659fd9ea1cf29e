//! Compositions, their descent sets and ribbon structure.
//!
//! Cells of a composition of `n` are numbered `1..=n`. The descent set of
//! `(λ_1, …, λ_r)` is `{λ_1, λ_1 + λ_2, …, λ_1 + … + λ_{r-1}}`; a descent at
//! `i` means the ribbon turns down between cell `i` and cell `i + 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A composition of `n`: an ordered list of positive parts.
///
/// The empty composition (`n = 0`) is the root of the zigzag graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
    descents: Vec<usize>,
    size: usize,
}

/// How two ribbons are glued together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConcatMode {
    /// The last cell of the left ribbon sits left of the first cell of the
    /// right one (an ascent at the junction).
    Plus,
    /// The last cell of the left ribbon sits above the first cell of the
    /// right one (a descent at the junction).
    Minus,
}

/// A contiguous window of cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    /// cells `< i`
    Before(usize),
    /// cells `> i`
    After(usize),
    /// cells `<= i`
    UpTo(usize),
    /// cells `>= i`
    From(usize),
    /// cells `c` with `a < c < b`
    Between(usize, usize),
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        let mut descents = Vec::with_capacity(parts.len().saturating_sub(1));
        let mut acc = 0;
        for &p in &parts[..parts.len().saturating_sub(1)] {
            acc += p;
            descents.push(acc);
        }
        let size = parts.iter().sum();
        Self {
            parts,
            descents,
            size,
        }
    }

    pub fn empty() -> Self {
        Self {
            parts: Vec::new(),
            descents: Vec::new(),
            size: 0,
        }
    }

    /// The single row `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_parts_unchecked(vec![n])
        }
    }

    /// The single column `(1, …, 1)`.
    pub fn column(n: usize) -> Self {
        Self::from_parts_unchecked(vec![1; n])
    }

    /// The unique composition of `n` whose descent set is `descents`.
    pub fn from_descents(descents: &[usize], n: usize) -> Result<Self> {
        if n == 0 {
            return match descents.first() {
                None => Ok(Self::empty()),
                Some(&d) => Err(Error::InvalidDescent {
                    descent: d,
                    size: 0,
                }),
            };
        }
        let mut sorted = descents.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut parts = Vec::with_capacity(sorted.len() + 1);
        let mut prev = 0;
        for &d in &sorted {
            if d == 0 || d >= n {
                return Err(Error::InvalidDescent {
                    descent: d,
                    size: n,
                });
            }
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Ok(Self::from_parts_unchecked(parts))
    }

    /// Builds a composition of `n` from a bit mask where bit `i - 1` marks a
    /// descent at `i`.
    pub fn from_descent_mask(mask: u64, n: usize) -> Self {
        debug_assert!((1..=64).contains(&n));
        let descents: Vec<usize> = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        Self::from_descents(&descents, n).expect("mask bits lie in 1..n")
    }

    /// Descent bit mask, bit `i - 1` set iff `i` is a descent. Requires `n <= 64`.
    pub fn descent_mask(&self) -> u64 {
        self.descents.iter().fold(0u64, |m, &d| m | 1 << (d - 1))
    }

    /// All `2^(n-1)` compositions of `n`, ordered by descent mask.
    pub fn all_of_size(n: usize) -> Vec<Self> {
        if n == 0 {
            return vec![Self::empty()];
        }
        assert!(n <= 30, "refusing to enumerate 2^{} compositions", n - 1);
        (0..1u64 << (n - 1))
            .map(|m| Self::from_descent_mask(m, n))
            .collect()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn descents(&self) -> &[usize] {
        &self.descents
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn is_descent(&self, i: usize) -> bool {
        self.descents.binary_search(&i).is_ok()
    }

    /// Glues two nonempty ribbons.
    pub fn concat(&self, other: &Self, mode: ConcatMode) -> Result<Self> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::InvalidArgument(
                "concatenation needs two nonempty compositions".into(),
            ));
        }
        let mut parts = self.parts.clone();
        match mode {
            ConcatMode::Plus => {
                *parts.last_mut().unwrap() += other.parts[0];
                parts.extend_from_slice(&other.parts[1..]);
            }
            ConcatMode::Minus => parts.extend_from_slice(&other.parts),
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    /// Inclusive cell range `[lo, hi]` selected by `window`, clipped to
    /// `1..=n`; `None` when empty.
    pub fn window_range(&self, window: Window) -> Option<(usize, usize)> {
        let n = self.size;
        let (lo, hi) = match window {
            Window::Before(i) => (1, i.saturating_sub(1)),
            Window::After(i) => (i + 1, n),
            Window::UpTo(i) => (1, i.min(n)),
            Window::From(i) => (i.max(1), n),
            Window::Between(a, b) => (a + 1, b.saturating_sub(1).min(n)),
        };
        (lo >= 1 && lo <= hi && hi <= n).then_some((lo, hi))
    }

    /// The ribbon induced on a contiguous window of cells.
    pub fn restrict(&self, window: Window) -> Result<Self> {
        let (lo, hi) = self
            .window_range(window)
            .ok_or(Error::EmptyRestriction { size: self.size })?;
        Ok(self.restrict_range(lo, hi))
    }

    /// Restriction to cells `lo..=hi`; an empty range gives the empty composition.
    pub(crate) fn restrict_range(&self, lo: usize, hi: usize) -> Self {
        if lo > hi {
            return Self::empty();
        }
        let descents: Vec<usize> = self
            .descents
            .iter()
            .filter(|&&d| d >= lo && d < hi)
            .map(|&d| d - lo + 1)
            .collect();
        Self::from_descents(&descents, hi - lo + 1).expect("window descents are in range")
    }

    /// The composition of reversed fillings: cell `i` becomes cell
    /// `n + 1 - i`, so the descent set is `{i : n - i ∉ D}`.
    pub fn reversed(&self) -> Self {
        let n = self.size;
        if n == 0 {
            return Self::empty();
        }
        let descents: Vec<usize> = (1..n).filter(|&i| !self.is_descent(n - i)).collect();
        Self::from_descents(&descents, n).expect("in range")
    }

    pub fn run_decomposition(&self) -> Result<RunDecomposition> {
        RunDecomposition::new(self)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
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
                    .map_err(|e| Error::Parse(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Role of a cell in the ribbon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Valley,
    Peak,
    Interior,
}

/// A run `[start; end]` between consecutive extreme cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    /// Ascending runs start at a valley, descending ones at a peak.
    pub ascending: bool,
}

impl Run {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

/// The slope `[x(i); y(i)]` of a cell: the largest interval of cells around
/// it that contains no other extreme cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slope {
    pub start: usize,
    pub end: usize,
}

/// Valleys, peaks, runs and slopes of a nonempty composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition {
    n: usize,
    kinds: Vec<CellKind>,
    extremes: Vec<usize>,
    runs: Vec<Run>,
    slopes: Vec<Slope>,
}

impl RunDecomposition {
    fn new(lambda: &Composition) -> Result<Self> {
        let n = lambda.size();
        if n == 0 {
            return Err(Error::InvalidComposition(
                "run decomposition of the empty composition".into(),
            ));
        }
        let is_d = |i: usize| i >= 1 && i < n && lambda.is_descent(i);
        let kinds: Vec<CellKind> = (1..=n)
            .map(|i| {
                let down_before = i == 1 || is_d(i - 1);
                // a single cell counts as a valley only
                if !is_d(i) && down_before {
                    CellKind::Valley
                } else if (is_d(i) || i == n) && !is_d(i - 1) {
                    CellKind::Peak
                } else {
                    CellKind::Interior
                }
            })
            .collect();
        let extremes: Vec<usize> = (1..=n)
            .filter(|&i| kinds[i - 1] != CellKind::Interior)
            .collect();
        let runs = extremes
            .windows(2)
            .map(|w| Run {
                start: w[0],
                end: w[1],
                ascending: kinds[w[0] - 1] == CellKind::Valley,
            })
            .collect();
        let mut slopes = Vec::with_capacity(n);
        let mut prev: Option<usize> = None;
        let mut next_idx = 0;
        for i in 1..=n {
            while next_idx < extremes.len() && extremes[next_idx] <= i {
                next_idx += 1;
            }
            let start = prev.map_or(1, |p| p + 1);
            let end = extremes.get(next_idx).map_or(n, |&e| e - 1);
            slopes.push(Slope { start, end });
            if kinds[i - 1] != CellKind::Interior {
                prev = Some(i);
            }
        }
        Ok(Self {
            n,
            kinds,
            extremes,
            runs,
            slopes,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn kind(&self, cell: usize) -> CellKind {
        self.kinds[cell - 1]
    }

    pub fn is_valley(&self, cell: usize) -> bool {
        cell >= 1 && cell <= self.n && self.kinds[cell - 1] == CellKind::Valley
    }

    pub fn is_peak(&self, cell: usize) -> bool {
        cell >= 1 && cell <= self.n && self.kinds[cell - 1] == CellKind::Peak
    }

    pub fn valleys(&self) -> Vec<usize> {
        self.cells_of(CellKind::Valley)
    }

    pub fn peaks(&self) -> Vec<usize> {
        self.cells_of(CellKind::Peak)
    }

    fn cells_of(&self, kind: CellKind) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| self.kinds[i - 1] == kind)
            .collect()
    }

    /// Extreme cells `a_1 = 1 < a_2 < … < a_{t+1} = n`.
    pub fn extremes(&self) -> &[usize] {
        &self.extremes
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn run_lengths(&self) -> Vec<usize> {
        self.runs.iter().map(Run::len).collect()
    }

    pub fn slope(&self, cell: usize) -> Slope {
        self.slopes[cell - 1]
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    pub fn reverse(n: usize) -> Self {
        Self {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// `σ(pos)`, 1-based.
    pub fn at(&self, pos: usize) -> usize {
        self.word[pos - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { word: inv }
    }

    /// `{i : σ(i+1) < σ(i)}`.
    pub fn descents(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] < w[0])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn descent_count(&self) -> usize {
        self.word.windows(2).filter(|w| w[1] < w[0]).count()
    }

    pub fn descent_mask(&self) -> u64 {
        debug_assert!(self.word.len() <= 65);
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] < w[0])
            .fold(0u64, |m, (i, _)| m | 1 << i)
    }

    /// The composition whose descent set is `des(σ)`.
    pub fn descent_composition(&self) -> Composition {
        Composition::from_descents(&self.descents(), self.word.len()).expect("descents in range")
    }

    /// `σ↓k`: erase the letters larger than `k`, keeping the order of the rest.
    pub fn project_down(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.word.len() {
            return Err(Error::OutOfRange {
                index: k,
                max: self.word.len(),
            });
        }
        Ok(Self {
            word: self.word.iter().copied().filter(|&v| v <= k).collect(),
        })
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self { word: word.clone() });
            // next lexicographic permutation
            let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) else {
                break;
            };
            let j = (i..word.len())
                .rev()
                .find(|&j| word[j] > word[i - 1])
                .unwrap();
            word.swap(i - 1, j);
            word[i..].reverse();
        }
        out
    }

    /// All permutations whose descent set is that of `lambda`, by brute force.
    pub fn all_with_descents(lambda: &Composition) -> Vec<Self> {
        let target = lambda.descents();
        Self::all_of_size(lambda.size())
            .into_iter()
            .filter(|s| s.descents() == target)
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if s.is_empty() {
            return Ok(Self { word: Vec::new() });
        }
        let word = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad letter {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn from_descents_examples() {
        assert_eq!(Composition::from_descents(&[], 4).unwrap(), c("4"));
        assert_eq!(
            Composition::from_descents(&[3, 5, 9], 10).unwrap(),
            c("3,2,4,1")
        );
        assert_eq!(Composition::from_descents(&[1, 2], 3).unwrap(), c("1,1,1"));
        assert!(matches!(
            Composition::from_descents(&[3], 3),
            Err(Error::InvalidDescent {
                descent: 3,
                size: 3
            })
        ));
        assert!(Composition::from_descents(&[0], 3).is_err());
    }

    #[test]
    fn descent_round_trip_small() {
        for n in 1..=10 {
            for lambda in Composition::all_of_size(n) {
                let back = Composition::from_descents(lambda.descents(), n).unwrap();
                assert_eq!(back, lambda);
            }
        }
    }

    #[test]
    fn rejects_zero_part() {
        assert!(Composition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn run_decomposition_worked_example() {
        let rd = c("3,2,4,1").run_decomposition().unwrap();
        assert_eq!(rd.valleys(), vec![1, 4, 6, 10]);
        assert_eq!(rd.peaks(), vec![3, 5, 9]);
        let runs: Vec<(usize, usize)> = rd.runs().iter().map(|r| (r.start, r.end)).collect();
        assert_eq!(runs, vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 9), (9, 10)]);
        assert_eq!(rd.slope(7), Slope { start: 7, end: 8 });
        assert_eq!(rd.slope(6), Slope { start: 6, end: 8 });
        assert_eq!(rd.slope(9), Slope { start: 7, end: 9 });
        assert_eq!(rd.slope(4), Slope { start: 4, end: 4 });
    }

    #[test]
    fn run_decomposition_row_and_single_cell() {
        let rd = Composition::row(5).run_decomposition().unwrap();
        assert_eq!(rd.valleys(), vec![1]);
        assert_eq!(rd.peaks(), vec![5]);
        assert_eq!(rd.run_lengths(), vec![4]);

        let one = Composition::row(1).run_decomposition().unwrap();
        assert_eq!(one.valleys(), vec![1]);
        assert!(one.peaks().is_empty());
        assert!(one.runs().is_empty());
        assert_eq!(one.slope(1), Slope { start: 1, end: 1 });

        assert!(Composition::empty().run_decomposition().is_err());
    }

    #[test]
    fn run_lengths_sum_to_size_minus_one() {
        for n in 2..=10 {
            for lambda in Composition::all_of_size(n) {
                let rd = lambda.run_decomposition().unwrap();
                assert_eq!(rd.run_lengths().iter().sum::<usize>(), n - 1);
                // consecutive runs share their endpoint
                for w in rd.runs().windows(2) {
                    assert_eq!(w[0].end, w[1].start);
                    assert_ne!(w[0].ascending, w[1].ascending);
                }
                for i in 1..=n {
                    let s = rd.slope(i);
                    assert!(s.start <= i && i <= s.end);
                    for j in s.start..=s.end {
                        assert!(j == i || rd.kind(j) == CellKind::Interior);
                    }
                }
            }
        }
    }

    #[test]
    fn peaks_are_local_maxima_of_every_filling() {
        for n in 1..=7 {
            for lambda in Composition::all_of_size(n) {
                let rd = lambda.run_decomposition().unwrap();
                let fillings = Permutation::all_with_descents(&lambda);
                for i in 1..=n {
                    let local_max = |s: &Permutation| {
                        let v = s.at(i);
                        (i == 1 || s.at(i - 1) < v) && (i == n || s.at(i + 1) < v)
                    };
                    let local_min = |s: &Permutation| {
                        let v = s.at(i);
                        (i == 1 || s.at(i - 1) > v) && (i == n || s.at(i + 1) > v)
                    };
                    if n > 1 {
                        assert_eq!(
                            rd.is_peak(i),
                            fillings.iter().all(local_max),
                            "{lambda:?} {i}"
                        );
                    }
                    assert_eq!(
                        rd.is_valley(i),
                        fillings.iter().all(local_min),
                        "{lambda:?} {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn concat_examples() {
        let a = c("2,1");
        let b = c("1,2");
        assert_eq!(a.concat(&b, ConcatMode::Plus).unwrap(), c("2,2,2"));
        assert_eq!(a.concat(&b, ConcatMode::Minus).unwrap(), c("2,1,1,2"));
        assert_eq!(c("3").concat(&c("4"), ConcatMode::Plus).unwrap(), c("7"));
        assert!(a.concat(&Composition::empty(), ConcatMode::Plus).is_err());
        for mode in [ConcatMode::Plus, ConcatMode::Minus] {
            assert_eq!(a.concat(&b, mode).unwrap().size(), 6);
        }
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(c("2,1").restrict(Window::After(1)).unwrap(), c("1,1"));
        assert_eq!(c("3,2,4,1").restrict(Window::Before(4)).unwrap(), c("3"));
        let l = c("3,2,4,1");
        assert_eq!(l.restrict(Window::UpTo(10)).unwrap(), l);
        assert_eq!(l.restrict(Window::Between(3, 9)).unwrap(), c("2,3"));
        assert_eq!(l.restrict(Window::From(6)).unwrap(), c("4,1"));
        assert!(matches!(
            l.restrict(Window::Before(1)),
            Err(Error::EmptyRestriction { .. })
        ));
        assert!(l.restrict(Window::Between(4, 5)).is_err());
    }

    #[test]
    fn permutation_descents_examples() {
        let s: Permutation = "3,5,8,4,7,1,6,9,10,2".parse().unwrap();
        assert_eq!(s.descent_composition(), c("3,2,4,1"));
        assert_eq!(Permutation::identity(6).descent_composition(), c("6"));
        assert_eq!(
            Permutation::new(vec![2, 1]).unwrap().descent_composition(),
            c("1,1")
        );
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }

    #[test]
    fn project_down_examples() {
        let s = Permutation::new(vec![5, 2, 3, 4, 1]).unwrap();
        assert_eq!(s.project_down(3).unwrap().word(), &[2, 3, 1]);
        assert_eq!(s.project_down(5).unwrap(), s);
        let t = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(t.project_down(1).unwrap().word(), &[1]);
        assert!(s.project_down(0).is_err());
        assert!(s.project_down(6).is_err());
    }

    #[test]
    fn reversed_matches_reversed_words() {
        for n in 1..=6 {
            for lambda in Composition::all_of_size(n) {
                let rev = lambda.reversed();
                for s in Permutation::all_with_descents(&lambda) {
                    let mut w = s.word().to_vec();
                    w.reverse();
                    let r = Permutation::new(w).unwrap();
                    assert_eq!(r.descent_composition(), rev);
                }
            }
        }
    }

    #[test]
    fn all_of_size_counts() {
        assert_eq!(Permutation::all_of_size(5).len(), 120);
        assert_eq!(Composition::all_of_size(6).len(), 32);
    }
}
